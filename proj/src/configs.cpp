#include "tetra/configs.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tetra {

namespace {

// Rank of a list of row vectors (forward elimination only; rows by value).
int rank_of(const PrimeField& F, std::vector<Vec4> rows) {
    int r = 0;
    for (int col = 0; col < 4 && r < static_cast<int>(rows.size()); ++col) {
        int pivot = r;
        while (pivot < static_cast<int>(rows.size()) && rows[pivot][col] == 0) ++pivot;
        if (pivot == static_cast<int>(rows.size())) continue;
        std::swap(rows[r], rows[pivot]);
        int scale = F.inv(rows[r][col]);
        for (int i = r + 1; i < static_cast<int>(rows.size()); ++i) {
            if (rows[i][col] == 0) continue;
            int factor = F.mul(rows[i][col], scale);
            for (int j = col; j < 4; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(factor, rows[r][j]));
        }
        ++r;
    }
    return r;
}

// dim(a intersect b) via dim a + dim b - rank(a union b).
int meet_dim(const PrimeField& F, const Subspace& a, const Subspace& b) {
    std::vector<Vec4> rows = a.rows;
    rows.insert(rows.end(), b.rows.begin(), b.rows.end());
    return a.dim() + b.dim() - rank_of(F, std::move(rows));
}

bool in_general_position(const PrimeField& F, const Flag& x, const Flag& y) {
    const Subspace* xs[3] = {&x.point, &x.line, &x.plane};
    const Subspace* ys[3] = {&y.point, &y.line, &y.plane};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            if (meet_dim(F, *xs[i - 1], *ys[j - 1]) != std::max(0, i + j - 4)) return false;
    return true;
}

// The q+1 points of a line / planes through a line, in pencil order.
std::vector<Subspace> points_on(const PrimeField& F, const Subspace& line) {
    std::vector<Subspace> out;
    for (int t = 0; t <= F.p(); ++t) out.push_back(pencil_point(F, line, t));
    return out;
}

std::vector<Subspace> planes_through(const PrimeField& F, const Subspace& line) {
    std::vector<Subspace> out;
    for (int t = 0; t <= F.p(); ++t) out.push_back(pencil_plane(F, line, t));
    return out;
}

// Places the remaining three points x2, x3, x4 with x2 on the flag line and
// x3, x4 on two further lines through the flag point inside the flag plane;
// x4 must additionally avoid the line spanned by x2 and x3.
long long count_third_shift(const PrimeField& F, const Flag& f) {
    std::vector<Subspace> lines;
    for (const Subspace& l : enumerate_subspaces(F.p(), 2))
        if (subspace_leq(F, f.point, l) && subspace_leq(F, l, f.plane)) lines.push_back(l);

    long long count = 0;
    for (const Subspace& x2 : points_on(F, f.line)) {
        if (x2 == f.point) continue;
        for (const Subspace& line13 : lines) {
            if (line13 == f.line) continue;
            for (const Subspace& x3 : points_on(F, line13)) {
                if (x3 == f.point) continue;
                Subspace line23 = span(F, {x2.rows[0], x3.rows[0]});
                for (const Subspace& line14 : lines) {
                    if (line14 == f.line || line14 == line13) continue;
                    for (const Subspace& x4 : points_on(F, line14)) {
                        if (x4 == f.point || subspace_leq(F, x4, line23)) continue;
                        ++count;
                    }
                }
            }
        }
    }
    return count;
}

// All four points collinear on the flag line: choose the points, then the
// planes x124 and x134 through that line; the last plane is pinned by
// requiring the cross-ratio of the four planes to match the cross-ratio of
// the four points (opposite plane paired with each point).
long long count_middle_shift(const PrimeField& F, const Flag& f) {
    const std::vector<Subspace> pts = points_on(F, f.line);
    const std::vector<Subspace> planes = planes_through(F, f.line);

    long long count = 0;
    for (const Subspace& x2 : pts) {
        if (x2 == f.point) continue;
        for (const Subspace& x3 : pts) {
            if (x3 == f.point || x3 == x2) continue;
            for (const Subspace& x4 : pts) {
                if (x4 == f.point || x4 == x2 || x4 == x3) continue;
                int lambda = cross_ratio_points(F, {f.point, x2, x3, x4});
                for (const Subspace& p124 : planes) {
                    if (p124 == f.plane) continue;
                    for (const Subspace& p134 : planes) {
                        if (p134 == f.plane || p134 == p124) continue;
                        int found = 0;
                        for (const Subspace& p234 : planes) {
                            if (p234 == f.plane || p234 == p124 || p234 == p134) continue;
                            if (cross_ratio_planes(F, {p234, p134, p124, f.plane}) == lambda)
                                ++found;
                        }
                        if (found != 1)
                            throw std::logic_error(
                                "collinear stratum: cross-ratio equation must have a unique solution");
                        count += found;
                    }
                }
            }
        }
    }
    return count;
}

}  // namespace

Flag make_flag(const PrimeField& F, Subspace point, Subspace line, Subspace plane) {
    point = span(F, std::move(point.rows));
    line = span(F, std::move(line.rows));
    plane = span(F, std::move(plane.rows));
    if (point.dim() != 1 || line.dim() != 2 || plane.dim() != 3)
        throw std::runtime_error("flag needs dimensions 1 < 2 < 3");
    if (!subspace_leq(F, point, line) || !subspace_leq(F, line, plane))
        throw std::runtime_error("flag subspaces must be nested");
    return Flag{std::move(point), std::move(line), std::move(plane)};
}

Flag standard_flag(const PrimeField& F) {
    return make_flag(F, span(F, {Vec4{1, 0, 0, 0}}),
                     span(F, {Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}}),
                     span(F, {Vec4{1, 0, 0, 0}, Vec4{0, 1, 0, 0}, Vec4{0, 0, 1, 0}}));
}

Flag dual_flag(const PrimeField& F, const Flag& f) {
    return make_flag(F, annihilator(F, f.plane), annihilator(F, f.line),
                     annihilator(F, f.point));
}

long long count_open_flag_orbit(int q) {
    PrimeField F(q);
    return count_open_flag_orbit(q, standard_flag(F));
}

long long count_open_flag_orbit(int q, const Flag& reference) {
    PrimeField F(q);
    long long count = 0;
    for (const Subspace& line : enumerate_subspaces(q, 2)) {
        const std::vector<Subspace> pts = points_on(F, line);
        const std::vector<Subspace> planes = planes_through(F, line);
        for (const Subspace& point : pts)
            for (const Subspace& plane : planes)
                if (in_general_position(F, reference, Flag{point, line, plane})) ++count;
    }
    return count;
}

long long count_stratum(const std::string& type, int q) {
    PrimeField F(q);
    return count_stratum(type, q, standard_flag(F));
}

long long count_stratum(const std::string& type, int q, const Flag& reference) {
    PrimeField F(q);
    if (type == "X0") return count_open_flag_orbit(q, reference);
    if (type == "Astar") return count_third_shift(F, reference);
    if (type == "A") return count_third_shift(F, dual_flag(F, reference));
    if (type == "B") return count_middle_shift(F, reference);
    throw std::runtime_error("unknown stratum type for the counting oracle: " + type);
}

long long count_arrangement_complement(int q) {
    PrimeField F(q);
    using Vec3 = std::array<int, 3>;
    const std::array<Vec3, 4> base = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}};
    std::vector<Vec3> normals;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            const Vec3& u = base[i];
            const Vec3& v = base[j];
            normals.push_back({F.sub(F.mul(u[1], v[2]), F.mul(u[2], v[1])),
                               F.sub(F.mul(u[2], v[0]), F.mul(u[0], v[2])),
                               F.sub(F.mul(u[0], v[1]), F.mul(u[1], v[0]))});
        }

    std::vector<Vec3> pts;
    for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
    for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
    pts.push_back({0, 0, 1});

    long long count = 0;
    for (const Vec3& p : pts) {
        bool clear = true;
        for (const Vec3& n : normals) {
            int dot = F.add(F.add(F.mul(p[0], n[0]), F.mul(p[1], n[1])), F.mul(p[2], n[2]));
            if (dot == 0) {
                clear = false;
                break;
            }
        }
        if (clear) ++count;
    }
    return count;
}

}  // namespace tetra
