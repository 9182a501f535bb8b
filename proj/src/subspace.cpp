#include "tetra/subspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace tetra {

namespace {

void rref(const PrimeField& F, std::vector<Vec4>& rows) {
    std::size_t r = 0;
    for (int col = 0; col < 4 && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        int scale = F.inv(rows[r][col]);
        for (int j = 0; j < 4; ++j) rows[r][j] = F.mul(rows[r][j], scale);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][col] == 0) continue;
            int factor = rows[i][col];
            for (int j = 0; j < 4; ++j)
                rows[i][j] = F.sub(rows[i][j], F.mul(factor, rows[r][j]));
        }
        ++r;
    }
    rows.resize(r);
}

int pivot_col(const Vec4& row) {
    for (int j = 0; j < 4; ++j)
        if (row[j] != 0) return j;
    return 4;
}

// Leading entries of both pencil basis vectors, as a homogeneous coordinate
// pair (a : b) for the point a*r0 + b*r1.
std::array<int, 2> pencil_coords(const PrimeField& F, const Subspace& line, const Subspace& point) {
    if (line.dim() != 2 || point.dim() != 1)
        throw std::runtime_error("pencil parameter needs a point on a line");
    if (!subspace_leq(F, point, line))
        throw std::runtime_error("pencil parameter: point does not lie on the line");
    // Solve v = a*r0 + b*r1 by reading the two pivot columns of the line.
    const Vec4& v = point.rows[0];
    int c0 = pivot_col(line.rows[0]), c1 = pivot_col(line.rows[1]);
    return {v[c0], v[c1]};
}

}  // namespace

PrimeField::PrimeField(int p) : p_(p) {
    if (p < 2 || p >= (1 << 16)) throw std::runtime_error("field order out of range");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw std::runtime_error("field order must be prime");
}

int PrimeField::inv(int a) const {
    if (a % p_ == 0) throw std::logic_error("inverse of zero");
    // Fermat: a^(p-2) mod p.
    int result = 1, base = a % p_, e = p_ - 2;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

Subspace span(const PrimeField& F, std::vector<Vec4> gens) {
    for (Vec4& g : gens)
        for (int& x : g) x = ((x % F.p()) + F.p()) % F.p();
    rref(F, gens);
    return Subspace{std::move(gens)};
}

bool subspace_contains(const PrimeField& F, const Subspace& s, Vec4 v) {
    for (int& x : v) x = ((x % F.p()) + F.p()) % F.p();
    for (const Vec4& row : s.rows) {
        int col = pivot_col(row);
        if (col == 4 || v[col] == 0) continue;
        int factor = v[col];
        for (int j = 0; j < 4; ++j) v[j] = F.sub(v[j], F.mul(factor, row[j]));
    }
    return v == Vec4{0, 0, 0, 0};
}

bool subspace_leq(const PrimeField& F, const Subspace& small, const Subspace& big) {
    return std::all_of(small.rows.begin(), small.rows.end(),
                       [&](const Vec4& v) { return subspace_contains(F, big, v); });
}

Subspace annihilator(const PrimeField& F, const Subspace& s) {
    // Standard nullspace basis from the reduced row-echelon form: one vector
    // per free column.
    std::array<bool, 4> is_pivot{};
    std::array<int, 4> pivot_row{};
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
        int col = pivot_col(s.rows[i]);
        is_pivot[col] = true;
        pivot_row[col] = static_cast<int>(i);
    }
    std::vector<Vec4> gens;
    for (int f = 0; f < 4; ++f) {
        if (is_pivot[f]) continue;
        Vec4 w{0, 0, 0, 0};
        w[f] = 1;
        for (int c = 0; c < 4; ++c)
            if (is_pivot[c]) w[c] = F.neg(s.rows[pivot_row[c]][f]);
        gens.push_back(w);
    }
    return span(F, std::move(gens));
}

Subspace intersect(const PrimeField& F, const Subspace& a, const Subspace& b) {
    std::vector<Vec4> gens = annihilator(F, a).rows;
    const Subspace bann = annihilator(F, b);
    gens.insert(gens.end(), bann.rows.begin(), bann.rows.end());
    return annihilator(F, span(F, std::move(gens)));
}

std::vector<Subspace> enumerate_subspaces(int q, int dim) {
    if (q > 7) throw std::runtime_error("subspace enumeration is limited to primes up to 7");
    if (dim < 1 || dim > 3) throw std::runtime_error("subspace dimension must be 1..3");
    PrimeField F(q);
    std::vector<Subspace> out;

    // All strictly increasing pivot-column choices, then every filling of the
    // free entries (columns right of the row's pivot, excluding pivots).
    std::array<int, 3> pivots{};
    auto fill = [&](auto&& self, int row, std::vector<Vec4>& rows) -> void {
        if (row == dim) {
            out.push_back(Subspace{rows});
            return;
        }
        std::vector<int> free_cols;
        for (int j = pivots[row] + 1; j < 4; ++j)
            if (std::find(pivots.begin(), pivots.begin() + dim, j) == pivots.begin() + dim)
                free_cols.push_back(j);
        std::vector<int> vals(free_cols.size(), 0);
        while (true) {
            Vec4 v{0, 0, 0, 0};
            v[pivots[row]] = 1;
            for (std::size_t i = 0; i < free_cols.size(); ++i) v[free_cols[i]] = vals[i];
            rows.push_back(v);
            self(self, row + 1, rows);
            rows.pop_back();
            std::size_t i = 0;
            while (i < vals.size() && ++vals[i] == q) vals[i++] = 0;
            if (i == vals.size()) break;
        }
    };
    auto choose = [&](auto&& self, int from, int k) -> void {
        if (k == dim) {
            std::vector<Vec4> rows;
            fill(fill, 0, rows);
            return;
        }
        for (int c = from; c < 4; ++c) {
            pivots[k] = c;
            self(self, c + 1, k + 1);
        }
    };
    choose(choose, 0, 0);
    return out;
}

long long gaussian_binomial(int q, int k) {
    long long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        long long qa = 1, qb = 1;
        for (int e = 0; e < 4 - i; ++e) qa *= q;
        for (int e = 0; e < i + 1; ++e) qb *= q;
        num *= qa - 1;
        den *= qb - 1;
    }
    return num / den;
}

int pencil_infinity(const PrimeField& F) { return F.p(); }

Subspace pencil_point(const PrimeField& F, const Subspace& line, int t) {
    if (line.dim() != 2) throw std::runtime_error("pencil_point needs a line");
    if (t == pencil_infinity(F)) return span(F, {line.rows[1]});
    Vec4 v;
    for (int j = 0; j < 4; ++j) v[j] = F.add(line.rows[0][j], F.mul(t, line.rows[1][j]));
    return span(F, {v});
}

Subspace pencil_plane(const PrimeField& F, const Subspace& line, int t) {
    return annihilator(F, pencil_point(F, annihilator(F, line), t));
}

int pencil_parameter_point(const PrimeField& F, const Subspace& line, const Subspace& point) {
    auto [a, b] = pencil_coords(F, line, point);
    if (a == 0) return pencil_infinity(F);
    return F.mul(b, F.inv(a));
}

int pencil_parameter_plane(const PrimeField& F, const Subspace& line, const Subspace& plane) {
    if (plane.dim() != 3) throw std::runtime_error("pencil parameter needs a plane");
    return pencil_parameter_point(F, annihilator(F, line), annihilator(F, plane));
}

int cross_ratio(const PrimeField& F, int a, int b, int c, int d) {
    const int inf = pencil_infinity(F);
    for (int t : {a, b, c, d})
        if (t < 0 || t > inf) throw std::runtime_error("cross_ratio: bad pencil parameter");
    if (a == b || a == c || a == d || b == c || b == d || c == d)
        throw std::runtime_error("cross_ratio needs four distinct elements");
    // Homogeneous coordinates (x : y): t -> (t : 1), infinity -> (1 : 0).
    auto coords = [&](int t) -> std::array<int, 2> {
        return t == inf ? std::array<int, 2>{1, 0} : std::array<int, 2>{t % F.p(), 1};
    };
    auto det = [&](int s, int t) {
        auto u = coords(s), v = coords(t);
        return F.sub(F.mul(u[0], v[1]), F.mul(u[1], v[0]));
    };
    // Image of d under the unique projective map sending a, b, c to 0, 1,
    // infinity; in particular (0, 1, infinity, t) evaluates to t.
    int num = F.mul(det(d, a), det(b, c));
    int den = F.mul(det(d, c), det(b, a));
    if (den == 0) return inf;   // unreachable for distinct inputs, kept for safety
    return F.mul(num, F.inv(den));
}

int cross_ratio_points(const PrimeField& F, const std::array<Subspace, 4>& pts) {
    for (const Subspace& p : pts)
        if (p.dim() != 1) throw std::runtime_error("cross_ratio_points needs points");
    std::vector<Vec4> gens = {pts[0].rows[0], pts[1].rows[0]};
    Subspace line = span(F, std::move(gens));
    if (line.dim() != 2) throw std::runtime_error("cross_ratio_points: points coincide");
    std::array<int, 4> t{};
    for (int i = 0; i < 4; ++i) t[i] = pencil_parameter_point(F, line, pts[i]);
    return cross_ratio(F, t[0], t[1], t[2], t[3]);
}

int cross_ratio_planes(const PrimeField& F, const std::array<Subspace, 4>& planes) {
    for (const Subspace& p : planes)
        if (p.dim() != 3) throw std::runtime_error("cross_ratio_planes needs planes");
    Subspace line = intersect(F, planes[0], planes[1]);
    if (line.dim() != 2) throw std::runtime_error("cross_ratio_planes: planes coincide");
    std::array<int, 4> t{};
    for (int i = 0; i < 4; ++i) {
        if (!subspace_leq(F, line, planes[i]))
            throw std::runtime_error("cross_ratio_planes: planes share no common line");
        t[i] = pencil_parameter_plane(F, line, planes[i]);
    }
    return cross_ratio(F, t[0], t[1], t[2], t[3]);
}

}  // namespace tetra
