#include "tetra/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace tetra {

namespace {

// Index helpers; tetrahedron labels i, j, k, l are 1-based.
constexpr int kA = 0, kB = 1, kAstar = 2;
constexpr int kPairSlot[5][5] = {
    {0, 0, 0, 0, 0}, {0, 0, 0, 1, 2}, {0, 0, 0, 3, 4}, {0, 0, 0, 0, 5}, {0, 0, 0, 0, 0}};
constexpr int kPairLo[6] = {1, 1, 1, 2, 2, 3};
constexpr int kPairHi[6] = {2, 3, 4, 3, 4, 4};

int pair_slot(int i, int j) {
    if (i > j) std::swap(i, j);
    return kPairSlot[i][j];
}

int c_var(int i) { return 3 + i - 1; }
int cstar_var(int i) { return 7 + i - 1; }
int d_var(int i, int j) { return 11 + pair_slot(i, j); }
int e_var(int i, int j) { return 17 + pair_slot(i, j); }
int y1_var(int i) { return 23 + i - 1; }
int y2_var(int i, int j) { return 27 + pair_slot(i, j); }
// Triples ordered by their missing label: y123, y124, y134, y234.
int y3_var(int i, int j, int k) { return 33 + 4 - (10 - i - j - k); }

// Linear combination of single variables.
Poly lin(std::vector<std::pair<int, long>> parts) {
    std::vector<Term> terms;
    for (const auto& [v, c] : parts) terms.push_back({Monomial::var(v), mpq_class(c)});
    return poly_normalize(std::move(terms));
}

// Combination of explicit monomials.
Poly combo(std::vector<std::pair<Monomial, long>> parts) {
    std::vector<Term> terms;
    for (const auto& [m, c] : parts) terms.push_back({m, mpq_class(c)});
    return poly_normalize(std::move(terms));
}

Monomial mvar(int v) { return Monomial::var(v); }
Monomial mprod(int u, int v) { return mono_mul(mvar(u), mvar(v)); }

}  // namespace

const std::array<std::string, kVarCount>& var_names() {
    static const std::array<std::string, kVarCount> names = [] {
        std::array<std::string, kVarCount> n;
        n[kA] = "a";
        n[kB] = "b";
        n[kAstar] = "astar";
        for (int i = 1; i <= 4; ++i) {
            n[c_var(i)] = "c" + std::to_string(i);
            n[cstar_var(i)] = "cstar" + std::to_string(i);
            n[y1_var(i)] = "y" + std::to_string(i);
        }
        for (int s = 0; s < 6; ++s) {
            std::string ij = std::to_string(kPairLo[s]) + std::to_string(kPairHi[s]);
            n[11 + s] = "d" + ij;
            n[17 + s] = "e" + ij;
            n[27 + s] = "y" + ij;
        }
        for (int s = 0; s < 4; ++s) {
            int missing = 4 - s;
            std::string ijk;
            for (int i = 1; i <= 4; ++i)
                if (i != missing) ijk += std::to_string(i);
            n[33 + s] = "y" + ijk;
        }
        return n;
    }();
    return names;
}

int var_index(const std::string& name) {
    const auto& names = var_names();
    for (int v = 0; v < kVarCount; ++v)
        if (names[v] == name) return v;
    throw std::runtime_error("unknown variable name: " + name);
}

int var_apply(const Perm& p, int v) {
    if (v < 3) return v;  // a, b, astar carry no labels
    if (v < 7) return c_var(p[v - 3]);
    if (v < 11) return cstar_var(p[v - 7]);
    if (v < 17) return d_var(p[kPairLo[v - 11] - 1], p[kPairHi[v - 11] - 1]);
    if (v < 23) return e_var(p[kPairLo[v - 17] - 1], p[kPairHi[v - 17] - 1]);
    if (v < 27) return y1_var(p[v - 23]);
    if (v < 33) return y2_var(p[kPairLo[v - 27] - 1], p[kPairHi[v - 27] - 1]);
    int missing = 4 - (v - 33);
    std::array<int, 3> img;
    int n = 0;
    for (int i = 1; i <= 4; ++i)
        if (i != missing) img[n++] = p[i - 1];
    return y3_var(img[0], img[1], img[2]);
}

Monomial Monomial::var(int v) {
    if (v < 0 || v >= kVarCount) throw std::logic_error("variable index out of range");
    Monomial m;
    m.e[v] = 1;
    m.deg = 1;
    return m;
}

bool mono_less(const Monomial& x, const Monomial& y) {
    if (x.deg != y.deg) return x.deg < y.deg;
    for (int v = kVarCount - 1; v >= 0; --v)
        if (x.e[v] != y.e[v]) return x.e[v] > y.e[v];
    return false;
}

Monomial mono_mul(const Monomial& x, const Monomial& y) {
    Monomial m;
    for (int v = 0; v < kVarCount; ++v) m.e[v] = static_cast<std::uint8_t>(x.e[v] + y.e[v]);
    m.deg = x.deg + y.deg;
    return m;
}

bool mono_divides(const Monomial& d, const Monomial& m) {
    if (d.deg > m.deg) return false;
    for (int v = 0; v < kVarCount; ++v)
        if (d.e[v] > m.e[v]) return false;
    return true;
}

Monomial mono_div(const Monomial& m, const Monomial& d) {
    if (!mono_divides(d, m)) throw std::logic_error("monomial division is not exact");
    Monomial q;
    for (int v = 0; v < kVarCount; ++v) q.e[v] = static_cast<std::uint8_t>(m.e[v] - d.e[v]);
    q.deg = m.deg - d.deg;
    return q;
}

Monomial mono_lcm(const Monomial& x, const Monomial& y) {
    Monomial m;
    int deg = 0;
    for (int v = 0; v < kVarCount; ++v) {
        m.e[v] = std::max(x.e[v], y.e[v]);
        deg += m.e[v];
    }
    m.deg = deg;
    return m;
}

std::string mono_to_string(const Monomial& m) {
    if (m.deg == 0) return "1";
    std::string out;
    for (int v = 0; v < kVarCount; ++v) {
        if (m.e[v] == 0) continue;
        if (!out.empty()) out += '*';
        out += var_names()[v];
        if (m.e[v] > 1) out += "^" + std::to_string(m.e[v]);
    }
    return out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (int v = 0; v < kVarCount; ++v) {
        h ^= m.e[v];
        h *= 1099511628211ull;
    }
    return h;
}

Poly poly_normalize(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& s, const Term& t) { return mono_less(t.m, s.m); });
    Poly out;
    for (Term& t : terms) {
        if (!out.empty() && out.back().m == t.m)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    return out;
}

Poly poly_add(const Poly& f, const Poly& g) {
    std::vector<Term> terms(f.begin(), f.end());
    terms.insert(terms.end(), g.begin(), g.end());
    return poly_normalize(std::move(terms));
}

Poly poly_sub(const Poly& f, const Poly& g) { return poly_add(f, poly_neg(g)); }

Poly poly_mul(const Poly& f, const Poly& g) {
    std::vector<Term> terms;
    for (const Term& s : f)
        for (const Term& t : g) terms.push_back({mono_mul(s.m, t.m), s.c * t.c});
    return poly_normalize(std::move(terms));
}

Poly poly_neg(Poly f) {
    for (Term& t : f) t.c = -t.c;
    return f;
}

Poly perm_apply_poly(const Perm& p, const Poly& f) {
    std::vector<Term> terms;
    for (const Term& t : f) {
        Monomial m;
        m.deg = t.m.deg;
        for (int v = 0; v < kVarCount; ++v)
            if (t.m.e[v]) m.e[var_apply(p, v)] += t.m.e[v];
        terms.push_back({m, t.c});
    }
    return poly_normalize(std::move(terms));
}

bool poly_homogeneous(const Poly& f, int* degree) {
    int deg = f.empty() ? -1 : f.front().m.deg;
    for (const Term& t : f)
        if (t.m.deg != deg) return false;
    if (degree) *degree = deg;
    return true;
}

std::string poly_to_string(const Poly& f) {
    if (f.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : f) {
        mpq_class c = t.c;
        if (c < 0) {
            out << (first ? "-" : " - ");
            c = -c;
        } else if (!first) {
            out << " + ";
        }
        if (c != 1 || t.m.deg == 0) {
            out << c.get_str();
            if (t.m.deg > 0) out << '*';
        }
        if (t.m.deg > 0) out << mono_to_string(t.m);
        first = false;
    }
    return out.str();
}

const char* family_name(RelationFamily f) {
    switch (f) {
        case RelationFamily::linear: return "linear";
        case RelationFamily::disjoint: return "disjoint";
        case RelationFamily::transfer: return "transfer";
        case RelationFamily::flag: return "flag";
    }
    throw std::logic_error("unknown relation family");
}

std::vector<const Relation*> Presentation::family(RelationFamily f) const {
    std::vector<const Relation*> out;
    for (const Relation& r : relations)
        if (r.family == f) out.push_back(&r);
    return out;
}

Presentation build_presentation() {
    Presentation p;
    std::set<std::string> seen;
    auto add = [&](RelationFamily fam, Poly poly) {
        if (poly.empty()) throw std::logic_error("generated an empty relation");
        std::string key =
            std::min(poly_to_string(poly), poly_to_string(poly_neg(poly)));
        if (!seen.insert(key).second) return;
        p.relations.push_back({fam, std::move(poly)});
    };

    // Every pattern is instantiated over all 24 injective assignments of
    // (i, j, k, l) to the labels 1..4; the duplicate-up-to-sign instances
    // collapse in `add`.
    const std::vector<Perm>& tuples = all_permutations();

    // Linear relations: rational equivalences from cross-ratio functions.
    for (const Perm& t : tuples) {
        int i = t[0], j = t[1], k = t[2], l = t[3];
        add(RelationFamily::linear,
            lin({{y2_var(i, j), 1}, {y1_var(i), -1}, {y1_var(j), -1}, {kA, 1},
                 {c_var(k), 1}, {c_var(l), 1}, {d_var(i, j), 1}, {e_var(i, j), 1}}));
        add(RelationFamily::linear,
            lin({{y3_var(i, j, k), 1}, {y2_var(i, j), -1}, {y2_var(i, k), -1},
                 {y1_var(i), 1}, {kB, 1}, {c_var(i), 1}, {cstar_var(l), 1},
                 {d_var(j, k), 1}, {e_var(j, k), 1}, {e_var(i, l), 1},
                 {e_var(j, l), 1}, {e_var(k, l), 1}}));
        add(RelationFamily::linear,
            lin({{y2_var(i, j), 1}, {y3_var(i, j, k), -1}, {y3_var(i, j, l), -1},
                 {kAstar, 1}, {cstar_var(i), 1}, {cstar_var(j), 1},
                 {d_var(k, l), 1}, {e_var(i, j), 1}}));
    }

    // Monomials of divisor pairs with empty intersection.
    for (const Perm& t : tuples) {
        int i = t[0], j = t[1], k = t[2], l = t[3];
        for (Monomial m : {mprod(c_var(i), c_var(j)), mprod(cstar_var(i), cstar_var(j)),
                           mprod(c_var(i), d_var(i, j)), mprod(cstar_var(i), d_var(i, j)),
                           mprod(c_var(i), e_var(i, j)), mprod(cstar_var(i), e_var(j, k)),
                           mprod(d_var(i, j), e_var(i, k)), mprod(e_var(i, j), e_var(i, k)),
                           mprod(e_var(i, j), e_var(k, l))})
            add(RelationFamily::disjoint, combo({{m, 1}}));
    }

    // Products divisor * (y_I - y_J) where the divisor glues the I-th and
    // J-th faces together.
    for (const Perm& t : tuples) {
        int i = t[0], j = t[1], k = t[2], l = t[3];
        auto diff = [&](int f, int yp, int yq) {
            add(RelationFamily::transfer,
                combo({{mprod(f, yp), 1}, {mprod(f, yq), -1}}));
        };
        diff(kA, y1_var(i), y1_var(j));
        diff(kB, y2_var(i, j), y2_var(i, k));
        diff(kAstar, y3_var(i, j, k), y3_var(i, j, l));
        diff(c_var(i), y1_var(j), y1_var(k));
        diff(c_var(i), y2_var(i, j), y2_var(i, k));
        diff(cstar_var(i), y2_var(j, k), y2_var(j, l));
        diff(cstar_var(i), y3_var(i, j, k), y3_var(i, j, l));
        diff(d_var(i, j), y1_var(i), y1_var(j));
        diff(d_var(i, j), y2_var(i, k), y2_var(j, k));
        diff(d_var(i, j), y3_var(i, k, l), y3_var(j, k, l));
        diff(e_var(i, j), y1_var(i), y1_var(j));
        diff(e_var(i, j), y2_var(k, l), y2_var(i, k));
        diff(e_var(i, j), y3_var(i, j, k), y3_var(i, j, l));
    }

    // Relations pulled back from the flag variety along each chain
    // i < ij < ijk.
    for (const Perm& t : tuples) {
        int i = t[0], j = t[1], k = t[2];
        Monomial yi = mvar(y1_var(i)), yij = mvar(y2_var(i, j)),
                 yijk = mvar(y3_var(i, j, k));
        add(RelationFamily::flag,
            combo({{mono_mul(yi, yi), 1}, {mono_mul(yij, yij), 1},
                   {mono_mul(yijk, yijk), 1}, {mono_mul(yi, yij), -1},
                   {mono_mul(yij, yijk), -1}}));
        add(RelationFamily::flag,
            combo({{mono_mul(yij, mono_mul(yij, yij)), 1},
                   {mono_mul(yi, mono_mul(yij, yij)), -2},
                   {mono_mul(yij, mono_mul(yi, yi)), 2}}));
        add(RelationFamily::flag, combo({{mono_mul(mono_mul(yi, yi), mono_mul(yi, yi)), 1}}));
    }

    return p;
}

Elimination eliminate_linear(const Presentation& p) {
    // The linear family as rows of a 24 x 37 rational matrix.
    std::vector<std::array<mpq_class, kVarCount>> rows;
    for (const Relation& r : p.relations) {
        if (r.family != RelationFamily::linear) continue;
        int deg = 0;
        if (!poly_homogeneous(r.poly, &deg) || deg != 1)
            throw std::logic_error("linear family contains a non-linear relation");
        std::array<mpq_class, kVarCount> row{};
        for (const Term& t : r.poly)
            for (int v = 0; v < kVarCount; ++v)
                if (t.m.e[v]) row[v] = t.c;
        rows.push_back(std::move(row));
    }

    // The variables to solve for, in a fixed order.
    std::vector<int> eliminated;
    for (int i = 2; i <= 4; ++i) eliminated.push_back(y1_var(i));
    for (int s = 1; s < 6; ++s) eliminated.push_back(27 + s);  // y13 .. y34
    for (int s = 1; s < 4; ++s) eliminated.push_back(33 + s);  // y124 .. y234

    std::vector<bool> used(rows.size(), false);
    std::array<int, kVarCount> pivot_row;
    pivot_row.fill(-1);
    for (int col : eliminated) {
        int pr = -1;
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (!used[r] && rows[r][col] != 0) {
                pr = static_cast<int>(r);
                break;
            }
        if (pr < 0)
            throw std::runtime_error("cannot solve the linear relations for " +
                                     var_names()[col]);
        used[pr] = true;
        pivot_row[col] = pr;
        mpq_class scale = 1 / rows[pr][col];
        for (auto& x : rows[pr]) x *= scale;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (static_cast<int>(r) == pr || rows[r][col] == 0) continue;
            mpq_class factor = rows[r][col];
            for (int v = 0; v < kVarCount; ++v) rows[r][v] -= factor * rows[pr][v];
        }
    }
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (used[r]) continue;
        for (int v = 0; v < kVarCount; ++v)
            if (rows[r][v] != 0)
                throw std::runtime_error("linear relations have rank above 11");
    }

    Elimination out;
    std::vector<bool> is_eliminated(kVarCount, false);
    for (int v : eliminated) is_eliminated[v] = true;
    for (int v = 0; v < kVarCount; ++v) {
        if (!is_eliminated[v]) {
            out.survivors.push_back(v);
            out.substitution[v] = lin({{v, 1}});
            continue;
        }
        const auto& row = rows[pivot_row[v]];
        std::vector<Term> terms;
        for (int w = 0; w < kVarCount; ++w) {
            if (w == v || row[w] == 0) continue;
            if (is_eliminated[w])
                throw std::logic_error("substitution still mentions an eliminated variable");
            mpq_class c = -row[w];
            if (c.get_den() != 1)
                throw std::runtime_error("substitution for " + var_names()[v] +
                                         " is not integral");
            terms.push_back({Monomial::var(w), c});
        }
        out.substitution[v] = poly_normalize(std::move(terms));
    }

    for (const Relation& r : p.relations) {
        if (r.family == RelationFamily::linear) {
            if (!substitute(r.poly, out).empty())
                throw std::logic_error("a linear relation fails to vanish after substitution");
            continue;
        }
        out.relations.push_back({r.family, substitute(r.poly, out)});
    }
    return out;
}

Poly substitute(const Poly& f, const Elimination& e) {
    Poly result;
    for (const Term& t : f) {
        Poly acc = {{Monomial::one(), t.c}};
        for (int v = 0; v < kVarCount; ++v)
            for (int k = 0; k < t.m.e[v]; ++k) acc = poly_mul(acc, e.substitution[v]);
        result = poly_add(result, acc);
    }
    return result;
}

}  // namespace tetra
