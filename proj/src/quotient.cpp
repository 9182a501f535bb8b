#include "tetra/quotient.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tetra/divisors.hpp"
#include "tetra/labels.hpp"
#include "tetra/strata.hpp"

namespace tetra {

namespace {

// Dense F2 row vector.
struct BitRow {
    std::vector<std::uint64_t> w;

    explicit BitRow(std::size_t bits = 0) : w((bits + 63) / 64, 0) {}
    void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void operator^=(const BitRow& o) {
        for (std::size_t k = 0; k < w.size(); ++k) w[k] ^= o.w[k];
    }
};

// Parity of the AND of two equal-length rows: one F2 inner product.
bool and_parity(const BitRow& x, const BitRow& y) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < x.w.size(); ++k) acc ^= x.w[k] & y.w[k];
    return std::popcount(acc) & 1;
}

// Rank over F2 by row echelon; takes its own working copy.
long bit_rank(std::vector<BitRow> rows, std::size_t ncols) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t piv = r;
        while (piv < rows.size() && !rows[piv].test(col)) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (std::size_t i = r + 1; i < rows.size(); ++i)
            if (rows[i].test(col)) rows[i] ^= rows[r];
        ++r;
    }
    return static_cast<long>(r);
}

std::uint64_t var_mask(const Monomial& m) {
    std::uint64_t mask = 0;
    for (int v = 0; v < kVarCount; ++v)
        if (m.e[v]) mask |= std::uint64_t{1} << v;
    return mask;
}

// Standard monomials (multiples of no leading term) over the surviving
// variables, level by level through degree 13.  Every divisor of a standard
// monomial is standard, so degree d+1 is reachable from degree d; writing
// each monomial as (rest) * (its largest variable) generates it exactly once.
std::array<std::vector<Monomial>, kTopDegree + 2> standard_levels(
    const std::vector<int>& survivors, const std::vector<Monomial>& leads) {
    std::vector<std::uint64_t> lmask;
    std::vector<int> ldeg;
    lmask.reserve(leads.size());
    ldeg.reserve(leads.size());
    for (const Monomial& l : leads) {
        lmask.push_back(var_mask(l));
        ldeg.push_back(l.deg);
    }
    auto in_ideal = [&](const Monomial& m) {
        std::uint64_t mm = var_mask(m);
        for (std::size_t i = 0; i < leads.size(); ++i) {
            if (ldeg[i] > m.deg || (lmask[i] & ~mm)) continue;
            if (mono_divides(leads[i], m)) return true;
        }
        return false;
    };

    std::array<std::vector<Monomial>, kTopDegree + 2> out;
    out[0].push_back(Monomial::one());
    for (int d = 0; d <= kTopDegree; ++d) {
        for (const Monomial& m : out[d]) {
            int top = -1;
            for (int v = kVarCount - 1; v >= 0; --v)
                if (m.e[v]) {
                    top = v;
                    break;
                }
            for (int v : survivors) {
                if (v < top) continue;
                Monomial c = mono_mul(m, Monomial::var(v));
                if (!in_ideal(c)) out[d + 1].push_back(c);
            }
        }
        std::sort(out[d + 1].begin(), out[d + 1].end(), mono_less);
    }
    return out;
}

// Multiplication tables for one degree step: table[s][c] is the normal form
// of survivor variable s times the c-th standard monomial of degree d, as a
// bit row over the degree-(d+1) standard basis.  Normal forms of the
// intermediate (non-standard) monomials are memoized for the whole step:
// reduction rewrites a monomial as a sum of strictly smaller monomials of
// the same degree, so an explicit post-order stack terminates.
std::vector<std::vector<BitRow>> mult_tables(const F2Reducer& red,
                                             const std::vector<int>& survivors,
                                             const std::vector<Monomial>& bd,
                                             const std::vector<Monomial>& bd1) {
    std::unordered_map<Monomial, int, MonomialHash> idx;
    idx.reserve(bd1.size() * 2);
    for (std::size_t i = 0; i < bd1.size(); ++i) idx.emplace(bd1[i], static_cast<int>(i));

    std::unordered_map<Monomial, BitRow, MonomialHash> memo;

    struct Frame {
        Monomial m;
        std::vector<Monomial> kids;
        bool expanded = false;
    };
    auto nf_of = [&](const Monomial& n) -> const BitRow& {
        std::vector<Frame> stack;
        stack.push_back(Frame{n, {}, false});
        while (!stack.empty()) {
            std::size_t top = stack.size() - 1;
            if (memo.count(stack[top].m)) {
                stack.pop_back();
                continue;
            }
            if (!stack[top].expanded) {
                auto it = idx.find(stack[top].m);
                if (it != idx.end()) {
                    BitRow row(bd1.size());
                    row.set(static_cast<std::size_t>(it->second));
                    memo.emplace(stack[top].m, std::move(row));
                    stack.pop_back();
                    continue;
                }
                int gi = red.find(stack[top].m);
                if (gi < 0)
                    throw std::logic_error("a non-standard monomial has no reducer");
                const F2Poly& g = red.polys()[static_cast<std::size_t>(gi)];
                Monomial cof = mono_div(stack[top].m, g.terms.front());
                stack[top].kids.reserve(g.terms.size() - 1);
                for (std::size_t t = 1; t < g.terms.size(); ++t)
                    stack[top].kids.push_back(mono_mul(g.terms[t], cof));
                stack[top].expanded = true;
                std::size_t nkids = stack[top].kids.size();
                for (std::size_t t = 0; t < nkids; ++t) {
                    Monomial kid = stack[top].kids[t];  // copy: pushes may reallocate
                    if (!memo.count(kid)) stack.push_back(Frame{std::move(kid), {}, false});
                }
            } else {
                BitRow row(bd1.size());
                for (const Monomial& kid : stack[top].kids) row ^= memo.at(kid);
                memo.emplace(std::move(stack[top].m), std::move(row));
                stack.pop_back();
            }
        }
        return memo.at(n);
    };

    std::vector<std::vector<BitRow>> table(survivors.size());
    for (std::size_t s = 0; s < survivors.size(); ++s) {
        table[s].reserve(bd.size());
        Monomial v = Monomial::var(survivors[s]);
        for (const Monomial& mc : bd) table[s].push_back(nf_of(mono_mul(v, mc)));
    }
    return table;
}

}  // namespace

bool HilbertFunction::palindromic() const {
    for (int i = 0; i <= kTopDegree; ++i)
        if (dims[i] != dims[kTopDegree - i]) return false;
    return true;
}

std::vector<Relation> unlisted_disjoint_products(const Presentation& p) {
    std::set<std::pair<int, int>> listed;
    for (const Relation* r : p.family(RelationFamily::disjoint)) {
        if (r->poly.size() != 1)
            throw std::logic_error("a disjointness relation is not a single monomial");
        const Monomial& m = r->poly.front().m;
        int u = -1, v = -1;
        for (int w = 0; w < kVarCount; ++w) {
            if (!m.e[w]) continue;
            if (m.e[w] != 1 || w >= kDivisorCount || v != -1)
                throw std::logic_error(
                    "a disjointness monomial is not a product of two distinct divisors");
            if (u == -1)
                u = w;
            else
                v = w;
        }
        if (v == -1)
            throw std::logic_error(
                "a disjointness monomial is not a product of two distinct divisors");
        listed.emplace(u, v);
    }

    std::vector<Relation> out;
    for (int u = 0; u < kDivisorCount; ++u)
        for (int v = u + 1; v < kDivisorCount; ++v)
            if (!compatible(u, v) && !listed.count({u, v}))
                out.push_back(Relation{
                    RelationFamily::disjoint,
                    Poly{Term{mono_mul(Monomial::var(u), Monomial::var(v)), mpq_class(1)}}});
    return out;
}

Poly socle_witness() {
    Monomial m;
    auto bump = [&m](const char* name, int k) {
        int v = var_index(name);
        m.e[v] = static_cast<std::uint8_t>(m.e[v] + k);
        m.deg += k;
    };
    bump("y1", 3);
    bump("y12", 2);
    bump("y123", 1);
    bump("a", 1);
    bump("b", 1);
    bump("astar", 1);
    bump("c1", 1);
    bump("cstar1", 1);
    bump("d23", 1);
    return Poly{Term{m, mpq_class(1)}};
}

F2Quotient::F2Quotient(const Elimination& elim, const std::vector<Relation>& extra)
    : elim_(elim) {
    std::vector<F2Poly> gens;
    gens.reserve(elim_.relations.size() + extra.size());
    for (const Relation& r : elim_.relations) gens.push_back(f2_from_poly(r.poly));
    for (const Relation& r : extra) gens.push_back(f2_from_poly(substitute(r.poly, elim_)));
    gb_ = groebner_f2(gens, kTopDegree + 1);
    reducer_ = F2Reducer(gb_.polys);

    std::vector<Monomial> leads;
    leads.reserve(gb_.polys.size());
    for (const F2Poly& g : gb_.polys) leads.push_back(g.lead());
    bases_ = standard_levels(elim_.survivors, leads);
}

const std::vector<Monomial>& F2Quotient::standard_monomials(int degree) const {
    if (degree < 0 || degree > kTopDegree + 1)
        throw std::logic_error("standard-monomial degree out of range");
    return bases_[static_cast<std::size_t>(degree)];
}

HilbertFunction F2Quotient::hilbert() const {
    if (!bases_[kTopDegree + 1].empty())
        throw std::logic_error("degree 13 of the quotient is nonzero");
    HilbertFunction h;
    for (int i = 0; i <= kTopDegree; ++i)
        h.dims[static_cast<std::size_t>(i)] =
            static_cast<long>(bases_[static_cast<std::size_t>(i)].size());
    return h;
}

F2Poly F2Quotient::normal_form(const Poly& f) const {
    F2Poly g = f2_from_poly(substitute(f, elim_));
    for (const Monomial& m : g.terms)
        if (m.deg > kTopDegree + 1)
            throw std::logic_error("normal form requested above the truncation degree");
    return reducer_.reduce(g);
}

long F2Quotient::pairing_rank(int i) const {
    if (i < 0 || i > kTopDegree) throw std::logic_error("pairing degree out of range");
    build_pairing();
    return pairing_ranks_[static_cast<std::size_t>(i)];
}

F2Poly F2Quotient::witness_normal_form() const { return normal_form(socle_witness()); }

std::vector<S4Violation> F2Quotient::s4_violations(
    const std::vector<Relation>& generators) const {
    std::vector<S4Violation> out;
    const std::vector<Perm>& perms = all_permutations();
    for (int pi = 0; pi < static_cast<int>(perms.size()); ++pi)
        for (std::size_t ri = 0; ri < generators.size(); ++ri)
            if (!normal_form(perm_apply_poly(perms[static_cast<std::size_t>(pi)],
                                             generators[ri].poly))
                     .zero())
                out.push_back(S4Violation{pi, ri});
    return out;
}

// The pairing matrices are built by one walk up the standard bases.  For a
// standard monomial m of degree k let w_m be the row of socle coordinates of
// m * (degree 12-k standard basis); w_1 is the identity coordinate on the
// one-dimensional top degree, and if n = m * v for a variable v, then w_n
// factors as the multiplication table of v against w_m.  Each level is
// therefore one bit-matrix product away from the previous one, and only the
// tables for a single degree step are alive at a time.
void F2Quotient::build_pairing() const {
    if (pairing_done_) return;
    if (bases_[kTopDegree].size() != 1)
        throw std::logic_error("the pairing needs a one-dimensional top degree");

    std::array<int, kVarCount> spos;
    spos.fill(-1);
    for (std::size_t s = 0; s < elim_.survivors.size(); ++s)
        spos[static_cast<std::size_t>(elim_.survivors[s])] = static_cast<int>(s);

    std::vector<BitRow> rows;  // level k: one row per degree-k standard monomial
    rows.push_back(BitRow(1));
    rows[0].set(0);
    pairing_ranks_[0] = bit_rank(rows, 1);

    for (int k = 1; k <= kTopDegree; ++k) {
        std::size_t d = static_cast<std::size_t>(kTopDegree - k);
        std::vector<std::vector<BitRow>> table =
            mult_tables(reducer_, elim_.survivors, bases_[d], bases_[d + 1]);

        std::unordered_map<Monomial, int, MonomialHash> pidx;
        const std::vector<Monomial>& prev = bases_[static_cast<std::size_t>(k - 1)];
        pidx.reserve(prev.size() * 2);
        for (std::size_t i = 0; i < prev.size(); ++i) pidx.emplace(prev[i], static_cast<int>(i));

        std::vector<BitRow> next;
        next.reserve(bases_[static_cast<std::size_t>(k)].size());
        for (const Monomial& n : bases_[static_cast<std::size_t>(k)]) {
            int v = kVarCount - 1;
            while (v >= 0 && !n.e[v]) --v;
            Monomial parent = mono_div(n, Monomial::var(v));
            const BitRow& wm = rows[static_cast<std::size_t>(pidx.at(parent))];
            const std::vector<BitRow>& tv = table[static_cast<std::size_t>(spos[v])];
            BitRow wn(bases_[d].size());
            for (std::size_t c = 0; c < tv.size(); ++c)
                if (and_parity(tv[c], wm)) wn.set(c);
            next.push_back(std::move(wn));
        }
        rows = std::move(next);
        pairing_ranks_[static_cast<std::size_t>(k)] = bit_rank(rows, bases_[d].size());
    }
    pairing_done_ = true;
}

const F2Quotient& standard_quotient() {
    static const F2Quotient q = [] {
        Presentation p = build_presentation();
        Elimination e = eliminate_linear(p);
        return F2Quotient(e, unlisted_disjoint_products(p));
    }();
    return q;
}

HilbertFunction hilbert_over_q() {
    Presentation p = build_presentation();
    Elimination e = eliminate_linear(p);
    std::vector<Poly> gens;
    gens.reserve(e.relations.size() + 12);
    for (const Relation& r : e.relations) gens.push_back(r.poly);
    for (const Relation& r : unlisted_disjoint_products(p))
        gens.push_back(substitute(r.poly, e));
    QBasis gb = groebner_q(gens, kTopDegree + 1);

    std::vector<Monomial> leads;
    leads.reserve(gb.polys.size());
    for (const Poly& g : gb.polys) leads.push_back(g.front().m);
    std::array<std::vector<Monomial>, kTopDegree + 2> levels =
        standard_levels(e.survivors, leads);
    if (!levels[kTopDegree + 1].empty())
        throw std::logic_error("degree 13 of the rational quotient is nonzero");
    HilbertFunction h;
    for (int i = 0; i <= kTopDegree; ++i)
        h.dims[static_cast<std::size_t>(i)] =
            static_cast<long>(levels[static_cast<std::size_t>(i)].size());
    return h;
}

}  // namespace tetra
