#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tetra/divisors.hpp"
#include "tetra/groebner.hpp"
#include "tetra/presentation.hpp"
#include "tetra/quotient.hpp"
#include "tetra/strata.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace tetra;

namespace {

const std::array<long, 13> kExpectedDims = {1,    26,   188,  652,  1394, 2112, 2414,
                                            2112, 1394, 652,  188,  26,   1};

// All generators of the quotient ideal in the 37-variable ring.
std::vector<Relation> full_generators(const Presentation& p) {
    std::vector<Relation> gens = p.relations;
    std::vector<Relation> extra = unlisted_disjoint_products(p);
    gens.insert(gens.end(), extra.begin(), extra.end());
    return gens;
}

}  // namespace

TEST_CASE("the completed disjointness products") {
    Presentation p = build_presentation();
    std::vector<Relation> extra = unlisted_disjoint_products(p);
    REQUIRE(extra.size() == 12);

    std::set<std::string> listed;
    for (const Relation* r : p.family(RelationFamily::disjoint))
        listed.insert(poly_to_string(r->poly));

    const auto& divs = divisors();
    for (const Relation& r : extra) {
        CHECK(r.family == RelationFamily::disjoint);
        REQUIRE(r.poly.size() == 1);
        CHECK(r.poly.front().c == 1);
        const Monomial& m = r.poly.front().m;
        REQUIRE(m.deg == 2);

        std::vector<int> support;
        for (int v = 0; v < kVarCount; ++v)
            if (m.e[v]) support.push_back(v);
        REQUIRE(support.size() == 2);
        int u = support[0], v = support[1];

        // Each completes the listed monomials: a pair of D-divisors sharing
        // a label, incompatible in the census, and not already listed.
        CHECK(u < kDivisorCount);
        CHECK(v < kDivisorCount);
        CHECK(divs[u].kind == DivisorKind::D);
        CHECK(divs[v].kind == DivisorKind::D);
        CHECK((divs[u].index & divs[v].index) != 0);
        CHECK_FALSE(compatible(u, v));
        CHECK(listed.count(poly_to_string(r.poly)) == 0);
    }

    // Together with the listed monomials they cover every incompatible pair.
    std::size_t incompatible = 0;
    for (int u = 0; u < kDivisorCount; ++u)
        for (int v = u + 1; v < kDivisorCount; ++v)
            if (!compatible(u, v)) ++incompatible;
    CHECK(incompatible == listed.size() + extra.size());
}

TEST_CASE("dimensions of the graded pieces") {
    const F2Quotient& q = standard_quotient();
    CHECK(&standard_quotient() == &q);

    HilbertFunction h = q.hilbert();
    for (int i = 0; i <= kTopDegree; ++i) CHECK(h.dims[i] == kExpectedDims[i]);
    CHECK(h.palindromic());
    CHECK(q.standard_monomials(13).empty());

    long total = 0;
    for (long d : h.dims) total += d;
    CHECK(total == 11160);

    // Degree 0 is the unit; degree 1 is the survivors in the monomial order
    // (descending variable index); every level is strictly sorted.
    REQUIRE(q.standard_monomials(0).size() == 1);
    CHECK(q.standard_monomials(0).front() == Monomial::one());
    const std::vector<Monomial>& lin = q.standard_monomials(1);
    REQUIRE(lin.size() == 26);
    CHECK(lin.front() == Monomial::var(var_index("y123")));
    CHECK(lin.back() == Monomial::var(var_index("a")));
    for (int d = 0; d <= 13; ++d) {
        const std::vector<Monomial>& level = q.standard_monomials(d);
        CHECK(static_cast<long>(level.size()) == (d <= 12 ? kExpectedDims[d] : 0));
        for (std::size_t i = 0; i + 1 < level.size(); ++i)
            CHECK(mono_less(level[i], level[i + 1]));
        for (const Monomial& m : level) CHECK(m.deg == d);
    }

    CHECK_THROWS_AS((void)q.standard_monomials(-1), std::logic_error);
    CHECK_THROWS_AS((void)q.standard_monomials(14), std::logic_error);

    // The eliminated variables never appear in a standard monomial.
    std::set<int> sv(q.elimination().survivors.begin(), q.elimination().survivors.end());
    REQUIRE(sv.size() == 26);
    for (int d = 0; d <= 12; ++d)
        for (const Monomial& m : q.standard_monomials(d))
            for (int v = 0; v < kVarCount; ++v)
                if (m.e[v] && !sv.count(v)) FAIL("eliminated variable in level ", d);
}

TEST_CASE("the reduced basis") {
    const F2Quotient& q = standard_quotient();
    const F2Basis& gb = q.basis();
    CHECK(gb.truncation_degree == 13);
    CHECK(gb.polys.size() == 450);  // determinism anchor for the fixed ideal

    std::size_t reducible = 0;  // monomials some other leading term divides
    for (std::size_t i = 0; i < gb.polys.size(); ++i) {
        int deg = 0;
        CHECK(f2_homogeneous(gb.polys[i], &deg));
        CHECK(deg >= 2);
        CHECK(deg <= 13);
        if (i + 1 < gb.polys.size())
            CHECK(mono_less(gb.polys[i].lead(), gb.polys[i + 1].lead()));
        for (std::size_t j = 0; j < gb.polys.size(); ++j)
            for (std::size_t t = (i == j) ? 1 : 0; t < gb.polys[j].terms.size(); ++t)
                if (mono_divides(gb.polys[i].lead(), gb.polys[j].terms[t])) ++reducible;
    }
    CHECK(reducible == 0);
}

TEST_CASE("normal forms in the quotient") {
    const F2Quotient& q = standard_quotient();
    Presentation p = build_presentation();

    // Every generator lies in the ideal.
    for (const Relation& r : full_generators(p)) CHECK(q.normal_form(r.poly).zero());

    // Additive, and expressed over the standard monomials.
    Poly g1 = Poly{Term{mono_mul(Monomial::var(var_index("y1")),
                                 Monomial::var(var_index("y12"))),
                        mpq_class(1)}};
    Poly g2 = Poly{Term{mono_mul(Monomial::var(var_index("a")),
                                 Monomial::var(var_index("astar"))),
                        mpq_class(1)}};
    F2Poly n1 = q.normal_form(g1);
    F2Poly n2 = q.normal_form(g2);
    CHECK(q.normal_form(poly_add(g1, g2)) == f2_add(n1, n2));

    // A normal form only uses standard monomials of its degree.
    std::set<std::string> std2;
    for (const Monomial& m : q.standard_monomials(2)) std2.insert(mono_to_string(m));
    for (const Monomial& m : n1.terms) CHECK(std2.count(mono_to_string(m)) == 1);

    // Polynomials in the eliminated variables substitute before reducing:
    // y2 is congruent to its substitution, so the difference vanishes.
    Poly y2 = Poly{Term{Monomial::var(var_index("y2")), mpq_class(1)}};
    Poly diff = poly_sub(y2, substitute(y2, q.elimination()));
    CHECK(q.normal_form(poly_mul(diff, g2)).zero());

    // Degree 14 exceeds the truncated basis.
    Poly high = poly_mul(socle_witness(), g2);
    CHECK_THROWS_AS((void)q.normal_form(high), std::logic_error);
}

TEST_CASE("the socle and the pairing") {
    const F2Quotient& q = standard_quotient();
    HilbertFunction h = q.hilbert();

    // The witness reduces to the unique top-degree standard monomial.
    F2Poly w = q.witness_normal_form();
    REQUIRE(w.terms.size() == 1);
    REQUIRE(q.standard_monomials(12).size() == 1);
    CHECK(w.terms.front() == q.standard_monomials(12).front());

    // Multiplying it by any surviving variable leaves the ring.
    Poly sw = socle_witness();
    for (int v : q.elimination().survivors) {
        Poly prod = poly_mul(sw, Poly{Term{Monomial::var(v), mpq_class(1)}});
        CHECK(q.normal_form(prod).zero());
    }

    // Relabeling permutes the ring, so every image of the witness is again
    // a nonzero socle element.
    for (const Perm& perm : all_permutations())
        CHECK_FALSE(q.normal_form(perm_apply_poly(perm, sw)).zero());

    // The multiplication pairing into the top degree has full rank.
    for (int i = 0; i <= kTopDegree; ++i) CHECK(q.pairing_rank(i) == h.dims[i]);
    CHECK_THROWS_AS((void)q.pairing_rank(-1), std::logic_error);
    CHECK_THROWS_AS((void)q.pairing_rank(13), std::logic_error);
}

TEST_CASE("relabeling stability") {
    const F2Quotient& q = standard_quotient();
    Presentation p = build_presentation();
    std::vector<Relation> gens = full_generators(p);

    CHECK(q.s4_violations(gens).empty());

    // Negative control: a class outside the ideal is flagged, already for
    // the identity relabeling.
    std::vector<Relation> corrupted = gens;
    corrupted.push_back(Relation{RelationFamily::disjoint, socle_witness()});
    std::vector<S4Violation> viol = q.s4_violations(corrupted);
    REQUIRE_FALSE(viol.empty());
    CHECK(viol.front().perm_index == 0);
    CHECK(viol.front().relation_index == corrupted.size() - 1);
    CHECK(viol.size() == all_permutations().size());
}

TEST_CASE("a single chain presents the whole flag family") {
    // Keep only the flag relations supported on y1, y12, y123: relabeling
    // already carries one chain onto all the others inside the ideal.
    Presentation p = build_presentation();
    Presentation restricted;
    std::size_t kept = 0;
    for (const Relation& r : p.relations) {
        if (r.family == RelationFamily::flag) {
            bool chain = true;
            std::set<int> ally;
            for (const Term& t : r.poly)
                for (int v = kDivisorCount; v < kVarCount; ++v)
                    if (t.m.e[v]) ally.insert(v);
            for (int v : ally)
                if (v != var_index("y1") && v != var_index("y12") && v != var_index("y123"))
                    chain = false;
            if (!chain) continue;
            ++kept;
        }
        restricted.relations.push_back(r);
    }
    CHECK(kept == 3);

    F2Quotient small(eliminate_linear(restricted), unlisted_disjoint_products(restricted));
    CHECK(small.basis().polys == standard_quotient().basis().polys);
}

TEST_CASE("the rational cross-check") {
    CHECK(hilbert_over_q() == standard_quotient().hilbert());
}
