#pragma once
// The graded quotient ring over F2: standard-monomial bases and the Hilbert
// function, normal forms, the Poincare-duality pairing ranks, the socle
// witness, and relabeling-stability checks.  The quotient is by the ideal of
// the eliminated presentation together with the products of the remaining
// incompatible divisor pairs (the census proves those pairs disjoint; their
// products complete the listed disjointness monomials).

#include <array>
#include <cstdint>
#include <vector>

#include "tetra/groebner.hpp"
#include "tetra/presentation.hpp"

namespace tetra {

// Top nonzero degree of the quotient: the ring is finite-dimensional with
// one-dimensional socle in this degree.
inline constexpr int kTopDegree = 12;

struct HilbertFunction {
    std::array<long, kTopDegree + 1> dims{};  // degrees 0..12

    bool palindromic() const;
    bool operator==(const HilbertFunction&) const = default;
};

// Products u*v of divisor-class pairs that the census proves disjoint
// (incompatible) but that are not among the listed disjointness monomials:
// the twelve products of two D-divisors sharing an index.
std::vector<Relation> unlisted_disjoint_products(const Presentation& p);

// The degree-12 socle witness monomial y1^3 * y12^2 * y123 * a * b * astar
// * c1 * cstar1 * d23, in the full 37-variable ring.
Poly socle_witness();

struct S4Violation {
    int perm_index;              // into all_permutations()
    std::size_t relation_index;  // into the generator list passed in
};

class F2Quotient {
  public:
    // Builds the truncated reduced Groebner basis (degree 13) of the ideal
    // generated by the eliminated relations plus `extra` (raw 37-variable
    // relations, substituted on the way in), and the standard-monomial bases
    // of degrees 0..13.  Throws std::runtime_error when a generator is not
    // homogeneous or has a non-integer coefficient.
    F2Quotient(const Elimination& elim, const std::vector<Relation>& extra);

    const F2Basis& basis() const { return gb_; }
    const Elimination& elimination() const { return elim_; }

    // Standard monomials of one degree (0..13), sorted ascending; the
    // degree-13 list is expected empty and checked by hilbert().
    const std::vector<Monomial>& standard_monomials(int degree) const;

    // Dimensions in degrees 0..12; throws std::logic_error if degree 13 is
    // not zero-dimensional.
    HilbertFunction hilbert() const;

    // Fully reduced normal form; accepts polynomials in all 37 variables and
    // substitutes the eliminated ones first.  Zero iff the class vanishes.
    F2Poly normal_form(const Poly& f) const;

    // Rank over F2 of the multiplication pairing R^i x R^{12-i} -> R^12,
    // as a matrix on the standard-monomial bases.  Builds all thirteen
    // matrices on first use.  The pairing is nondegenerate in degree i
    // exactly when the rank equals dims[i].
    long pairing_rank(int i) const;

    // Normal form of the socle witness (nonzero certifies a 1-dimensional
    // socle hit; multiplying by any generator must then vanish).
    F2Poly witness_normal_form() const;

    // (perm, generator) pairs whose permuted image is not in the ideal;
    // empty exactly when the ideal is relabeling-invariant.  Pass the raw
    // 37-variable generators (presentation relations plus extras).
    std::vector<S4Violation> s4_violations(const std::vector<Relation>& generators) const;

  private:
    void build_pairing() const;

    Elimination elim_;
    F2Basis gb_;
    F2Reducer reducer_;                                        // over gb_.polys
    std::array<std::vector<Monomial>, kTopDegree + 2> bases_;  // degrees 0..13
    mutable bool pairing_done_ = false;
    mutable std::array<long, kTopDegree + 1> pairing_ranks_{};
};

// The ring of the verification: literal presentation, eliminated, plus the
// unlisted disjoint products.  Built once per process.
const F2Quotient& standard_quotient();

// Hilbert function of the same ideal over Q (independent Groebner run);
// the rational cross-check, typically gated behind a long-running flag.
HilbertFunction hilbert_over_q();

}  // namespace tetra
