#pragma once
// Groebner bases in the fixed 37-variable ring with its graded
// reverse-lexicographic order: an exact engine over F2 (the workhorse for
// the quotient-ring computations) and a rational twin used for the optional
// characteristic-zero cross-check.  Both support degree truncation: S-pairs
// whose lcm exceeds the bound are skipped, which for homogeneous input
// yields a basis deciding ideal membership correctly in all degrees up to
// the bound.

#include <cstdint>
#include <string>
#include <vector>

#include "tetra/presentation.hpp"

namespace tetra {

// Polynomial over F2: the XOR-set of its monomials, sorted descending, so
// the leading term sits in front.
struct F2Poly {
    std::vector<Monomial> terms;

    bool zero() const { return terms.empty(); }
    const Monomial& lead() const;  // throws std::logic_error on the zero polynomial
    bool operator==(const F2Poly&) const = default;
};

F2Poly f2_from_poly(const Poly& f);  // reduce mod 2; throws std::runtime_error on non-integer coefficients
F2Poly f2_add(const F2Poly& f, const F2Poly& g);
F2Poly f2_times_monomial(const F2Poly& f, const Monomial& m);
bool f2_homogeneous(const F2Poly& f, int* degree = nullptr);
std::string f2_to_string(const F2Poly& f);

// Reusable reduction context over an immutable basis snapshot: cheap to
// query repeatedly (the Buchberger loop, normal forms, and the quotient's
// multiplication tables all sit on top of it).
class F2Reducer {
  public:
    F2Reducer() = default;
    explicit F2Reducer(const std::vector<F2Poly>& basis);

    void add(F2Poly g);  // g must be nonzero
    // Index of some basis element whose leading term divides m, else -1.
    int find(const Monomial& m) const;
    // Fully reduced normal form of f against the held basis.
    F2Poly reduce(const F2Poly& f) const;
    const std::vector<F2Poly>& polys() const { return polys_; }

  private:
    std::vector<F2Poly> polys_;
    std::vector<std::uint64_t> masks_;  // leading-term variable supports
    std::vector<int> degs_;
};

// Reduced Groebner basis over F2, sorted by leading term ascending.  With
// truncation_degree >= 0 the basis is exact for degrees <= truncation_degree
// (input must be homogeneous); -1 computes the full basis.
struct F2Basis {
    std::vector<F2Poly> polys;
    int truncation_degree = -1;
};
F2Basis groebner_f2(const std::vector<F2Poly>& generators, int truncation_degree = -1);
// Fully reduced normal form; the zero result is exactly ideal membership.
// Throws std::logic_error when f has a term above the truncation degree.
F2Poly normal_form_f2(const F2Poly& f, const F2Basis& gb);

// The same over Q; basis elements are monic with fully reduced tails.
struct QBasis {
    std::vector<Poly> polys;
    int truncation_degree = -1;
};
QBasis groebner_q(const std::vector<Poly>& generators, int truncation_degree = -1);
Poly normal_form_q(const Poly& f, const QBasis& gb);

}  // namespace tetra
