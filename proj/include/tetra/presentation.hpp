#pragma once
// The degree-1 generators and defining relations of the cohomology ring of
// the compactified configuration space: 37 variables (the 23 boundary
// divisor classes plus 14 special-position classes y_I), four relation
// families, and the linear elimination that rewrites everything in the 26
// surviving variables.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tetra/labels.hpp"

namespace tetra {

inline constexpr int kVarCount = 37;

// Fixed variable order: a, b, astar, c1..c4, cstar1..cstar4, d12..d34
// (pairs lexicographic), e12..e34, then y1..y4, y12..y34, y123..y234.
// Divisor variables sort before the y-variables; the monomial order below
// relies on this order being frozen.
const std::array<std::string, kVarCount>& var_names();
int var_index(const std::string& name);   // throws std::runtime_error on unknown names
int var_apply(const Perm& p, int v);      // index-relabeling action on variables

// Monomial in the 37 variables with the graded reverse-lexicographic order:
// higher total degree wins; on equal degree the monomial whose exponent is
// smaller at the last differing variable is the larger one.
struct Monomial {
    std::array<std::uint8_t, kVarCount> e{};
    int deg = 0;

    static Monomial one() { return Monomial{}; }
    static Monomial var(int v);
    bool operator==(const Monomial&) const = default;
};
bool mono_less(const Monomial& x, const Monomial& y);
Monomial mono_mul(const Monomial& x, const Monomial& y);
bool mono_divides(const Monomial& d, const Monomial& m);
Monomial mono_div(const Monomial& m, const Monomial& d);  // throws unless d divides m
Monomial mono_lcm(const Monomial& x, const Monomial& y);
std::string mono_to_string(const Monomial& m);  // "a*c1^2*y12", "1" for the unit

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const;
};

// Exact-coefficient polynomial: terms sorted descending in the monomial
// order, no zero coefficients.
struct Term {
    Monomial m;
    mpq_class c;
    bool operator==(const Term&) const = default;
};
using Poly = std::vector<Term>;

Poly poly_normalize(std::vector<Term> terms);  // sort, merge, drop zeros
Poly poly_add(const Poly& f, const Poly& g);
Poly poly_sub(const Poly& f, const Poly& g);
Poly poly_mul(const Poly& f, const Poly& g);
Poly poly_neg(Poly f);
Poly perm_apply_poly(const Perm& p, const Poly& f);
// True when all terms share one total degree (the zero polynomial counts as
// homogeneous of degree -1).
bool poly_homogeneous(const Poly& f, int* degree = nullptr);
std::string poly_to_string(const Poly& f);

// The four relation families, named for where the relations come from:
//   linear    degree-1 rational equivalences from cross-ratio functions
//   disjoint  degree-2 monomials of divisor pairs with empty intersection
//   transfer  degree-2 products divisor * (y_I - y_J) for coinciding faces
//   flag      the pulled-back relations among y1, y12, y123 and their images
enum class RelationFamily { linear, disjoint, transfer, flag };
const char* family_name(RelationFamily f);

struct Relation {
    RelationFamily family;
    Poly poly;
};

struct Presentation {
    std::vector<Relation> relations;  // deterministic construction order

    std::vector<const Relation*> family(RelationFamily f) const;
};

// Instantiates every relation pattern over all assignments of distinct
// indices and deduplicates up to sign.  Family sizes: linear 24, disjoint
// 99, transfer 132, flag 40.
Presentation build_presentation();

// Solves the linear family for y_i (i != 1), y_{ij} (ij != 12), y_{ijk}
// (ijk != 123) and substitutes, leaving the 23 divisor variables plus y1,
// y12, y123.  Throws std::runtime_error when the system's rank is not 11,
// when the chosen variables cannot all be eliminated, or when a substitution
// fails to have integer coefficients.
struct Elimination {
    std::vector<int> survivors;                // the 26 surviving variable ids, ascending
    std::array<Poly, kVarCount> substitution;  // every variable as a linear poly in survivors
    std::vector<Relation> relations;           // non-linear families, substituted
};
Elimination eliminate_linear(const Presentation& p);
Poly substitute(const Poly& f, const Elimination& e);

}  // namespace tetra
