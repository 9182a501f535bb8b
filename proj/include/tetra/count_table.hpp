#pragma once
// The 160-row stratum point-count table (20 split types x 8 shift masks) and
// the topology bookkeeping derived from it: fiber point-count total, Poincaré
// polynomial, Betti numbers, Euler characteristic, zeta-function exponents,
// and the table's internal consistency checks.
//
// Each row's polynomial is the TOTAL count of the stratum's points in the
// fiber over one fixed flag, with any nontrivial fiber factors already
// multiplied in; the annotation column only documents those factors
// (I = plane minus the six-line arrangement, II = line minus three points,
// III = line minus two points).

#include <string>
#include <utility>
#include <vector>

#include "tetra/intpoly.hpp"
#include "tetra/strata.hpp"

namespace tetra {

struct CountRow {
    std::string split_type;
    int shift_mask = 0;
    int multiplicity = 0;
    IntPoly count;
    std::string annotation;  // "-" or a product like "II^2"

    int codim() const;  // split codim + collapsed charts
};

struct CountTable {
    std::vector<CountRow> rows;  // exactly 160, file order
    const CountRow* find(const std::string& split_type, int shift_mask) const;
};

// Parses the table file and runs the structural checks that catch
// transcription slips immediately: row shape, known type names, coefficient
// syntax, degree = 6 - codim, and duality symmetry (dual type + mirrored
// mask has the identical polynomial).  Throws std::runtime_error with
// file:line context on any failure.
CountTable load_count_table(const std::string& path);

// Poincaré polynomial of the flag variety, (1+q)(1+q+q^2)(1+q+q^2+q^3).
IntPoly flag_poly();

// Total fiber point count: sum of multiplicity * count over all rows.
IntPoly fiber_sum(const CountTable& t);

// The annotated fiber factor as a polynomial ("-" -> 1, "II^2" -> (q-2)^2).
IntPoly annotation_poly(const std::string& annotation);

struct BettiProfile {
    std::vector<mpz_class> even_betti;  // b_0, b_2, b_4, ... (odd Betti all zero)

    bool palindromic() const;
    mpz_class total() const;  // Euler characteristic (odd rows vanish)
};

// b_{2i} = coefficient of q^i.  Rejects negative coefficients.
BettiProfile betti_from_count(const IntPoly& p);

// Betti numbers of the total space: convolution of fiber and flag counts.
BettiProfile total_poincare(const CountTable& t);

mpz_class euler_characteristic(const CountTable& t);

// Exponent a_i of the factor (1 - q^i s)^{-a_i} in the rational zeta
// function; a_i equals the 2i-th Betti number of the total space.
std::vector<std::pair<int, mpz_class>> zeta_exponents(const CountTable& t);

// Cross-checks the table against the census: degree vs codim, duality
// invariance, multiplicities equal to the census class sizes, the fiber sum
// identity, and divisibility by the annotated fiber factors.
struct TableReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};
TableReport verify_table(const CountTable& t, const Census& census);

// Zeta bookkeeping check at a concrete q: the exponential generating series
// exp(sum_{r>=1} N(q^r) s^r / r), with N the total point count, must agree
// with prod_i (1 - q^i s)^{-a_i} through order s^rmax, computed exactly over
// the rationals.
bool weil_smoke_check(const CountTable& t, const mpz_class& q, int rmax, std::string* why = nullptr);

}  // namespace tetra
