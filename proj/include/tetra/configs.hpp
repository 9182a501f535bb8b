#pragma once

// Point-counting oracles over small prime fields.  Configurations of four
// points and four planes in P^3 subject to incidence constraints are counted
// by direct enumeration, independently of the polynomial count table, so the
// two can be cross-checked at several field sizes.

#include <string>

#include "tetra/subspace.hpp"

namespace tetra {

// A full flag: point < line < plane in P^3.
struct Flag {
    Subspace point;
    Subspace line;
    Subspace plane;
};

// Validates dimensions 1 < 2 < 3 and the containments; throws runtime_error.
Flag make_flag(const PrimeField& F, Subspace point, Subspace line, Subspace plane);

// e1 < <e1,e2> < <e1,e2,e3>.
Flag standard_flag(const PrimeField& F);

// The annihilator flag: ann(plane) < ann(line) < ann(point).
Flag dual_flag(const PrimeField& F, const Flag& f);

// Number of full flags in general position with respect to the reference
// flag, i.e. dim(x_i intersect y_j) == max(0, i + j - 4) for all pairs.
// Equals q^6 for every reference flag.
long long count_open_flag_orbit(int q);
long long count_open_flag_orbit(int q, const Flag& reference);

// Number of configurations in the named boundary stratum of the fiber over
// the reference flag, counted by direct enumeration.  Supported types:
//   "X0"    open stratum, q^6
//   "A"     first-simplex shift, q^3 (q-1)^2
//   "Astar" third-simplex shift, q^3 (q-1)^2
//   "B"     middle-simplex shift, q^2 (q-1)^2 (q-2)
// Throws runtime_error on any other type.
long long count_stratum(const std::string& type, int q);
long long count_stratum(const std::string& type, int q, const Flag& reference);

// Number of points of P^2(F_q) avoiding the six lines spanned by pairs of
// four points in general position.  Equals (q-2)(q-3).
long long count_arrangement_complement(int q);

}  // namespace tetra
