#pragma once
// Exact projective geometry over a small prime field: subspaces of F_p^4 in
// canonical reduced row-echelon form, their enumeration and incidence, pencil
// parameters, and cross-ratios.

#include <array>
#include <string>
#include <vector>

namespace tetra {

// Arithmetic in GF(p); elements are ints in [0, p).
class PrimeField {
  public:
    explicit PrimeField(int p);   // throws std::runtime_error unless p is a prime < 2^16
    int p() const { return p_; }
    int add(int a, int b) const { return (a + b) % p_; }
    int sub(int a, int b) const { return (a - b + p_) % p_; }
    int mul(int a, int b) const {
        return static_cast<int>(static_cast<long long>(a) * b % p_);
    }
    int neg(int a) const { return (p_ - a) % p_; }
    int inv(int a) const;         // throws std::logic_error at 0

  private:
    int p_;
};

using Vec4 = std::array<int, 4>;

// A k-dimensional subspace of F_p^4, k = 1..3 (0 and 4 appear only as
// intermediate values).  The rows are the unique reduced row-echelon basis,
// so equality of subspaces is equality of representations.
struct Subspace {
    std::vector<Vec4> rows;
    int dim() const { return static_cast<int>(rows.size()); }
    bool operator==(const Subspace&) const = default;
    bool operator<(const Subspace& o) const { return rows < o.rows; }
};

// Reduced row-echelon span of the generators (zero rows dropped).
Subspace span(const PrimeField& F, std::vector<Vec4> gens);
bool subspace_contains(const PrimeField& F, const Subspace& s, Vec4 v);
bool subspace_leq(const PrimeField& F, const Subspace& small, const Subspace& big);
// The annihilator under the standard pairing; dim 4-k.  Applying it twice
// gives back the original subspace.
Subspace annihilator(const PrimeField& F, const Subspace& s);
Subspace intersect(const PrimeField& F, const Subspace& a, const Subspace& b);

// All dim-k subspaces of F_q^4 (k = 1..3) by direct reduced-row-echelon
// enumeration, in a fixed deterministic order.  Requires a prime q <= 7.
std::vector<Subspace> enumerate_subspaces(int q, int dim);

// Expected size of the above: the Gaussian binomial [4 choose k]_q.
long long gaussian_binomial(int q, int k);

// Pencils.  Points on a line and planes through a line each form a projective
// line over F; parameters are the ints 0..p-1 plus p itself standing for
// infinity.  The parametrization is fixed by the line's canonical basis
// (r0, r1): parameter t marks the point r0 + t*r1, infinity marks r1; planes
// are parametrized through the dual pencil ann(plane) inside ann(line).
int pencil_infinity(const PrimeField& F);   // = p
Subspace pencil_point(const PrimeField& F, const Subspace& line, int t);
Subspace pencil_plane(const PrimeField& F, const Subspace& line, int t);
int pencil_parameter_point(const PrimeField& F, const Subspace& line, const Subspace& point);
int pencil_parameter_plane(const PrimeField& F, const Subspace& line, const Subspace& plane);

// Cross-ratio of four distinct pencil parameters: the image of d under the
// unique projective map sending a, b, c to 0, 1, infinity — in particular
// (0, 1, infinity, t) evaluates to t, and the value is unchanged when both
// halves of a pairing are swapped at once.  Computed projectively so
// infinity needs no special cases; never 0, 1, or infinity.  Throws
// std::runtime_error unless the four are mutually distinct.
int cross_ratio(const PrimeField& F, int a, int b, int c, int d);
// Geometric forms: four distinct collinear points, or four distinct planes
// through one common line.  Throw std::runtime_error when the incidence or
// distinctness fails.
int cross_ratio_points(const PrimeField& F, const std::array<Subspace, 4>& pts);
int cross_ratio_planes(const PrimeField& F, const std::array<Subspace, 4>& planes);

}  // namespace tetra
