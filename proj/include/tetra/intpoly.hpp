#pragma once
// Exact univariate polynomials in q over arbitrary-precision integers.
// Coefficients are stored low degree first with no trailing zeros; all
// arithmetic is exact.

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace tetra {

class IntPoly {
  public:
    IntPoly() = default;
    IntPoly(std::initializer_list<long> coeffs);
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly monomial(int degree, const mpz_class& c = 1);

    int degree() const;  // -1 for the zero polynomial
    bool is_zero() const { return coeffs_.empty(); }
    mpz_class coeff(int i) const;  // 0 beyond the stored degree
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    bool operator==(const IntPoly&) const = default;
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    IntPoly& operator*=(const IntPoly& o);
    IntPoly& operator*=(const mpz_class& c);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
    friend IntPoly operator*(IntPoly a, const mpz_class& c) { return a *= c; }

    mpz_class eval(const mpz_class& q) const;
    IntPoly substitute_power(int r) const;  // q -> q^r
    bool palindromic() const;               // coefficient vector reads the same reversed

    // Exact division over the integers; returns false (and leaves quotient
    // untouched) when the divisor does not divide evenly.
    static bool try_divide(const IntPoly& numerator, const IntPoly& divisor, IntPoly* quotient);

    std::string to_string() const;  // e.g. "q^5-2q^4+q^3", "q-1", "1", "0"

  private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

}  // namespace tetra
