#include "tetra/intpoly.hpp"

#include <stdexcept>

namespace tetra {

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(int degree, const mpz_class& c) {
    if (degree < 0) throw std::logic_error("IntPoly::monomial: negative degree");
    std::vector<mpz_class> v(degree + 1);
    v[degree] = c;
    return IntPoly(std::move(v));
}

int IntPoly::degree() const { return static_cast<int>(coeffs_.size()) - 1; }

mpz_class IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[i];
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
    if (coeffs_.empty() || o.coeffs_.empty()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<mpz_class> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPoly& IntPoly::operator*=(const mpz_class& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

mpz_class IntPoly::eval(const mpz_class& q) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q + *it;
    return acc;
}

IntPoly IntPoly::substitute_power(int r) const {
    if (r < 1) throw std::logic_error("IntPoly::substitute_power: exponent must be positive");
    if (coeffs_.empty()) return {};
    std::vector<mpz_class> out((coeffs_.size() - 1) * r + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * r] = coeffs_[i];
    return IntPoly(std::move(out));
}

bool IntPoly::palindromic() const {
    for (std::size_t i = 0; i < coeffs_.size() / 2; ++i)
        if (coeffs_[i] != coeffs_[coeffs_.size() - 1 - i]) return false;
    return true;
}

bool IntPoly::try_divide(const IntPoly& numerator, const IntPoly& divisor, IntPoly* quotient) {
    if (divisor.is_zero()) throw std::logic_error("IntPoly::try_divide: division by zero");
    std::vector<mpz_class> rem = numerator.coeffs_;
    const auto& d = divisor.coeffs_;
    if (rem.size() < d.size()) {
        if (!numerator.is_zero()) return false;
        if (quotient) *quotient = IntPoly();
        return true;
    }
    std::vector<mpz_class> q(rem.size() - d.size() + 1);
    for (std::size_t k = q.size(); k-- > 0;) {
        mpz_class& lead = rem[k + d.size() - 1];
        if (lead % d.back() != 0) return false;
        q[k] = lead / d.back();
        for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= q[k] * d[i];
    }
    for (const auto& c : rem)
        if (c != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& c = coeffs_[i];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (out.empty())
            out += (c < 0 ? "-" : "");
        else
            out += (c < 0 ? "-" : "+");
        if (a != 1 || i == 0) out += a.get_str();
        if (i >= 1) out += "q";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace tetra
