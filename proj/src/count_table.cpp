#include "tetra/count_table.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tetra {

namespace {

int mirror_mask(int mask) {
    // Duality swaps the bottom and top charts and fixes the middle one.
    return ((mask & 1) << 2) | (mask & 2) | ((mask >> 2) & 1);
}

[[noreturn]] void fail_at(const std::string& path, int line, const std::string& msg) {
    throw std::runtime_error(path + ":" + std::to_string(line) + ": " + msg);
}

}  // namespace

int CountRow::codim() const { return split_codim(split_type) + std::popcount(static_cast<unsigned>(shift_mask)); }

const CountRow* CountTable::find(const std::string& split_type, int shift_mask) const {
    for (const CountRow& r : rows)
        if (r.split_type == split_type && r.shift_mask == shift_mask) return &r;
    return nullptr;
}

CountTable load_count_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open count table: " + path);

    const auto& names = split_type_names();
    CountTable t;
    std::map<std::pair<std::string, int>, int> seen;  // -> line
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        CountRow r;
        std::string mask, coeffs;
        if (!(row >> r.split_type >> mask >> r.multiplicity >> coeffs >> r.annotation))
            fail_at(path, lineno, "expected 5 columns: type mask multiplicity coefficients annotation");
        std::string extra;
        if (row >> extra) fail_at(path, lineno, "trailing token '" + extra + "'");

        if (std::find(names.begin(), names.end(), r.split_type) == names.end())
            fail_at(path, lineno, "unknown split type '" + r.split_type + "'");
        r.shift_mask = shift_mask_from_string(mask);
        if (r.shift_mask < 0) fail_at(path, lineno, "bad shift mask '" + mask + "'");
        if (r.multiplicity <= 0) fail_at(path, lineno, "multiplicity must be positive");

        std::vector<mpz_class> cs;
        std::istringstream cstream(coeffs);
        std::string tok;
        while (std::getline(cstream, tok, ',')) {
            try {
                cs.emplace_back(tok);
            } catch (const std::invalid_argument&) {
                fail_at(path, lineno, "bad coefficient '" + tok + "'");
            }
        }
        if (cs.empty()) fail_at(path, lineno, "empty coefficient list");
        if (cs.back() == 0) fail_at(path, lineno, "trailing zero coefficient");
        r.count = IntPoly(std::move(cs));
        try {
            annotation_poly(r.annotation);
        } catch (const std::runtime_error& e) {
            fail_at(path, lineno, e.what());
        }

        if (r.count.degree() != 6 - r.codim())
            fail_at(path, lineno,
                    "degree " + std::to_string(r.count.degree()) + " but codim " +
                        std::to_string(r.codim()) + " requires " + std::to_string(6 - r.codim()));
        auto [it, inserted] = seen.emplace(std::make_pair(r.split_type, r.shift_mask), lineno);
        if (!inserted)
            fail_at(path, lineno, "duplicate row for " + r.split_type + ":" + mask +
                                      " (first at line " + std::to_string(it->second) + ")");
        t.rows.push_back(std::move(r));
    }
    if (t.rows.size() != 160)
        throw std::runtime_error(path + ": expected 160 rows, found " + std::to_string(t.rows.size()));

    // Duality symmetry: dual type with mirrored mask carries the same count,
    // multiplicity and annotation.
    for (const CountRow& r : t.rows) {
        const CountRow* d = t.find(dual_split_type(r.split_type), mirror_mask(r.shift_mask));
        if (!d)
            throw std::runtime_error(path + ": missing dual row of " + r.split_type + ":" +
                                     shift_mask_string(r.shift_mask));
        if (!(d->count == r.count) || d->multiplicity != r.multiplicity || d->annotation != r.annotation)
            throw std::runtime_error(path + ": duality mismatch between " + r.split_type + ":" +
                                     shift_mask_string(r.shift_mask) + " and " + d->split_type + ":" +
                                     shift_mask_string(d->shift_mask));
    }
    return t;
}

IntPoly flag_poly() {
    return IntPoly{1, 1} * IntPoly{1, 1, 1} * IntPoly{1, 1, 1, 1};
}

IntPoly fiber_sum(const CountTable& t) {
    IntPoly total;
    for (const CountRow& r : t.rows) total += r.count * mpz_class(r.multiplicity);
    return total;
}

IntPoly annotation_poly(const std::string& annotation) {
    if (annotation == "-") return IntPoly{1};
    if (annotation.empty()) throw std::runtime_error("bad fiber annotation ''");
    static const std::map<std::string, IntPoly> factors = {
        {"I", IntPoly{6, -5, 1}}, {"II", IntPoly{-2, 1}}, {"III", IntPoly{-1, 1}}};
    IntPoly out{1};
    std::istringstream in(annotation);
    std::string part;
    while (std::getline(in, part, '*')) {
        std::string base = part;
        int exp = 1;
        if (auto caret = part.find('^'); caret != std::string::npos) {
            base = part.substr(0, caret);
            try {
                exp = std::stoi(part.substr(caret + 1));
            } catch (const std::exception&) {
                exp = 0;
            }
        }
        auto it = factors.find(base);
        if (it == factors.end() || exp < 1)
            throw std::runtime_error("bad fiber annotation '" + annotation + "'");
        for (int i = 0; i < exp; ++i) out *= it->second;
    }
    return out;
}

bool BettiProfile::palindromic() const {
    for (std::size_t i = 0; i < even_betti.size() / 2; ++i)
        if (even_betti[i] != even_betti[even_betti.size() - 1 - i]) return false;
    return true;
}

mpz_class BettiProfile::total() const {
    mpz_class s = 0;
    for (const auto& b : even_betti) s += b;
    return s;
}

BettiProfile betti_from_count(const IntPoly& p) {
    BettiProfile out;
    for (int i = 0; i <= p.degree(); ++i) {
        mpz_class c = p.coeff(i);
        if (c < 0)
            throw std::runtime_error("betti_from_count: negative coefficient at degree " +
                                     std::to_string(i));
        out.even_betti.push_back(c);
    }
    return out;
}

BettiProfile total_poincare(const CountTable& t) {
    return betti_from_count(fiber_sum(t) * flag_poly());
}

mpz_class euler_characteristic(const CountTable& t) { return total_poincare(t).total(); }

std::vector<std::pair<int, mpz_class>> zeta_exponents(const CountTable& t) {
    std::vector<std::pair<int, mpz_class>> out;
    BettiProfile b = total_poincare(t);
    for (std::size_t i = 0; i < b.even_betti.size(); ++i)
        out.emplace_back(static_cast<int>(i), b.even_betti[i]);
    return out;
}

TableReport verify_table(const CountTable& t, const Census& census) {
    TableReport rep;
    auto flag = [&](const std::string& msg) { rep.failures.push_back(msg); };

    // (1) degree = 6 - codim.
    for (const CountRow& r : t.rows)
        if (r.count.degree() != 6 - r.codim())
            flag(r.split_type + ":" + shift_mask_string(r.shift_mask) + ": degree " +
                 std::to_string(r.count.degree()) + " != " + std::to_string(6 - r.codim()));

    // (2) duality invariance of counts.
    for (const CountRow& r : t.rows) {
        const CountRow* d = t.find(dual_split_type(r.split_type), mirror_mask(r.shift_mask));
        if (!d || !(d->count == r.count))
            flag(r.split_type + ":" + shift_mask_string(r.shift_mask) + ": dual row count differs");
    }

    // (3) multiplicities equal the census class sizes.
    auto mults = census.type_multiplicities();
    if (mults.size() != t.rows.size())
        flag("census has " + std::to_string(mults.size()) + " stratum classes, table has " +
             std::to_string(t.rows.size()));
    for (const auto& [key, n] : mults) {
        const auto& [split, mask] = key;
        const CountRow* r = t.find(split, mask);
        if (!r)
            flag("census class " + split + ":" + shift_mask_string(mask) + " missing from table");
        else if (r->multiplicity != n)
            flag(split + ":" + shift_mask_string(mask) + ": multiplicity " +
                 std::to_string(r->multiplicity) + " != census " + std::to_string(n));
    }

    // (4) the fiber sum identity.
    if (fiber_sum(t) != IntPoly{1, 23, 114, 189, 114, 23, 1})
        flag("fiber sum != 1+23q+114q^2+189q^3+114q^4+23q^5+q^6");

    // (5) annotated fiber factors divide the row count.
    for (const CountRow& r : t.rows) {
        if (r.annotation == "-") continue;
        if (!IntPoly::try_divide(r.count, annotation_poly(r.annotation), nullptr))
            flag(r.split_type + ":" + shift_mask_string(r.shift_mask) + ": fiber factor " +
                 r.annotation + " does not divide the count");
    }
    return rep;
}

bool weil_smoke_check(const CountTable& t, const mpz_class& q, int rmax, std::string* why) {
    if (rmax < 1) throw std::runtime_error("weil_smoke_check: rmax must be >= 1");
    const int n = rmax + 1;  // series truncated after s^rmax
    using Series = std::vector<mpq_class>;
    auto mul = [n](const Series& a, const Series& b) {
        Series out(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
        return out;
    };

    // Left side: exp(sum_r N(q^r) s^r / r) with N the total point count.
    IntPoly total = fiber_sum(t) * flag_poly();
    Series logside(n);
    for (int r = 1; r <= rmax; ++r) {
        mpz_class qr;
        mpz_pow_ui(qr.get_mpz_t(), q.get_mpz_t(), r);
        logside[r] = mpq_class(total.eval(qr), r);
        logside[r].canonicalize();
    }
    Series lhs(n);
    lhs[0] = 1;
    Series term(n);
    term[0] = 1;
    for (int k = 1; k <= rmax; ++k) {
        term = mul(term, logside);
        for (auto& c : term) c /= k;
        for (int i = 0; i < n; ++i) lhs[i] += term[i];
    }

    // Right side: prod_i (1 - q^i s)^{-a_i} via the binomial series
    // (1-u)^{-a} = sum_k C(a+k-1, k) u^k.
    Series rhs(n);
    rhs[0] = 1;
    for (const auto& [i, a] : zeta_exponents(t)) {
        if (a == 0) continue;
        if (!a.fits_ulong_p()) throw std::runtime_error("weil_smoke_check: exponent overflow");
        unsigned long ai = a.get_ui();
        mpz_class qi;
        mpz_pow_ui(qi.get_mpz_t(), q.get_mpz_t(), i);
        Series factor(n);
        mpz_class qpow = 1;
        for (int k = 0; k < n; ++k) {
            mpz_class binom;
            mpz_bin_uiui(binom.get_mpz_t(), ai + k - 1, k);
            if (k == 0) binom = 1;
            factor[k] = mpq_class(binom * qpow);
            qpow *= qi;
        }
        rhs = mul(rhs, factor);
    }

    for (int i = 0; i < n; ++i)
        if (lhs[i] != rhs[i]) {
            if (why)
                *why = "series mismatch at s^" + std::to_string(i) + ": " + lhs[i].get_str() +
                       " vs " + rhs[i].get_str();
            return false;
        }
    return true;
}

}  // namespace tetra
