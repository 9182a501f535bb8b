#include "tetra/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace tetra {

namespace {

struct MonoLessCmp {
    bool operator()(const Monomial& x, const Monomial& y) const { return mono_less(x, y); }
};
struct MonoGreater {
    bool operator()(const Monomial& x, const Monomial& y) const { return mono_less(y, x); }
};

bool coprime_monomials(const Monomial& x, const Monomial& y) {
    for (int v = 0; v < kVarCount; ++v)
        if (x.e[v] && y.e[v]) return false;
    return true;
}

// Bit v set when variable v appears; a divisor's support is a subset of the
// multiple's support, so one AND filters most candidates cheaply.
std::uint64_t support_mask(const Monomial& m) {
    std::uint64_t mask = 0;
    for (int v = 0; v < kVarCount; ++v)
        if (m.e[v]) mask |= std::uint64_t{1} << v;
    return mask;
}

// Work polynomial for F2 reduction: a hash set of the monomials currently
// present plus a lazily cleaned max-heap locating the largest one.  All terms
// injected during reduction are strictly below the monomial being cancelled,
// so the heap never needs rebuilding.
class F2Work {
  public:
    void toggle(const Monomial& m) {
        auto it = present_.find(m);
        if (it != present_.end()) {
            present_.erase(it);
        } else {
            present_.insert(m);
            heap_.push(m);
        }
    }
    bool pop_max(Monomial& out) {
        while (!heap_.empty()) {
            Monomial top = heap_.top();
            heap_.pop();
            auto it = present_.find(top);
            if (it != present_.end()) {
                present_.erase(it);
                out = top;
                return true;
            }
        }
        return false;
    }

  private:
    std::unordered_set<Monomial, MonomialHash> present_;
    std::priority_queue<Monomial, std::vector<Monomial>, MonoLessCmp> heap_;
};

struct SPair {
    int deg = 0;  // degree of the lcm, and of the S-polynomial
    Monomial lcm;
    int i = 0, j = 0;  // basis indices, i < j
};
struct SPairLess {
    bool operator()(const SPair& x, const SPair& y) const {
        if (x.deg != y.deg) return x.deg < y.deg;
        if (!(x.lcm == y.lcm)) return mono_less(x.lcm, y.lcm);
        if (x.j != y.j) return x.j < y.j;
        return x.i < y.i;
    }
};

// Critical-pair bookkeeping shared by both coefficient fields.  Implements
// the Gebauer-Moeller filters: drop old pairs strictly refined by the new
// leading term, drop new pairs whose lcm is properly divisible by another new
// lcm, keep one pair per lcm value, and drop lcm classes containing a coprime
// pair.  Pairs above the truncation degree are never queued.
class PairSet {
  public:
    explicit PairSet(int truncation) : trunc_(truncation) {}

    void add_element(const Monomial& lt) {
        int t = static_cast<int>(lts_.size());
        for (auto it = pairs_.begin(); it != pairs_.end();) {
            if (mono_divides(lt, it->lcm) &&
                !(mono_lcm(lts_[it->i], lt) == it->lcm) &&
                !(mono_lcm(lts_[it->j], lt) == it->lcm))
                it = pairs_.erase(it);
            else
                ++it;
        }
        struct Cand {
            Monomial lcm;
            int i;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(t);
        for (int i = 0; i < t; ++i)
            cands.push_back(
                {mono_lcm(lts_[i], lt), i, coprime_monomials(lts_[i], lt)});
        std::vector<bool> drop(cands.size(), false);
        for (std::size_t x = 0; x < cands.size(); ++x)
            for (std::size_t y = 0; y < cands.size() && !drop[x]; ++y)
                if (y != x && !(cands[y].lcm == cands[x].lcm) &&
                    mono_divides(cands[y].lcm, cands[x].lcm))
                    drop[x] = true;
        // Group the survivors by lcm; class members have identical drop status.
        std::vector<std::size_t> order;
        for (std::size_t x = 0; x < cands.size(); ++x)
            if (!drop[x]) order.push_back(x);
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            if (!(cands[x].lcm == cands[y].lcm)) return mono_less(cands[x].lcm, cands[y].lcm);
            return cands[x].i < cands[y].i;
        });
        for (std::size_t at = 0; at < order.size();) {
            std::size_t end = at;
            bool any_coprime = false;
            while (end < order.size() && cands[order[end]].lcm == cands[order[at]].lcm)
                any_coprime = any_coprime || cands[order[end++]].coprime;
            if (!any_coprime) {
                const Cand& c = cands[order[at]];
                if (trunc_ < 0 || c.lcm.deg <= trunc_)
                    pairs_.insert({c.lcm.deg, c.lcm, c.i, t});
            }
            at = end;
        }
        lts_.push_back(lt);
    }

    bool pop(SPair& out) {
        if (pairs_.empty()) return false;
        out = *pairs_.begin();
        pairs_.erase(pairs_.begin());
        return true;
    }

  private:
    int trunc_;
    std::vector<Monomial> lts_;
    std::set<SPair, SPairLess> pairs_;
};

// ---------------------------------------------------------------- F2 engine

class F2Engine {
  public:
    explicit F2Engine(int truncation) : trunc_(truncation), pairs_(truncation) {}

    void run(const std::vector<F2Poly>& generators) {
        for (const F2Poly& g : generators) {
            F2Poly h = red_.reduce(g);
            if (!h.zero()) add(std::move(h));
        }
        SPair pr;
        while (pairs_.pop(pr)) {
            const F2Poly& f = red_.polys()[pr.i];
            const F2Poly& g = red_.polys()[pr.j];
            F2Poly s = f2_add(f2_times_monomial(f, mono_div(pr.lcm, f.lead())),
                              f2_times_monomial(g, mono_div(pr.lcm, g.lead())));
            F2Poly h = red_.reduce(s);
            if (!h.zero()) add(std::move(h));
        }
    }

    // Minimal leading terms, fully reduced tails, sorted by leading term.
    std::vector<F2Poly> reduced_basis() const {
        const std::vector<F2Poly>& g_ = red_.polys();
        std::vector<std::size_t> order(g_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return mono_less(g_[x].lead(), g_[y].lead());
        });
        std::vector<const F2Poly*> kept;
        for (std::size_t i : order) {
            bool redundant = false;
            for (const F2Poly* k : kept)
                if (mono_divides(k->lead(), g_[i].lead())) {
                    redundant = true;
                    break;
                }
            if (!redundant) kept.push_back(&g_[i]);
        }
        F2Reducer scratch;
        for (const F2Poly* k : kept) scratch.add(*k);
        // No kept leading term divides another, and every monomial that shows
        // up while reducing a tail sits strictly below the element's own lead,
        // so reducing just the tail against the whole kept set is a full
        // reduction with the element itself effectively excluded.
        std::vector<F2Poly> out;
        out.reserve(kept.size());
        for (const F2Poly* k : kept) {
            F2Poly tail{{k->terms.begin() + 1, k->terms.end()}};
            F2Poly red = scratch.reduce(tail);
            F2Poly full{{k->lead()}};
            full.terms.insert(full.terms.end(), red.terms.begin(), red.terms.end());
            out.push_back(std::move(full));
        }
        return out;  // already sorted by leading term
    }

  private:
    // New basis element discovered during the run: queues critical pairs.
    void add(F2Poly h) {
        pairs_.add_element(h.lead());
        red_.add(std::move(h));
    }

    int trunc_;
    PairSet pairs_;
    F2Reducer red_;
};

// ----------------------------------------------------------------- Q engine

Poly q_monic(Poly f) {
    if (f.empty()) return f;
    mpq_class inv = 1 / f.front().c;
    for (Term& t : f) t.c *= inv;
    return f;
}

class QEngine {
  public:
    explicit QEngine(int truncation) : trunc_(truncation), pairs_(truncation) {}

    void run(const std::vector<Poly>& generators) {
        for (const Poly& g : generators) {
            Poly h = reduce(g);
            if (!h.empty()) add(std::move(h));
        }
        SPair pr;
        while (pairs_.pop(pr)) {
            const Poly& f = g_[pr.i];
            const Poly& g = g_[pr.j];
            Poly s = poly_sub(
                poly_mul(f, {{mono_div(pr.lcm, f.front().m), mpq_class(1)}}),
                poly_mul(g, {{mono_div(pr.lcm, g.front().m), mpq_class(1)}}));
            Poly h = reduce(s);
            if (!h.empty()) add(std::move(h));
        }
    }

    std::vector<Poly> reduced_basis() const {
        std::vector<std::size_t> order(g_.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
            return mono_less(g_[x].front().m, g_[y].front().m);
        });
        std::vector<const Poly*> kept;
        for (std::size_t i : order) {
            bool redundant = false;
            for (const Poly* k : kept)
                if (mono_divides(k->front().m, g_[i].front().m)) {
                    redundant = true;
                    break;
                }
            if (!redundant) kept.push_back(&g_[i]);
        }
        QEngine scratch(trunc_);
        for (const Poly* k : kept) scratch.insert(*k);
        // Same exclusion-free tail reduction as over F2: nothing reachable
        // from a tail is divisible by the element's own leading term.
        std::vector<Poly> out;
        out.reserve(kept.size());
        for (const Poly* k : kept) {
            Poly red = scratch.reduce(Poly(k->begin() + 1, k->end()));
            Poly full{k->front()};
            full.insert(full.end(), red.begin(), red.end());
            out.push_back(std::move(full));
        }
        return out;  // already sorted by leading term
    }

    Poly reduce(const Poly& f) const {
        std::map<Monomial, mpq_class, MonoGreater> work;
        for (const Term& t : f) work[t.m] += t.c;
        Poly nf;
        while (!work.empty()) {
            auto it = work.begin();
            Monomial m = it->first;
            mpq_class c = it->second;
            work.erase(it);
            if (c == 0) continue;
            int gi = find_reducer(m);
            if (gi < 0) {
                nf.push_back({m, c});
                continue;
            }
            const Poly& g = g_[gi];  // monic
            Monomial cof = mono_div(m, g.front().m);
            for (std::size_t t = 1; t < g.size(); ++t)
                work[mono_mul(g[t].m, cof)] -= c * g[t].c;
        }
        return nf;
    }

    void add(Poly h) {
        h = q_monic(std::move(h));
        pairs_.add_element(h.front().m);
        insert(std::move(h));
    }

    void insert(Poly h) {
        h = q_monic(std::move(h));
        const Monomial& lt = h.front().m;
        masks_.push_back(support_mask(lt));
        degs_.push_back(lt.deg);
        g_.push_back(std::move(h));
    }

  private:
    int find_reducer(const Monomial& m) const {
        std::uint64_t mask = support_mask(m);
        for (std::size_t i = 0; i < g_.size(); ++i) {
            if (degs_[i] > m.deg || (masks_[i] & ~mask)) continue;
            if (mono_divides(g_[i].front().m, m)) return static_cast<int>(i);
        }
        return -1;
    }

    int trunc_;
    PairSet pairs_;
    std::vector<Poly> g_;
    std::vector<std::uint64_t> masks_;
    std::vector<int> degs_;
};

}  // namespace

const Monomial& F2Poly::lead() const {
    if (terms.empty()) throw std::logic_error("the zero polynomial has no leading term");
    return terms.front();
}

F2Reducer::F2Reducer(const std::vector<F2Poly>& basis) {
    for (const F2Poly& g : basis) add(g);
}

void F2Reducer::add(F2Poly g) {
    const Monomial& lt = g.lead();
    masks_.push_back(support_mask(lt));
    degs_.push_back(lt.deg);
    polys_.push_back(std::move(g));
}

int F2Reducer::find(const Monomial& m) const {
    std::uint64_t mask = support_mask(m);
    for (std::size_t i = 0; i < polys_.size(); ++i) {
        if (degs_[i] > m.deg || (masks_[i] & ~mask)) continue;
        if (mono_divides(polys_[i].terms.front(), m)) return static_cast<int>(i);
    }
    return -1;
}

F2Poly F2Reducer::reduce(const F2Poly& f) const {
    F2Work work;
    for (const Monomial& m : f.terms) work.toggle(m);
    F2Poly nf;
    Monomial m;
    while (work.pop_max(m)) {
        int gi = find(m);
        if (gi < 0) {
            nf.terms.push_back(m);  // pops come in descending order
            continue;
        }
        const F2Poly& g = polys_[gi];
        Monomial cof = mono_div(m, g.terms.front());
        for (std::size_t t = 1; t < g.terms.size(); ++t)
            work.toggle(mono_mul(g.terms[t], cof));
    }
    return nf;
}

F2Poly f2_from_poly(const Poly& f) {
    F2Poly out;
    for (const Term& t : f) {
        if (t.c.get_den() != 1)
            throw std::runtime_error("cannot reduce a non-integer coefficient mod 2");
        if (mpz_odd_p(t.c.get_num().get_mpz_t())) out.terms.push_back(t.m);
    }
    // Input order (descending) is preserved by the filter.
    return out;
}

F2Poly f2_add(const F2Poly& f, const F2Poly& g) {
    F2Poly out;
    out.terms.reserve(f.terms.size() + g.terms.size());
    std::size_t i = 0, j = 0;
    while (i < f.terms.size() && j < g.terms.size()) {
        if (f.terms[i] == g.terms[j]) {
            ++i;
            ++j;
        } else if (mono_less(g.terms[j], f.terms[i])) {
            out.terms.push_back(f.terms[i++]);
        } else {
            out.terms.push_back(g.terms[j++]);
        }
    }
    out.terms.insert(out.terms.end(), f.terms.begin() + i, f.terms.end());
    out.terms.insert(out.terms.end(), g.terms.begin() + j, g.terms.end());
    return out;
}

F2Poly f2_times_monomial(const F2Poly& f, const Monomial& m) {
    F2Poly out;
    out.terms.reserve(f.terms.size());
    for (const Monomial& t : f.terms) out.terms.push_back(mono_mul(t, m));
    return out;
}

bool f2_homogeneous(const F2Poly& f, int* degree) {
    int deg = f.terms.empty() ? -1 : f.terms.front().deg;
    for (const Monomial& m : f.terms)
        if (m.deg != deg) return false;
    if (degree) *degree = deg;
    return true;
}

std::string f2_to_string(const F2Poly& f) {
    if (f.terms.empty()) return "0";
    std::string out;
    for (const Monomial& m : f.terms) {
        if (!out.empty()) out += " + ";
        out += mono_to_string(m);
    }
    return out;
}

F2Basis groebner_f2(const std::vector<F2Poly>& generators, int truncation_degree) {
    if (truncation_degree >= 0)
        for (const F2Poly& g : generators)
            if (!f2_homogeneous(g))
                throw std::runtime_error(
                    "a truncated Groebner basis requires homogeneous generators");
    F2Engine engine(truncation_degree);
    engine.run(generators);
    return {engine.reduced_basis(), truncation_degree};
}

F2Poly normal_form_f2(const F2Poly& f, const F2Basis& gb) {
    if (gb.truncation_degree >= 0)
        for (const Monomial& m : f.terms)
            if (m.deg > gb.truncation_degree)
                throw std::logic_error("normal form requested above the truncation degree");
    return F2Reducer(gb.polys).reduce(f);
}

QBasis groebner_q(const std::vector<Poly>& generators, int truncation_degree) {
    if (truncation_degree >= 0)
        for (const Poly& g : generators)
            if (!poly_homogeneous(g))
                throw std::runtime_error(
                    "a truncated Groebner basis requires homogeneous generators");
    QEngine engine(truncation_degree);
    engine.run(generators);
    return {engine.reduced_basis(), truncation_degree};
}

Poly normal_form_q(const Poly& f, const QBasis& gb) {
    if (gb.truncation_degree >= 0)
        for (const Term& t : f)
            if (t.m.deg > gb.truncation_degree)
                throw std::logic_error("normal form requested above the truncation degree");
    QEngine engine(gb.truncation_degree);
    for (const Poly& g : gb.polys) engine.insert(g);
    return engine.reduce(f);
}

}  // namespace tetra
