#include "tetra/strata.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace tetra {

namespace {

Diagram singleton_diagram(int d) {
    static const std::array<Diagram, kDivisorCount> cache = [] {
        std::array<Diagram, kDivisorCount> out{};
        for (int i = 0; i < kDivisorCount; ++i) out[i] = diagram_of_clique({i});
        return out;
    }();
    return cache[d];
}

}  // namespace

bool compatible(int d1, int d2) {
    if (d1 == d2) return false;
    Diagram joint = diagram_of_clique({d1, d2});
    if (!is_admissible(joint)) return false;
    return poset_leq(joint, singleton_diagram(d1)) && poset_leq(joint, singleton_diagram(d2));
}

std::string shift_mask_string(int mask) {
    std::string s;
    for (int k = 0; k < 3; ++k) s += (mask >> k) & 1 ? '1' : '0';
    return s;
}

int shift_mask_from_string(const std::string& s) {
    if (s.size() != 3) return -1;
    int mask = 0;
    for (int k = 0; k < 3; ++k) {
        if (s[k] == '1')
            mask |= 1 << k;
        else if (s[k] != '0')
            return -1;
    }
    return mask;
}

std::string StratumRecord::type_name() const { return split_type + ":" + shift_mask_string(shift_mask); }

namespace {

struct SplitInfo {
    DivisorKind kind;
    int index;
};

}  // namespace

std::string classify_split(const std::vector<int>& split_clique) {
    std::vector<SplitInfo> info;
    for (int d : split_clique) {
        if (divisor_shifting(d)) throw std::logic_error("classify_split: shifting divisor");
        info.push_back({divisors()[d].kind, divisors()[d].index});
    }
    auto count = [&](DivisorKind k) {
        return std::count_if(info.begin(), info.end(), [&](const SplitInfo& s) { return s.kind == k; });
    };
    auto find = [&](DivisorKind k) {
        for (const SplitInfo& s : info)
            if (s.kind == k) return s;
        throw std::logic_error("classify_split: kind not present");
    };
    long nc = count(DivisorKind::C), ncs = count(DivisorKind::Cstar);
    long nd = count(DivisorKind::D), ne = count(DivisorKind::E);
    switch (info.size()) {
        case 0: return "X0";
        case 1:
            if (nc) return "C";
            if (ncs) return "Cstar";
            if (nd) return "D";
            return "E";
        case 2:
            if (nc && ncs) return find(DivisorKind::C).index == find(DivisorKind::Cstar).index ? "CCstar_op" : "CCstar_nop";
            if (nc && nd) return "CD";
            if (ncs && nd) return "CstarD";
            if (nc && ne) return "CE";
            if (ncs && ne) return "CstarE";
            if (nd == 2) return "DD_op";
            if (nd && ne) return find(DivisorKind::D).index == find(DivisorKind::E).index ? "DE" : "DEstar";
            break;
        case 3:
            if (nc && ncs && nd)
                return find(DivisorKind::C).index == find(DivisorKind::Cstar).index ? "CCstar_op_D" : "CCstar_nop_D";
            if (nc && ncs && ne) return "CCstarE";
            if (nc && nd && ne) return "CDE";
            if (ncs && nd && ne) return "CstarDE";
            if (nd == 2 && ne) return "DD_opE";
            break;
    }
    throw std::logic_error("classify_split: unrecognized clique shape");
}

const std::vector<std::string>& split_type_names() {
    static const std::vector<std::string> names = {
        "X0",  "C",   "Cstar",    "D",           "E",           "CCstar_nop", "CCstar_op",
        "CD",  "CstarD", "CE",    "CstarE",      "DD_op",       "DE",         "DEstar",
        "CCstar_op_D", "CCstar_nop_D", "CCstarE", "CDE",        "CstarDE",    "DD_opE"};
    return names;
}

int split_codim(const std::string& split_type) {
    static const std::unordered_map<std::string, int> codims = {
        {"X0", 0},          {"C", 1},           {"Cstar", 1},   {"D", 1},       {"E", 1},
        {"CCstar_nop", 2},  {"CCstar_op", 2},   {"CD", 2},      {"CstarD", 2},  {"CE", 2},
        {"CstarE", 2},      {"DD_op", 2},       {"DE", 2},      {"DEstar", 2},  {"CCstar_op_D", 3},
        {"CCstar_nop_D", 3},{"CCstarE", 3},     {"CDE", 3},     {"CstarDE", 3}, {"DD_opE", 3}};
    auto it = codims.find(split_type);
    if (it == codims.end()) throw std::runtime_error("unknown split type: " + split_type);
    return it->second;
}

std::string dual_split_type(const std::string& t) {
    static const std::unordered_map<std::string, std::string> duals = {
        {"X0", "X0"},           {"C", "Cstar"},       {"Cstar", "C"},       {"D", "D"},
        {"E", "E"},             {"CCstar_nop", "CCstar_nop"}, {"CCstar_op", "CCstar_op"},
        {"CD", "CstarD"},       {"CstarD", "CD"},     {"CE", "CstarE"},     {"CstarE", "CE"},
        {"DD_op", "DD_op"},     {"DE", "DEstar"},     {"DEstar", "DE"},     {"CCstar_op_D", "CCstar_op_D"},
        {"CCstar_nop_D", "CCstar_nop_D"}, {"CCstarE", "CCstarE"}, {"CDE", "CstarDE"},
        {"CstarDE", "CDE"},     {"DD_opE", "DD_opE"}};
    auto it = duals.find(t);
    if (it == duals.end()) throw std::runtime_error("unknown split type: " + t);
    return it->second;
}

const StratumRecord* Census::find(const Diagram& d) const {
    for (const StratumRecord& r : strata)
        if (r.diagram == d) return &r;
    return nullptr;
}

std::map<std::pair<std::string, int>, int> Census::type_multiplicities() const {
    std::map<std::pair<std::string, int>, int> out;
    for (const StratumRecord& r : strata) ++out[{r.split_type, r.shift_mask}];
    return out;
}

namespace {

Census build_census() {
    // Pairwise compatibility graph.
    std::array<std::uint32_t, kDivisorCount> adj{};
    for (int a = 0; a < kDivisorCount; ++a)
        for (int b = a + 1; b < kDivisorCount; ++b)
            if (compatible(a, b)) {
                adj[a] |= std::uint32_t{1} << b;
                adj[b] |= std::uint32_t{1} << a;
            }

    Census census;
    std::unordered_set<Diagram, DiagramHash> seen;
    std::vector<int> clique;

    auto emit = [&](const std::vector<int>& members) {
        Diagram d = diagram_of_clique(members);
        std::string why;
        if (!is_admissible(d, &why))
            throw std::logic_error("census: inadmissible clique diagram (" + why + ")");
        for (int m : members)
            if (!poset_leq(d, singleton_diagram(m)))
                throw std::logic_error("census: clique diagram not below member " + divisors()[m].name);
        if (!seen.insert(d).second) throw std::logic_error("census: duplicate diagram");
        StratumRecord r;
        r.shift_mask = 0;
        r.orbit_id = -1;
        r.clique = members;
        r.diagram = d;
        r.codim = static_cast<int>(members.size());
        std::vector<int> split;
        for (int m : members) {
            if (divisor_shifting(m))
                r.shift_mask |= 1 << (divisors()[m].index - 1);
            else
                split.push_back(m);
        }
        r.split_type = classify_split(split);
        census.strata.push_back(std::move(r));
    };

    // Depth-first clique enumeration over the ordered divisor list.
    auto rec = [&](auto&& self, int start, std::uint32_t cand) -> void {
        emit(clique);
        for (int d = start; d < kDivisorCount; ++d) {
            if (!(cand & (std::uint32_t{1} << d))) continue;
            clique.push_back(d);
            self(self, d + 1, cand & adj[d]);
            clique.pop_back();
        }
    };
    rec(rec, 0, (std::uint32_t{1} << kDivisorCount) - 1);

    std::sort(census.strata.begin(), census.strata.end(), [](const StratumRecord& a, const StratumRecord& b) {
        if (a.codim != b.codim) return a.codim < b.codim;
        return serialize(a.diagram) < serialize(b.diagram);
    });

    // S4 orbits via canonical representatives.
    std::unordered_map<std::string, std::vector<int>> orbits;
    for (std::size_t i = 0; i < census.strata.size(); ++i) {
        std::string canon;
        for (const Perm& p : all_permutations()) {
            std::string s = serialize(s4_act(p, census.strata[i].diagram));
            if (canon.empty() || s < canon) canon = std::move(s);
        }
        orbits[canon].push_back(static_cast<int>(i));
    }
    std::vector<std::string> keys;
    for (const auto& [k, v] : orbits) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    for (std::size_t o = 0; o < keys.size(); ++o)
        for (int idx : orbits[keys[o]]) census.strata[idx].orbit_id = static_cast<int>(o);
    census.orbit_count = static_cast<int>(keys.size());
    return census;
}

}  // namespace

const Census& census() {
    static const Census c = build_census();
    return c;
}

std::vector<EdgeSet> component_patterns(bool affine, int comp) {
    // Collect the component's edges and the triangle shapes it carries.
    EdgeSet comp_edges = affine ? kHypEdges[comp] : faces()[comp].edges;
    std::vector<EdgeSet> shapes;
    for (const TriangleInstance& t : triangle_instances())
        if (t.affine == affine && t.comp == comp &&
            std::find(shapes.begin(), shapes.end(), faces()[t.shape].edges) == shapes.end())
            shapes.push_back(faces()[t.shape].edges);

    std::vector<int> edge_ids;
    for (int e = 0; e < kEdgeCount; ++e)
        if (comp_edges & (EdgeSet{1} << e)) edge_ids.push_back(e);

    std::vector<EdgeSet> out;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << edge_ids.size()); ++bits) {
        EdgeSet s = 0;
        for (std::size_t i = 0; i < edge_ids.size(); ++i)
            if (bits & (std::uint32_t{1} << i)) s |= EdgeSet{1} << edge_ids[i];
        bool ok = true;
        for (EdgeSet sh : shapes) {
            int n = std::popcount(s & sh);
            if (n != 0 && n != 1 && n != 3) {
                ok = false;
                break;
            }
        }
        if (ok && !affine && s == comp_edges) ok = false;  // rule i
        if (ok) out.push_back(s);
    }
    return out;
}

std::vector<Diagram> exhaustive_rule_enumeration(int max_depth) {
    // Admissible diagrams are exactly the mark patterns of integer vanishing
    // orders on the 24 edge coordinates:
    //  - Within a hypersimplex chart the edge coordinates are differences of
    //    vertex potentials (that is what the triangle relations
    //    u_a - u_b + u_c = 0 amount to), so edge orders form an ultrametric
    //    depth function: in every triangle the two smallest orders agree, and
    //    coincidence to order j is an equivalence relation on chart vertices.
    //  - The matched coordinate triples of two related triangles are
    //    proportional, so matched orders differ by a constant on each of the
    //    eight rotation families.
    //  - S is the edge set of order >= 1; a face's sharp marks are its edges
    //    of order strictly above the face minimum.
    // Every middle-chart edge lies in exactly one lower and one star family,
    // so the middle orders are determined by the outer depth functions and the
    // family shifts.  The shift system is solved per outer pair (it is rigid
    // up to one global offset, which is scanned), and the induced middle
    // orders must extend ultrametrically across the three antipodal vertex
    // pairs that carry no edge.
    if (max_depth < 1) throw std::runtime_error("exhaustive_rule_enumeration: max_depth must be >= 1");

    // Pair index tables on 4 points (6 unordered pairs).
    static constexpr int kPairIdx[4][4] = {
        {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    auto low_bit = [](int m) { return std::countr_zero(static_cast<unsigned>(m)); };

    // All ultrametric depth functions on 4 points with values in [0, max_depth].
    std::vector<std::array<int, 6>> depth4;
    {
        std::array<int, 6> d{};
        auto ultra = [&] {
            for (int a = 0; a < 4; ++a)
                for (int b = a + 1; b < 4; ++b)
                    for (int c = b + 1; c < 4; ++c) {
                        int x = d[kPairIdx[a][b]], y = d[kPairIdx[a][c]], z = d[kPairIdx[b][c]];
                        int lo = std::min({x, y, z}), hi = std::max({x, y, z});
                        if (x + y + z - lo - hi != lo) return false;
                    }
            return true;
        };
        auto rec = [&](auto&& self, int k) -> void {
            if (k == 6) {
                if (ultra()) depth4.push_back(d);
                return;
            }
            for (int v = 0; v <= max_depth; ++v) {
                d[k] = v;
                self(self, k + 1);
            }
        };
        rec(rec, 0);
    }

    // Structure of the 12 middle edges ({a,x},{a,y}): lower family = the
    // triple {a,x,y} (indexed by its missing element), matched outer edge
    // ({x},{y}); star family = the common element a, matched outer edge
    // obtained by adjoining the globally missing element to both endpoints.
    // Outer chart vertices are indexed 0..3 (third chart by missing element).
    struct MiddleEdge {
        int edge_id;  // 6..17
        int pre;      // pair index in the first chart
        int post;     // pair index in the third chart
        int lower;    // lower family node 0..3
        int star;     // star family node 0..3
    };
    std::array<MiddleEdge, 12> middle{};
    for (int e = 6; e < 18; ++e) {
        int lo = kEdges[e].lo, hi = kEdges[e].hi;
        int common = lo & hi, missing = 15 ^ (lo | hi);
        MiddleEdge& m = middle[e - 6];
        m.edge_id = e;
        m.pre = kPairIdx[low_bit(lo & ~common)][low_bit(hi & ~common)];
        m.post = kPairIdx[low_bit(15 ^ (lo | missing))][low_bit(15 ^ (hi | missing))];
        m.lower = low_bit(missing);
        m.star = low_bit(common);
    }
    // First/third chart edge ids -> pair indices.
    std::array<int, 6> pre_pair{}, post_pair{};
    for (int e = 0; e < 6; ++e)
        pre_pair[e] = kPairIdx[low_bit(kEdges[e].lo)][low_bit(kEdges[e].hi)];
    for (int e = 18; e < 24; ++e)
        post_pair[e - 18] = kPairIdx[low_bit(15 ^ kEdges[e].lo)][low_bit(15 ^ kEdges[e].hi)];
    // Middle chart vertices (2-element subsets, mask ascending) and their
    // incident edges; antipodal pairs are the complementary ones.
    static constexpr int kMidVertex[6] = {3, 5, 6, 9, 10, 12};
    auto mid_index = [](int mask) {
        for (int i = 0; i < 6; ++i)
            if (kMidVertex[i] == mask) return i;
        throw std::logic_error("exhaustive_rule_enumeration: bad middle vertex mask");
    };

    std::map<std::string, Diagram> out;
    auto emit = [&](const std::array<int, 24>& order) {
        Diagram d;
        d.s = 0;
        for (int e = 0; e < kEdgeCount; ++e)
            if (order[e] >= 1) d.s |= EdgeSet{1} << e;
        for (int f = 0; f < kFaceCount; ++f) {
            EdgeSet fe = faces()[f].edges;
            int mn = INT_MAX;
            for (int e = 0; e < kEdgeCount; ++e)
                if ((fe >> e) & 1) mn = std::min(mn, order[e]);
            EdgeSet marks = 0;
            for (int e = 0; e < kEdgeCount; ++e)
                if (((fe >> e) & 1) && order[e] > mn) marks |= EdgeSet{1} << e;
            d.sharp[f] = marks;
        }
        auto [it, inserted] = out.emplace(serialize(d), d);
        if (inserted) {
            std::string why;
            if (!is_admissible(d, &why))
                throw std::logic_error("exhaustive_rule_enumeration: inadmissible image (" + why + ")");
        }
    };

    for (const auto& o1 : depth4)
        for (const auto& o3 : depth4) {
            // Solve the family shifts c_lower - c_star = o1(pre) - o3(post)
            // over the 12 middle edges (a connected bipartite system: rigid up
            // to one global offset).
            std::array<int, 8> shift{};
            std::array<bool, 8> known{};
            shift[middle[0].lower] = 0;
            known[middle[0].lower] = true;
            bool consistent = true;
            for (bool progress = true; progress && consistent;) {
                progress = false;
                for (const MiddleEdge& m : middle) {
                    int delta = o1[m.pre] - o3[m.post];
                    int a = m.lower, b = 4 + m.star;
                    if (known[a] && !known[b]) {
                        shift[b] = shift[a] - delta;
                        known[b] = progress = true;
                    } else if (!known[a] && known[b]) {
                        shift[a] = shift[b] + delta;
                        known[a] = progress = true;
                    } else if (known[a] && known[b] && shift[a] - shift[b] != delta) {
                        consistent = false;
                    }
                }
            }
            if (!consistent) continue;

            std::array<int, 12> base{};
            int mn = INT_MAX, mx = INT_MIN;
            for (int k = 0; k < 12; ++k) {
                base[k] = o1[middle[k].pre] - shift[middle[k].lower];
                mn = std::min(mn, base[k]);
                mx = std::max(mx, base[k]);
            }
            for (int off = -mn; off <= max_depth - mx; ++off) {
                // Middle orders for this offset; check ultrametric
                // extendability across the antipodal (edgeless) vertex pairs.
                std::array<std::array<int, 6>, 6> dist{};
                for (auto& row : dist) row.fill(-1);
                for (int k = 0; k < 12; ++k) {
                    int a = mid_index(kEdges[middle[k].edge_id].lo);
                    int b = mid_index(kEdges[middle[k].edge_id].hi);
                    dist[a][b] = dist[b][a] = base[k] + off;
                }
                bool ok = true;
                for (int a = 0; a < 6 && ok; ++a)
                    for (int b = a + 1; b < 6 && ok; ++b)
                        for (int c = b + 1; c < 6 && ok; ++c) {
                            int x = dist[a][b], y = dist[a][c], z = dist[b][c];
                            if (x < 0 || y < 0 || z < 0) continue;  // at most one pair missing
                            int lo = std::min({x, y, z}), hi = std::max({x, y, z});
                            if (x + y + z - lo - hi != lo) ok = false;
                        }
                for (int a = 0; a < 6 && ok; ++a)
                    for (int b = a + 1; b < 6 && ok; ++b) {
                        if (dist[a][b] >= 0) continue;
                        // The missing value must make every triangle through
                        // it ultrametric: forced to min(p, q) whenever p != q,
                        // and >= p whenever p == q.
                        int forced = -1, floor_val = 0;
                        for (int z = 0; z < 6; ++z) {
                            if (z == a || z == b) continue;
                            int p = dist[a][z], q = dist[z][b];
                            if (p != q) {
                                int v = std::min(p, q);
                                if (forced < 0)
                                    forced = v;
                                else if (forced != v)
                                    ok = false;
                            } else {
                                floor_val = std::max(floor_val, p);
                            }
                        }
                        if (ok && forced >= 0 && forced < floor_val) ok = false;
                    }
                if (!ok) continue;

                std::array<int, 24> order{};
                for (int e = 0; e < 6; ++e) order[e] = o1[pre_pair[e]];
                for (int k = 0; k < 12; ++k) order[middle[k].edge_id] = base[k] + off;
                for (int e = 18; e < 24; ++e) order[e] = o3[post_pair[e - 18]];
                emit(order);
            }
        }

    std::vector<Diagram> result;
    result.reserve(out.size());
    for (auto& [key, d] : out) result.push_back(d);
    return result;
}

std::pair<Diagram, int> decompose(const Diagram& d) {
    const StratumRecord* r = census().find(d);
    if (!r) throw std::runtime_error("decompose: diagram is not a stratum diagram");
    std::vector<int> split;
    for (int m : r->clique)
        if (!divisor_shifting(m)) split.push_back(m);
    Diagram split_diagram = diagram_of_clique(split);
    // Recomposition must give back the input: the shift fills its hypersimplex
    // in S and leaves every S# component unchanged.
    Diagram recomposed = split_diagram;
    for (int k = 1; k <= 3; ++k)
        if (r->shift_mask & (1 << (k - 1))) recomposed.s |= kHypEdges[k];
    if (!(recomposed == d)) throw std::logic_error("decompose: recomposition mismatch");
    return {split_diagram, r->shift_mask};
}

}  // namespace tetra
