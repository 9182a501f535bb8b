#include "tetra/diagram.hpp"

#include <bit>

namespace tetra {

std::size_t DiagramHash::operator()(const Diagram& d) const {
    std::size_t h = d.s;
    for (EdgeSet m : d.sharp) h = h * 1099511628211ULL + m;
    return h;
}

EdgeSet instance_marks(const Diagram& d, const TriangleInstance& t) {
    EdgeSet source = t.affine ? d.s : d.sharp[t.comp];
    return source & faces()[t.shape].edges;
}

std::array<EdgeSet, kFaceCount> sharp_marks(const std::vector<int>& clique) {
    std::array<int, kEdgeCount> level{};
    for (int d : clique) {
        EdgeSet s = divisors()[d].sset;
        for (int e = 0; e < kEdgeCount; ++e)
            if (s & (EdgeSet{1} << e)) ++level[e];
    }
    std::array<EdgeSet, kFaceCount> out{};
    for (int f = 0; f < kFaceCount; ++f) {
        EdgeSet fe = faces()[f].edges;
        int min = -1;
        for (int e = 0; e < kEdgeCount; ++e)
            if (fe & (EdgeSet{1} << e))
                if (min < 0 || level[e] < min) min = level[e];
        for (int e = 0; e < kEdgeCount; ++e)
            if ((fe & (EdgeSet{1} << e)) && level[e] > min) out[f] |= EdgeSet{1} << e;
    }
    return out;
}

Diagram diagram_of_clique(const std::vector<int>& clique) {
    Diagram d;
    for (int div : clique) d.s |= divisors()[div].sset;
    d.sharp = sharp_marks(clique);
    return d;
}

namespace {

// Is (na, nb) with mark sets (ma, mb) one of the allowed related-pair
// patterns?  Matched single marks are checked against the correspondence.
bool pair_pattern_ok(const RelatedPair& p, EdgeSet ma, EdgeSet mb) {
    int na = std::popcount(ma), nb = std::popcount(mb);
    auto in013 = [](int n) { return n == 0 || n == 1 || n == 3; };
    if (!in013(na) || !in013(nb)) return false;
    if (na == 1 && nb == 1) {
        for (const auto& m : p.match)
            if ((ma >> m[0]) & 1) return (mb >> m[1]) & 1;
        return false;
    }
    // (0,0), (3,*), (*,3) are fine; a lone mark against an empty triangle is not.
    return !((na == 1 && nb == 0) || (na == 0 && nb == 1));
}

}  // namespace

bool is_admissible(const Diagram& d, std::string* why) {
    for (int f = 0; f < kFaceCount; ++f) {
        if (d.sharp[f] & ~faces()[f].edges) {
            if (why) *why = "rule i: marks outside component " + faces()[f].name;
            return false;
        }
        if (d.sharp[f] == faces()[f].edges) {
            if (why) *why = "rule i: component " + faces()[f].name + " fully marked";
            return false;
        }
    }
    const auto& inst = triangle_instances();
    for (const RelatedPair& p : related_pairs()) {
        EdgeSet ma = instance_marks(d, inst[p.inst_a]);
        EdgeSet mb = instance_marks(d, inst[p.inst_b]);
        if (!pair_pattern_ok(p, ma, mb)) {
            if (why) {
                const TriangleInstance& a = inst[p.inst_a];
                const TriangleInstance& b = inst[p.inst_b];
                auto where = [](const TriangleInstance& t) {
                    return faces()[t.shape].name +
                           (t.affine ? "@affD" + std::to_string(t.comp) : "@" + faces()[t.comp].name);
                };
                *why = "rule ii: pair " + where(a) + " / " + where(b);
            }
            return false;
        }
    }
    return true;
}

bool poset_leq(const Diagram& a, const Diagram& b) {
    if ((a.s & b.s) != b.s) return false;
    for (int f = 0; f < kFaceCount; ++f)
        if ((a.sharp[f] & b.sharp[f]) != b.sharp[f]) return false;
    return true;
}

Diagram s4_act(const Perm& p, const Diagram& d) {
    Diagram out;
    out.s = edge_set_apply(p, d.s);
    for (int f = 0; f < kFaceCount; ++f) out.sharp[perm_apply_face(p, f)] = edge_set_apply(p, d.sharp[f]);
    return out;
}

Diagram dual(const Diagram& d) {
    Diagram out;
    out.s = edge_set_dual(d.s);
    for (int f = 0; f < kFaceCount; ++f) out.sharp[face_dual(f)] = edge_set_dual(d.sharp[f]);
    return out;
}

std::string serialize(const Diagram& d) {
    std::string out = "S: " + edge_set_to_string(d.s) + " | S#:";
    for (int f = 0; f < kFaceCount; ++f) {
        if (!d.sharp[f]) continue;
        out += " " + faces()[f].name + "[" + edge_set_to_string(d.sharp[f]) + "]";
    }
    return out;
}

}  // namespace tetra
