#include "tetra/faces.hpp"

#include <algorithm>
#include <stdexcept>

namespace tetra {

namespace {

const std::array<Label, 4> kTriples = {0b0111, 0b1011, 0b1101, 0b1110};

EdgeSet edges_among(const std::vector<Label>& verts) {
    EdgeSet out = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            int e = edge_index(verts[i], verts[j]);
            if (e >= 0) out |= EdgeSet{1} << e;
        }
    return out;
}

std::array<Face, kFaceCount> make_faces() {
    std::array<Face, kFaceCount> out{};
    auto set = [&](int id, FaceKind kind, int index, std::vector<Label> verts, std::string name) {
        out[id] = Face{kind, index, edges_among(verts), std::move(name)};
    };
    for (int k = 1; k <= 3; ++k) {
        std::vector<Label> verts;
        for (Label m : kLabels)
            if (label_size(m) == k) verts.push_back(m);
        set(k - 1, FaceKind::Hypersimplex, k, verts, "D" + std::to_string(k));
        out[k - 1].edges = kHypEdges[k];
    }
    for (int t = 0; t < 4; ++t) {
        Label tm = kTriples[t];
        std::vector<Label> v1, v2;
        for (int i = 1; i <= 4; ++i)
            if (tm & (1 << (i - 1))) v1.push_back(static_cast<Label>(1 << (i - 1)));
        for (Label m = 1; m <= 14; ++m)
            if (label_size(m) == 2 && (m & ~tm) == 0) v2.push_back(m);
        set(3 + t, FaceKind::T1, t, v1, "T1_" + label_name(tm));
        set(7 + t, FaceKind::T2Lower, t, v2, "T2L_" + label_name(tm));
    }
    for (int i = 1; i <= 4; ++i) {
        std::vector<Label> v2, v3;
        for (Label m = 1; m <= 14; ++m) {
            if (!(m & (1 << (i - 1)))) continue;
            if (label_size(m) == 2) v2.push_back(m);
            if (label_size(m) == 3) v3.push_back(m);
        }
        set(11 + (i - 1), FaceKind::T2Star, i, v2, "T2S_" + std::to_string(i));
        set(15 + (i - 1), FaceKind::T3, i, v3, "T3_" + std::to_string(i));
    }
    return out;
}

std::vector<TriangleInstance> make_instances() {
    std::vector<TriangleInstance> out;
    for (int shape = 3; shape < kFaceCount; ++shape) {
        std::array<int, 3> es{};
        int n = 0;
        for (int e = 0; e < kEdgeCount; ++e)
            if (faces()[shape].edges & (EdgeSet{1} << e)) es[n++] = e;
        if (n != 3) throw std::logic_error("triangle shape edge count");
        int hyp = face_hyp(shape);
        out.push_back(TriangleInstance{true, hyp, shape, es});        // affine hypersimplex chart
        out.push_back(TriangleInstance{false, hyp - 1, shape, es});   // projectivized hypersimplex
        out.push_back(TriangleInstance{false, shape, shape, es});     // the shape's own face
    }
    return out;
}

// The rotation correspondence between two distinct shapes of one family:
// edge {X,Y} of the smaller-vertex shape maps to {X+m, Y+m} in the larger one,
// m being the unique element completing both endpoints into vertices of the
// larger shape.
std::array<int, kEdgeCount> shape_correspondence(int small, int large) {
    std::array<int, kEdgeCount> out{};
    out.fill(-1);
    for (int e = 0; e < kEdgeCount; ++e) {
        if (!(faces()[small].edges & (EdgeSet{1} << e))) continue;
        Label x = kEdges[e].lo, y = kEdges[e].hi;
        int found = -1;
        for (int z = 0; z < 4; ++z) {
            Label zm = static_cast<Label>(1 << z);
            if ((x | y) & zm) continue;
            int cand = edge_index(x | zm, y | zm);
            if (cand >= 0 && (faces()[large].edges & (EdgeSet{1} << cand))) {
                if (found >= 0) throw std::logic_error("ambiguous rotation correspondence");
                found = cand;
            }
        }
        if (found < 0) throw std::logic_error("missing rotation correspondence");
        out[e] = found;
    }
    return out;
}

struct FamilyTables {
    std::array<std::vector<int>, 8> families;
    std::vector<RelatedPair> pairs;
};

FamilyTables make_families() {
    FamilyTables out;
    auto instances_of_shape = [&](int shape) {
        std::vector<int> idx;
        for (std::size_t i = 0; i < triangle_instances().size(); ++i)
            if (triangle_instances()[i].shape == shape) idx.push_back(static_cast<int>(i));
        return idx;
    };
    std::array<std::array<int, 2>, 8> shape_pairs{};  // {smaller-vertex shape, larger}
    for (int t = 0; t < 4; ++t) shape_pairs[t] = {3 + t, 7 + t};        // lower: T1_t with T2L_t
    for (int i = 0; i < 4; ++i) shape_pairs[4 + i] = {11 + i, 15 + i};  // star: T2S_i with T3_i

    for (int fam = 0; fam < 8; ++fam) {
        auto [small, large] = shape_pairs[fam];
        auto corr = shape_correspondence(small, large);
        std::vector<int> members = instances_of_shape(small);
        for (int i : instances_of_shape(large)) members.push_back(i);
        out.families[fam] = members;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const TriangleInstance& a = triangle_instances()[members[i]];
                RelatedPair p{members[i], members[j], {}};
                for (int k = 0; k < 3; ++k) {
                    int ea = a.edges[k];
                    int eb = ea;
                    if (a.shape != triangle_instances()[members[j]].shape)
                        eb = a.shape == small ? corr[ea]
                                              : [&] {
                                                    for (int e = 0; e < kEdgeCount; ++e)
                                                        if (corr[e] == ea) return e;
                                                    throw std::logic_error("correspondence not invertible");
                                                }();
                    p.match[k] = {ea, eb};
                }
                out.pairs.push_back(p);
            }
    }
    if (out.pairs.size() != 120) throw std::logic_error("related pair count");
    return out;
}

const FamilyTables& family_tables() {
    static const FamilyTables tables = make_families();
    return tables;
}

}  // namespace

const std::array<Face, kFaceCount>& faces() {
    static const std::array<Face, kFaceCount> kFaces = make_faces();
    return kFaces;
}

int face_from_name(const std::string& name) {
    for (int f = 0; f < kFaceCount; ++f)
        if (faces()[f].name == name) return f;
    return -1;
}

int face_hyp(int f) {
    switch (faces()[f].kind) {
        case FaceKind::Hypersimplex: return faces()[f].index;
        case FaceKind::T1: return 1;
        case FaceKind::T2Lower:
        case FaceKind::T2Star: return 2;
        case FaceKind::T3: return 3;
    }
    throw std::logic_error("face kind");
}

int perm_apply_face(const Perm& p, int f) {
    const Face& face = faces()[f];
    switch (face.kind) {
        case FaceKind::Hypersimplex: return f;
        case FaceKind::T1: return 3 + triple_id(perm_apply(p, kTriples[face.index]));
        case FaceKind::T2Lower: return 7 + triple_id(perm_apply(p, kTriples[face.index]));
        case FaceKind::T2Star: return 11 + (p[face.index - 1] - 1);
        case FaceKind::T3: return 15 + (p[face.index - 1] - 1);
    }
    throw std::logic_error("face kind");
}

int face_dual(int f) {
    const Face& face = faces()[f];
    switch (face.kind) {
        case FaceKind::Hypersimplex: return face.index == 2 ? f : (face.index == 1 ? 2 : 0);
        // Complementation turns the vertices of T1_t into the 3-sets containing
        // the element missing from t, and the 2-subsets of t into the 2-sets
        // containing that element.
        case FaceKind::T1: return 15 + (label_name(label_complement(kTriples[face.index]))[0] - '1');
        case FaceKind::T2Lower: return 11 + (label_name(label_complement(kTriples[face.index]))[0] - '1');
        case FaceKind::T2Star: return 7 + triple_id(label_complement(static_cast<Label>(1 << (face.index - 1))));
        case FaceKind::T3: return 3 + triple_id(label_complement(static_cast<Label>(1 << (face.index - 1))));
    }
    throw std::logic_error("face kind");
}

Label triple_mask(int tripleId) { return kTriples.at(tripleId); }

int triple_id(Label mask) {
    for (int t = 0; t < 4; ++t)
        if (kTriples[t] == mask) return t;
    throw std::logic_error("not a triple mask");
}

const std::vector<TriangleInstance>& triangle_instances() {
    static const std::vector<TriangleInstance> instances = make_instances();
    return instances;
}

const std::vector<RelatedPair>& related_pairs() { return family_tables().pairs; }

const std::array<std::vector<int>, 8>& related_triangle_families() { return family_tables().families; }

}  // namespace tetra
