#pragma once
// The 19 faces of the boundary complex (3 hypersimplices + 16 triangles),
// the 22 chart components, the 48 triangle instances those components carry,
// and the 120 related triangle pairs with their edge correspondences.
//
// Triangle shapes come in four kinds of four each:
//   T1_{ijk}   vertices {i},{j},{k}           (faces of Delta_1)
//   T2L_{ijk}  vertices {ij},{ik},{jk}        (lower octahedron faces)
//   T2S_i      vertices {ij},{ik},{il}        (star octahedron faces)
//   T3_i       vertices = the 3-sets containing i (faces of Delta_3)
// Each shape is read in three components: the affine chart of its
// hypersimplex, the projectivized hypersimplex, and its own projectivized
// face.  A "lower" family groups T1_t with T2L_t (t a triple), a "star"
// family groups T2S_i with T3_i; each family holds 6 triangle instances and
// hence 15 related pairs.  Same-shape pairs match edges identically; pairs of
// distinct shapes match an edge {X,Y} with {X+m, Y+m}, where m is the unique
// element missing from X and Y that lands the result in the partner shape
// (the rotation correspondence).

#include "tetra/labels.hpp"

namespace tetra {

enum class FaceKind { Hypersimplex, T1, T2Lower, T2Star, T3 };

struct Face {
    FaceKind kind;
    int index;        // Hypersimplex: k in 1..3; T1/T2Lower: triple id 0..3; T2Star/T3: i in 1..4
    EdgeSet edges;
    std::string name; // "D1".."D3", "T1_123", "T2L_123", "T2S_1", "T3_1"
};

inline constexpr int kFaceCount = 19;
const std::array<Face, kFaceCount>& faces();
int face_from_name(const std::string& name);   // -1 if unknown
int perm_apply_face(const Perm& p, int f);
int face_dual(int f);
int face_hyp(int f);                           // hypersimplex k the face lives in

// Triple ids enumerate 3-subsets of {1,2,3,4} in mask order:
// 0:{123} 1:{124} 2:{134} 3:{234}.
Label triple_mask(int tripleId);
int triple_id(Label mask);

// One triangular shape read inside one chart component.
struct TriangleInstance {
    bool affine;            // affine hypersimplex chart (marks read from S)
    int comp;               // affine: hypersimplex k 1..3; projective: face id
    int shape;              // face id (3..18) of the triangle shape
    std::array<int, 3> edges;  // the shape's edge ids, ascending
};
const std::vector<TriangleInstance>& triangle_instances();   // exactly 48

// A related pair with its matched-edge correspondence.
struct RelatedPair {
    int inst_a, inst_b;                          // indices into triangle_instances()
    std::array<std::array<int, 2>, 3> match;     // {edge id in a, corresponding edge id in b}
};
const std::vector<RelatedPair>& related_pairs();             // exactly 120

// The 8 families as lists of triangle-instance indices (6 each):
// lower families of triples {123},{124},{134},{234}, then star families 1..4.
const std::array<std::vector<int>, 8>& related_triangle_families();

}  // namespace tetra
