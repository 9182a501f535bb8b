#pragma once
// Labels and edges of the tetrahedron boundary complex.
//
// A label is a proper nonempty subset of {1,2,3,4}; there are 14 of them and
// they index the subspaces of a (possibly degenerate) tetrahedron: 1-sets are
// points, 2-sets lines, 3-sets planes.  Labels of size k are the vertices of
// the hypersimplex Delta_k; two same-size labels span an edge exactly when
// their intersection has one element less (equivalently their union one more).
// That gives 6 edges on Delta_1, 12 on Delta_2 (the octahedron) and 6 on
// Delta_3, i.e. 24 edges total, each with a fixed id used for bitmask sets.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace tetra {

// Subset of {1,2,3,4} as a 4-bit mask; bit (i-1) encodes element i.
using Label = std::uint8_t;

constexpr int label_size(Label m) { return __builtin_popcount(m); }
constexpr bool label_valid(Label m) { return m >= 1 && m <= 14; }
constexpr Label label_complement(Label m) { return static_cast<Label>(0xF & ~m); }
std::string label_name(Label m);                 // "134" for {1,3,4}
Label label_from_name(const std::string& s);     // inverse of label_name

// All 14 labels ordered by (size, mask); this is the canonical order used for
// every serialization.  Built at compile time so no translation unit can
// observe it uninitialized.
namespace detail {
constexpr std::array<Label, 14> make_labels() {
    std::array<Label, 14> out{};
    int n = 0;
    for (int size = 1; size <= 3; ++size)
        for (Label m = 1; m <= 14; ++m)
            if (label_size(m) == size) out[n++] = m;
    return out;
}
}  // namespace detail
inline constexpr std::array<Label, 14> kLabels = detail::make_labels();
int label_index(Label m);

// Permutations of {1,2,3,4}: entry i-1 is the image of i.
using Perm = std::array<int, 4>;
inline constexpr Perm kIdentityPerm{1, 2, 3, 4};
const std::vector<Perm>& all_permutations();     // all 24, identity first
Perm perm_compose(const Perm& f, const Perm& g); // x -> f(g(x))
Perm perm_inverse(const Perm& p);
Label perm_apply(const Perm& p, Label m);

// Edges, identified by their index in the canonical edge list: Delta_1 edges
// are ids 0..5, Delta_2 ids 6..17, Delta_3 ids 18..23, each block ordered by
// (smaller endpoint mask, larger endpoint mask).
struct Edge {
    Label lo, hi;   // lo < hi as masks
};
inline constexpr int kEdgeCount = 24;
namespace detail {
constexpr std::array<Edge, kEdgeCount> make_edges() {
    std::array<Edge, kEdgeCount> out{};
    int n = 0;
    for (int size = 1; size <= 3; ++size)
        for (Label a = 1; a <= 14; ++a) {
            if (label_size(a) != size) continue;
            for (Label b = a + 1; b <= 14; ++b) {
                if (label_size(b) != size) continue;
                if (label_size(a & b) == size - 1) out[n++] = Edge{a, b};
            }
        }
    return out;
}
}  // namespace detail
inline constexpr std::array<Edge, kEdgeCount> kEdges = detail::make_edges();

int edge_hyp(int e);                         // which hypersimplex: 1, 2 or 3
int edge_index(Label a, Label b);            // -1 if {a,b} is not an edge
std::string edge_name(int e);                // "13-14"
int edge_from_name(const std::string& s);    // -1 on malformed input
int perm_apply_edge(const Perm& p, int e);
int edge_dual(int e);                        // complement both endpoints

// Edge sets as bitmasks over edge ids.
using EdgeSet = std::uint32_t;
namespace detail {
constexpr std::array<EdgeSet, 4> make_hyp_edges() {
    std::array<EdgeSet, 4> out{};
    for (int e = 0; e < kEdgeCount; ++e) out[label_size(kEdges[e].lo)] |= EdgeSet{1} << e;
    return out;
}
}  // namespace detail
// kHypEdges[k] = edges of Delta_k (k=1..3)
inline constexpr std::array<EdgeSet, 4> kHypEdges = detail::make_hyp_edges();
EdgeSet edge_set_apply(const Perm& p, EdgeSet s);
EdgeSet edge_set_dual(EdgeSet s);
std::string edge_set_to_string(EdgeSet s);       // comma-joined names, ascending ids
EdgeSet edge_set_from_string(const std::string& s);  // throws std::runtime_error on bad tokens

}  // namespace tetra
