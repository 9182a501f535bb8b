#pragma once
// Diagrams (S, S#) and the admissibility rules.
//
// S marks edges whose two subspaces coincide; S# records, per projectivized
// face component, which coincidences happen faster than the slowest ones in
// that component.  A diagram is admissible when
//   (rule i)  every projective component keeps at least one unmarked edge, and
//   (rule ii) every related triangle pair shows an allowed mark pattern:
//             counts (0,0); (1,1) with the two marks matched by the rotation
//             correspondence; (3,0); (3,1); (3,3) — in either order.
// Affine components read their marks from S, projective ones from S#.

#include <cstddef>
#include <string>
#include <vector>

#include "tetra/divisors.hpp"
#include "tetra/faces.hpp"

namespace tetra {

struct Diagram {
    EdgeSet s = 0;
    std::array<EdgeSet, kFaceCount> sharp{};   // sharp[f] is a subset of faces()[f].edges
    bool operator==(const Diagram&) const = default;
};

struct DiagramHash {
    std::size_t operator()(const Diagram& d) const;
};

// Marks of one triangle instance under a diagram.
EdgeSet instance_marks(const Diagram& d, const TriangleInstance& t);

// S# of a divisor clique by the rate rule: with level(e) = number of clique
// members marking edge e, a face marks exactly its edges sitting strictly
// above the face's minimum level.
std::array<EdgeSet, kFaceCount> sharp_marks(const std::vector<int>& clique);
Diagram diagram_of_clique(const std::vector<int>& clique);

bool is_admissible(const Diagram& d, std::string* why = nullptr);

// Degeneration order: a <= b iff a lies in the closure of b, i.e. a marks
// everything b marks.
bool poset_leq(const Diagram& a, const Diagram& b);

Diagram s4_act(const Perm& p, const Diagram& d);
Diagram dual(const Diagram& d);

// One line, canonical order: "S: e1,e2 | S#: f1[e,e] f2[e]"
std::string serialize(const Diagram& d);

}  // namespace tetra
