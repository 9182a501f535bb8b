#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tetra/faces.hpp"
#include "tetra/labels.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

using namespace tetra;

TEST_CASE("labels enumerate proper subsets in canonical order") {
    REQUIRE(kLabels.size() == 14);
    CHECK(std::array<Label, 4>{kLabels[0], kLabels[1], kLabels[2], kLabels[3]} ==
          std::array<Label, 4>{1, 2, 4, 8});
    CHECK(kLabels[4] == 3);    // {1,2} opens the size-2 block
    CHECK(kLabels[13] == 14);  // {2,3,4} closes the list
    for (int i = 0; i < 13; ++i) {
        CHECK(label_size(kLabels[i]) <= label_size(kLabels[i + 1]));
        if (label_size(kLabels[i]) == label_size(kLabels[i + 1]))
            CHECK(kLabels[i] < kLabels[i + 1]);
    }
    for (int i = 0; i < 14; ++i) CHECK(label_index(kLabels[i]) == i);
    CHECK(label_index(0) == -1);
    CHECK(label_index(15) == -1);
}

TEST_CASE("label names round trip") {
    CHECK(label_name(0b1101) == "134");
    CHECK(label_from_name("134") == 0b1101);
    for (Label m : kLabels) CHECK(label_from_name(label_name(m)) == m);
    CHECK_THROWS_AS(label_from_name("5"), std::runtime_error);
    CHECK_THROWS_AS(label_from_name(""), std::runtime_error);
    CHECK_THROWS_AS(label_from_name("1234"), std::runtime_error);  // not proper
}

TEST_CASE("complement pairs labels across levels") {
    for (Label m : kLabels) {
        CHECK(label_valid(label_complement(m)));
        CHECK(label_complement(label_complement(m)) == m);
        CHECK(label_size(label_complement(m)) == 4 - label_size(m));
    }
}

TEST_CASE("edges split into three blocks of 6, 12, 6") {
    REQUIRE(kEdges.size() == 24);
    for (int e = 0; e < kEdgeCount; ++e) {
        const Edge& ed = kEdges[e];
        CHECK(ed.lo < ed.hi);
        CHECK(label_size(ed.lo) == label_size(ed.hi));
        CHECK(label_size(ed.lo & ed.hi) == label_size(ed.lo) - 1);
        CHECK(edge_hyp(e) == (e < 6 ? 1 : e < 18 ? 2 : 3));
    }
    CHECK(edge_name(0) == "1-2");
    CHECK(edge_name(5) == "3-4");
    CHECK(edge_name(6) == "12-13");
    CHECK(edge_name(17) == "24-34");
    CHECK(edge_name(18) == "123-124");
    CHECK(edge_name(23) == "134-234");
    for (int e = 0; e < kEdgeCount; ++e) CHECK(edge_from_name(edge_name(e)) == e);
    CHECK(edge_from_name("1-12") == -1);   // sizes differ
    CHECK(edge_from_name("12-34") == -1);  // disjoint 2-sets span no edge
    CHECK(edge_from_name("nonsense") == -1);
    CHECK(edge_index(2, 1) == 0);  // unordered lookup
}

TEST_CASE("hypersimplex edge masks partition the edge ids") {
    CHECK(std::popcount(kHypEdges[1]) == 6);
    CHECK(std::popcount(kHypEdges[2]) == 12);
    CHECK(std::popcount(kHypEdges[3]) == 6);
    CHECK((kHypEdges[1] | kHypEdges[2] | kHypEdges[3]) == (EdgeSet{1} << 24) - 1);
    CHECK((kHypEdges[1] & kHypEdges[2]) == 0);
    CHECK((kHypEdges[2] & kHypEdges[3]) == 0);
}

TEST_CASE("permutations form the symmetric group") {
    const auto& perms = all_permutations();
    REQUIRE(perms.size() == 24);
    CHECK(perms[0] == kIdentityPerm);
    CHECK(std::set<Perm>(perms.begin(), perms.end()).size() == 24);
    for (const Perm& p : perms) {
        CHECK(perm_compose(p, perm_inverse(p)) == kIdentityPerm);
        CHECK(perm_compose(perm_inverse(p), p) == kIdentityPerm);
    }
    // Composition acts correctly on labels.
    for (const Perm& p : perms)
        for (const Perm& q : perms)
            for (Label m : kLabels)
                CHECK(perm_apply(perm_compose(p, q), m) == perm_apply(p, perm_apply(q, m)));
}

TEST_CASE("permutations and duality act on edges") {
    Perm swap12{2, 1, 3, 4};
    CHECK(perm_apply_edge(swap12, edge_from_name("1-3")) == edge_from_name("2-3"));
    CHECK(perm_apply_edge(swap12, edge_from_name("1-2")) == edge_from_name("1-2"));
    CHECK(perm_apply_edge(swap12, edge_from_name("13-34")) == edge_from_name("23-34"));
    for (const Perm& p : all_permutations()) {
        std::set<int> image;
        for (int e = 0; e < kEdgeCount; ++e) {
            int pe = perm_apply_edge(p, e);
            CHECK(edge_hyp(pe) == edge_hyp(e));
            image.insert(pe);
        }
        CHECK(image.size() == 24);
    }
    CHECK(edge_dual(edge_from_name("1-2")) == edge_from_name("134-234"));
    CHECK(edge_dual(edge_from_name("12-13")) == edge_from_name("24-34"));
    for (int e = 0; e < kEdgeCount; ++e) {
        CHECK(edge_dual(edge_dual(e)) == e);
        CHECK(edge_hyp(edge_dual(e)) == 4 - edge_hyp(e));
    }
}

TEST_CASE("edge sets serialize and parse") {
    EdgeSet s = (EdgeSet{1} << 0) | (EdgeSet{1} << 6) | (EdgeSet{1} << 23);
    CHECK(edge_set_to_string(s) == "1-2,12-13,134-234");
    CHECK(edge_set_from_string("1-2,12-13,134-234") == s);
    CHECK(edge_set_from_string("") == 0);
    CHECK_THROWS_AS(edge_set_from_string("1-2,bogus"), std::runtime_error);
    CHECK(edge_set_apply(Perm{2, 1, 3, 4}, EdgeSet{1} << 1) == EdgeSet{1} << 3);  // 1-3 to 2-3
    CHECK(edge_set_dual(kHypEdges[1]) == kHypEdges[3]);
    CHECK(edge_set_dual(kHypEdges[2]) == kHypEdges[2]);
}

TEST_CASE("nineteen faces with fixed names and edge triples") {
    REQUIRE(faces().size() == kFaceCount);
    CHECK(faces()[0].name == "D1");
    CHECK(faces()[2].name == "D3");
    CHECK(faces()[3].name == "T1_123");
    CHECK(faces()[7].name == "T2L_123");
    CHECK(faces()[11].name == "T2S_1");
    CHECK(faces()[18].name == "T3_4");
    for (int f = 0; f < kFaceCount; ++f) CHECK(face_from_name(faces()[f].name) == f);
    CHECK(face_from_name("T9_0") == -1);

    CHECK(faces()[0].edges == kHypEdges[1]);
    CHECK(faces()[1].edges == kHypEdges[2]);
    CHECK(faces()[2].edges == kHypEdges[3]);
    for (int f = 3; f < kFaceCount; ++f) CHECK(std::popcount(faces()[f].edges) == 3);
    CHECK(faces()[face_from_name("T1_234")].edges == edge_set_from_string("2-3,2-4,3-4"));
    CHECK(faces()[face_from_name("T2L_123")].edges == edge_set_from_string("12-13,12-23,13-23"));
    CHECK(faces()[face_from_name("T2S_1")].edges == edge_set_from_string("12-13,12-14,13-14"));
    CHECK(faces()[face_from_name("T3_4")].edges ==
          edge_set_from_string("124-134,124-234,134-234"));

    // Every triangle face sits inside one hypersimplex.
    for (int f = 3; f < kFaceCount; ++f)
        CHECK((faces()[f].edges & ~kHypEdges[face_hyp(f)]) == 0);
}

TEST_CASE("face duality and symmetry") {
    CHECK(face_dual(face_from_name("D1")) == face_from_name("D3"));
    CHECK(face_dual(face_from_name("D2")) == face_from_name("D2"));
    CHECK(face_dual(face_from_name("T1_123")) == face_from_name("T3_4"));
    CHECK(face_dual(face_from_name("T2L_234")) == face_from_name("T2S_1"));
    for (int f = 0; f < kFaceCount; ++f) {
        CHECK(face_dual(face_dual(f)) == f);
        CHECK(faces()[face_dual(f)].edges == edge_set_dual(faces()[f].edges));
    }
    for (const Perm& p : all_permutations())
        for (int f = 0; f < kFaceCount; ++f)
            CHECK(faces()[perm_apply_face(p, f)].edges == edge_set_apply(p, faces()[f].edges));
    CHECK(perm_apply_face(Perm{2, 1, 3, 4}, face_from_name("T3_1")) == face_from_name("T3_2"));
    CHECK(perm_apply_face(Perm{2, 3, 1, 4}, face_from_name("T1_123")) == face_from_name("T1_123"));
}

TEST_CASE("triple ids round trip") {
    for (int t = 0; t < 4; ++t) {
        CHECK(label_size(triple_mask(t)) == 3);
        CHECK(triple_id(triple_mask(t)) == t);
    }
    CHECK_THROWS_AS(triple_id(3), std::logic_error);
}

TEST_CASE("each triangle shape appears in three components") {
    const auto& inst = triangle_instances();
    REQUIRE(inst.size() == 48);
    int affine = 0;
    for (const TriangleInstance& t : inst) {
        if (t.affine) ++affine;
        // The instance's stored edges are exactly the shape's edges.
        EdgeSet s = 0;
        for (int e : t.edges) s |= EdgeSet{1} << e;
        CHECK(s == faces()[t.shape].edges);
        if (t.affine)
            CHECK(t.comp == face_hyp(t.shape));
        else
            CHECK((t.comp == face_hyp(t.shape) - 1 || t.comp == t.shape));
    }
    CHECK(affine == 16);
}

TEST_CASE("rotation families pair triangles with matched edges") {
    const auto& fams = related_triangle_families();
    const auto& pairs = related_pairs();
    REQUIRE(pairs.size() == 120);
    for (const auto& members : fams) CHECK(members.size() == 6);

    const auto& inst = triangle_instances();
    auto shape_name = [&](int i) { return faces()[inst[i].shape].name; };
    int cross = 0;
    for (const RelatedPair& p : pairs) {
        if (inst[p.inst_a].shape == inst[p.inst_b].shape) {
            for (const auto& m : p.match) CHECK(m[0] == m[1]);
            continue;
        }
        ++cross;
        // Cross-shape matches adjoin the unique completing element.
        for (const auto& m : p.match) {
            Label a_lo = kEdges[m[0]].lo, a_hi = kEdges[m[0]].hi;
            Label b_lo = kEdges[m[1]].lo, b_hi = kEdges[m[1]].hi;
            Label add = static_cast<Label>(b_lo & ~a_lo);
            CHECK(label_size(add) == 1);
            CHECK((a_lo | add) == b_lo);
            CHECK((a_hi | add) == b_hi);
        }
        if (shape_name(p.inst_a) == "T1_234" && shape_name(p.inst_b) == "T2L_234") {
            for (const auto& m : p.match) {
                if (edge_name(m[0]) == "2-3") CHECK(edge_name(m[1]) == "24-34");
                if (edge_name(m[0]) == "2-4") CHECK(edge_name(m[1]) == "23-34");
                if (edge_name(m[0]) == "3-4") CHECK(edge_name(m[1]) == "23-24");
            }
        }
        if (shape_name(p.inst_a) == "T2S_1" && shape_name(p.inst_b) == "T3_1") {
            for (const auto& m : p.match) {
                if (edge_name(m[0]) == "12-13") CHECK(edge_name(m[1]) == "124-134");
                if (edge_name(m[0]) == "12-14") CHECK(edge_name(m[1]) == "123-134");
                if (edge_name(m[0]) == "13-14") CHECK(edge_name(m[1]) == "123-124");
            }
        }
    }
    // 8 families, each with 3+3 members: 2*C(3,2) same-shape + 9 cross pairs.
    CHECK(cross == 8 * 9);
}
