#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "tetra/strata.hpp"

#include <algorithm>
#include <string>
#include <vector>

using namespace tetra;

namespace {

std::vector<std::string> keys(const std::vector<Diagram>& ds) {
    std::vector<std::string> out;
    out.reserve(ds.size());
    for (const Diagram& d : ds) out.push_back(serialize(d));
    return out;
}

}  // namespace

TEST_CASE("rule-driven enumeration reproduces the census exactly") {
    std::vector<Diagram> generated = exhaustive_rule_enumeration();
    REQUIRE(generated.size() == 1424);

    std::vector<std::string> got = keys(generated);
    CHECK(std::is_sorted(got.begin(), got.end()));
    CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());

    std::vector<std::string> expected;
    for (const StratumRecord& r : census().strata) expected.push_back(serialize(r.diagram));
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
}

TEST_CASE("enumeration is stable once the order depth suffices") {
    // Shallow scans miss deep towers of coincidence speeds; past depth four
    // nothing new appears.
    CHECK(exhaustive_rule_enumeration(2).size() < 1424);
    std::vector<Diagram> at_default = exhaustive_rule_enumeration();
    std::vector<Diagram> deeper = exhaustive_rule_enumeration(7);
    CHECK(keys(at_default) == keys(deeper));
}

TEST_CASE("every generated diagram passes the local rules") {
    for (const Diagram& d : exhaustive_rule_enumeration(4)) {
        std::string why;
        CHECK(is_admissible(d, &why));
        CHECK(why.empty());
    }
}

TEST_CASE("single component mark patterns") {
    // Affine bottom chart: marks encode a partition of the four points, giving
    // the 15 set partitions; its projectivization drops the all-merged one.
    CHECK(component_patterns(true, 1).size() == 15);
    CHECK(component_patterns(false, 0).size() == 14);
    CHECK(component_patterns(true, 3).size() == 15);
    CHECK(component_patterns(false, 2).size() == 14);
    // A single projective triangle: nothing, or one fast edge.
    CHECK(component_patterns(false, 3 + 0).size() == 4);
    for (int f = 3; f < kFaceCount; ++f) CHECK(component_patterns(false, f).size() == 4);
    // The empty pattern always qualifies.
    for (int k = 1; k <= 3; ++k) {
        auto pats = component_patterns(true, k);
        CHECK(std::find(pats.begin(), pats.end(), EdgeSet{0}) != pats.end());
    }
}
