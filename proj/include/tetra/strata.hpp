#pragma once
// The stratification census: cliques of pairwise-compatible divisors, their
// diagrams, type names, orbits, and the independent rule-driven enumeration.

#include <map>
#include <optional>
#include <utility>

#include "tetra/diagram.hpp"

namespace tetra {

// Two divisors are compatible when their union diagram is admissible AND lies
// below each divisor's own diagram in the degeneration order (the closure
// condition: joining the two loci must not erase either divisor's fast
// coincidences).
bool compatible(int d1, int d2);

struct StratumRecord {
    std::vector<int> clique;    // divisor ids, ascending
    Diagram diagram;
    int codim;                  // = clique size
    std::string split_type;     // "X0", "C", "CCstar_nop", ..., "DD_opE"
    int shift_mask;             // bit k-1 set when Delta_k collapses (A/B/Astar present)
    int orbit_id;               // index of the S4 orbit (orbits sorted canonically)
    std::string type_name() const;   // e.g. "CstarE:010"
};

std::string shift_mask_string(int mask);       // "010"
int shift_mask_from_string(const std::string& s);   // -1 on bad input
std::string classify_split(const std::vector<int>& split_clique);
int split_codim(const std::string& split_type);
std::string dual_split_type(const std::string& split_type);
const std::vector<std::string>& split_type_names();   // all 20, canonical order

struct Census {
    std::vector<StratumRecord> strata;   // canonical order: by (codim, serialized diagram)
    int orbit_count = 0;
    const StratumRecord* find(const Diagram& d) const;
    std::map<std::pair<std::string, int>, int> type_multiplicities() const;  // (split, shift) -> count
};

// Enumerates all cliques (including the empty one), builds and checks each
// diagram (admissible, below each member divisor, pairwise distinct), and
// classifies types and S4 orbits.  Throws on any structural violation.
const Census& census();

// Independent generator: enumerate every admissible (S, S#) directly from the
// local rules, with no reference to divisors or cliques.  Marks are modelled by
// integer vanishing orders on the 24 edge coordinates: ultrametric within each
// hypersimplex (triangle relations), shifted by a per-family constant across
// related triangles (proportionality of matched coordinate triples), with S
// and the sharp sets read off as level sets.  `max_depth` bounds the order
// values scanned; the result is stable for max_depth >= 4 (asserted in tests).
// Every emitted diagram is checked against rules i and ii; returns the deduped
// set in serialization order.
std::vector<Diagram> exhaustive_rule_enumeration(int max_depth = 6);

// Valid local mark patterns of a single component (triangle counts 0/1/3 in
// every shape the component carries; projective components also obey rule i).
std::vector<EdgeSet> component_patterns(bool affine, int comp);

// Split/shift decomposition via the census: returns the split-clique diagram
// and the shift mask.  Throws if the diagram is not a stratum diagram.
std::pair<Diagram, int> decompose(const Diagram& d);

}  // namespace tetra
