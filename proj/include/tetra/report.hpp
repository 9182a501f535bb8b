#pragma once
// Deterministic machine-readable verification reports.  Each section runs
// one family of checks and records rows of name / expected / actual / pass;
// JSON with a fixed field order is the canonical output (no timings or other
// run-dependent data, so identical inputs give byte-identical reports), and
// the CSV exports are derived views.

#include <string>
#include <vector>

#include "json.hpp"

#include "tetra/count_table.hpp"

namespace tetra {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "complete-tetrahedra-report/1";

// Parses the data files and runs their internal-consistency checks, before
// any mathematics; parse failures are reported with file and line.
Json validate_section(const std::string& data_dir);

// Census shape: sizes, codimension histogram, orbits, agreement with the
// expected-strata file, and (optionally) the rule-driven re-enumeration.
Json strata_section(const std::string& data_dir, bool rules);

// Betti / Euler / zeta bookkeeping and the count-table cross-checks.
Json counts_section(const CountTable& table);

// Finite-geometry recounts of selected strata versus the table rows.
Json oracle_section(const CountTable& table, const std::vector<std::string>& types,
                    const std::vector<int>& primes);

// Quotient-ring checks, any subset of {"hilbert", "pairing", "witness",
// "s4"}; with `rational` set, "hilbert" also runs the exact rational
// cross-check (the only check available over the rationals).
Json ring_section(bool rational, const std::vector<std::string>& checks);

// Full pipeline: validate + strata (with rules) + counts + oracle + ring.
Json full_report(const std::string& data_dir);

// True when the section's (or report's) "status" field says "pass".
bool report_ok(const Json& j);

// One line per stratum in census order.
std::string strata_csv();

// One line per count-table row in file order.
std::string counts_csv(const CountTable& table);

}  // namespace tetra
