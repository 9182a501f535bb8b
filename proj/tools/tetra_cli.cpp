// Command-line front end: runs the verification sections and prints
// deterministic JSON (or CSV) reports.  Exit codes: 0 = every check passed,
// 1 = a verification failed, 2 = usage or data error.

#include <exception>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tetra/count_table.hpp"
#include "tetra/divisors.hpp"
#include "tetra/report.hpp"
#include "tetra/strata.hpp"

namespace {

void print_json(const tetra::Json& j) { std::cout << j.dump(2) << "\n"; }

// Human view of a section: its failing checks, if any.
void print_failures(const tetra::Json& section) {
    for (const tetra::Json& c : section.at("checks"))
        if (!c.at("pass").get<bool>())
            std::cout << "FAIL " << c.at("name").get<std::string>() << ": expected "
                      << c.at("expected").dump() << ", got " << c.at("actual").dump() << "\n";
}

tetra::Json census_records() {
    tetra::Json records = tetra::Json::array();
    for (const tetra::StratumRecord& r : tetra::census().strata) {
        tetra::Json names = tetra::Json::array();
        for (int d : r.clique) names.push_back(tetra::divisors()[d].name);
        records.push_back(tetra::Json{{"type", r.type_name()},
                                      {"split", r.split_type},
                                      {"shift", tetra::shift_mask_string(r.shift_mask)},
                                      {"codim", r.codim},
                                      {"orbit", r.orbit_id},
                                      {"clique", names},
                                      {"diagram", tetra::serialize(r.diagram)}});
    }
    return records;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact verification of the boundary stratification, point counts, and "
        "cohomology ring of the space of complete tetrahedra"};
    app.require_subcommand(1);

    std::string data_dir = "data";
    app.add_option("--data-dir", data_dir, "Directory holding the reference data files")
        ->capture_default_str();

    CLI::App* strata = app.add_subcommand("strata", "Verify the stratification census");
    std::string strata_emit;
    strata->add_option("--emit", strata_emit, "Emit the full census (json or csv)")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* counts =
        app.add_subcommand("counts", "Verify the point counts, Betti numbers, and zeta data");
    std::string table_path;
    counts->add_option("--table", table_path,
                       "Count-table file (defaults to <data-dir>/count_table.txt)");
    std::string counts_emit;
    counts->add_option("--emit", counts_emit, "Emit the verification (json) or the table (csv)")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* oracle = app.add_subcommand(
        "oracle", "Recount strata by direct enumeration over small prime fields");
    std::vector<int> primes = {2, 3, 5, 7};
    oracle->add_option("--primes", primes, "Comma-separated primes to count over")
        ->delimiter(',');
    std::vector<std::string> types = {"X0", "A", "B", "Astar"};
    oracle->add_option("--types", types, "Comma-separated stratum types to recount")
        ->delimiter(',');

    CLI::App* ring = app.add_subcommand("ring", "Verify the cohomology ring presentation");
    std::string field = "f2";
    ring->add_option("--field", field, "Coefficients: f2, or q for the rational cross-check")
        ->check(CLI::IsMember({"f2", "q"}));
    std::vector<std::string> ring_checks;
    CLI::Option* check_opt =
        ring->add_option("--check", ring_checks,
                         "Comma-separated subset of hilbert,pairing,witness,s4")
            ->delimiter(',');

    CLI::App* report = app.add_subcommand("report", "Run the full verification pipeline");
    CLI::App* validate = app.add_subcommand("validate", "Parse and cross-check the data files");

    for (CLI::App* s : {strata, counts, oracle, ring, report, validate}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*strata) {
            tetra::Json s = tetra::strata_section(data_dir, true);
            if (strata_emit == "csv") {
                std::cout << tetra::strata_csv();
            } else if (strata_emit == "json") {
                s["records"] = census_records();
                print_json(s);
            } else {
                std::cout << s.at("summary").get<std::string>() << "\n";
                print_failures(s);
            }
            return tetra::report_ok(s) ? 0 : 1;
        }

        if (*counts) {
            if (table_path.empty()) table_path = data_dir + "/count_table.txt";
            tetra::CountTable table = tetra::load_count_table(table_path);
            tetra::Json s = tetra::counts_section(table);
            if (counts_emit == "csv") {
                std::cout << tetra::counts_csv(table);
            } else if (counts_emit == "json") {
                print_json(s);
            } else {
                std::string line = "b:";
                for (const tetra::Json& b : s.at("betti")) line += " " + b.dump();
                std::cout << line << "\n";
                print_failures(s);
            }
            return tetra::report_ok(s) ? 0 : 1;
        }

        if (*oracle) {
            tetra::CountTable table =
                tetra::load_count_table(data_dir + "/count_table.txt");
            tetra::Json s = tetra::oracle_section(table, types, primes);
            print_json(s);
            return tetra::report_ok(s) ? 0 : 1;
        }

        if (*ring) {
            bool rational = field == "q";
            if (check_opt->count() == 0)
                ring_checks = rational ? std::vector<std::string>{"hilbert"}
                                       : std::vector<std::string>{"hilbert", "pairing",
                                                                  "witness", "s4"};
            if (rational)
                for (const std::string& c : ring_checks)
                    if (c != "hilbert") {
                        std::cerr << "error: check '" << c
                                  << "' is only available over f2\n";
                        return 2;
                    }
            tetra::Json s = tetra::ring_section(rational, ring_checks);
            print_json(s);
            return tetra::report_ok(s) ? 0 : 1;
        }

        if (*validate) {
            tetra::Json s = tetra::validate_section(data_dir);
            print_json(s);
            return tetra::report_ok(s) ? 0 : 2;
        }

        // report
        tetra::Json r = tetra::full_report(data_dir);
        print_json(r);
        if (tetra::report_ok(r)) return 0;
        return tetra::report_ok(r.at("sections").at("validate")) ? 1 : 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
