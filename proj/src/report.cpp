#include "tetra/report.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tetra/configs.hpp"
#include "tetra/divisors.hpp"
#include "tetra/labels.hpp"
#include "tetra/presentation.hpp"
#include "tetra/quotient.hpp"
#include "tetra/strata.hpp"

namespace tetra {

namespace {

Json check_row(const std::string& name, Json expected, Json actual) {
    bool pass = expected == actual;
    return Json{{"name", name},
                {"expected", std::move(expected)},
                {"actual", std::move(actual)},
                {"pass", pass}};
}

Json make_section(const std::string& name, const Json& fields, Json checks) {
    bool ok = true;
    for (const Json& c : checks) ok = ok && c.at("pass").get<bool>();
    Json s;
    s["section"] = name;
    s["status"] = ok ? "pass" : "fail";
    for (const auto& [k, v] : fields.items()) s[k] = v;
    s["checks"] = std::move(checks);
    return s;
}

// The expected-strata file: split type, shift mask, codim, class size.
// Returns an empty string on success, a file:line diagnostic otherwise.
std::string parse_expected_classes(const std::string& path,
                                   std::map<std::pair<std::string, int>, int>* classes,
                                   long* total) {
    std::ifstream in(path);
    if (!in.good()) return "cannot open " + path;
    classes->clear();
    *total = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string type, mask;
        int codim = 0, mult = 0;
        if (!(row >> type >> mask >> codim >> mult))
            return path + ":" + std::to_string(lineno) + ": expected 'type mask codim count'";
        int m = shift_mask_from_string(mask);
        if (m < 0) return path + ":" + std::to_string(lineno) + ": bad shift mask " + mask;
        int split_cd = 0;
        try {
            split_cd = split_codim(type);
        } catch (const std::exception&) {
            return path + ":" + std::to_string(lineno) + ": unknown split type " + type;
        }
        if (split_cd + std::popcount(static_cast<unsigned>(m)) != codim)
            return path + ":" + std::to_string(lineno) + ": codimension is not split + shifts";
        if (mult <= 0) return path + ":" + std::to_string(lineno) + ": class size must be positive";
        if (!classes->emplace(std::make_pair(type, m), mult).second)
            return path + ":" + std::to_string(lineno) + ": duplicate stratum class";
        *total += mult;
    }
    return "";
}

// Expected constants of the verification, in one place.
const std::vector<long>& expected_even_betti() {
    static const std::vector<long> b = {1,    26,   188,  652, 1394, 2112, 2414,
                                        2112, 1394, 652,  188, 26,   1};
    return b;
}

IntPoly expected_fiber_count() { return IntPoly{1, 23, 114, 189, 114, 23, 1}; }

Json expected_codim_histogram() { return Json::array({1, 23, 142, 376, 491, 313, 78}); }

std::string join_names(const std::vector<int>& clique) {
    if (clique.empty()) return "-";
    std::string out;
    for (int d : clique) {
        if (!out.empty()) out += "+";
        out += divisors()[d].name;
    }
    return out;
}

const std::map<std::string, std::pair<std::string, int>>& oracle_rows() {
    static const std::map<std::string, std::pair<std::string, int>> m = {
        {"X0", {"X0", 0}}, {"A", {"X0", 1}}, {"B", {"X0", 2}}, {"Astar", {"X0", 4}}};
    return m;
}

}  // namespace

Json validate_section(const std::string& data_dir) {
    Json checks = Json::array();

    // Divisor table: names and marked-edge sets against the built-ins.
    {
        std::string path = data_dir + "/divisors.txt";
        std::ifstream in(path);
        std::string err;
        std::map<std::string, EdgeSet> rows;
        if (!in.good()) {
            err = "cannot open " + path;
        } else {
            std::string line;
            int lineno = 0;
            while (err.empty() && std::getline(in, line)) {
                ++lineno;
                if (line.empty() || line[0] == '#') continue;
                std::istringstream row(line);
                std::string name, edges;
                if (!(row >> name >> edges)) {
                    err = path + ":" + std::to_string(lineno) + ": expected 'name edges'";
                    break;
                }
                if (divisor_from_name(name) < 0)
                    err = path + ":" + std::to_string(lineno) + ": unknown divisor " + name;
                else if (rows.count(name))
                    err = path + ":" + std::to_string(lineno) + ": duplicate divisor " + name;
                else
                    try {
                        rows[name] = edge_set_from_string(edges);
                    } catch (const std::exception& e) {
                        err = path + ":" + std::to_string(lineno) + ": " + e.what();
                    }
            }
        }
        checks.push_back(check_row("divisor file parses", "ok", err.empty() ? "ok" : err));
        if (err.empty()) {
            checks.push_back(
                check_row("divisor rows", kDivisorCount, static_cast<int>(rows.size())));
            bool match = static_cast<int>(rows.size()) == kDivisorCount;
            for (int d = 0; match && d < kDivisorCount; ++d)
                match = rows.at(divisors()[d].name) == divisors()[d].sset;
            checks.push_back(check_row("divisor sets match the built-in table", true, match));
        }
    }

    // Count table: the loader enforces row shape, known types, the degree
    // rule, and duality symmetry.
    {
        std::string err;
        std::size_t nrows = 0;
        try {
            CountTable t = load_count_table(data_dir + "/count_table.txt");
            nrows = t.rows.size();
        } catch (const std::exception& e) {
            err = e.what();
        }
        checks.push_back(check_row("count table parses", "ok", err.empty() ? "ok" : err));
        if (err.empty())
            checks.push_back(check_row("count table rows", 160, static_cast<int>(nrows)));
    }

    // Expected stratum classes.
    {
        std::map<std::pair<std::string, int>, int> classes;
        long total = 0;
        std::string err =
            parse_expected_classes(data_dir + "/expected_strata.txt", &classes, &total);
        checks.push_back(check_row("expected-strata file parses", "ok", err.empty() ? "ok" : err));
        if (err.empty()) {
            checks.push_back(
                check_row("expected-strata classes", 160, static_cast<int>(classes.size())));
            checks.push_back(check_row("expected-strata total", 1424, total));
        }
    }

    return make_section("validate", Json::object(), std::move(checks));
}

Json strata_section(const std::string& data_dir, bool rules) {
    const Census& c = census();

    std::array<long, 7> hist{};
    long splits = 0;
    int max_codim = 0;
    for (const StratumRecord& r : c.strata) {
        ++hist[static_cast<std::size_t>(r.codim)];
        if (r.shift_mask == 0) ++splits;
        max_codim = std::max(max_codim, r.codim);
    }

    Json fields;
    fields["summary"] = std::to_string(c.strata.size()) + " strata, " +
                        std::to_string(kDivisorCount) + " divisors, max codim " +
                        std::to_string(max_codim);

    Json checks = Json::array();
    checks.push_back(check_row("strata", 1424, static_cast<long>(c.strata.size())));
    checks.push_back(check_row("split cliques", 178, splits));
    checks.push_back(
        check_row("strata are split cliques times shift subsets", splits * 8,
                  static_cast<long>(c.strata.size())));
    checks.push_back(
        check_row("codimension histogram", expected_codim_histogram(), Json(hist)));
    checks.push_back(check_row("orbits", 160, c.orbit_count));
    auto classes = c.type_multiplicities();
    checks.push_back(check_row("classes", 160, static_cast<long>(classes.size())));

    std::map<std::pair<std::string, int>, int> expected;
    long total = 0;
    std::string err =
        parse_expected_classes(data_dir + "/expected_strata.txt", &expected, &total);
    checks.push_back(check_row("classes match the expected-strata file", "match",
                               !err.empty()          ? err
                               : classes == expected ? "match"
                                                     : "mismatch"));

    if (rules) {
        std::vector<Diagram> generated = exhaustive_rule_enumeration();
        checks.push_back(
            check_row("rule enumeration", 1424, static_cast<long>(generated.size())));
        std::set<std::string> a, b;
        for (const Diagram& d : generated) a.insert(serialize(d));
        for (const StratumRecord& r : c.strata) b.insert(serialize(r.diagram));
        checks.push_back(check_row("rule enumeration equals the census diagrams", true, a == b));
    }

    return make_section("strata", fields, std::move(checks));
}

Json counts_section(const CountTable& table) {
    Json fields;
    IntPoly fiber = fiber_sum(table);
    fields["fiber_count"] = fiber.to_string();
    fields["flag_count"] = flag_poly().to_string();

    BettiProfile betti = total_poincare(table);
    Json betti_line = Json::array();
    for (std::size_t i = 0; i < betti.even_betti.size(); ++i) {
        betti_line.push_back(betti.even_betti[i].get_si());
        if (i + 1 < betti.even_betti.size()) betti_line.push_back(0);
    }
    fields["betti"] = betti_line;  // degrees 0..24, odd rows zero

    Json checks = Json::array();
    checks.push_back(check_row("rows", 160, static_cast<int>(table.rows.size())));

    TableReport rep = verify_table(table, census());
    if (!rep.ok()) fields["failures"] = rep.failures;
    checks.push_back(check_row("table cross-checks", "no failures",
                               rep.ok() ? "no failures"
                                        : std::to_string(rep.failures.size()) + " failures"));

    checks.push_back(
        check_row("fiber point count", expected_fiber_count().to_string(), fiber.to_string()));

    Json even = Json::array(), even_exp = Json::array();
    for (const mpz_class& b : betti.even_betti) even.push_back(b.get_si());
    for (long b : expected_even_betti()) even_exp.push_back(b);
    checks.push_back(check_row("even Betti numbers", even_exp, even));
    checks.push_back(check_row("Betti vector is palindromic", true, betti.palindromic()));
    checks.push_back(check_row("Euler characteristic", 11160,
                               euler_characteristic(table).get_si()));

    bool zeta_ok = true;
    auto exps = zeta_exponents(table);
    zeta_ok = exps.size() == betti.even_betti.size();
    for (std::size_t i = 0; zeta_ok && i < exps.size(); ++i)
        zeta_ok = exps[i].first == static_cast<int>(i) &&
                  exps[i].second == betti.even_betti[i];
    checks.push_back(check_row("zeta exponents are the even Betti numbers", true, zeta_ok));
    std::string why;
    checks.push_back(check_row("zeta series matches its product form at q=2", "ok",
                               weil_smoke_check(table, 2, 3, &why) ? "ok" : why));

    return make_section("counts", fields, std::move(checks));
}

Json oracle_section(const CountTable& table, const std::vector<std::string>& types,
                    const std::vector<int>& primes) {
    Json rows = Json::array();
    bool all_match = true;
    for (const std::string& type : types) {
        auto it = oracle_rows().find(type);
        if (it == oracle_rows().end())
            throw std::runtime_error("no oracle for stratum type '" + type +
                                     "' (available: X0, A, B, Astar)");
        const CountRow* row = table.find(it->second.first, it->second.second);
        if (!row) throw std::runtime_error("count table has no row for type " + type);
        for (int q : primes) {
            long long oracle = count_stratum(type, q);
            mpz_class expected = row->count.eval(q);
            bool match = expected == mpz_class(static_cast<long>(oracle));
            all_match = all_match && match;
            rows.push_back(Json{{"type", type},
                                {"q", q},
                                {"oracle_count", oracle},
                                {"table_count", expected.get_si()},
                                {"match", match}});
        }
    }

    Json fields;
    fields["comparisons"] = std::move(rows);
    Json checks = Json::array();
    checks.push_back(check_row("every recount matches the table", true, all_match));
    return make_section("oracle", fields, std::move(checks));
}

Json ring_section(bool rational, const std::vector<std::string>& checks_requested) {
    std::set<std::string> want(checks_requested.begin(), checks_requested.end());
    for (const std::string& c : want)
        if (c != "hilbert" && c != "pairing" && c != "witness" && c != "s4")
            throw std::runtime_error("unknown ring check '" + c +
                                     "' (available: hilbert, pairing, witness, s4)");

    const F2Quotient& q = standard_quotient();
    Json fields;
    fields["field"] = rational ? "q" : "f2";
    fields["survivors"] = static_cast<int>(q.elimination().survivors.size());
    fields["basis"] = static_cast<int>(q.basis().polys.size());
    fields["truncation"] = q.basis().truncation_degree;

    Json checks = Json::array();
    HilbertFunction h = q.hilbert();

    if (want.count("hilbert")) {
        Json dims = Json::array(), dims_exp = Json::array();
        for (long d : h.dims) dims.push_back(d);
        for (long d : expected_even_betti()) dims_exp.push_back(d);
        checks.push_back(check_row("hilbert function", dims_exp, dims));
        checks.push_back(check_row("hilbert function is palindromic", true, h.palindromic()));
        checks.push_back(check_row("degree 13 vanishes", 0,
                                   static_cast<long>(q.standard_monomials(13).size())));
        if (rational) {
            HilbertFunction hq = hilbert_over_q();
            Json rdims = Json::array();
            for (long d : hq.dims) rdims.push_back(d);
            checks.push_back(check_row("rational hilbert function", dims_exp, rdims));
            checks.push_back(
                check_row("rational and mod-2 hilbert functions agree", true, hq == h));
        }
    }

    if (want.count("pairing")) {
        Json ranks = Json::array(), dims = Json::array();
        for (int i = 0; i <= kTopDegree; ++i) {
            ranks.push_back(q.pairing_rank(i));
            dims.push_back(h.dims[static_cast<std::size_t>(i)]);
        }
        checks.push_back(check_row("pairing ranks are the dimensions", dims, ranks));
    }

    if (want.count("witness")) {
        F2Poly w = q.witness_normal_form();
        fields["witness_normal_form"] = f2_to_string(w);
        checks.push_back(check_row("witness class is nonzero", true, !w.zero()));
        bool killed = true;
        Poly sw = socle_witness();
        for (int v : q.elimination().survivors)
            killed = killed &&
                     q.normal_form(poly_mul(sw, Poly{Term{Monomial::var(v), mpq_class(1)}}))
                         .zero();
        checks.push_back(
            check_row("witness times every survivor vanishes", true, killed));
    }

    if (want.count("s4")) {
        Presentation p = build_presentation();
        std::vector<Relation> gens = p.relations;
        std::vector<Relation> extra = unlisted_disjoint_products(p);
        gens.insert(gens.end(), extra.begin(), extra.end());
        checks.push_back(check_row("relabeling violations", 0,
                                   static_cast<long>(q.s4_violations(gens).size())));
    }

    return make_section("ring", fields, std::move(checks));
}

Json full_report(const std::string& data_dir) {
    Json report;
    report["schema"] = kReportSchema;
    Json sections;

    Json validate = validate_section(data_dir);
    bool data_ok = report_ok(validate);
    sections["validate"] = std::move(validate);

    bool all_ok = data_ok;
    if (data_ok) {
        CountTable table = load_count_table(data_dir + "/count_table.txt");
        Json s = strata_section(data_dir, true);
        all_ok = all_ok && report_ok(s);
        sections["strata"] = std::move(s);
        s = counts_section(table);
        all_ok = all_ok && report_ok(s);
        sections["counts"] = std::move(s);
        s = oracle_section(table, {"X0", "A", "B", "Astar"}, {2, 3, 5, 7});
        all_ok = all_ok && report_ok(s);
        sections["oracle"] = std::move(s);
        s = ring_section(false, {"hilbert", "pairing", "witness", "s4"});
        all_ok = all_ok && report_ok(s);
        sections["ring"] = std::move(s);
    }

    report["sections"] = std::move(sections);
    report["status"] = all_ok ? "pass" : "fail";
    return report;
}

bool report_ok(const Json& j) {
    return j.contains("status") && j.at("status").get<std::string>() == "pass";
}

std::string strata_csv() {
    std::string out = "type,split,shift,codim,orbit,clique,diagram\n";
    for (const StratumRecord& r : census().strata) {
        out += r.type_name() + "," + r.split_type + "," + shift_mask_string(r.shift_mask) +
               "," + std::to_string(r.codim) + "," + std::to_string(r.orbit_id) + "," +
               join_names(r.clique) + ",\"" + serialize(r.diagram) + "\"\n";
    }
    return out;
}

std::string counts_csv(const CountTable& table) {
    std::string out = "split,shift,multiplicity,codim,count,annotation\n";
    for (const CountRow& r : table.rows) {
        out += r.split_type + "," + shift_mask_string(r.shift_mask) + "," +
               std::to_string(r.multiplicity) + "," + std::to_string(r.codim()) + "," +
               r.count.to_string() + "," + r.annotation + "\n";
    }
    return out;
}

}  // namespace tetra
