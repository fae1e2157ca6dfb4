// Command-line front end. Every command is a thin shell over the pure
// library: parse flags, run one computation, emit deterministically.
//
// Exit codes: 0 success, 1 verification failure (verify, count --verify),
// 2 usage or input errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swlink/alexander.hpp"
#include "swlink/braid.hpp"
#include "swlink/classify.hpp"
#include "swlink/laurent.hpp"
#include "swlink/serialize.hpp"
#include "swlink/sw.hpp"
#include "swlink/verify.hpp"

namespace {

using nlohmann::ordered_json;

ordered_json poly_json(const swlink::LaurentPolynomial& p) {
    return ordered_json::parse(swlink::to_canonical_json(p));
}

std::string poly_table(const swlink::LaurentPolynomial& p) {
    std::ostringstream out;
    for (const auto& name : p.variables()) out << name << "_exp\t";
    out << "coeff\n";
    for (const auto& [exp, coeff] : p.terms()) {
        for (int e : exp) out << e << "\t";
        out << coeff.str() << "\n";
    }
    return out.str();
}

std::string join_ints(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += std::to_string(values[i]);
    }
    return out;
}

std::string join_big(const std::vector<swlink::Int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ",";
        out += values[i].str();
    }
    return out;
}

swlink::IntRange parse_range(const std::string& text) {
    const auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, sep));
        const int hi = std::stoi(text.substr(sep + 2));
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed range '" + text + "' (expected N or A..B)");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

ordered_json report_json(const swlink::BasicClassReport& report) {
    ordered_json j;
    auto classes = ordered_json::array();
    for (const auto& c : report.classes) {
        ordered_json entry;
        entry["exp"] = c.exponents;
        entry["coeff"] = c.coefficient.str();
        entry["divisibility"] = c.divisibility;
        classes.push_back(std::move(entry));
    }
    j["classes"] = std::move(classes);
    j["count"] = report.count;
    auto coeffs = ordered_json::array();
    for (const auto& c : report.coefficient_multiset) coeffs.push_back(c.str());
    j["coefficient_multiset"] = std::move(coeffs);
    j["divisibility_multiset"] = report.divisibility_multiset;
    return j;
}

int emit_verify(const swlink::VerifyReport& report, const std::string& format) {
    if (format == "json") {
        ordered_json j;
        auto checks = ordered_json::array();
        for (const auto& check : report.checks) {
            ordered_json c;
            c["identity"] = check.identity;
            c["cell"] = check.cell;
            c["pass"] = check.pass;
            if (!check.pass) c["detail"] = check.detail;
            checks.push_back(std::move(c));
        }
        j["checks"] = std::move(checks);
        j["passed"] = report.passed;
        j["failed"] = report.failed;
        std::cout << j.dump() << "\n";
    } else if (format == "csv") {
        std::cout << "identity,cell,pass\n";
        for (const auto& check : report.checks)
            std::cout << "\"" << check.identity << "\",\"" << check.cell << "\","
                      << (check.pass ? "true" : "false") << "\n";
    } else {
        for (const auto& check : report.checks) {
            std::cout << (check.pass ? "PASS" : "FAIL") << "  " << check.identity << "  ["
                      << check.cell << "]\n";
            if (!check.pass) std::cout << "      " << check.detail << "\n";
        }
        std::cout << "passed: " << report.passed << "  failed: " << report.failed
                  << "  total: " << report.checks.size() << "\n";
    }
    if (!report.all_pass()) {
        for (const auto& check : report.checks) {
            if (!check.pass) {
                std::cerr << "first counterexample: " << check.identity << " [" << check.cell
                          << "] " << check.detail << "\n";
                break;
            }
        }
        return 1;
    }
    return 0;
}

struct AlexanderArgs {
    int p = 1;
    int q = 2;
    std::string method = "both";
    std::string format = "text";
    std::string braid_file;
};

int run_alexander(const AlexanderArgs& args) {
    if (!args.braid_file.empty()) {
        if (args.method != "det")
            throw std::invalid_argument("--braid supports only --method det");
        const auto word = swlink::braid_word_from_json(read_file(args.braid_file));
        const auto delta = swlink::alexander_general(word);
        if (args.format == "json") std::cout << swlink::to_canonical_json(delta) << "\n";
        else std::cout << poly_table(delta);
        return 0;
    }

    if (args.method == "det" || args.method == "closed") {
        const auto delta = args.method == "det"
                               ? swlink::alexander_via_determinant(args.p, args.q)
                               : swlink::alexander_closed_form(args.p, args.q);
        if (args.format == "json") std::cout << swlink::to_canonical_json(delta) << "\n";
        else std::cout << poly_table(delta);
        return 0;
    }
    const auto det = swlink::alexander_via_determinant(args.p, args.q);
    const auto closed = swlink::alexander_closed_form(args.p, args.q);
    const bool match = det == closed;
    if (args.format == "json") {
        ordered_json j;
        j["det"] = poly_json(det);
        j["closed"] = poly_json(closed);
        j["match"] = match;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "method=det\n" << poly_table(det) << "\nmethod=closed\n"
                  << poly_table(closed) << "\nmatch: " << (match ? "yes" : "no") << "\n";
    }
    return match ? 0 : 1;
}

int main_impl(int argc, char** argv) {
    CLI::App app{"exact Alexander polynomials, Seiberg-Witten invariants and basic-class "
                 "statistics of closed-braid-plus-axis link surgeries"};
    app.require_subcommand(1);

    // alexander
    AlexanderArgs alex;
    auto* alexander_cmd =
        app.add_subcommand("alexander", "Alexander polynomial of the (p, q) family link");
    auto* alex_p = alexander_cmd->add_option("--p", alex.p, "family parameter p >= 1");
    auto* alex_q = alexander_cmd->add_option("--q", alex.q, "strand count q >= 2");
    alexander_cmd->add_option("--method", alex.method, "det, closed, or both")
        ->check(CLI::IsMember({"det", "closed", "both"}))
        ->capture_default_str();
    alexander_cmd->add_option("--format", alex.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    auto* alex_braid = alexander_cmd->add_option(
        "--braid", alex.braid_file,
        "braid word JSON file; output is defined up to unit monomials");
    alex_braid->excludes(alex_p)->excludes(alex_q);

    // sw
    swlink::FamilyParams sw_params;
    std::string sw_format = "text";
    auto* sw_cmd = app.add_subcommand("sw", "Seiberg-Witten invariant of the link-surgery manifold");
    sw_cmd->add_option("--n", sw_params.n, "multiplicity n >= 1")->required();
    sw_cmd->add_option("--r", sw_params.r, "multiplicity r >= 1")->required();
    sw_cmd->add_option("--p", sw_params.p, "family parameter p >= 1")->required();
    sw_cmd->add_option("--q", sw_params.q, "family parameter q >= 2")->required();
    sw_cmd->add_option("--format", sw_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // fibersum
    std::string fs_file, fs_fiber = "f", fs_format = "text";
    int fs_r = 1, fs_p = 1, fs_q = 2;
    auto* fibersum_cmd = app.add_subcommand(
        "fibersum", "SW invariant of a generalized fiber sum, from a caller-supplied SW polynomial");
    fibersum_cmd->add_option("--swx", fs_file, "canonical polynomial JSON file")->required();
    fibersum_cmd->add_option("--fiber-var", fs_fiber, "fiber class variable name")
        ->capture_default_str();
    fibersum_cmd->add_option("--r", fs_r, "multiplicity r >= 1")->required();
    fibersum_cmd->add_option("--p", fs_p, "family parameter p >= 1")->required();
    fibersum_cmd->add_option("--q", fs_q, "family parameter q >= 2")->required();
    fibersum_cmd->add_option("--format", fs_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // collapse
    std::string collapse_file, collapse_format = "text";
    auto* collapse_cmd = app.add_subcommand(
        "collapse", "set tau equal to the fiber variable and count the surviving terms");
    collapse_cmd->add_option("--in", collapse_file, "canonical polynomial JSON file")->required();
    collapse_cmd->add_option("--format", collapse_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // basic-classes
    swlink::FamilyParams bc_params;
    std::string bc_csv, bc_format = "text";
    auto* basic_cmd = app.add_subcommand("basic-classes",
                                         "basic classes of the link-surgery manifold");
    basic_cmd->add_option("--n", bc_params.n, "multiplicity n >= 1")->required();
    basic_cmd->add_option("--r", bc_params.r, "multiplicity r >= 1")->required();
    basic_cmd->add_option("--p", bc_params.p, "family parameter p >= 1")->required();
    basic_cmd->add_option("--q", bc_params.q, "family parameter q >= 2")->required();
    basic_cmd->add_option("--csv", bc_csv, "also write classes to this CSV file");
    basic_cmd->add_option("--format", bc_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    // count
    std::string count_n = "1..4", count_p = "2..8", count_q = "3..8", count_format = "text";
    bool count_verify = false;
    auto* count_cmd = app.add_subcommand(
        "count", "basic-class counts over a parameter grid (r = 1)");
    count_cmd->add_option("--n", count_n, "range N or A..B")->capture_default_str();
    count_cmd->add_option("--p", count_p, "range N or A..B")->capture_default_str();
    count_cmd->add_option("--q", count_q, "range N or A..B")->capture_default_str();
    count_cmd->add_flag("--verify", count_verify,
                        "cross-check closed-form counts against enumeration; exit 1 on mismatch");
    count_cmd->add_option("--format", count_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    // distinguish
    int d_n = 1, d_p1 = 3, d_p2 = 2;
    bool d_json = false;
    auto* distinguish_cmd = app.add_subcommand(
        "distinguish", "compare the q = 2 manifolds at p1 and p2 by basic-class invariants");
    distinguish_cmd->add_option("--n", d_n, "multiplicity n >= 1")->required();
    distinguish_cmd->add_option("--p1", d_p1, "larger family parameter")->required();
    distinguish_cmd->add_option("--p2", d_p2, "smaller family parameter (>= 2)")->required();
    distinguish_cmd->add_flag("--json", d_json, "emit JSON instead of text");

    // verify
    std::string v_suite = "all", v_p = "1..8", v_q = "2..8", v_n = "1..4", v_r = "1..4";
    std::string v_format = "text";
    auto* verify_cmd = app.add_subcommand("verify", "run identity suites over a parameter grid");
    verify_cmd->add_option("--suite", v_suite,
                           "alexander, count, symmetry, recurrence, consistency, or all")
        ->check(CLI::IsMember({"alexander", "count", "symmetry", "recurrence", "consistency", "all"}))
        ->capture_default_str();
    verify_cmd->add_option("--p", v_p, "range N or A..B")->capture_default_str();
    verify_cmd->add_option("--q", v_q, "range N or A..B")->capture_default_str();
    verify_cmd->add_option("--n", v_n, "range N or A..B")->capture_default_str();
    verify_cmd->add_option("--r", v_r, "range N or A..B")->capture_default_str();
    verify_cmd->add_option("--format", v_format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (alexander_cmd->parsed()) return run_alexander(alex);

    if (sw_cmd->parsed()) {
        const auto invariant = swlink::sw_link_surgery(sw_params);
        if (sw_format == "json") std::cout << swlink::to_canonical_json(invariant.poly) << "\n";
        else std::cout << poly_table(invariant.poly);
        return 0;
    }

    if (fibersum_cmd->parsed()) {
        const auto sw_x = swlink::polynomial_from_json(read_file(fs_file));
        const auto invariant = swlink::sw_fiber_sum_general(sw_x, fs_fiber, fs_r, fs_p, fs_q);
        if (fs_format == "json") std::cout << swlink::to_canonical_json(invariant.poly) << "\n";
        else std::cout << poly_table(invariant.poly);
        return 0;
    }

    if (collapse_cmd->parsed()) {
        const auto poly = swlink::polynomial_from_json(read_file(collapse_file));
        swlink::SWInvariant invariant{poly, {}, swlink::Provenance::general_fiber_sum};
        const auto [collapsed, count] = swlink::collapse_count(invariant);
        if (collapse_format == "json") {
            ordered_json j;
            j["collapsed"] = poly_json(collapsed);
            j["term_count"] = count;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << poly_table(collapsed) << "term_count: " << count << "\n";
        }
        return 0;
    }

    if (basic_cmd->parsed()) {
        const auto report = swlink::basic_classes(swlink::sw_link_surgery(bc_params));
        if (!bc_csv.empty()) {
            std::ofstream out(bc_csv);
            if (!out) throw std::runtime_error("cannot write '" + bc_csv + "'");
            out << "xi_exp,tau_exp,coeff,divisibility\n";
            for (const auto& c : report.classes)
                out << c.exponents[0] << "," << c.exponents[1] << "," << c.coefficient.str()
                    << "," << c.divisibility << "\n";
        }
        if (bc_format == "json") {
            ordered_json j;
            ordered_json params;
            params["n"] = bc_params.n;
            params["r"] = bc_params.r;
            params["p"] = bc_params.p;
            params["q"] = bc_params.q;
            j["params"] = std::move(params);
            const auto body = report_json(report);
            for (const auto& [key, value] : body.items()) j[key] = value;
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "xi_exp\ttau_exp\tcoeff\tdivisibility\n";
            for (const auto& c : report.classes)
                std::cout << c.exponents[0] << "\t" << c.exponents[1] << "\t"
                          << c.coefficient.str() << "\t" << c.divisibility << "\n";
            std::cout << "count: " << report.count << "\n"
                      << "coefficient multiset: " << join_big(report.coefficient_multiset) << "\n"
                      << "divisibility multiset (|coeff|=1): "
                      << join_ints(report.divisibility_multiset) << "\n";
        }
        return 0;
    }

    if (count_cmd->parsed()) {
        const auto ns = parse_range(count_n);
        const auto ps = parse_range(count_p);
        const auto qs = parse_range(count_q);
        if (ns.empty() || ps.empty() || qs.empty())
            throw std::invalid_argument("count: empty parameter range");
        if (ns.lo < 1 || ps.lo < 1 || qs.lo < 2 || qs.hi > 20)
            throw std::invalid_argument("count: supported windows are n >= 1, p >= 1, 2 <= q <= 20");

        struct Cell {
            int n, p, q;
            long long closed;
            long long enumerated = -1;
        };
        std::vector<Cell> cells;
        bool all_match = true;
        for (int n = ns.lo; n <= ns.hi; ++n) {
            for (int p = ps.lo; p <= ps.hi; ++p) {
                for (int q = qs.lo; q <= qs.hi; ++q) {
                    Cell cell{n, p, q, 0};
                    if (q == 2) cell.closed = 2LL * n;
                    else if (p == 1) cell.closed = static_cast<long long>(q) * n;
                    else cell.closed = swlink::count_formula(n, p, q);
                    if (count_verify) {
                        cell.enumerated = static_cast<long long>(
                            swlink::basic_classes(swlink::sw_link_surgery({p, q, n, 1})).count);
                        if (cell.enumerated != cell.closed) all_match = false;
                    }
                    cells.push_back(cell);
                }
            }
        }
        if (count_format == "json") {
            ordered_json j;
            auto arr = ordered_json::array();
            for (const auto& cell : cells) {
                ordered_json c;
                c["n"] = cell.n;
                c["p"] = cell.p;
                c["q"] = cell.q;
                c["count"] = cell.closed;
                if (count_verify) {
                    c["enumerated"] = cell.enumerated;
                    c["match"] = cell.enumerated == cell.closed;
                }
                arr.push_back(std::move(c));
            }
            j["cells"] = std::move(arr);
            if (count_verify) j["all_match"] = all_match;
            std::cout << j.dump() << "\n";
        } else {
            const char* sep = count_format == "csv" ? "," : "\t";
            std::cout << "n" << sep << "p" << sep << "q" << sep << "count";
            if (count_verify) std::cout << sep << "enumerated" << sep << "match";
            std::cout << "\n";
            for (const auto& cell : cells) {
                std::cout << cell.n << sep << cell.p << sep << cell.q << sep << cell.closed;
                if (count_verify)
                    std::cout << sep << cell.enumerated << sep
                              << (cell.enumerated == cell.closed ? "yes" : "no");
                std::cout << "\n";
            }
        }
        if (count_verify && !all_match) {
            for (const auto& cell : cells) {
                if (cell.enumerated != cell.closed) {
                    std::cerr << "count mismatch at n=" << cell.n << " p=" << cell.p
                              << " q=" << cell.q << ": closed=" << cell.closed
                              << " enumerated=" << cell.enumerated << "\n";
                    break;
                }
            }
            return 1;
        }
        return 0;
    }

    if (distinguish_cmd->parsed()) {
        const auto result = swlink::distinguish_q2(d_n, d_p1, d_p2);
        if (d_json) {
            ordered_json j;
            j["n"] = result.n;
            j["p1"] = result.p1;
            j["p2"] = result.p2;
            j["r"] = result.r;
            j["first"] = report_json(result.first);
            j["second"] = report_json(result.second);
            j["counts_equal"] = result.counts_equal;
            j["coefficient_multisets_equal"] = result.coefficient_multisets_equal;
            j["divisibility_multisets_equal"] = result.divisibility_multisets_equal;
            j["verdict"] = swlink::to_string(result.verdict);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "n=" << result.n << " p1=" << result.p1 << " p2=" << result.p2
                      << " r=" << result.r << "\n";
            std::cout << "count: " << result.first.count << " vs " << result.second.count << " ("
                      << (result.counts_equal ? "equal" : "different") << ")\n";
            std::cout << "coefficient multiset: " << join_big(result.first.coefficient_multiset)
                      << " vs " << join_big(result.second.coefficient_multiset) << " ("
                      << (result.coefficient_multisets_equal ? "equal" : "different") << ")\n";
            std::cout << "divisibility multiset (|coeff|=1): "
                      << join_ints(result.first.divisibility_multiset) << " vs "
                      << join_ints(result.second.divisibility_multiset) << " ("
                      << (result.divisibility_multisets_equal ? "equal" : "different") << ")\n";
            std::cout << "verdict: " << swlink::to_string(result.verdict) << "\n";
        }
        return 0;
    }

    if (verify_cmd->parsed()) {
        swlink::SweepSpec spec;
        spec.p = parse_range(v_p);
        spec.q = parse_range(v_q);
        spec.n = parse_range(v_n);
        spec.r = parse_range(v_r);
        if (v_suite == "alexander") spec.suite = swlink::Suite::alexander;
        else if (v_suite == "count") spec.suite = swlink::Suite::count;
        else if (v_suite == "symmetry") spec.suite = swlink::Suite::symmetry;
        else if (v_suite == "recurrence") spec.suite = swlink::Suite::recurrence;
        else if (v_suite == "consistency") spec.suite = swlink::Suite::consistency;
        else spec.suite = swlink::Suite::all;
        return emit_verify(swlink::run_verify(spec), v_format);
    }

    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return main_impl(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
