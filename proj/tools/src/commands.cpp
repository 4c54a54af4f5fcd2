#include "commands.hpp"

#include "cleangraph/fixtures.hpp"
#include "cleangraph/io.hpp"
#include "cleangraph/kstructure.hpp"
#include "cleangraph/oracle.hpp"
#include "cleangraph/recognizers.hpp"
#include "cleangraph/simplicial.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace cleangraph::cli {
namespace {

using nlohmann::ordered_json;

struct InputArgs {
    std::string path;    // empty reads standard input
    std::string format;  // "", "graph6" or "edges"
};

void add_input_flags(CLI::App& cmd, InputArgs& in) {
    cmd.add_option("-i,--input", in.path, "input file (default: standard input)");
    cmd.add_option("--format", in.format, "input format (default: sniffed)")
        ->check(CLI::IsMember({"graph6", "edges"}));
}

// A leading digit, '#', or "n<space>" can only start an edge list; graph6
// payload bytes live in ['?', '~'] and none of those begin one.
GraphFormat sniff_format(const InputArgs& in, const std::string& text) {
    if (in.format == "graph6") return GraphFormat::Graph6;
    if (in.format == "edges") return GraphFormat::EdgeList;
    if (in.path.ends_with(".g6")) return GraphFormat::Graph6;
    if (in.path.ends_with(".edges")) return GraphFormat::EdgeList;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '#' || (c >= '0' && c <= '9')) return GraphFormat::EdgeList;
        if (c == 'n' && i + 1 < text.size() && (text[i + 1] == ' ' || text[i + 1] == '\t'))
            return GraphFormat::EdgeList;
        break;
    }
    return GraphFormat::Graph6;
}

GraphDocument load_document(const InputArgs& in) {
    std::string text;
    if (in.path.empty()) {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        text = buffer.str();
    } else {
        std::ifstream file(in.path, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open '" + in.path + "'");
        std::ostringstream buffer;
        buffer << file.rdbuf();
        text = buffer.str();
    }
    return sniff_format(in, text) == GraphFormat::Graph6 ? parse_graph6(text)
                                                         : parse_edge_list(text);
}

ordered_json set_json(const VertexSet& s) {
    ordered_json a = ordered_json::array();
    for (int v : s) a.push_back(v);
    return a;
}

ordered_json obstruction_json(const Obstruction& o) {
    ordered_json j;
    j["kind"] = obstruction_kind_name(o.kind);
    j["description"] = o.describe();
    switch (o.kind) {
        case ObstructionKind::Claw:
            j["centre"] = o.apex;
            j["leaves"] = o.path;
            break;
        case ObstructionKind::Jewel:
            j["hole"] = o.hole;
            j["apex"] = o.apex;
            break;
        case ObstructionKind::LineWheel:
            j["hole"] = o.hole;
            j["apex"] = o.apex;
            j["attach"] = o.attach;
            break;
        case ObstructionKind::ShortPrism:
            j["hole"] = o.hole;
            j["path"] = o.path;
            break;
        case ObstructionKind::SevenAntihole:
            j["vertices"] = o.hole;
            break;
    }
    return j;
}

ordered_json report_header(const char* command, const Graph& g) {
    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    return j;
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

std::string hole_status_name(HoleEnumStatus status) {
    switch (status) {
        case HoleEnumStatus::Complete: return "complete";
        case HoleEnumStatus::BudgetExhausted: return "budget-exhausted";
        case HoleEnumStatus::CapReached: return "cap-reached";
        case HoleEnumStatus::StoppedBySink: return "stopped";
    }
    return "?";
}

// find ----------------------------------------------------------------------

struct FindArgs {
    InputArgs in;
    bool json = false;
    bool verify_clean = false;
    std::uint64_t budget = kDefaultSearchBudget;
    int threads = 1;
};

int cmd_find(const FindArgs& a, std::ostream& out, std::ostream& err) {
    Graph g = load_document(a.in).graph;
    if (g.is_null()) {
        err << "error: the null graph has no candidate locations\n";
        return kExitError;
    }
    ordered_json j = report_header("find", g);
    if (a.verify_clean) {
        auto guard = find_clean_obstruction(g, a.budget);
        if (guard.truncated()) {
            err << "cleanness undecided: budget exhausted after " << guard.stats.nodes
                << " nodes\n";
            return kExitBudget;
        }
        if (guard.found) {
            if (a.json) {
                j["clean"] = false;
                j["obstruction"] = obstruction_json(*guard.found);
                j["found"] = false;
                emit_json(out, j);
            } else {
                out << "none (not clean: " << guard.found->describe() << ")\n";
            }
            return kExitNone;
        }
        j["clean"] = true;
    }
    FindOptions options;
    options.threads = a.threads;
    auto result = find_simplicial_clique(g, options);
    if (!result) {
        if (a.json) {
            j["found"] = false;
            emit_json(out, j);
        } else {
            out << "none\n";
        }
        return kExitNone;
    }
    if (a.json) {
        j["found"] = true;
        j["clique"] = set_json(result->clique);
        if (result->provenance == SimplicialCliqueResult::Provenance::SimplicialVertex) {
            j["via"] = "simplicial-vertex";
            j["vertex"] = result->vertex;
        } else {
            j["via"] = "edge-dome";
            j["edge"] = ordered_json::array({result->edge_a, result->edge_b});
        }
        emit_json(out, j);
    } else {
        out << result->describe() << "\n";
    }
    return kExitOk;
}

// check -----------------------------------------------------------------------

struct CheckArgs {
    InputArgs in;
    bool json = false;
    std::uint64_t budget = kDefaultSearchBudget;
};

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream&) {
    Graph g = load_document(a.in).graph;
    auto claw = find_claw(g);
    auto even = find_even_hole(g, a.budget);
    auto elim = chordal_elimination_order(g);
    auto obstruction = find_clean_obstruction(g, a.budget);
    bool undecided = even.truncated() || obstruction.truncated();

    if (a.json) {
        ordered_json j = report_header("check", g);
        j["claw_free"] = !claw.has_value();
        if (claw) j["claw"] = obstruction_json(*claw);
        if (even.truncated())
            j["even_hole_free"] = nullptr;
        else
            j["even_hole_free"] = !even.found.has_value();
        if (even.found) j["even_hole"] = even.found->vertices;
        j["chordal"] = elim.chordal();
        if (elim.hole) j["hole"] = elim.hole->vertices;
        if (obstruction.truncated())
            j["clean"] = nullptr;
        else
            j["clean"] = !obstruction.found.has_value();
        if (obstruction.found) j["obstruction"] = obstruction_json(*obstruction.found);
        emit_json(out, j);
        return undecided ? kExitBudget : kExitOk;
    }

    if (claw)
        out << "claw-free: NO (" << claw->describe() << ")\n";
    else
        out << "claw-free: YES\n";

    if (even.found)
        out << "even-hole-free: NO (hole " << even.found->describe() << ")\n";
    else if (even.truncated())
        out << "even-hole-free: UNDECIDED (budget exhausted after " << even.stats.nodes
            << " nodes)\n";
    else
        out << "even-hole-free: YES\n";

    if (elim.chordal())
        out << "chordal: YES\n";
    else
        out << "chordal: NO (hole " << elim.hole->describe() << ")\n";

    if (obstruction.found)
        out << "clean: NO (" << obstruction.found->describe() << ")\n";
    else if (obstruction.truncated())
        out << "clean: UNDECIDED (budget exhausted after " << obstruction.stats.nodes
            << " nodes)\n";
    else
        out << "clean: YES\n";

    return undecided ? kExitBudget : kExitOk;
}

// holes -----------------------------------------------------------------------

struct HolesArgs {
    InputArgs in;
    bool json = false;
    std::uint64_t budget = kDefaultSearchBudget;
    int max_length = 0;       // 0 means unbounded
    std::uint64_t max_count = 0;  // 0 means unbounded
};

int cmd_holes(const HolesArgs& a, std::ostream& out, std::ostream&) {
    Graph g = load_document(a.in).graph;
    HoleEnumOptions options;
    options.node_budget = a.budget;
    if (a.max_length > 0) options.max_length = a.max_length;
    if (a.max_count > 0) options.max_holes = a.max_count;
    HoleList list = collect_holes(g, options);

    if (a.json) {
        ordered_json j = report_header("holes", g);
        ordered_json holes = ordered_json::array();
        for (const auto& h : list.holes) holes.push_back(h.vertices);
        j["holes"] = holes;
        j["count"] = list.holes.size();
        j["status"] = hole_status_name(list.status);
        j["nodes"] = list.stats.nodes;
        emit_json(out, j);
    } else {
        for (const auto& h : list.holes) out << h.describe() << "\n";
        out << "# " << list.holes.size() << " holes, " << hole_status_name(list.status) << "\n";
    }
    if (list.status == HoleEnumStatus::BudgetExhausted) return kExitBudget;
    return list.holes.empty() ? kExitNone : kExitOk;
}

// oracle ----------------------------------------------------------------------

struct OracleArgs {
    InputArgs in;
    bool json = false;
    std::string method = "tree";
};

int cmd_oracle(const OracleArgs& a, std::ostream& out, std::ostream&) {
    Graph g = load_document(a.in).graph;
    OracleReport report = a.method == "subsets" ? enumerate_simplicial_cliques_subsets(g)
                                                : enumerate_simplicial_cliques(g);
    if (a.json) {
        ordered_json j = report_header("oracle", g);
        j["method"] = a.method;
        j["count"] = report.cliques.size();
        j["count_by_size"] = report.count_by_size;
        ordered_json cliques = ordered_json::array();
        for (const auto& k : report.cliques) cliques.push_back(set_json(k));
        j["cliques"] = cliques;
        emit_json(out, j);
    } else {
        for (const auto& k : report.cliques) out << format_vertex_set(k) << "\n";
        out << "# " << report.cliques.size() << " simplicial cliques\n";
        for (std::size_t s = 1; s < report.count_by_size.size(); ++s)
            if (report.count_by_size[s] > 0)
                out << "# size " << s << ": " << report.count_by_size[s] << "\n";
    }
    return report.cliques.empty() ? kExitNone : kExitOk;
}

// gen -------------------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::vector<int> params;
    double density = 0.3;
    std::uint64_t seed = 0;
    int tries = 100;
    std::string output;           // empty writes standard output
    std::string format = "graph6";
};

int require_params(const GenArgs& a, std::size_t count) {
    if (a.params.size() != count) {
        std::ostringstream msg;
        msg << "family '" << a.family << "' takes " << count << " parameter"
            << (count == 1 ? "" : "s") << ", got " << a.params.size();
        throw std::invalid_argument(msg.str());
    }
    return 0;
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
    std::optional<Graph> g;
    if (a.family == "cycle") {
        require_params(a, 1);
        g = cycle(a.params[0]);
    } else if (a.family == "complement-cycle") {
        require_params(a, 1);
        g = complement_cycle(a.params[0]);
    } else if (a.family == "cycle-square") {
        require_params(a, 1);
        g = cycle_square(a.params[0]);
    } else if (a.family == "hat-cycle") {
        require_params(a, 1);
        g = hat_cycle(a.params[0]);
    } else if (a.family == "jewel") {
        require_params(a, 1);
        g = jewel_graph(a.params[0]);
    } else if (a.family == "line-wheel") {
        require_params(a, 2);
        g = line_wheel_graph(a.params[0], a.params[1]);
    } else if (a.family == "short-prism") {
        require_params(a, 1);
        g = short_prism_graph(a.params[0]);
    } else if (a.family == "seven-antihole") {
        require_params(a, 0);
        g = seven_antihole_graph();
    } else if (a.family == "unit-interval") {
        require_params(a, 1);
        g = random_unit_interval(a.params[0], a.density, a.seed);
    } else if (a.family == "random") {
        require_params(a, 1);
        g = random_graph(a.params[0], a.density, a.seed);
    } else if (a.family == "random-clean") {
        require_params(a, 1);
        auto result = random_clean(a.params[0], a.density, a.seed, a.tries);
        if (!result.graph) {
            err << "no clean graph found in " << result.tries << " tries\n";
            return kExitNone;
        }
        g = std::move(result.graph);
    } else {
        throw std::invalid_argument("unknown family '" + a.family + "'");
    }

    std::string text = a.format == "edges" ? emit_edge_list(*g) : emit_graph6(*g) + "\n";
    if (a.output.empty()) {
        out << text;
    } else {
        std::ofstream file(a.output, std::ios::binary);
        if (!file) throw std::runtime_error("cannot open '" + a.output + "'");
        file << text;
    }
    return kExitOk;
}

// verify ----------------------------------------------------------------------

struct VerifyArgs {
    InputArgs in;
    bool json = false;
    std::uint64_t budget = kDefaultSearchBudget;
    int oracle_bound = 20;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream&) {
    Graph g = load_document(a.in).graph;
    VerifyOptions options;
    options.node_budget = a.budget;
    options.oracle_bound = a.oracle_bound;
    TheoremVerdict verdict = verify_theorem(g, options);

    // Structure claims hold in clean graphs; elsewhere they carry no promise.
    std::vector<std::string> claim_failures;
    int holes_checked = 0;
    if (verdict.clean) {
        HoleEnumOptions hole_options;
        hole_options.node_budget = a.budget;
        HoleList list = collect_holes(g, hole_options);
        if (list.status == HoleEnumStatus::BudgetExhausted)
            throw BudgetExhaustedError("hole enumeration exhausted the search budget");
        for (const auto& h : list.holes) {
            ++holes_checked;
            KStructure ks = grow_k_structure(g, h);
            if (auto violation = verify_k_structure(g, ks)) {
                claim_failures.push_back("hole " + h.describe() + ": " + violation->describe());
                continue;
            }
            StructureClaimReport report = check_structure_claims(g, ks);
            for (const auto& r : report.results)
                if (!r.pass)
                    claim_failures.push_back("hole " + h.describe() + ": " +
                                             structure_claim_name(r.claim) + ": " + r.witness);
        }
    }

    bool ok = verdict.consistent() && claim_failures.empty();
    if (a.json) {
        ordered_json j = report_header("verify", g);
        j["clean"] = verdict.clean;
        j["chordal"] = verdict.chordal;
        if (verdict.obstruction) j["obstruction"] = obstruction_json(*verdict.obstruction);
        j["oracle_count"] = verdict.oracle.cliques.size();
        if (verdict.algorithm) {
            j["algorithm"] = verdict.algorithm->describe();
        } else {
            j["algorithm"] = nullptr;
        }
        j["holes_checked"] = holes_checked;
        j["claim_failures"] = claim_failures;
        j["violations"] = verdict.violations;
        j["consistent"] = ok;
        emit_json(out, j);
    } else {
        out << "clean: " << (verdict.clean ? "YES" : "NO") << "\n";
        if (verdict.obstruction) out << "obstruction: " << verdict.obstruction->describe() << "\n";
        out << "chordal: " << (verdict.chordal ? "YES" : "NO") << "\n";
        out << "oracle: " << verdict.oracle.cliques.size() << " simplicial cliques\n";
        out << "algorithm: " << (verdict.algorithm ? verdict.algorithm->describe() : "none")
            << "\n";
        if (verdict.clean)
            out << "structures: " << holes_checked << " holes checked, "
                << (claim_failures.empty() ? "all claims pass" : "claim failures") << "\n";
        else
            out << "structures: skipped (graph is not clean)\n";
        for (const auto& f : claim_failures) out << "claim failure: " << f << "\n";
        for (const auto& v : verdict.violations) out << "violation: " << v << "\n";
        out << "consistent: " << (ok ? "YES" : "NO") << "\n";
    }
    return ok ? kExitOk : kExitNone;
}

// bench -----------------------------------------------------------------------

struct BenchArgs {
    std::vector<int> sizes = {50, 100, 200, 400};
    double density = 0.3;
    std::uint64_t seed = 0;
    int threads = 1;
    int repeats = 1;
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
    out << "n,m,seconds\n";
    for (int n : a.sizes) {
        Graph g = random_unit_interval(n, a.density, a.seed);
        FindOptions options;
        options.threads = a.threads;
        double best = 0;
        std::optional<SimplicialCliqueResult> result;
        for (int r = 0; r < a.repeats; ++r) {
            auto start = std::chrono::steady_clock::now();
            result = find_simplicial_clique(g, options);
            auto stop = std::chrono::steady_clock::now();
            double seconds = std::chrono::duration<double>(stop - start).count();
            if (r == 0 || seconds < best) best = seconds;
        }
        if (!result) err << "warning: no simplicial clique at n=" << n << "\n";
        out << n << "," << g.edge_count() << "," << std::fixed << std::setprecision(6) << best
            << "\n";
        out.unsetf(std::ios_base::floatfield);
    }
    return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"clean graph toolkit: recognizers, simplicial cliques, structure checks"};
    app.name("cleangraph");
    app.require_subcommand(1);

    FindArgs find_args;
    CLI::App* find = app.add_subcommand("find", "find a simplicial clique");
    add_input_flags(*find, find_args.in);
    find->add_flag("--json", find_args.json, "machine-readable report");
    find->add_flag("--verify-clean", find_args.verify_clean,
                   "check cleanness first; report the obstruction if not");
    find->add_option("--budget", find_args.budget, "node budget for --verify-clean")
        ->capture_default_str();
    find->add_option("--threads", find_args.threads, "threads for the edge scan")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));

    CheckArgs check_args;
    CLI::App* check = app.add_subcommand("check", "report claw-free / even-hole-free / chordal / clean");
    add_input_flags(*check, check_args.in);
    check->add_flag("--json", check_args.json, "machine-readable report");
    check->add_option("--budget", check_args.budget, "search node budget")->capture_default_str();

    HolesArgs holes_args;
    CLI::App* holes = app.add_subcommand("holes", "enumerate holes in canonical form");
    add_input_flags(*holes, holes_args.in);
    holes->add_flag("--json", holes_args.json, "machine-readable report");
    holes->add_option("--budget", holes_args.budget, "search node budget")->capture_default_str();
    holes->add_option("--max-length", holes_args.max_length, "only holes up to this length");
    holes->add_option("--max-count", holes_args.max_count, "stop after this many holes");

    OracleArgs oracle_args;
    CLI::App* oracle = app.add_subcommand("oracle", "list all simplicial cliques by brute force");
    add_input_flags(*oracle, oracle_args.in);
    oracle->add_flag("--json", oracle_args.json, "machine-readable report");
    oracle->add_option("--method", oracle_args.method, "enumeration path")
        ->check(CLI::IsMember({"tree", "subsets"}))
        ->capture_default_str();

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "write a fixture-family graph");
    gen->add_option("family", gen_args.family,
                    "cycle | complement-cycle | cycle-square | hat-cycle | jewel | line-wheel | "
                    "short-prism | seven-antihole | unit-interval | random | random-clean")
        ->required();
    gen->add_option("params", gen_args.params, "family parameters");
    gen->add_option("--density", gen_args.density, "edge density or interval radius")
        ->capture_default_str();
    gen->add_option("--seed", gen_args.seed, "random seed")->capture_default_str();
    gen->add_option("--tries", gen_args.tries, "rejection-sampling attempts for random-clean")
        ->capture_default_str();
    gen->add_option("-o,--output", gen_args.output, "output file (default: standard output)");
    gen->add_option("--format", gen_args.format, "output format")
        ->check(CLI::IsMember({"graph6", "edges"}))
        ->capture_default_str();

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check the simplicial-clique guarantees and structure claims");
    add_input_flags(*verify, verify_args.in);
    verify->add_flag("--json", verify_args.json, "machine-readable report");
    verify->add_option("--budget", verify_args.budget, "search node budget")
        ->capture_default_str();
    verify->add_option("--oracle-bound", verify_args.oracle_bound,
                       "largest vertex count the oracle will accept")
        ->capture_default_str();

    BenchArgs bench_args;
    CLI::App* bench = app.add_subcommand("bench", "time `find` on unit interval graphs, CSV output");
    bench->add_option("--sizes", bench_args.sizes, "graph sizes")->capture_default_str();
    bench->add_option("--density", bench_args.density, "interval radius")->capture_default_str();
    bench->add_option("--seed", bench_args.seed, "random seed")->capture_default_str();
    bench->add_option("--threads", bench_args.threads, "threads for the edge scan")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    bench->add_option("--repeats", bench_args.repeats, "timings per size, best kept")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitError;
    }

    try {
        if (find->parsed()) return cmd_find(find_args, out, err);
        if (check->parsed()) return cmd_check(check_args, out, err);
        if (holes->parsed()) return cmd_holes(holes_args, out, err);
        if (oracle->parsed()) return cmd_oracle(oracle_args, out, err);
        if (gen->parsed()) return cmd_gen(gen_args, out, err);
        if (verify->parsed()) return cmd_verify(verify_args, out, err);
        if (bench->parsed()) return cmd_bench(bench_args, out, err);
    } catch (const cleangraph::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitError;
    } catch (const BudgetExhaustedError& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    err << "error: no subcommand\n";
    return kExitError;
}

}  // namespace cleangraph::cli
