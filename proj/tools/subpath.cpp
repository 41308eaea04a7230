// Command-line front end. Every subcommand prints one JSON envelope
// {command, inputs, result, elapsed_ms} on stdout; --plain (where offered)
// prints just the number. Exit codes: 0 success, 1 verification failure,
// 2 input error, 3 budget exhausted, 4 internal assertion.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subpath/chains.hpp"
#include "subpath/count.hpp"
#include "subpath/errors.hpp"
#include "subpath/explore.hpp"
#include "subpath/formulas.hpp"
#include "subpath/graph.hpp"
#include "subpath/json_out.hpp"
#include "subpath/numeric.hpp"
#include "subpath/rng.hpp"
#include "subpath/verify.hpp"

namespace {

using nlohmann::json;
using namespace subpath;

struct Emitter {
    std::string command;
    json inputs = json::object();
    bool plain = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    // Returns the process exit code so callers can pass failures through.
    int emit(const json& result, const std::string& plain_text, int exit_code = 0) const {
        if (plain) {
            std::cout << plain_text << "\n";
            return exit_code;
        }
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        json envelope{{"command", command},
                      {"inputs", inputs},
                      {"result", result},
                      {"elapsed_ms", elapsed}};
        std::cout << envelope.dump(2) << "\n";
        return exit_code;
    }
};

std::string slurp(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw input_error("cannot open input file " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = slurp(path);
    if (format == "edgelist") return parse_edge_list(text);
    if (format != "graph6")
        throw input_error("unknown format '" + format + "' (expected graph6|edgelist)");
    std::istringstream in(text);
    std::string line, found;
    long long graphs = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        graphs++;
        found = line;
    }
    if (graphs == 0) throw input_error("no graph6 line in " + path);
    if (graphs > 1)
        throw input_error(path + " holds " + std::to_string(graphs) +
                          " graphs; this command expects exactly one");
    return parse_graph6(found);
}

json graph_summary(const Graph& g) {
    return {{"vertices", g.vertex_count()}, {"edges", (long long)g.edge_count()}};
}

int run(int argc, char** argv) {
    CLI::App app{"Exact subpath counting toolkit"};
    app.require_subcommand(1);

    // ---- count ----------------------------------------------------------
    auto* count_cmd = app.add_subcommand("count", "Exact subpath number of one graph");
    std::string count_input, count_format = "graph6";
    CountOptions count_opts;
    std::uint64_t budget = 0;
    bool count_plain = false;
    count_cmd->add_option("--input", count_input, "input file, or - for stdin")->required();
    count_cmd->add_option("--format", count_format, "graph6|edgelist");
    count_cmd->add_option("--budget", budget, "abort after this many explored prefixes");
    count_cmd->add_option("--threads", count_opts.threads, "worker threads (0 = auto)");
    count_cmd->add_flag("--plain", count_plain, "print the bare number");

    // ---- profile --------------------------------------------------------
    auto* profile_cmd =
        app.add_subcommand("profile", "Subpath counts by length, with closed-form check");
    std::string profile_input, profile_format = "graph6";
    CountOptions profile_opts;
    std::uint64_t profile_budget = 0;
    profile_cmd->add_option("--input", profile_input, "input file, or - for stdin")
        ->required();
    profile_cmd->add_option("--format", profile_format, "graph6|edgelist");
    profile_cmd->add_option("--budget", profile_budget,
                            "abort after this many explored prefixes");
    profile_cmd->add_option("--threads", profile_opts.threads, "worker threads (0 = auto)");

    // ---- formula --------------------------------------------------------
    auto* formula_cmd = app.add_subcommand("formula", "Closed-form values for families");
    formula_cmd->require_subcommand(1);
    formula_cmd->fallthrough(); // lets --plain trail the family subcommand
    bool formula_plain = false;
    formula_cmd->add_flag("--plain", formula_plain, "print the bare value(s)");

    long long f_n = 0, f_a = 0, f_b = 0, f_k = 0;
    std::string f_sizes, f_p = "1/2";
    auto* f_tree = formula_cmd->add_subcommand("tree", "any tree on n vertices");
    f_tree->add_option("--n", f_n, "vertex count")->required();
    auto* f_cycle = formula_cmd->add_subcommand("cycle", "cycle on n vertices");
    f_cycle->add_option("--n", f_n, "vertex count")->required();
    auto* f_complete = formula_cmd->add_subcommand("complete", "complete graph");
    f_complete->add_option("--n", f_n, "vertex count")->required();
    auto* f_biclique = formula_cmd->add_subcommand("biclique", "complete bipartite graph");
    f_biclique->add_option("--a", f_a, "first side")->required();
    f_biclique->add_option("--b", f_b, "second side")->required();
    auto* f_unicyclic = formula_cmd->add_subcommand(
        "unicyclic", "unicyclic graph from pendant component sizes");
    f_unicyclic->add_option("--sizes", f_sizes, "comma list, one size per cycle vertex")
        ->required();
    auto* f_ladder = formula_cmd->add_subcommand("ladder", "ladder with k rungs");
    f_ladder->add_option("--k", f_k, "rung count")->required();
    auto* f_hex = formula_cmd->add_subcommand("hexbounds",
                                              "bounds for chains of k hexagons");
    f_hex->add_option("--k", f_k, "hexagon count")->required();
    auto* f_rand = formula_cmd->add_subcommand("random-exp",
                                               "exact expectation for G(n,p)");
    f_rand->add_option("--n", f_n, "vertex count")->required();
    f_rand->add_option("--p", f_p, "edge probability NUM/DEN");

    // ---- chain ----------------------------------------------------------
    auto* chain_cmd = app.add_subcommand("chain", "Chain-of-cycles value and tools");
    std::string chain_spec_text, chain_build;
    bool chain_classify = false, chain_plain = false;
    chain_cmd->add_option("--spec", chain_spec_text, "arc spec \"a1,..,ak;b1,..,bk\"")
        ->required();
    chain_cmd->add_flag("--classify", chain_classify, "include shape classification");
    chain_cmd->add_option("--build", chain_build, "write the chain as an edge list file");
    chain_cmd->add_flag("--plain", chain_plain, "print the bare number");

    // ---- chain-family ---------------------------------------------------
    auto* family_cmd =
        app.add_subcommand("chain-family", "Enumerate or sweep a fixed cycle-length family");
    std::string family_g;
    bool family_dedupe = false, family_extremal = false;
    family_cmd->add_option("--g", family_g, "cycle lengths \"g1,...,gk\"")->required();
    family_cmd->add_flag("--dedupe", family_dedupe, "one spec per symmetry orbit");
    family_cmd->add_flag("--extremal", family_extremal, "report extremes of the family");

    // ---- scan -----------------------------------------------------------
    auto* scan_cmd = app.add_subcommand("scan", "Rank a graph6 stream by subpath number");
    std::string scan_input, scan_objective, scan_filter = "none";
    int scan_top = 10;
    CountOptions scan_opts;
    std::uint64_t scan_budget = 0;
    scan_cmd->add_option("--input", scan_input, "graph6 file, or - for stdin")->required();
    scan_cmd->add_option("--objective", scan_objective, "min|max")->required();
    scan_cmd->add_option("--filter", scan_filter,
                         "none|connected|bipartite|triangle-free|cubic");
    scan_cmd->add_option("--top", scan_top, "entries to keep in the ranking");
    scan_cmd->add_option("--threads", scan_opts.threads, "worker threads (0 = auto)");
    scan_cmd->add_option("--budget", scan_budget,
                         "per-graph cap on explored prefixes");

    // ---- random ---------------------------------------------------------
    auto* random_cmd = app.add_subcommand("random", "Monte Carlo estimate for G(n,p)");
    long long r_n = 0, r_trials = 0;
    std::uint64_t r_seed = 0;
    std::string r_p;
    CountOptions random_opts;
    random_cmd->add_option("--n", r_n, "vertex count")->required();
    random_cmd->add_option("--p", r_p, "edge probability NUM/DEN")->required();
    random_cmd->add_option("--trials", r_trials, "number of sampled graphs")->required();
    random_cmd->add_option("--seed", r_seed, "master seed")->required();
    random_cmd->add_option("--threads", random_opts.threads, "worker threads (0 = auto)");

    // ---- verify ---------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "Replay a self-check suite");
    std::string verify_suite, verify_data = "data/catalogues";
    int verify_max = -1;
    CountOptions verify_opts;
    verify_cmd->add_option("--suite", verify_suite,
                           "trees|cycles|unicyclic|complete|biclique|chains|ladder|hex|"
                           "bipartite-max|cubic|all")
        ->required();
    verify_cmd->add_option("--max-size", verify_max, "override the default sweep size");
    verify_cmd->add_option("--data", verify_data, "catalogue directory");
    verify_cmd->add_option("--threads", verify_opts.threads, "worker threads (0 = auto)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Emitter out;

    if (count_cmd->parsed()) {
        out.command = "count";
        out.plain = count_plain;
        out.inputs = {{"input", count_input}, {"format", count_format}};
        if (budget > 0) {
            count_opts.budget = budget;
            out.inputs["budget"] = budget;
        }
        Graph g = load_graph(count_input, count_format);
        BigCount pn = count_subpaths(g, count_opts);
        json result = graph_summary(g);
        result["subpaths"] = pn.get_str();
        return out.emit(result, pn.get_str());
    }

    if (profile_cmd->parsed()) {
        out.command = "profile";
        out.inputs = {{"input", profile_input}, {"format", profile_format}};
        if (profile_budget > 0) {
            profile_opts.budget = profile_budget;
            out.inputs["budget"] = profile_budget;
        }
        Graph g = load_graph(profile_input, profile_format);
        LengthProfile prof = length_profile(g, profile_opts);
        auto closed = profile_closed_small(g);
        bool match = true;
        json closed_json = json::array();
        for (int l = 0; l <= 3; l++) {
            closed_json.push_back(closed[(std::size_t)l].get_str());
            if (prof.at(l) != closed[(std::size_t)l]) match = false;
        }
        json result = graph_summary(g);
        result["profile"] = to_json(prof);
        result["low_order_closed_forms"] = closed_json;
        result["low_order_match"] = match;
        return out.emit(result, prof.total().get_str());
    }

    if (formula_cmd->parsed()) {
        out.command = "formula";
        out.plain = formula_plain;
        if (f_tree->parsed()) {
            out.inputs = {{"family", "tree"}, {"n", f_n}};
            BigCount v = pn_tree(f_n);
            return out.emit({{"subpaths", v.get_str()}}, v.get_str());
        }
        if (f_cycle->parsed()) {
            out.inputs = {{"family", "cycle"}, {"n", f_n}};
            BigCount v = pn_cycle(f_n);
            return out.emit({{"subpaths", v.get_str()}}, v.get_str());
        }
        if (f_complete->parsed()) {
            out.inputs = {{"family", "complete"}, {"n", f_n}};
            BigCount v = pn_complete(f_n);
            return out.emit({{"subpaths", v.get_str()}}, v.get_str());
        }
        if (f_biclique->parsed()) {
            out.inputs = {{"family", "biclique"}, {"a", f_a}, {"b", f_b}};
            BigCount v = pn_complete_bipartite(f_a, f_b);
            return out.emit({{"subpaths", v.get_str()}}, v.get_str());
        }
        if (f_unicyclic->parsed()) {
            out.inputs = {{"family", "unicyclic"}, {"sizes", f_sizes}};
            std::vector<long long> sizes;
            std::istringstream in(f_sizes);
            std::string tok;
            while (std::getline(in, tok, ',')) {
                try {
                    std::size_t pos = 0;
                    long long v = std::stoll(tok, &pos);
                    if (pos != tok.size()) throw std::invalid_argument(tok);
                    sizes.push_back(v);
                } catch (const std::exception&) {
                    throw input_error("bad component size '" + tok + "'");
                }
            }
            BigCount v = pn_unicyclic(sizes);
            return out.emit({{"subpaths", v.get_str()}}, v.get_str());
        }
        if (f_ladder->parsed()) {
            out.inputs = {{"family", "ladder"}, {"k", f_k}};
            BigCount v = pn_ladder(f_k);
            return out.emit({{"subpaths", v.get_str()}}, v.get_str());
        }
        if (f_hex->parsed()) {
            out.inputs = {{"family", "hexbounds"}, {"k", f_k}};
            auto [lo, hi] = hexagonal_bounds(f_k);
            return out.emit({{"lower", lo.get_str()}, {"upper", hi.get_str()}},
                            lo.get_str() + " " + hi.get_str());
        }
        if (f_rand->parsed()) {
            out.inputs = {{"family", "random-exp"}, {"n", f_n}, {"p", f_p}};
            Rational v = expected_pn(f_n, parse_rational(f_p));
            return out.emit({{"expectation", json_number(v)},
                             {"expectation_decimal", decimal_string(v)}},
                            json_number(v));
        }
        throw input_error("formula: missing family subcommand");
    }

    if (chain_cmd->parsed()) {
        out.command = "chain";
        out.plain = chain_plain;
        out.inputs = {{"spec", chain_spec_text}};
        ChainSpec spec = parse_chain_spec(chain_spec_text);
        BigCount pn = pn_chain(spec);
        json result = to_json(spec);
        result["subpaths"] = pn.get_str();
        if (chain_classify) result["classification"] = to_json(classify_chain(spec));
        if (!chain_build.empty()) {
            out.inputs["build"] = chain_build;
            std::ofstream f(chain_build);
            if (!f) throw input_error("cannot write " + chain_build);
            f << format_edge_list(chain_graph(spec));
            result["built"] = chain_build;
        }
        return out.emit(result, pn.get_str());
    }

    if (family_cmd->parsed()) {
        out.command = "chain-family";
        out.inputs = {{"g", family_g},
                      {"dedupe", family_dedupe},
                      {"extremal", family_extremal}};
        std::vector<long long> lengths;
        std::istringstream in(family_g);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            try {
                std::size_t pos = 0;
                long long v = std::stoll(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument(tok);
                lengths.push_back(v);
            } catch (const std::exception&) {
                throw input_error("bad cycle length '" + tok + "'");
            }
        }
        if (family_extremal) {
            if (family_dedupe)
                throw input_error("--dedupe has no effect with --extremal; drop one");
            return out.emit(to_json(extremal_in_family(lengths)), "");
        }
        json specs = json::array();
        for (const ChainSpec& s : enumerate_family(lengths, family_dedupe)) {
            json item = {{"spec", to_string(s)},
                         {"subpaths", pn_chain(s).get_str()},
                         {"tag", classify_chain(s).tag}};
            specs.push_back(std::move(item));
        }
        json lengths_json = json::array();
        for (long long g : lengths) lengths_json.push_back(g);
        return out.emit({{"cycle_lengths", lengths_json},
                         {"count", (long long)specs.size()},
                         {"specs", specs}},
                        "");
    }

    if (scan_cmd->parsed()) {
        out.command = "scan";
        out.inputs = {{"input", scan_input},
                      {"objective", scan_objective},
                      {"filter", scan_filter},
                      {"top", scan_top}};
        if (scan_budget > 0) {
            scan_opts.budget = scan_budget;
            out.inputs["budget"] = scan_budget;
        }
        ScanOptions options;
        options.objective = scan_objective;
        options.filter = parse_filter(scan_filter);
        options.top = scan_top;
        options.count = scan_opts;
        ScanReport report = [&] {
            if (scan_input == "-") return scan_stream(std::cin, options);
            std::ifstream f(scan_input);
            if (!f) throw input_error("cannot open input file " + scan_input);
            return scan_stream(f, options);
        }();
        return out.emit(to_json(report), "");
    }

    if (random_cmd->parsed()) {
        out.command = "random";
        out.inputs = {{"n", r_n}, {"p", r_p}, {"trials", r_trials}, {"seed", r_seed}};
        if (r_n > 1000) throw input_error("random: n above 1000 is not sampleable here");
        MonteCarloResult res =
            monte_carlo_pn((int)r_n, parse_rational(r_p), r_trials, r_seed, random_opts);
        return out.emit(to_json(res), "");
    }

    if (verify_cmd->parsed()) {
        out.command = "verify";
        out.inputs = {{"suite", verify_suite},
                      {"max_size", verify_max},
                      {"data", verify_data}};
        std::vector<std::string> names;
        if (verify_suite == "all")
            names = all_suites();
        else
            names.push_back(verify_suite);
        json suites = json::array();
        bool all_pass = true;
        for (const std::string& name : names) {
            SuiteResult r = run_suite(name, verify_max, verify_data, verify_opts);
            all_pass = all_pass && r.passed();
            suites.push_back(to_json(r));
        }
        json result = {{"passed", all_pass}, {"suites", suites}};
        return out.emit(result, "", all_pass ? 0 : 1);
    }

    throw input_error("no subcommand given");
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const subpath::budget_error& e) {
        std::cerr << "budget exhausted: " << e.what() << "\n";
        return 3;
    } catch (const subpath::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
