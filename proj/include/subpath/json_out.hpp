#pragma once

// JSON views of the report structs, for the command-line tool and anything
// else that wants machine-readable output. Counts are serialized as decimal
// strings (they routinely exceed 64 bits), rationals as "num/den".

#include <string>
#include <vector>

#include <json.hpp>

#include "subpath/chains.hpp"
#include "subpath/count.hpp"
#include "subpath/explore.hpp"
#include "subpath/numeric.hpp"
#include "subpath/verify.hpp"

namespace subpath {

inline std::string json_number(const BigCount& v) { return v.get_str(); }

inline std::string json_number(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline nlohmann::json to_json(const LengthProfile& p) {
    nlohmann::json counts = nlohmann::json::array();
    for (const BigCount& c : p.counts) counts.push_back(c.get_str());
    return {{"counts", counts}, {"total", p.total().get_str()}};
}

inline nlohmann::json to_json(const ChainSpec& s) {
    nlohmann::json lengths = nlohmann::json::array();
    for (long long g : s.cycle_lengths()) lengths.push_back(g);
    return {{"spec", to_string(s)},
            {"cycles", s.k()},
            {"cycle_lengths", lengths},
            {"vertices", s.vertex_count()},
            {"edges", s.edge_count()}};
}

inline nlohmann::json to_json(const CycleClass& c) {
    return {{"a", c.a},          {"b", c.b},   {"length", c.length},
            {"linear", c.linear}, {"almost_linear", c.almost_linear},
            {"kink", c.kink},     {"tag", c.tag}};
}

inline nlohmann::json to_json(const ChainClass& c) {
    nlohmann::json interior = nlohmann::json::array();
    for (const CycleClass& cc : c.interior) interior.push_back(to_json(cc));
    return {{"degenerate", c.degenerate},
            {"linear", c.linear},
            {"almost_linear", c.almost_linear},
            {"kink_chain", c.kink_chain},
            {"tag", c.tag},
            {"interior_cycles", interior}};
}

inline nlohmann::json to_json(const FamilyExtremes& ex) {
    nlohmann::json lengths = nlohmann::json::array();
    for (long long g : ex.cycle_lengths) lengths.push_back(g);
    auto specs = [](const std::vector<ChainSpec>& v) {
        nlohmann::json out = nlohmann::json::array();
        for (const ChainSpec& s : v) out.push_back(to_string(s));
        return out;
    };
    return {{"cycle_lengths", lengths},
            {"family_size", ex.family_size},
            {"min_value", ex.min_value.get_str()},
            {"max_value", ex.max_value.get_str()},
            {"minimizers", specs(ex.minimizers)},
            {"maximizers", specs(ex.maximizers)},
            {"maximizers_all_kink", ex.maximizers_all_kink},
            {"minimizers_all_near_linear", ex.minimizers_all_near_linear}};
}

inline nlohmann::json to_json(const ScanReport& r) {
    nlohmann::json top = nlohmann::json::array();
    for (const ScanEntry& e : r.top)
        top.push_back({{"graph6", e.graph6}, {"subpaths", e.value.get_str()}});
    return {{"objective", r.objective},
            {"filter", r.filter},
            {"lines_read", r.lines_read},
            {"graphs_scanned", r.graphs_scanned},
            {"extremal_value", r.extremal_value.get_str()},
            {"extremal_graphs", r.extremal_graphs},
            {"top", top}};
}

inline nlohmann::json to_json(const MonteCarloResult& r) {
    return {{"n", r.n},
            {"p", json_number(r.p)},
            {"trials", r.trials},
            {"seed", r.seed},
            {"sample_mean", r.sample_mean},
            {"sample_stddev", r.sample_stddev},
            {"exact_expectation", json_number(r.exact_expectation)},
            {"exact_expectation_decimal", r.exact_expectation_decimal},
            {"within_four_se", r.within_four_se}};
}

inline nlohmann::json to_json(const BipartiteMaxReport& r) {
    return {{"n", r.n},
            {"graphs_scanned", r.graphs_scanned},
            {"max_value", r.max_value.get_str()},
            {"maximizers", r.maximizers},
            {"runner_up_value", r.runner_up_value.get_str()},
            {"unique_maximizer", r.unique_maximizer},
            {"maximizer_is_balanced_biclique", r.maximizer_is_balanced_biclique},
            {"formula_value", r.formula_value.get_str()},
            {"value_matches_formula", r.value_matches_formula}};
}

inline nlohmann::json to_json(const UnicyclicExtremesReport& r) {
    nlohmann::json sizes = nlohmann::json::array();
    for (const auto& pattern : r.minimizer_component_sizes) sizes.push_back(pattern);
    return {{"n", r.n},
            {"sequences_scanned", r.sequences_scanned},
            {"distinct_trees", r.distinct_trees},
            {"graphs_evaluated", r.graphs_evaluated},
            {"max_value", r.max_value.get_str()},
            {"max_is_n_squared", r.max_is_n_squared},
            {"max_only_on_cycle", r.max_only_on_cycle},
            {"min_value", r.min_value.get_str()},
            {"min_matches_pattern", r.min_matches_pattern},
            {"minimizer_component_sizes", sizes}};
}

inline nlohmann::json to_json(const CaseResult& c) {
    return {{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

inline nlohmann::json to_json(const SuiteResult& s) {
    nlohmann::json cases = nlohmann::json::array();
    for (const CaseResult& c : s.cases) cases.push_back(to_json(c));
    return {{"suite", s.suite}, {"passed", s.passed()}, {"cases", cases}};
}

} // namespace subpath
