#pragma once

#include <json.hpp>

#include "skewq/classify.hpp"
#include "skewq/io.hpp"
#include "skewq/point_scheme.hpp"
#include "skewq/verify.hpp"

namespace skewq {

using json = nlohmann::json;

inline json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
    json out = json::array();
    for (auto [a, b] : pairs) out.push_back({a + 1, b + 1});
    return out;
}

inline std::vector<std::pair<int, int>> pairs_from_json(const json& j) {
    std::vector<std::pair<int, int>> out;
    for (const auto& p : j) out.emplace_back(p.at(0).get<int>() - 1, p.at(1).get<int>() - 1);
    return out;
}

inline json classification_to_json(const Classification& c) {
    json steps = json::array();
    for (const TraceStep& s : c.trace.steps) steps.push_back(format_operation(s.op));
    json out{
        {"r", c.r},
        {"alpha", c.alpha},
        {"beta", c.beta},
        {"indecomposables", "2^" + std::to_string(c.indecomposables_exponent)},
        {"category", c.category},
        {"is_isolated_singularity", c.is_isolated_singularity},
        {"graph", format_graph(c.trace.initial)},
        {"trace", steps},
    };
    if (c.r <= 62) out["indecomposables_decimal"] = std::uint64_t{1} << c.r;
    return out;
}

inline Classification classification_from_json(const json& j) {
    Classification c;
    c.r = j.at("r").get<int>();
    c.alpha = j.at("alpha").get<int>();
    c.beta = j.at("beta").get<int>();
    c.indecomposables_exponent = c.r;
    c.category = j.at("category").get<std::string>();
    c.is_isolated_singularity = j.at("is_isolated_singularity").get<bool>();
    const Graph initial = parse_graph(j.at("graph").get<std::string>());
    std::string trace_text;
    for (const auto& line : j.at("trace")) trace_text += line.get<std::string>() + "\n";
    c.trace = make_trace(initial, parse_trace(trace_text));
    return c;
}

inline json point_scheme_to_json(const PointSchemeReport& rep) {
    json gens = json::array();
    for (const auto& t : rep.generators.to_vector())
        gens.push_back({t[0] + 1, t[1] + 1, t[2] + 1});
    return json{
        {"n", rep.n},
        {"generators", gens},
        {"ell", rep.ell},
        {"j_pairs", pairs_to_json(rep.j_pairs)},
        {"j_count", rep.j_count},
        {"iso_count", rep.iso_count},
        {"p1_facets", pairs_to_json(rep.p1_facets)},
        {"r", rep.r},
        {"bound", rep.bound},
        {"bound_holds", rep.bound_holds},
    };
}

inline PointSchemeReport point_scheme_from_json(const json& j) {
    PointSchemeReport rep;
    rep.n = j.at("n").get<int>();
    rep.generators = TripleSet(rep.n);
    for (const auto& t : j.at("generators"))
        rep.generators.insert(t.at(0).get<int>() - 1, t.at(1).get<int>() - 1,
                              t.at(2).get<int>() - 1);
    rep.ell = j.at("ell").get<int>();
    rep.j_pairs = pairs_from_json(j.at("j_pairs"));
    rep.j_count = j.at("j_count").get<int>();
    rep.iso_count = j.at("iso_count").get<int>();
    rep.p1_facets = pairs_from_json(j.at("p1_facets"));
    rep.r = j.at("r").get<int>();
    rep.bound = j.at("bound").get<std::uint64_t>();
    rep.bound_holds = j.at("bound_holds").get<bool>();
    return rep;
}

/// wall_time is intentionally left out so serialized reports are
/// byte-for-byte reproducible.
inline json verify_report_to_json(const VerifyReport& rep) {
    json failures = json::array();
    for (const Failure& f : rep.failures)
        failures.push_back({{"check", f.check}, {"detail", f.details}, {"graph", f.graph_text}});
    json by_check = json::object();
    for (const auto& [name, cnt] : rep.failures_by_check) by_check[name] = cnt;
    json out{
        {"n", rep.n},
        {"mode", rep.mode},
        {"graphs_checked", rep.graphs_checked},
        {"checks", rep.checks},
        {"failure_count", rep.failure_count},
        {"failures_by_check", by_check},
        {"failures", failures},
    };
    if (rep.mode == "random") {
        out["samples"] = rep.samples;
        out["seed"] = rep.seed;
    }
    return out;
}

inline VerifyReport verify_report_from_json(const json& j) {
    VerifyReport rep;
    rep.n = j.at("n").get<int>();
    rep.mode = j.at("mode").get<std::string>();
    rep.graphs_checked = j.at("graphs_checked").get<std::uint64_t>();
    for (const auto& c : j.at("checks")) rep.checks.push_back(c.get<std::string>());
    rep.failure_count = j.at("failure_count").get<std::uint64_t>();
    for (const auto& [name, cnt] : j.at("failures_by_check").items())
        rep.failures_by_check[name] = cnt.get<std::uint64_t>();
    for (const auto& f : j.at("failures"))
        rep.failures.push_back({f.at("graph").get<std::string>(), f.at("check").get<std::string>(),
                                f.at("detail").get<std::string>()});
    if (rep.mode == "random") {
        rep.samples = j.at("samples").get<std::uint64_t>();
        rep.seed = j.at("seed").get<std::uint64_t>();
    }
    return rep;
}

}  // namespace skewq
