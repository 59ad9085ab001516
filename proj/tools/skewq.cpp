#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "skewq/json_io.hpp"
#include "skewq/skewq.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInconsistency = 1;
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw skewq::parse_error(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string format_pair_set(const std::vector<std::pair<int, int>>& pairs) {
    std::string out = "{";
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (k) out += ",";
        out += "{" + std::to_string(pairs[k].first + 1) + "," +
               std::to_string(pairs[k].second + 1) + "}";
    }
    return out + "}";
}

std::string modules_string(int r) {
    if (r <= 62) return std::to_string(std::uint64_t{1} << r);
    return "2^" + std::to_string(r);
}

int cmd_analyze(const std::string& path, bool as_json) {
    const skewq::Graph g = skewq::parse_graph_or_epsilon(read_file(path));
    const skewq::Classification c = skewq::classify(g);
    if (as_json) {
        std::cout << skewq::classification_to_json(c).dump(2) << "\n";
    } else {
        std::cout << "r=" << c.r << "  alpha=" << c.alpha << "  beta=" << c.beta
                  << "  modules=" << modules_string(c.r) << "  category=" << c.category << "\n";
    }
    return kExitOk;
}

int cmd_reduce(const std::string& path, bool with_trace) {
    const skewq::Graph g = skewq::parse_graph_or_epsilon(read_file(path));
    const skewq::NormalForm nf = skewq::reduce_to_normal_form(g);
    std::cout << "G(" << nf.alpha << "," << nf.beta << ")  alpha=" << nf.alpha
              << "  beta=" << nf.beta << "\n";
    if (with_trace) std::cout << skewq::format_trace(nf.trace.steps);
    return kExitOk;
}

int cmd_pointscheme(const std::string& path, bool with_components, bool as_json) {
    const skewq::Graph g = skewq::parse_graph_or_epsilon(read_file(path));
    if (g.vertex_count() < 3) {
        std::cout << "warning: point scheme is degenerate for n < 3; ell reported as 0\n";
        const skewq::Classification c = skewq::classify(g);
        std::cout << "ell=0  J=" << format_pair_set(skewq::j_pairs(g))
                  << "  iso=" << skewq::isolated_vertices(g).size()
                  << "  bound=" << skewq::choose2(static_cast<std::uint64_t>(c.r) + 1)
                  << "  holds=true\n";
        return kExitOk;
    }
    const skewq::PointSchemeReport rep = skewq::point_scheme_report(g);
    if (as_json) {
        skewq::json j = skewq::point_scheme_to_json(rep);
        if (with_components) {
            skewq::json comps = skewq::json::array();
            for (const skewq::Facet& f : skewq::components(g)) {
                skewq::json facet = skewq::json::array();
                for (int v : f.vertices.to_vector()) facet.push_back(v + 1);
                comps.push_back({{"facet", facet}, {"dim", f.dimension}});
            }
            j["components"] = comps;
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }
    std::cout << "ell=" << rep.ell << "  J=" << format_pair_set(rep.j_pairs)
              << "  iso=" << rep.iso_count << "  bound=" << rep.bound
              << "  holds=" << (rep.bound_holds ? "true" : "false") << "\n";
    if (with_components) {
        const std::vector<skewq::Facet> comps = skewq::components(g);
        std::cout << "components (" << comps.size() << "):\n";
        for (const skewq::Facet& f : comps) {
            std::string vanishing;
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (f.vertices.contains(v)) continue;
                if (!vanishing.empty()) vanishing += ",";
                vanishing += "x_" + std::to_string(v + 1);
            }
            std::cout << "V(" << vanishing << ")  dim=" << f.dimension << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(int n, const std::string& suite_spec, std::uint64_t samples, std::uint64_t seed,
               int jobs, bool as_json) {
    const skewq::CheckSuite suite = skewq::CheckSuite::parse(suite_spec);
    const skewq::VerifyReport rep = samples > 0
                                        ? skewq::verify_random(n, samples, seed, suite, jobs)
                                        : skewq::verify_exhaustive(n, suite, jobs);
    std::cerr << "wall_time=" << rep.wall_time.count() << "s\n";
    if (as_json) {
        std::cout << skewq::verify_report_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << "n=" << rep.n << " mode=" << rep.mode;
        if (rep.mode == "random")
            std::cout << " samples=" << rep.samples << " seed=" << rep.seed;
        std::cout << " graphs=" << rep.graphs_checked << "\n";
        for (const std::string& name : rep.checks) {
            const std::uint64_t cnt = rep.failures_by_check.at(name);
            if (cnt == 0)
                std::cout << "ok " << name << "\n";
            else
                std::cout << "FAIL " << name << " count=" << cnt << "\n";
        }
        for (const skewq::Failure& f : rep.failures) {
            std::cout << "failure check=" << f.check << " detail=" << f.details << "\n"
                      << f.graph_text;
        }
        std::cout << "failures=" << rep.failure_count << "\n";
    }
    return rep.all_passed() ? kExitOk : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial classification of stable categories over (+/-1)-skew quadric "
                 "hypersurfaces"};
    app.require_subcommand(1);

    std::string analyze_input, reduce_input, ps_input;
    bool analyze_json = false, reduce_trace = false, ps_components = false, ps_json = false;
    int verify_n = 0, verify_jobs = 1;
    std::uint64_t verify_samples = 0, verify_seed = 0;
    std::string verify_suite = "all";
    bool verify_json = false;

    CLI::App* analyze = app.add_subcommand("analyze", "classify the stable category of a graph");
    analyze->add_option("input", analyze_input, "graph or epsilon file")->required();
    analyze->add_flag("--json", analyze_json, "emit a JSON report");

    CLI::App* reduce = app.add_subcommand("reduce", "reduce a graph to its normal form G(a,b)");
    reduce->add_option("input", reduce_input, "graph or epsilon file")->required();
    reduce->add_flag("--trace", reduce_trace, "print the operation trace");

    CLI::App* ps = app.add_subcommand("pointscheme", "Stanley-Reisner analysis of the point scheme");
    ps->add_option("input", ps_input, "graph or epsilon file")->required();
    ps->add_flag("--components", ps_components, "list all facets/components");
    ps->add_flag("--json", ps_json, "emit a JSON report");

    CLI::App* verify = app.add_subcommand("verify", "check the theorems over graph space");
    verify->add_option("--n", verify_n, "vertex count")->required();
    verify->add_option("--suite", verify_suite, "comma-separated check names, or 'all'");
    verify->add_option("--samples", verify_samples,
                       "random sample count (0 means exhaustive enumeration)");
    verify->add_option("--seed", verify_seed, "random seed");
    verify->add_option("--jobs", verify_jobs, "worker thread count");
    verify->add_flag("--json", verify_json, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kExitParse : kExitOk;
    }

    try {
        if (analyze->parsed()) return cmd_analyze(analyze_input, analyze_json);
        if (reduce->parsed()) return cmd_reduce(reduce_input, reduce_trace);
        if (ps->parsed()) return cmd_pointscheme(ps_input, ps_components, ps_json);
        if (verify->parsed())
            return cmd_verify(verify_n, verify_suite, verify_samples, verify_seed, verify_jobs,
                              verify_json);
    } catch (const skewq::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const skewq::cap_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const skewq::inconsistency_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kExitInconsistency;
    } catch (const skewq::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistency;
    }
    return kExitOk;
}
