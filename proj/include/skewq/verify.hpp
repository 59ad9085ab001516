#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "skewq/io.hpp"
#include "skewq/point_scheme.hpp"

namespace skewq {

enum class Check {
    route_agreement,
    rank_formula,
    mutation_rank_invariance,
    relative_mutation_rank_invariance,
    ell_bound,
    ell_mutation_invariance,
    ell_closed_form_agreement,
    j_reduction_monotonicity,
    i_bound,
    involution_and_locality,
};

inline constexpr std::array<const char*, 10> kCheckNames = {
    "route_agreement",
    "rank_formula",
    "mutation_rank_invariance",
    "relative_mutation_rank_invariance",
    "ell_bound",
    "ell_mutation_invariance",
    "ell_closed_form_agreement",
    "j_reduction_monotonicity",
    "i_bound",
    "involution_and_locality",
};

inline const char* check_name(Check c) { return kCheckNames[static_cast<std::size_t>(c)]; }

struct CheckSuite {
    bool route_agreement = false;
    bool rank_formula = false;
    bool mutation_rank_invariance = false;
    bool relative_mutation_rank_invariance = false;
    bool ell_bound = false;
    bool ell_mutation_invariance = false;
    bool ell_closed_form_agreement = false;
    bool j_reduction_monotonicity = false;
    bool i_bound = false;
    bool involution_and_locality = false;

    static CheckSuite all() {
        CheckSuite s;
        for (std::size_t i = 0; i < kCheckNames.size(); ++i) s.set(static_cast<Check>(i), true);
        return s;
    }

    static CheckSuite single(Check c) {
        CheckSuite s;
        s.set(c, true);
        return s;
    }

    /// Parse "all" or a comma-separated list of check names.
    static CheckSuite parse(const std::string& names) {
        CheckSuite s;
        std::size_t pos = 0;
        bool any = false;
        while (pos <= names.size()) {
            std::size_t comma = names.find(',', pos);
            if (comma == std::string::npos) comma = names.size();
            std::string name = names.substr(pos, comma - pos);
            while (!name.empty() && name.front() == ' ') name.erase(name.begin());
            while (!name.empty() && name.back() == ' ') name.pop_back();
            if (!name.empty()) {
                any = true;
                if (name == "all") return all();
                bool known = false;
                for (std::size_t i = 0; i < kCheckNames.size(); ++i)
                    if (name == kCheckNames[i]) {
                        s.set(static_cast<Check>(i), true);
                        known = true;
                    }
                if (!known) throw precondition_error("unknown check: " + name);
            }
            pos = comma + 1;
        }
        if (!any) throw precondition_error("empty check suite");
        return s;
    }

    bool selected(Check c) const {
        switch (c) {
            case Check::route_agreement: return route_agreement;
            case Check::rank_formula: return rank_formula;
            case Check::mutation_rank_invariance: return mutation_rank_invariance;
            case Check::relative_mutation_rank_invariance: return relative_mutation_rank_invariance;
            case Check::ell_bound: return ell_bound;
            case Check::ell_mutation_invariance: return ell_mutation_invariance;
            case Check::ell_closed_form_agreement: return ell_closed_form_agreement;
            case Check::j_reduction_monotonicity: return j_reduction_monotonicity;
            case Check::i_bound: return i_bound;
            case Check::involution_and_locality: return involution_and_locality;
        }
        return false;
    }

    void set(Check c, bool value) {
        switch (c) {
            case Check::route_agreement: route_agreement = value; break;
            case Check::rank_formula: rank_formula = value; break;
            case Check::mutation_rank_invariance: mutation_rank_invariance = value; break;
            case Check::relative_mutation_rank_invariance: relative_mutation_rank_invariance = value; break;
            case Check::ell_bound: ell_bound = value; break;
            case Check::ell_mutation_invariance: ell_mutation_invariance = value; break;
            case Check::ell_closed_form_agreement: ell_closed_form_agreement = value; break;
            case Check::j_reduction_monotonicity: j_reduction_monotonicity = value; break;
            case Check::i_bound: i_bound = value; break;
            case Check::involution_and_locality: involution_and_locality = value; break;
        }
    }

    std::vector<Check> selected_checks() const {
        std::vector<Check> out;
        for (std::size_t i = 0; i < kCheckNames.size(); ++i)
            if (selected(static_cast<Check>(i))) out.push_back(static_cast<Check>(i));
        return out;
    }

    int count() const { return static_cast<int>(selected_checks().size()); }
};

struct CheckOutcome {
    bool pass = true;
    std::string details;
};

namespace detail {

inline int isolated_count(const Graph& g) {
    int c = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) ++c;
    return c;
}

inline CheckOutcome check_route_agreement(const Graph& g) {
    const NormalForm nf = reduce_to_normal_form(g);
    const int n = g.vertex_count();
    if (2 * nf.alpha + nf.beta != n || nf.beta < 1)
        return {false, "malformed normal form: alpha=" + std::to_string(nf.alpha) +
                           " beta=" + std::to_string(nf.beta)};
    const ReplayResult rep = replay(nf.trace);
    if (!(rep.graph == nf.trace.final_graph) || rep.two_points_steps != 0)
        return {false, "trace does not replay to the recorded final graph"};
    if (!(relabel(nf.trace.final_graph, nf.to_canonical) == canonical_disjoint(nf.alpha, nf.beta)))
        return {false, "final graph is not canonical under the reported bijection"};
    const int nul = nullity(bordered_matrix(g));
    if (nf.beta - 1 != nul)
        return {false, "beta-1=" + std::to_string(nf.beta - 1) +
                           " but nullity=" + std::to_string(nul)};
    return {};
}

inline CheckOutcome check_rank_formula(const Graph& g) {
    const NormalForm nf = reduce_to_normal_form(g);
    const int rk = rank(bordered_matrix(g));
    if (rk != 2 * nf.alpha + 2)
        return {false, "rank=" + std::to_string(rk) + " but 2*alpha+2=" +
                           std::to_string(2 * nf.alpha + 2)};
    return {};
}

inline CheckOutcome check_mutation_rank_invariance(const Graph& g) {
    const int base = rank(bordered_matrix(g));
    for (int v = 0; v < g.vertex_count(); ++v) {
        Graph h = g;
        mutate_inplace(h, v);
        const int rk = rank(bordered_matrix(h));
        if (rk != base)
            return {false, "mutation at " + std::to_string(v + 1) + " changed rank " +
                               std::to_string(base) + " -> " + std::to_string(rk)};
    }
    return {};
}

inline CheckOutcome check_relative_mutation_rank_invariance(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> iso;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) iso.push_back(v);
    if (iso.empty()) return {};
    const int base = rank(bordered_matrix(g));
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            bool witness = false;
            for (int w : iso)
                if (w != v && w != u) {
                    witness = true;
                    break;
                }
            if (!witness) continue;
            Graph h = g;
            relative_mutate_inplace(h, v, u);
            const int rk = rank(bordered_matrix(h));
            if (rk != base)
                return {false, "rmu " + std::to_string(v + 1) + " <- " + std::to_string(u + 1) +
                                   " changed rank " + std::to_string(base) + " -> " +
                                   std::to_string(rk)};
        }
    return {};
}

inline CheckOutcome check_ell_bound(const Graph& g) {
    if (g.vertex_count() < 3) return {};
    const int ell = count_p1_components(g);
    const int r = nullity(bordered_matrix(g));
    const std::uint64_t bound = choose2(static_cast<std::uint64_t>(r) + 1);
    if (static_cast<std::uint64_t>(ell) > bound)
        return {false, "ell=" + std::to_string(ell) + " exceeds bound " + std::to_string(bound) +
                           " at r=" + std::to_string(r)};
    return {};
}

inline CheckOutcome check_ell_mutation_invariance(const Graph& g) {
    if (g.vertex_count() < 3) return {};
    const int base = count_p1_components(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        Graph h = g;
        mutate_inplace(h, v);
        const int ell = count_p1_components(h);
        if (ell != base)
            return {false, "mutation at " + std::to_string(v + 1) + " changed ell " +
                               std::to_string(base) + " -> " + std::to_string(ell)};
    }
    return {};
}

inline CheckOutcome check_ell_closed_form_agreement(const Graph& g) {
    if (g.vertex_count() < 3 || isolated_count(g) == 0) return {};
    const int counted = count_p1_components(g);
    const int closed = ell_closed_form(g);
    if (counted != closed)
        return {false, "facet count " + std::to_string(counted) + " but closed form " +
                           std::to_string(closed)};
    return {};
}

inline CheckOutcome check_j_reduction_monotonicity(const Graph& g) {
    if (isolated_count(g) == 0) return {};
    const auto J = j_pairs(g);
    if (J.empty()) return {};
    const int u1 = J.front().first;
    int m = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        bool equal = true;
        for (int wi = 0; wi < g.words_per_row() && equal; ++wi)
            equal = g.row(u)[wi] == g.row(u1)[wi];
        if (equal) ++m;
    }
    const int j_before = static_cast<int>(J.size());
    const int i_before = isolated_count(g);
    const int ell_before = count_p1_components(g);

    const Graph h = j_reduction_step(g);
    const int j_after = static_cast<int>(j_pairs(h).size());
    const int i_after = isolated_count(h);
    const int ell_after = count_p1_components(h);

    if (j_after >= j_before)
        return {false, "j did not decrease: " + std::to_string(j_before) + " -> " +
                           std::to_string(j_after)};
    if (ell_after < ell_before)
        return {false, "ell decreased: " + std::to_string(ell_before) + " -> " +
                           std::to_string(ell_after)};
    if (i_after != i_before + m - 1)
        return {false, "i(G') != i(G)+m-1: " + std::to_string(i_after) + " vs " +
                           std::to_string(i_before + m - 1)};
    const long long expected = static_cast<long long>(j_before) -
                               static_cast<long long>(choose2(static_cast<std::uint64_t>(m))) +
                               static_cast<long long>(choose2(static_cast<std::uint64_t>(i_before + m - 1)));
    if (ell_after != expected)
        return {false, "ell identity failed: ell(G')=" + std::to_string(ell_after) +
                           " but j(G)-C(m,2)+C(i(G)+m-1,2)=" + std::to_string(expected)};
    return {};
}

inline CheckOutcome check_i_bound(const Graph& g) {
    const int n = g.vertex_count();
    const int beta = reduce_to_normal_form(g).beta;
    const std::uint64_t h = graph_hash(g);
    std::seed_seq ss{static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                     0x9e3779b9u};
    std::mt19937_64 rng(ss);
    for (int run = 0; run < 2; ++run) {
        Graph cur = g;
        const int length = 2 * n + 4;
        for (int step = 0; step < length; ++step) {
            const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            bool relative = n >= 2 && (rng() & 1);
            int u = -1;
            if (relative) {
                u = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
                if (u >= v) ++u;
                // category-preserving only with an isolated witness besides v, u
                bool witness = false;
                for (int w = 0; w < n && !witness; ++w)
                    witness = w != v && w != u && cur.degree(w) == 0;
                if (!witness) relative = false;
            }
            if (relative)
                relative_mutate_inplace(cur, v, u);
            else
                mutate_inplace(cur, v);
            const int iso = isolated_count(cur);
            if (iso > beta)
                return {false, "reached i=" + std::to_string(iso) + " above beta=" +
                                   std::to_string(beta)};
        }
    }
    return {};
}

inline CheckOutcome check_involution_and_locality(const Graph& g) {
    const int n = g.vertex_count();
    auto local_to = [&](const Graph& a, const Graph& b, int v) {
        const word_t bv = word_t{1} << (v % kWordBits);
        for (int w = 0; w < n; ++w) {
            if (w == v) continue;
            for (int wi = 0; wi < a.words_per_row(); ++wi) {
                word_t diff = a.row(w)[wi] ^ b.row(w)[wi];
                if (wi == v / kWordBits) diff &= ~bv;
                if (diff) return false;
            }
        }
        return true;
    };
    for (int v = 0; v < n; ++v) {
        Graph h = g;
        mutate_inplace(h, v);
        if (!local_to(g, h, v))
            return {false, "mutation at " + std::to_string(v + 1) + " touched a foreign edge"};
        mutate_inplace(h, v);
        if (!(h == g))
            return {false, "mutation at " + std::to_string(v + 1) + " is not an involution"};
    }
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            Graph h = g;
            relative_mutate_inplace(h, v, u);
            if (!local_to(g, h, v))
                return {false, "rmu " + std::to_string(v + 1) + " <- " + std::to_string(u + 1) +
                                   " touched a foreign edge"};
        }
    return {};
}

inline CheckOutcome run_check(Check c, const Graph& g) {
    switch (c) {
        case Check::route_agreement: return check_route_agreement(g);
        case Check::rank_formula: return check_rank_formula(g);
        case Check::mutation_rank_invariance: return check_mutation_rank_invariance(g);
        case Check::relative_mutation_rank_invariance:
            return check_relative_mutation_rank_invariance(g);
        case Check::ell_bound: return check_ell_bound(g);
        case Check::ell_mutation_invariance: return check_ell_mutation_invariance(g);
        case Check::ell_closed_form_agreement: return check_ell_closed_form_agreement(g);
        case Check::j_reduction_monotonicity: return check_j_reduction_monotonicity(g);
        case Check::i_bound: return check_i_bound(g);
        case Check::involution_and_locality: return check_involution_and_locality(g);
    }
    throw error("unreachable check");
}

}  // namespace detail

struct Failure {
    std::string graph_text;  // graph text format, for direct replay
    std::string check;
    std::string details;

    bool operator==(const Failure&) const = default;
};

/// At most this many failures are stored in a report (the earliest in
/// enumeration order); failure_count always reflects the true total.
inline constexpr std::size_t kMaxStoredFailures = 100;

struct VerifyReport {
    int n = 0;
    std::string mode;  // "exhaustive" or "random"
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::uint64_t graphs_checked = 0;
    std::vector<std::string> checks;
    std::vector<Failure> failures;
    std::uint64_t failure_count = 0;
    std::map<std::string, std::uint64_t> failures_by_check;
    std::chrono::duration<double> wall_time{0};

    bool all_passed() const { return failure_count == 0; }
};

namespace detail {

struct WorkerAccum {
    std::vector<Failure> stored;
    std::uint64_t count = 0;
    std::map<std::string, std::uint64_t> by_check;

    void record(const Graph& g, Check c, const std::string& details) {
        ++count;
        ++by_check[check_name(c)];
        if (stored.size() < kMaxStoredFailures)
            stored.push_back({format_graph(g), check_name(c), details});
    }
};

inline Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1) g.add_edge(i, j);
    return g;
}

template <typename GraphAt>
VerifyReport run_verification(int n, const CheckSuite& suite, int jobs, std::uint64_t total,
                              GraphAt graph_at) {
    if (suite.count() == 0) throw precondition_error("empty check suite");
    const std::vector<Check> selected = suite.selected_checks();

    VerifyReport report;
    report.n = n;
    report.graphs_checked = total;
    for (Check c : selected) {
        report.checks.push_back(check_name(c));
        report.failures_by_check[check_name(c)] = 0;
    }

    const auto t0 = std::chrono::steady_clock::now();
    if (jobs < 1) jobs = 1;
    if (static_cast<std::uint64_t>(jobs) > total && total > 0)
        jobs = static_cast<int>(total);

    std::vector<WorkerAccum> accums(static_cast<std::size_t>(jobs));
    auto worker = [&](int k) {
        const std::uint64_t lo = total * static_cast<std::uint64_t>(k) / static_cast<std::uint64_t>(jobs);
        const std::uint64_t hi =
            total * (static_cast<std::uint64_t>(k) + 1) / static_cast<std::uint64_t>(jobs);
        WorkerAccum& acc = accums[static_cast<std::size_t>(k)];
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            const Graph g = graph_at(idx);
            for (Check c : selected) {
                const CheckOutcome outcome = run_check(c, g);
                if (!outcome.pass) acc.record(g, c, outcome.details);
            }
        }
    };

    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(jobs));
        for (int k = 0; k < jobs; ++k) threads.emplace_back(worker, k);
        for (std::thread& t : threads) t.join();
    }

    for (const WorkerAccum& acc : accums) {
        report.failure_count += acc.count;
        for (const auto& [name, cnt] : acc.by_check) report.failures_by_check[name] += cnt;
        for (const Failure& f : acc.stored)
            if (report.failures.size() < kMaxStoredFailures) report.failures.push_back(f);
    }
    report.wall_time = std::chrono::steady_clock::now() - t0;
    return report;
}

}  // namespace detail

/// Run the selected checks on every graph on n vertices (all 2^C(n,2) edge
/// subsets).  Reports are deterministic at any parallelism level apart from
/// wall_time.
inline VerifyReport verify_exhaustive(int n, const CheckSuite& suite, int jobs = 1) {
    if (n < 1) throw precondition_error("verification needs at least one vertex");
    if (n > 8) throw cap_error("exhaustive verification is capped at n <= 8, got n=" +
                               std::to_string(n));
    const std::uint64_t total = std::uint64_t{1} << choose2(static_cast<std::uint64_t>(n));
    VerifyReport report = detail::run_verification(
        n, suite, jobs, total,
        [n](std::uint64_t mask) { return detail::graph_from_edge_mask(n, mask); });
    report.mode = "exhaustive";
    return report;
}

/// Run the selected checks on `samples` uniform random edge subsets.
/// Deterministic given the seed, at any parallelism level.
inline VerifyReport verify_random(int n, std::uint64_t samples, std::uint64_t seed,
                                  const CheckSuite& suite, int jobs = 1) {
    if (n < 1) throw precondition_error("verification needs at least one vertex");
    if (n > 64) throw cap_error("random verification is capped at n <= 64, got n=" +
                                std::to_string(n));
    auto graph_at = [n, seed](std::uint64_t idx) {
        std::seed_seq ss{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32)};
        std::mt19937_64 rng(ss);
        Graph g(n);
        word_t buf = 0;
        int left = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (left == 0) {
                    buf = rng();
                    left = kWordBits;
                }
                if (buf & 1) g.add_edge(i, j);
                buf >>= 1;
                --left;
            }
        return g;
    };
    VerifyReport report = detail::run_verification(n, suite, jobs, samples, graph_at);
    report.mode = "random";
    report.samples = samples;
    report.seed = seed;
    return report;
}

/// Greedily remove vertices while the given failure persists; the result is
/// a locally minimal failing witness.
inline Graph minimize_failure(const Graph& g, const std::function<bool(const Graph&)>& fails) {
    if (!fails(g)) throw precondition_error("graph does not fail the check");
    Graph cur = g;
    bool improved = true;
    while (improved && cur.vertex_count() >= 2) {
        improved = false;
        for (int v = 0; v < cur.vertex_count(); ++v) {
            const Graph smaller =
                remove_vertices(cur, VertexSet(cur.vertex_count(), {v})).graph;
            if (fails(smaller)) {
                cur = smaller;
                improved = true;
                break;
            }
        }
    }
    return cur;
}

inline Graph minimize_failure(const Graph& g, const std::string& check) {
    const CheckSuite suite = CheckSuite::parse(check);
    const std::vector<Check> selected = suite.selected_checks();
    if (selected.size() != 1) throw precondition_error("minimize_failure needs a single check");
    const Check c = selected.front();
    return minimize_failure(g, [c](const Graph& h) { return !detail::run_check(c, h).pass; });
}

}  // namespace skewq
