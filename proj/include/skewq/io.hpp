#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "skewq/graph.hpp"
#include "skewq/mutation.hpp"

namespace skewq {

namespace detail {

/// Content lines with 1-based line numbers; '#' comments and blank lines are
/// dropped.
inline std::vector<std::pair<int, std::string>> content_lines(std::istream& in) {
    std::vector<std::pair<int, std::string>> out;
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string tok;
        if (probe >> tok) out.emplace_back(no, line);
    }
    return out;
}

inline int parse_int_token(const std::string& tok, int line_no, const char* what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw parse_error(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    }
    if (pos != tok.size())
        throw parse_error(line_no, std::string("expected ") + what + ", got '" + tok + "'");
    return value;
}

}  // namespace detail

/// Graph text format: first content line `n <count>`, then `e <i> <j>` lines
/// with 1 <= i < j <= n.  Blank lines and `#` comments are ignored.
inline Graph parse_graph(std::istream& in) {
    const auto lines = detail::content_lines(in);
    if (lines.empty()) throw parse_error(1, "empty input, expected 'n <count>'");

    auto header = std::istringstream(lines.front().second);
    const int header_line = lines.front().first;
    std::string key, extra;
    int n = 0;
    if (!(header >> key) || key != "n")
        throw parse_error(header_line, "expected 'n <count>' header");
    std::string ntok;
    if (!(header >> ntok)) throw parse_error(header_line, "expected a vertex count after 'n'");
    n = detail::parse_int_token(ntok, header_line, "a vertex count");
    if (n < 0) throw parse_error(header_line, "vertex count must be non-negative");
    if (header >> extra) throw parse_error(header_line, "trailing token '" + extra + "'");

    Graph g(n);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const int line_no = lines[k].first;
        std::istringstream ls(lines[k].second);
        std::string tag;
        ls >> tag;
        if (tag != "e")
            throw parse_error(line_no, "expected 'e <i> <j>', got '" + tag + "'");
        std::string ti, tj;
        if (!(ls >> ti >> tj)) throw parse_error(line_no, "expected two vertex labels after 'e'");
        const int i = detail::parse_int_token(ti, line_no, "a vertex label");
        const int j = detail::parse_int_token(tj, line_no, "a vertex label");
        if (ls >> extra) throw parse_error(line_no, "trailing token '" + extra + "'");
        if (i < 1 || j < 1 || i > n || j > n)
            throw parse_error(line_no, "vertex label out of range 1.." + std::to_string(n));
        if (i >= j) throw parse_error(line_no, "edge endpoints must satisfy i < j");
        g.add_edge(i - 1, j - 1);
    }
    return g;
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline std::string format_graph(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (auto [i, j] : edges(g))
        out += "e " + std::to_string(i + 1) + " " + std::to_string(j + 1) + "\n";
    return out;
}

/// Epsilon text format: n content lines of n space-separated `+1`/`-1`
/// tokens.
inline EpsilonMatrix parse_epsilon(std::istream& in) {
    const auto lines = detail::content_lines(in);
    if (lines.empty()) throw parse_error(1, "empty input, expected sign rows");

    std::vector<std::vector<int>> rows;
    for (const auto& [line_no, text] : lines) {
        std::istringstream ls(text);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            if (tok == "+1")
                row.push_back(1);
            else if (tok == "-1")
                row.push_back(-1);
            else
                throw parse_error(line_no, "expected '+1' or '-1', got '" + tok + "'");
        }
        rows.push_back(std::move(row));
    }
    const std::size_t n = rows.front().size();
    if (rows.size() != n)
        throw parse_error(lines.back().first,
                          "expected " + std::to_string(n) + " rows of " + std::to_string(n) +
                              " signs, got " + std::to_string(rows.size()) + " rows");
    std::vector<int> entries;
    entries.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n)
            throw parse_error(lines[r].first, "expected " + std::to_string(n) + " signs in row");
        for (int s : rows[r]) entries.push_back(s);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (entries[i * n + i] != 1)
            throw parse_error(lines[i].first, "diagonal entry must be +1");
        for (std::size_t j = i + 1; j < n; ++j)
            if (entries[i * n + j] != entries[j * n + i])
                throw parse_error(lines[j].first, "sign matrix is not symmetric");
    }
    return EpsilonMatrix::from_entries(static_cast<int>(n), entries);
}

inline EpsilonMatrix parse_epsilon(const std::string& text) {
    std::istringstream in(text);
    return parse_epsilon(in);
}

inline std::string format_epsilon(const EpsilonMatrix& e) {
    std::string out;
    for (int i = 0; i < e.size(); ++i) {
        for (int j = 0; j < e.size(); ++j) {
            if (j) out += " ";
            out += e.sign(i, j) == 1 ? "+1" : "-1";
        }
        out += "\n";
    }
    return out;
}

/// Auto-detection: input whose first non-comment token is `n` parses as a
/// graph, anything else as a sign matrix.
inline bool looks_like_graph_text(const std::string& text) {
    std::istringstream in(text);
    const auto lines = detail::content_lines(in);
    if (lines.empty()) return true;
    std::istringstream first(lines.front().second);
    std::string tok;
    first >> tok;
    return tok == "n";
}

inline Graph parse_graph_or_epsilon(const std::string& text) {
    if (looks_like_graph_text(text)) return parse_graph(text);
    return graph_from_epsilon(parse_epsilon(text));
}

/// Trace text format, one step per line, vertices 1-based and referring to
/// labels at application time:
///   mu <v>
///   rmu <v> <- <u>
///   knoerrer <v> <w>
///   twopoints <removed> <kept>
inline std::string format_operation(const Operation& op) {
    switch (op.kind) {
        case OpKind::Mutate:
            return "mu " + std::to_string(op.v + 1);
        case OpKind::RelativeMutate:
            return "rmu " + std::to_string(op.v + 1) + " <- " + std::to_string(op.u + 1);
        case OpKind::Knoerrer:
            return "knoerrer " + std::to_string(op.v + 1) + " " + std::to_string(op.u + 1);
        case OpKind::TwoPoints:
            return "twopoints " + std::to_string(op.v + 1) + " " + std::to_string(op.u + 1);
    }
    throw error("unreachable operation kind");
}

inline std::string format_trace(const std::vector<TraceStep>& steps) {
    std::string out;
    for (const TraceStep& s : steps) out += format_operation(s.op) + "\n";
    return out;
}

inline std::vector<Operation> parse_trace(const std::string& text) {
    std::istringstream in(text);
    std::vector<Operation> ops;
    for (const auto& [line_no, line] : detail::content_lines(in)) {
        std::istringstream ls(line);
        std::string tag, extra;
        ls >> tag;
        auto read_vertex = [&](const char* what) {
            std::string tok;
            if (!(ls >> tok)) throw parse_error(line_no, std::string("expected ") + what);
            const int v = detail::parse_int_token(tok, line_no, what);
            if (v < 1) throw parse_error(line_no, "vertex labels are 1-based");
            return v - 1;
        };
        if (tag == "mu") {
            const int v = read_vertex("a vertex label");
            ops.push_back(Operation::make_mutate(v));
        } else if (tag == "rmu") {
            const int v = read_vertex("a vertex label");
            std::string arrow;
            if (!(ls >> arrow) || arrow != "<-")
                throw parse_error(line_no, "expected '<-' in rmu step");
            const int u = read_vertex("a vertex label");
            ops.push_back(Operation::make_relative_mutate(v, u));
        } else if (tag == "knoerrer") {
            const int v = read_vertex("a vertex label");
            const int w = read_vertex("a vertex label");
            ops.push_back(Operation::make_knoerrer(v, w));
        } else if (tag == "twopoints") {
            const int v = read_vertex("a vertex label");
            const int w = read_vertex("a vertex label");
            ops.push_back(Operation::make_two_points(v, w));
        } else {
            throw parse_error(line_no, "unknown step '" + tag + "'");
        }
        if (ls >> extra) throw parse_error(line_no, "trailing token '" + extra + "'");
    }
    return ops;
}

}  // namespace skewq
