#pragma once

#include <string>
#include <vector>

#include "skewq/graph.hpp"

namespace skewq {

/// Dense matrix over GF(2) with bit-packed rows.
class BitMatrix {
public:
    BitMatrix() = default;

    BitMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), words_(words_for_bits(cols)),
          data_(static_cast<std::size_t>(rows) * words_, 0) {
        if (rows < 0 || cols < 0) throw precondition_error("negative matrix dimension");
    }

    static BitMatrix identity(int n) {
        BitMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int words_per_row() const { return words_; }

    bool get(int r, int c) const {
        check(r, c);
        return (row(r)[c / kWordBits] >> (c % kWordBits)) & 1u;
    }

    void set(int r, int c, bool value) {
        check(r, c);
        const word_t bit = word_t{1} << (c % kWordBits);
        if (value)
            row_mut(r)[c / kWordBits] |= bit;
        else
            row_mut(r)[c / kWordBits] &= ~bit;
    }

    const word_t* row(int r) const { return data_.data() + static_cast<std::size_t>(r) * words_; }
    word_t* row_mut(int r) { return data_.data() + static_cast<std::size_t>(r) * words_; }

    bool operator==(const BitMatrix&) const = default;

private:
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw precondition_error("matrix index out of range");
    }

    int rows_ = 0;
    int cols_ = 0;
    int words_ = 0;
    std::vector<word_t> data_;
};

/// n-by-n adjacency matrix of the graph over GF(2): zero diagonal, entry
/// (i, j) = 1 exactly when ij is an edge.
inline BitMatrix adjacency_matrix(const Graph& g) {
    const int n = g.vertex_count();
    BitMatrix m(n, n);
    for (auto [i, j] : edges(g)) {
        m.set(i, j, true);
        m.set(j, i, true);
    }
    return m;
}

/// Adjacency matrix of the graph extended by one extra vertex joined to all
/// others: the adjacency block in the upper left, an all-ones border row and
/// column, and 0 in the corner.
inline BitMatrix bordered_matrix(const Graph& g) {
    const int n = g.vertex_count();
    BitMatrix m(n + 1, n + 1);
    for (auto [i, j] : edges(g)) {
        m.set(i, j, true);
        m.set(j, i, true);
    }
    for (int i = 0; i < n; ++i) {
        m.set(i, n, true);
        m.set(n, i, true);
    }
    return m;
}

namespace detail {

inline int first_set_bit(const std::vector<word_t>& row) {
    for (std::size_t wi = 0; wi < row.size(); ++wi)
        if (row[wi]) return static_cast<int>(wi) * kWordBits + std::countr_zero(row[wi]);
    return -1;
}

}  // namespace detail

/// Row rank over GF(2) by forward elimination with first-set-bit pivoting.
/// Works on a scratch copy; the input is not modified.
inline int rank(const BitMatrix& m) {
    const int words = m.words_per_row();
    std::vector<std::vector<word_t>> basis;
    std::vector<int> leads;
    std::vector<word_t> cur(static_cast<std::size_t>(words));
    for (int r = 0; r < m.rows(); ++r) {
        std::copy(m.row(r), m.row(r) + words, cur.begin());
        for (std::size_t b = 0; b < basis.size(); ++b) {
            const int lead = leads[b];
            if ((cur[static_cast<std::size_t>(lead / kWordBits)] >> (lead % kWordBits)) & 1u)
                for (int w = 0; w < words; ++w) cur[static_cast<std::size_t>(w)] ^= basis[b][static_cast<std::size_t>(w)];
        }
        const int lead = detail::first_set_bit(cur);
        if (lead >= 0) {
            leads.push_back(lead);
            basis.push_back(cur);
        }
    }
    return static_cast<int>(basis.size());
}

inline int nullity(const BitMatrix& m) { return m.cols() - rank(m); }

/// The kernel over GF(2) has 2^result elements; the exponent is returned so
/// the count never overflows.
inline int kernel_size_exponent(const BitMatrix& m) { return nullity(m); }

/// Basis of the right kernel, one vector per row.  Row count equals the
/// nullity.
inline BitMatrix kernel_basis(const BitMatrix& m) {
    const int rows = m.rows(), cols = m.cols(), words = m.words_per_row();

    // Gauss-Jordan elimination column by column.
    std::vector<std::vector<word_t>> work(static_cast<std::size_t>(rows),
                                          std::vector<word_t>(static_cast<std::size_t>(words)));
    for (int r = 0; r < rows; ++r) std::copy(m.row(r), m.row(r) + words, work[static_cast<std::size_t>(r)].begin());

    auto bit = [&](int r, int c) -> bool {
        return (work[static_cast<std::size_t>(r)][static_cast<std::size_t>(c / kWordBits)] >> (c % kWordBits)) & 1u;
    };
    std::vector<int> pivot_row_of_col(static_cast<std::size_t>(cols), -1);
    int next_row = 0;
    for (int c = 0; c < cols && next_row < rows; ++c) {
        int found = -1;
        for (int r = next_row; r < rows; ++r)
            if (bit(r, c)) {
                found = r;
                break;
            }
        if (found < 0) continue;
        std::swap(work[static_cast<std::size_t>(found)], work[static_cast<std::size_t>(next_row)]);
        for (int r = 0; r < rows; ++r) {
            if (r == next_row || !bit(r, c)) continue;
            for (int w = 0; w < words; ++w)
                work[static_cast<std::size_t>(r)][static_cast<std::size_t>(w)] ^=
                    work[static_cast<std::size_t>(next_row)][static_cast<std::size_t>(w)];
        }
        pivot_row_of_col[static_cast<std::size_t>(c)] = next_row;
        ++next_row;
    }

    std::vector<int> free_cols;
    for (int c = 0; c < cols; ++c)
        if (pivot_row_of_col[static_cast<std::size_t>(c)] < 0) free_cols.push_back(c);

    BitMatrix basis(static_cast<int>(free_cols.size()), cols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const int f = free_cols[k];
        basis.set(static_cast<int>(k), f, true);
        for (int c = 0; c < cols; ++c) {
            const int pr = pivot_row_of_col[static_cast<std::size_t>(c)];
            if (pr >= 0 && bit(pr, f)) basis.set(static_cast<int>(k), c, true);
        }
    }
    return basis;
}

/// Debug rendering: one row per line, '0'/'1' characters.
inline std::string to_debug_string(const BitMatrix& m) {
    std::string out;
    out.reserve(static_cast<std::size_t>(m.rows()) * (static_cast<std::size_t>(m.cols()) + 1));
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) out.push_back(m.get(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

}  // namespace skewq
