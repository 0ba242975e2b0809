#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace qcusp::linalg {

// Dense matrix over an exact field element type F.  F needs +, -, *, unary -,
// is_zero(), inverse() and a default constructor giving zero.  Everything here
// is plain fraction-free-less Gaussian elimination; fine at the scales we use.
template <class F>
struct Dense {
    int rows = 0, cols = 0;
    std::vector<F> a;

    Dense() = default;
    Dense(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    F& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const F& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Reduces in place and returns the rank.  Pivots are only sought in the first
// pivot_cols columns (all columns by default); elimination always spans the
// full width, so augmented blocks get carried along without ever pivoting.
template <class F>
int row_echelon(Dense<F>& m, int pivot_cols = -1) {
    const int limit = pivot_cols < 0 ? m.cols : pivot_cols;
    int rank = 0;
    for (int col = 0; col < limit && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (!m.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int c = col; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        F inv = m.at(rank, col).inverse();
        for (int c = col; c < m.cols; ++c) m.at(rank, c) = m.at(rank, c) * inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            F f = m.at(r, col);
            for (int c = col; c < m.cols; ++c) m.at(r, c) = m.at(r, c) - f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

template <class F>
int rank(Dense<F> m) { return row_echelon(m); }

// Inverse of a square matrix; nullopt when singular.
template <class F>
std::optional<Dense<F>> invert(const Dense<F>& m) {
    if (m.rows != m.cols) throw std::invalid_argument("invert wants a square matrix");
    int n = m.rows;
    Dense<F> aug(n, 2 * n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = F(1);
    }
    if (row_echelon(aug, n) != n) return std::nullopt;
    Dense<F> inv(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) inv.at(r, c) = aug.at(r, n + c);
    return inv;
}

// Solves A x = b (A given row-wise, possibly overdetermined).  Returns any
// solution, or nullopt if the system is inconsistent.
template <class F>
std::optional<std::vector<F>> solve(Dense<F> m, std::vector<F> b) {
    if (static_cast<int>(b.size()) != m.rows) throw std::invalid_argument("solve: size mismatch");
    Dense<F> aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[r];
    }
    row_echelon(aug, m.cols);
    // Inconsistent iff some row reads 0 ... 0 | nonzero.
    std::vector<F> x(m.cols, F(0));
    for (int r = 0; r < m.rows; ++r) {
        int lead = -1;
        for (int c = 0; c < m.cols; ++c)
            if (!aug.at(r, c).is_zero()) { lead = c; break; }
        if (lead < 0) {
            if (!aug.at(r, m.cols).is_zero()) return std::nullopt;
            continue;
        }
        x[lead] = aug.at(r, m.cols);  // row-reduced: pivot is 1, others cleared
    }
    return x;
}

}  // namespace qcusp::linalg
