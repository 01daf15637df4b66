#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "psc/rational.hpp"

namespace psc {

using QVector = std::vector<Rational>;

// Dense rational matrix, row-major. Small sizes only; every operation
// is exact.
class QMatrix {
public:
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static QMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QVector column(std::size_t j) const;
    QVector row(std::size_t i) const;

    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    QVector apply(const QVector& v) const;
    QMatrix operator-(const QMatrix& o) const;
    Rational trace() const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    // Stacks rows of `o` below this matrix (same column count).
    QMatrix stacked(const QMatrix& o) const;
    static QMatrix from_columns(const std::vector<QVector>& cols);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> a_;
};

// Nullspace basis by fraction-free (Bareiss) elimination: rows are
// scaled to integers, pivots are chosen scanning columns left to right
// and taking the first row with a nonzero entry, and back-substitution
// produces one basis vector per free column (free variable set to 1),
// emitted in ascending free-column order.
std::vector<QVector> kernel_basis(const QMatrix& m);

struct Rref {
    QMatrix mat;
    std::vector<std::size_t> pivot_cols;
};

// Reduced row echelon form with the same deterministic pivot rule.
Rref rref(QMatrix m);

std::size_t rank(const QMatrix& m);

// Solves B x = y for a full-column-rank B when a solution exists.
std::optional<QVector> solve_consistent(const QMatrix& b, const QVector& y);

// Characteristic polynomial det(tI - M), monic, returned as
// coefficients c[0..n] with c[n] = 1 (Faddeev-LeVerrier).
std::vector<Rational> char_poly(const QMatrix& m);

// All rational roots, with multiplicities, of a monic polynomial with
// rational coefficients. Exact; roots returned in increasing order.
std::vector<std::pair<Rational, int>> rational_roots_monic(const std::vector<Rational>& coeffs);

}  // namespace psc
