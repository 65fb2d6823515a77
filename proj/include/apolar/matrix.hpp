#ifndef APOLAR_MATRIX_HPP
#define APOLAR_MATRIX_HPP

#include <string>
#include <vector>

#include "apolar/monomial.hpp"
#include "apolar/rational.hpp"

namespace apolar {

/// Dense matrix of exact rationals with monomial row/column labels, both
/// sorted descending in a fixed order. Columns index the "unknown" monomials
/// so kernel vectors read off directly as polynomials.
class RationalMatrix {
public:
    RationalMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    RationalMatrix(std::vector<Monomial> row_labels, std::vector<Monomial> col_labels,
                   MonomialOrder order)
        : rows_(row_labels.size()),
          cols_(col_labels.size()),
          a_(rows_ * cols_, Rational(0)),
          row_labels_(std::move(row_labels)),
          col_labels_(std::move(col_labels)),
          order_(order) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const std::vector<Monomial>& row_labels() const { return row_labels_; }
    const std::vector<Monomial>& col_labels() const { return col_labels_; }
    const MonomialOrder& order() const { return order_; }

    Rational& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
    const Rational& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

    RationalMatrix transposed() const;

    long long rank() const;

    /// Exact kernel basis in column coordinates. Fraction-free forward
    /// elimination with pivots taken in the smallest-order columns first
    /// (labels are descending, so elimination walks right to left), followed
    /// by rational back-substitution. A final row reduction of the kernel
    /// coordinates, leftmost columns first, guarantees pairwise distinct
    /// leading coordinates with unit leading entry even on degenerate input.
    /// Vectors come back sorted by leading coordinate, largest first.
    std::vector<std::vector<Rational>> kernel_vectors() const;

    /// Multiply by a coordinate vector (length cols).
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    /// Tab-separated dump, labels in the first row/column, entries as
    /// "num/den".
    std::string tsv() const;

private:
    size_t rows_, cols_;
    std::vector<Rational> a_;
    std::vector<Monomial> row_labels_, col_labels_;
    MonomialOrder order_{OrderKind::DegRevLex};
};

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
/// The matrix is consumed.
long long integer_rank(std::vector<std::vector<Integer>>& m);

} // namespace apolar

#endif
