#include "apolar/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace apolar {

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    t.row_labels_ = col_labels_;
    t.col_labels_ = row_labels_;
    t.order_ = order_;
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    std::vector<Rational> out(rows_, Rational(0));
    for (size_t r = 0; r < rows_; ++r) {
        Rational s(0);
        for (size_t c = 0; c < cols_; ++c)
            if (v[c] != 0 && at(r, c) != 0) s += at(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

namespace {

// Fraction-free forward elimination over the given column order. Returns the
// pivot columns (in processing order); the matrix is left in echelon form
// with exact integer entries.
std::vector<size_t> bareiss_echelon(std::vector<std::vector<Integer>>& m,
                                    const std::vector<size_t>& col_order) {
    const size_t rows = m.size();
    std::vector<size_t> pivots;
    if (rows == 0) return pivots;
    size_t row = 0;
    Integer prev(1);
    for (size_t cj : col_order) {
        if (row >= rows) break;
        size_t sel = row;
        while (sel < rows && m[sel][cj] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[row], m[sel]);
        const size_t ncols = m[row].size();
        // Every active row takes the Sylvester update so entries stay
        // (t+1)x(t+1) minors and the division by the previous pivot is exact.
        for (size_t i = row + 1; i < rows; ++i) {
            for (size_t k = 0; k < ncols; ++k) {
                if (k == cj) continue;
                m[i][k] = (m[i][k] * m[row][cj] - m[i][cj] * m[row][k]) / prev;
            }
            m[i][cj] = 0;
        }
        prev = m[row][cj];
        pivots.push_back(cj);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Integer>> to_integer_rows(const RationalMatrix& M) {
    std::vector<std::vector<Integer>> m(M.rows(), std::vector<Integer>(M.cols()));
    for (size_t r = 0; r < M.rows(); ++r) {
        Integer scale(1);
        for (size_t c = 0; c < M.cols(); ++c) {
            const Integer& den = M.at(r, c).get_den();
            if (den != 1) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), den.get_mpz_t());
        }
        for (size_t c = 0; c < M.cols(); ++c) {
            const Rational& q = M.at(r, c);
            m[r][c] = q.get_num() * (scale / q.get_den());
        }
    }
    return m;
}

} // namespace

long long integer_rank(std::vector<std::vector<Integer>>& m) {
    if (m.empty()) return 0;
    std::vector<size_t> cols(m[0].size());
    for (size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return static_cast<long long>(bareiss_echelon(m, cols).size());
}

long long RationalMatrix::rank() const {
    auto m = to_integer_rows(*this);
    return integer_rank(m);
}

std::vector<std::vector<Rational>> RationalMatrix::kernel_vectors() const {
    auto m = to_integer_rows(*this);
    // smallest-order columns first: labels are descending, walk right to left
    std::vector<size_t> col_order(cols_);
    for (size_t i = 0; i < cols_; ++i) col_order[i] = cols_ - 1 - i;
    std::vector<size_t> pivots = bareiss_echelon(m, col_order);

    std::vector<bool> is_pivot(cols_, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols_; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);

    std::vector<std::vector<Rational>> basis;
    basis.reserve(free_cols.size());
    for (size_t f : free_cols) {
        std::vector<Rational> v(cols_, Rational(0));
        v[f] = 1;
        for (size_t i = pivots.size(); i-- > 0;) {
            Rational s(0);
            for (size_t k = 0; k < cols_; ++k) {
                if (k == pivots[i] || v[k] == 0 || m[i][k] == 0) continue;
                s += Rational(m[i][k]) * v[k];
            }
            v[pivots[i]] = -s / Rational(m[i][pivots[i]]);
        }
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;

    // Reduced row echelon over the kernel coordinates, leftmost (largest
    // label) first. Generic inputs are already in this shape; degenerate
    // ones get fixed up here.
    size_t row = 0;
    for (size_t c = 0; c < cols_ && row < basis.size(); ++c) {
        size_t sel = row;
        while (sel < basis.size() && basis[sel][c] == 0) ++sel;
        if (sel == basis.size()) continue;
        std::swap(basis[row], basis[sel]);
        Rational inv = 1 / basis[row][c];
        for (size_t k = c; k < cols_; ++k)
            if (basis[row][k] != 0) basis[row][k] *= inv;
        for (size_t i = 0; i < basis.size(); ++i) {
            if (i == row || basis[i][c] == 0) continue;
            Rational factor = basis[i][c];
            for (size_t k = c; k < cols_; ++k)
                if (basis[row][k] != 0) basis[i][k] -= factor * basis[row][k];
        }
        ++row;
    }
    return basis;
}

std::string RationalMatrix::tsv() const {
    std::ostringstream os;
    os << ".";
    for (size_t c = 0; c < cols_; ++c)
        os << "\t" << (c < col_labels_.size() ? col_labels_[c].str() : "c" + std::to_string(c));
    os << "\n";
    for (size_t r = 0; r < rows_; ++r) {
        os << (r < row_labels_.size() ? row_labels_[r].str() : "r" + std::to_string(r));
        for (size_t c = 0; c < cols_; ++c) {
            const Rational& q = at(r, c);
            os << "\t" << num_string(q);
            if (q.get_den() != 1) os << "/" << den_string(q);
        }
        os << "\n";
    }
    return os.str();
}

} // namespace apolar
