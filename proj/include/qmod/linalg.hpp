#pragma once

#include <optional>
#include <vector>

#include "qmod/matrix.hpp"

namespace qmod {

struct RowEchelonForm {
    Matrix reduced;
    std::vector<int> pivots;
};

// Reduced row-echelon form with pivot columns; rank = pivots.size().
inline RowEchelonForm rref(const Matrix& m) {
    Matrix a = m;
    const PrimeField& f = a.field();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int pivot_row = -1;
        for (int i = r; i < a.rows(); ++i)
            if (a(i, c) != 0) {
                pivot_row = i;
                break;
            }
        if (pivot_row < 0) continue;
        if (pivot_row != r)
            for (int j = 0; j < a.cols(); ++j) {
                const std::uint32_t t = a(r, j);
                a.set(r, j, a(pivot_row, j));
                a.set(pivot_row, j, t);
            }
        const std::uint32_t inv = f.inv(a(r, c));
        for (int j = 0; j < a.cols(); ++j) a.set(r, j, f.mul(a(r, j), inv));
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const std::uint32_t factor = a(i, c);
            for (int j = 0; j < a.cols(); ++j) a.set(i, j, f.sub(a(i, j), f.mul(factor, a(r, j))));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), std::move(pivots)};
}

inline int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

// Basis of the left null space {v : v*m = 0}, returned as rows.
// Row count is rows(m) - rank(m); rows are in canonical (RREF-derived) form.
inline Matrix kernel_basis(const Matrix& m) {
    const PrimeField& f = m.field();
    const auto [red, pivots] = rref(m.transposed());
    std::vector<bool> is_pivot(m.rows(), false);
    for (int p : pivots) is_pivot[p] = true;
    Matrix out(f, m.rows() - static_cast<int>(pivots.size()), m.rows());
    int at = 0;
    for (int free = 0; free < m.rows(); ++free) {
        if (is_pivot[free]) continue;
        out.set(at, free, 1 % f.modulus());
        for (std::size_t k = 0; k < pivots.size(); ++k) out.set(at, pivots[k], f.neg(red(static_cast<int>(k), free)));
        ++at;
    }
    return out;
}

// Solves x*a = b; absent when unsolvable. Shapes: a is m-by-n, b is k-by-n, x is k-by-m.
inline std::optional<Matrix> solve_left(const Matrix& a, const Matrix& b) {
    if (a.field() != b.field()) throw std::invalid_argument("solve_left: field mismatch");
    if (a.cols() != b.cols()) throw std::invalid_argument("solve_left: column count mismatch");
    const Matrix aug = hstack({a.transposed(), b.transposed()});
    const auto [red, pivots] = rref(aug);
    Matrix xt(a.field(), a.rows(), b.rows());
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        if (pivots[k] >= a.rows()) return std::nullopt;  // inconsistent system
        for (int j = 0; j < b.rows(); ++j) xt.set(pivots[k], j, red(static_cast<int>(k), a.rows() + j));
    }
    return xt.transposed();
}

inline bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) return std::nullopt;
    return solve_left(m, Matrix::identity(m.field(), m.rows()));
}

// A subspace of row vectors kept as a reduced (RREF) basis, supporting coset
// reduction, membership and incremental growth. The basis is canonical, so
// equal subspaces produce identical bases.
class RowSpace {
public:
    RowSpace(PrimeField field, int ambient) : basis_(field, 0, ambient) {}

    explicit RowSpace(const Matrix& generators) : basis_(generators.field(), 0, generators.cols()) {
        auto r = rref(generators);
        pivots_ = r.pivots;
        basis_ = Matrix(generators.field(), static_cast<int>(pivots_.size()), generators.cols());
        for (int i = 0; i < basis_.rows(); ++i) basis_.set_row(i, r.reduced.row(i));
    }

    int ambient() const { return basis_.cols(); }
    int rank() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    Matrix reduce(const Matrix& vectors) const {
        const PrimeField& f = basis_.field();
        Matrix v = vectors;
        for (int i = 0; i < v.rows(); ++i)
            for (int k = 0; k < basis_.rows(); ++k) {
                const std::uint32_t c = v(i, pivots_[k]);
                if (c == 0) continue;
                for (int j = 0; j < v.cols(); ++j) v.set(i, j, f.sub(v(i, j), f.mul(c, basis_(k, j))));
            }
        return v;
    }

    bool contains(const Matrix& vectors) const { return reduce(vectors).is_zero(); }

    // Coordinates of contained row vectors with respect to the basis.
    Matrix coordinates(const Matrix& vectors) const {
        if (!contains(vectors)) throw std::logic_error("RowSpace::coordinates: vector not in span");
        return vectors.selected_columns(pivots_);
    }

    // Adds one row vector; keeps the basis reduced. Returns true if the rank grew.
    bool insert(const Matrix& row) {
        const PrimeField& f = basis_.field();
        Matrix r = reduce(row);
        int lead = -1;
        for (int j = 0; j < r.cols(); ++j)
            if (r(0, j) != 0) {
                lead = j;
                break;
            }
        if (lead < 0) return false;
        r = r.scaled(f.inv(r(0, lead)));
        for (int k = 0; k < basis_.rows(); ++k) {
            const std::uint32_t c = basis_(k, lead);
            if (c == 0) continue;
            for (int j = 0; j < basis_.cols(); ++j)
                basis_.set(k, j, f.sub(basis_(k, j), f.mul(c, r(0, j))));
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < lead) ++pos;
        std::vector<Matrix> rows;
        rows.reserve(static_cast<std::size_t>(basis_.rows()) + 1);
        for (int k = 0; k < basis_.rows(); ++k) {
            if (static_cast<std::size_t>(k) == pos) rows.push_back(r);
            rows.push_back(basis_.row(k));
        }
        if (pos == static_cast<std::size_t>(basis_.rows())) rows.push_back(r);
        basis_ = vstack(rows);
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), lead);
        return true;
    }

    std::vector<int> complement() const {
        std::vector<bool> is_pivot(ambient(), false);
        for (int p : pivots_) is_pivot[p] = true;
        std::vector<int> out;
        for (int j = 0; j < ambient(); ++j)
            if (!is_pivot[j]) out.push_back(j);
        return out;
    }

private:
    Matrix basis_;
    std::vector<int> pivots_;
};

}  // namespace qmod
