#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qmod/gf.hpp"

namespace qmod {

// Dense matrix over GF(p), stored row-major. Vectors are rows and maps act on
// the right (v -> v*M), matching right-module actions. Matrices with zero rows
// or zero columns are first-class values; every operation must handle them.
class Matrix {
public:
    Matrix(PrimeField field, int rows, int cols)
        : field_(field), rows_(rows), cols_(cols), data_(checked_size(rows, cols), 0) {}

    static Matrix identity(PrimeField field, int n) {
        Matrix m(field, n, n);
        for (int i = 0; i < n; ++i) m.set(i, i, 1 % field.modulus());
        return m;
    }

    static Matrix from_rows(PrimeField field, const std::vector<std::vector<long long>>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        Matrix m(field, r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c)
                throw std::invalid_argument("Matrix::from_rows: ragged rows");
            for (int j = 0; j < c; ++j) m.set(i, j, field.reduce(rows[i][j]));
        }
        return m;
    }

    const PrimeField& field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    std::uint32_t operator()(int r, int c) const { return data_[index(r, c)]; }
    void set(int r, int c, std::uint32_t reduced_value) { data_[index(r, c)] = reduced_value; }
    void set_int(int r, int c, long long v) { data_[index(r, c)] = field_.reduce(v); }
    void add_at(int r, int c, std::uint32_t v) {
        data_[index(r, c)] = field_.add(data_[index(r, c)], v);
    }

    const std::vector<std::uint32_t>& data() const { return data_; }

    bool is_zero() const {
        for (std::uint32_t v : data_)
            if (v != 0) return false;
        return true;
    }

    Matrix operator+(const Matrix& o) const {
        require_same_shape(o, "operator+");
        Matrix r(field_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.add(data_[i], o.data_[i]);
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        require_same_shape(o, "operator-");
        Matrix r(field_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.sub(data_[i], o.data_[i]);
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (field_ != o.field_) throw std::invalid_argument("Matrix::operator*: field mismatch");
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix::operator*: shape mismatch");
        Matrix r(field_, rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const std::uint32_t a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j)
                    r.data_[static_cast<std::size_t>(i) * o.cols_ + j] = field_.add(
                        r.data_[static_cast<std::size_t>(i) * o.cols_ + j], field_.mul(a, o(k, j)));
            }
        return r;
    }

    Matrix scaled(std::uint32_t c) const {
        Matrix r(field_, rows_, cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = field_.mul(data_[i], c);
        return r;
    }

    Matrix negated() const { return scaled(field_.neg(1 % field_.modulus())); }

    Matrix transposed() const {
        Matrix r(field_, cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r.set(j, i, (*this)(i, j));
        return r;
    }

    Matrix row(int r) const {
        Matrix out(field_, 1, cols_);
        for (int j = 0; j < cols_; ++j) out.set(0, j, (*this)(r, j));
        return out;
    }

    void set_row(int r, const Matrix& row1xc) {
        if (row1xc.rows() != 1 || row1xc.cols() != cols_)
            throw std::invalid_argument("Matrix::set_row: shape mismatch");
        for (int j = 0; j < cols_; ++j) set(r, j, row1xc(0, j));
    }

    Matrix selected_columns(const std::vector<int>& cols) const {
        Matrix out(field_, rows_, static_cast<int>(cols.size()));
        for (int i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) out.set(i, static_cast<int>(j), (*this)(i, cols[j]));
        return out;
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "[";
        for (int i = 0; i < rows_; ++i) {
            os << "[";
            for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
            os << "]";
            if (i + 1 < rows_) os << ",";
        }
        os << "]";
        return os.str();
    }

private:
    static std::size_t checked_size(int rows, int cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
        return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    }

    std::size_t index(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("Matrix: index out of range");
        return static_cast<std::size_t>(r) * cols_ + c;
    }

    void require_same_shape(const Matrix& o, const char* op) const {
        if (field_ != o.field_ || rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument(std::string("Matrix::") + op + ": shape or field mismatch");
    }

    PrimeField field_;
    int rows_;
    int cols_;
    std::vector<std::uint32_t> data_;
};

inline Matrix vstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("vstack: empty block list");
    int rows = 0;
    const int cols = blocks[0].cols();
    for (const Matrix& b : blocks) {
        if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
        rows += b.rows();
    }
    Matrix out(blocks[0].field(), rows, cols);
    int at = 0;
    for (const Matrix& b : blocks)
        for (int i = 0; i < b.rows(); ++i, ++at)
            for (int j = 0; j < cols; ++j) out.set(at, j, b(i, j));
    return out;
}

inline Matrix hstack(const std::vector<Matrix>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("hstack: empty block list");
    int cols = 0;
    const int rows = blocks[0].rows();
    for (const Matrix& b : blocks) {
        if (b.rows() != rows) throw std::invalid_argument("hstack: row mismatch");
        cols += b.cols();
    }
    Matrix out(blocks[0].field(), rows, cols);
    int at = 0;
    for (const Matrix& b : blocks) {
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < b.cols(); ++j) out.set(i, at + j, b(i, j));
        at += b.cols();
    }
    return out;
}

}  // namespace qmod
