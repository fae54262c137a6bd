#pragma once

#include <initializer_list>
#include <vector>

#include "toriclink/numeric.hpp"

namespace toriclink {

// Dense storage. The matrices in this engine are small (at most a few
// hundred rows); exactness matters, asymptotics do not.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), d_(static_cast<std::size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw internal_error("matrix: negative shape");
    }
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = static_cast<int>(init.size());
        cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
        d_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : init) {
            if (static_cast<int>(row.size()) != cols_) throw internal_error("matrix: ragged init");
            for (const T& x : row) d_.push_back(x);
        }
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows, int cols) {
        Matrix m(static_cast<int>(rows.size()), cols);
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(rows[i].size()) != cols) throw internal_error("from_rows: ragged input");
            for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return d_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return d_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<T> row(int i) const {
        std::vector<T> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix mul(const Matrix& o) const {
        if (cols_ != o.rows_) throw internal_error("mul: shape mismatch");
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const T& b = o(k, j);
                    if (b != 0) r(i, j) += a * b;
                }
            }
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_) throw internal_error("apply: shape mismatch");
        std::vector<T> r(rows_);
        for (int i = 0; i < rows_; ++i) {
            T s = 0;
            for (int j = 0; j < cols_; ++j)
                if ((*this)(i, j) != 0 && v[j] != 0) s += (*this)(i, j) * v[j];
            r[i] = s;
        }
        return r;
    }

    bool is_zero() const {
        for (const T& x : d_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && d_ == o.d_; }

private:
    int rows_, cols_;
    std::vector<T> d_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

}  // namespace toriclink
