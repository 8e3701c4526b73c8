#ifndef SPECWALK_MATRIX_HPP
#define SPECWALK_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "specwalk/errors.hpp"

namespace specwalk {

/// Dense row-major matrix over an arbitrary arithmetic type (double,
/// mpz_class, mpq_class). Just storage plus the handful of operations the
/// library needs; no expression templates, no views.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, const T& fill = T())
        : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const {
        return data_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Mat transposed() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
        Mat r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& v = (*this)(i, k);
                if (v == T(0)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }

    Mat operator+(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("matrix sum shape mismatch");
        Mat r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
        return r;
    }

    Mat operator-(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("matrix difference shape mismatch");
        Mat r = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
        return r;
    }

    std::vector<T> operator*(const std::vector<T>& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<T> y(rows_, T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) y[i] += (*this)(i, j) * x[j];
        return y;
    }

    /// Submatrix with the given rows and columns, in the given order.
    Mat select(const std::vector<int>& rs, const std::vector<int>& cs) const {
        Mat r(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
        for (std::size_t i = 0; i < rs.size(); ++i)
            for (std::size_t j = 0; j < cs.size(); ++j) r(static_cast<int>(i), static_cast<int>(j)) = (*this)(rs[i], cs[j]);
        return r;
    }

    const std::vector<T>& raw() const { return data_; }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

}  // namespace specwalk

#endif
