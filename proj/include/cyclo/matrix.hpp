#ifndef CYCLO_MATRIX_HPP
#define CYCLO_MATRIX_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cyclo/errors.hpp"
#include "cyclo/scalar.hpp"

namespace cyclo {

/// Dense row-major matrix. The stored zero is the prototype used for new entries,
/// which matters for RatFn where zero carries the parameter count.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& zero)
        : rows_(rows), cols_(cols), zero_(zero), data_(rows * cols, zero) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one) {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    static Matrix diagonal(const std::vector<T>& d, const T& zero) {
        Matrix m(d.size(), d.size(), zero);
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_, zero_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    Matrix map(F&& f) const {
        Matrix r(rows_, cols_, zero_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = f(data_[k]);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!cyclo::is_zero(x)) return false;
        return true;
    }

    bool is_diagonal() const {
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (i != j && !cyclo::is_zero((*this)(i, j))) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!cyclo::is_zero(o.data_[k])) data_[k] += o.data_[k];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            if (!cyclo::is_zero(o.data_[k])) data_[k] -= o.data_[k];
        return *this;
    }

    Matrix& operator*=(const T& c) {
        for (auto& x : data_)
            if (!cyclo::is_zero(x)) x *= c;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& c) { return a *= c; }
    friend Matrix operator*(const T& c, Matrix a) { return a *= c; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw SizeMismatchError("matrix product of incompatible shapes");
        Matrix c(a.rows_, b.cols_, a.zero_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(i, k);
                if (cyclo::is_zero(x)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& y = b(k, j);
                    if (cyclo::is_zero(y)) continue;
                    c(i, j) += x * y;
                }
            }
        return c;
    }

    /// First (row, col) where the entries differ, if any.
    std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) return std::make_pair(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const T& x = (*this)(i, j);
                const T& y = o(i, j);
                bool zx = cyclo::is_zero(x), zy = cyclo::is_zero(y);
                if (zx && zy) continue;
                if (zx != zy || !(x == y)) return std::make_pair(i, j);
            }
        return std::nullopt;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return !a.first_difference(b).has_value(); }

    T trace() const {
        T t = zero_;
        for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
        return t;
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw SizeMismatchError("matrix sum of incompatible shapes");
    }

    std::size_t rows_ = 0, cols_ = 0;
    T zero_{};
    std::vector<T> data_;
};

/// Block-diagonal sum.
template <class T>
Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
    return r;
}

/// Kronecker product a (x) b.
template <class T>
Matrix<T> kronecker(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols(), a.zero());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (is_zero(a(i, j))) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!is_zero(b(k, l))) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
    return r;
}

/// Rank by Gaussian elimination over an exact field.
template <class T>
std::size_t rank(Matrix<T> a) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t p = r;
        while (p < a.rows() && is_zero(a(p, c))) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
        for (std::size_t i = r + 1; i < a.rows(); ++i) {
            if (is_zero(a(i, c))) continue;
            T f = a(i, c) / a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
        }
        ++r;
    }
    return r;
}

/// Inverse by Gauss-Jordan elimination; throws DivisionByZeroError when singular.
template <class T>
Matrix<T> inverse(Matrix<T> a, const T& one) {
    if (a.rows() != a.cols()) throw SizeMismatchError("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    Matrix<T> inv = Matrix<T>::identity(n, a.zero(), one);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && is_zero(a(p, c))) ++p;
        if (p == n) throw DivisionByZeroError("singular matrix");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const T piv = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            if (!is_zero(a(c, j))) a(c, j) /= piv;
            if (!is_zero(inv(c, j))) inv(c, j) /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || is_zero(a(i, c))) continue;
            const T f = a(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                if (!is_zero(a(c, j))) a(i, j) -= f * a(c, j);
                if (!is_zero(inv(c, j))) inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

}  // namespace cyclo

#endif
