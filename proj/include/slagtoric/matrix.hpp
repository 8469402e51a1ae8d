#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "slagtoric/rational.hpp"

namespace slag {

// Dense row-major matrix over an exact scalar (Int or Rat). Deliberately
// small: the toolkit works at desk scale and favours clarity over speed.
template <typename T>
class Mat {
  public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Mat identity(size_t n) {
        Mat m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(size_t i, size_t j) {
        check(i, j);
        return data_[i * cols_ + j];
    }
    const T& operator()(size_t i, size_t j) const {
        check(i, j);
        return data_[i * cols_ + j];
    }

    std::vector<T> row(size_t i) const {
        check(i, 0);
        return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
    }
    std::vector<T> col(size_t j) const {
        std::vector<T> out(rows_);
        for (size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }
    void set_row(size_t i, const std::vector<T>& v) {
        if (v.size() != cols_) throw std::invalid_argument("row size mismatch");
        for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
    }
    void set_col(size_t j, const std::vector<T>& v) {
        if (v.size() != rows_) throw std::invalid_argument("col size mismatch");
        for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    void swap_rows(size_t a, size_t b) {
        for (size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(size_t a, size_t b) {
        for (size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    static Mat from_columns(const std::vector<std::vector<T>>& cols) {
        if (cols.empty()) return Mat();
        Mat m(cols[0].size(), cols.size());
        for (size_t j = 0; j < cols.size(); ++j) m.set_col(j, cols[j]);
        return m;
    }
    static Mat from_rows(const std::vector<std::vector<T>>& rows) {
        if (rows.empty()) return Mat();
        Mat m(rows.size(), rows[0].size());
        for (size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
        return m;
    }

    bool operator==(const Mat&) const = default;

  private:
    void check(size_t i, size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index");
    }

    size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <typename T>
Mat<T> operator*(const Mat<T>& a, const Mat<T>& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    Mat<T> c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const T& aik = a(i, k);
            if (aik == 0) continue;
            for (size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <typename T>
std::vector<T> operator*(const Mat<T>& a, const std::vector<T>& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(a.rows());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * v[j];
    return out;
}

RatMat to_rat(const IntMat& m);

// Exact determinant (square input required).
Rat det(const RatMat& m);
Int det(const IntMat& m);

size_t rank(const RatMat& m);

// Exact inverse; nullopt when singular.
std::optional<RatMat> inverse(const RatMat& m);

// Solves a x = b exactly; nullopt when inconsistent. For underdetermined
// systems returns one particular solution (free variables set to zero).
std::optional<RatVec> solve(const RatMat& a, const RatVec& b);

// dot products
template <typename T>
T dot(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    T s{};
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

template <typename T>
std::vector<T> vadd(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vadd: size mismatch");
    std::vector<T> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

template <typename T>
std::vector<T> vsub(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vsub: size mismatch");
    std::vector<T> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

template <typename T, typename S>
std::vector<T> vscale(const S& c, const std::vector<T>& a) {
    std::vector<T> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = T(c * a[i]);
    return out;
}

template <typename T>
bool is_zero(const std::vector<T>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace slag
