#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "qcv/rational.hpp"

namespace qcv {

// Dense square-friendly matrix over an exact or floating scalar.
template <typename T>
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(std::size_t rows, std::size_t cols, T init = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, init) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Mat operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }
  Mat operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }
  Mat operator-() const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
  }
  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }
  Mat operator*(const T& s) const {
    Mat r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] * s;
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  // <A,B> = trace(A B^T), the Frobenius inner product.
  T frobenius_inner(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    T t(0);
    for (std::size_t i = 0; i < data_.size(); ++i) t += data_[i] * o.data_[i];
    return t;
  }
  T frobenius_sq() const { return frobenius_inner(*this); }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!(v == T(0))) return false;
    return true;
  }
  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<T> data_;
};

using RatMat = Mat<Rat>;

inline Mat<double> to_double(const RatMat& m) {
  Mat<double> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = static_cast<double>(m(i, j));
  return r;
}

}  // namespace qcv
