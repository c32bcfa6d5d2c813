#ifndef BURNSIDE_DENSE_MATRIX_HPP
#define BURNSIDE_DENSE_MATRIX_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "burnside/errors.hpp"

namespace burnside {

/// Row-major dense matrix over an exact scalar type.
///
/// The scalar carries its own arithmetic; a matrix never needs to know which
/// field it lives in beyond what its entries report. Shapes are checked on
/// every binary operation and mismatches raise ShapeMismatch.
template <class Scalar>
class DenseMatrix {
 public:
  using value_type = Scalar;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, const Scalar& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  const std::vector<Scalar>& data() const { return data_; }
  std::vector<Scalar>& data() { return data_; }

  DenseMatrix transpose() const {
    if (data_.empty()) return DenseMatrix(cols_, rows_, Scalar{});
    DenseMatrix out(cols_, rows_, data_.front());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
  }

  DenseMatrix& operator+=(const DenseMatrix& other) {
    check_same_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }

  DenseMatrix& operator-=(const DenseMatrix& other) {
    check_same_shape(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
    return *this;
  }

  DenseMatrix& operator*=(const Scalar& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, const Scalar& s) { return a *= s; }
  friend DenseMatrix operator*(const Scalar& s, const DenseMatrix& a) {
    DenseMatrix out = a;
    for (auto& x : out.data_) x = s * x;
    return out;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product needs a.cols == b.rows");
    if (a.data_.empty() || b.data_.empty()) throw ShapeMismatch("matrix product of an empty matrix");
    DenseMatrix out(a.rows_, b.cols_, a.data_.front() - a.data_.front());
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b(k, j);
          if (!bkj.is_zero()) out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  DenseMatrix operator-() const {
    DenseMatrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const DenseMatrix& a, const DenseMatrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!x.is_zero()) return false;
    }
    return true;
  }

  std::size_t hash() const {
    std::size_t h = rows_ * 31 + cols_;
    for (const auto& x : data_) h = h * 0x100000001b3ULL ^ x.hash();
    return h;
  }

 private:
  void check_same_shape(const DenseMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeMismatch("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

template <class Scalar>
struct DenseMatrixHash {
  std::size_t operator()(const DenseMatrix<Scalar>& m) const { return m.hash(); }
};

}  // namespace burnside

#endif  // BURNSIDE_DENSE_MATRIX_HPP
