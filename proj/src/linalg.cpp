#include "burnside/linalg.hpp"

#include <algorithm>

namespace burnside {

Field field_of(const Matrix& m) {
  if (m.size() == 0) throw ShapeMismatch("empty matrix has no field");
  return m.data().front().field();
}

Matrix zero_matrix(const Field& field, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw ShapeMismatch("matrices need at least one row and column");
  return Matrix(rows, cols, field.zero());
}

Matrix identity_matrix(const Field& field, std::size_t n) {
  Matrix m = zero_matrix(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Matrix unit_matrix(const Field& field, std::size_t n, std::size_t row, std::size_t col) {
  Matrix m = zero_matrix(field, n, n);
  m(row, col) = field.one();
  return m;
}

Matrix matrix_from_rows(const Field& field, const std::vector<std::vector<long>>& rows) {
  if (rows.empty() || rows.front().empty()) throw ShapeMismatch("empty matrix literal");
  Matrix m = zero_matrix(field, rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw ShapeMismatch("ragged matrix literal");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

Matrix matrix_from_vectors_as_rows(std::span<const Vector> rows) {
  if (rows.empty() || rows.front().empty()) throw ShapeMismatch("no vectors");
  Matrix m(rows.size(), rows.front().size(), rows.front().front());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw ShapeMismatch("vectors of different length");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix matrix_from_vectors_as_columns(std::span<const Vector> cols) {
  return matrix_from_vectors_as_rows(cols).transpose();
}

Vector zero_vector(const Field& field, std::size_t n) { return Vector(n, field.zero()); }

Vector column(const Matrix& m, std::size_t c) {
  Vector v;
  v.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v.push_back(m(r, c));
  return v;
}

Vector unit_vector(const Field& field, std::size_t n, std::size_t index) {
  Vector v = zero_vector(field, n);
  v[index] = field.one();
  return v;
}

bool is_zero(std::span<const FieldElement> v) {
  return std::all_of(v.begin(), v.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Vector apply_matrix(const Matrix& m, std::span<const FieldElement> v) {
  if (m.cols() != v.size()) throw ShapeMismatch("matrix-vector product needs m.cols == v.size");
  const Field f = field_of(m);
  Vector out(m.rows(), f.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

Matrix power(const Matrix& m, std::uint64_t exponent) {
  if (!m.is_square()) throw ShapeMismatch("power of a non-square matrix");
  Matrix result = identity_matrix(field_of(m), m.rows());
  Matrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

FieldElement trace(const Matrix& m) {
  if (!m.is_square()) throw ShapeMismatch("trace of a non-square matrix");
  FieldElement t = field_of(m).zero();
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

bool is_scalar_matrix(const Matrix& m) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (r == c ? m(r, c) != m(0, 0) : !m(r, c).is_zero()) return false;
    }
  }
  return true;
}

bool is_upper_triangular(const Matrix& m) {
  for (std::size_t r = 1; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < r && c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) return false;
    }
  }
  return true;
}

Vector flatten(const Matrix& m) { return m.data(); }

Matrix unflatten(const Field& field, std::span<const FieldElement> v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw ShapeMismatch("flattened length does not match shape");
  Matrix m = zero_matrix(field, rows, cols);
  std::copy(v.begin(), v.end(), m.data().begin());
  return m;
}

Matrix embed_matrix(const Matrix& m, const Field& target) {
  Matrix out = zero_matrix(target, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.size(); ++i) out.data()[i] = embed_subfield(m.data()[i], target);
  return out;
}

std::string to_string(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r == 0 ? "[" : ", [";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c > 0) out += ", ";
      out += m(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

RowEchelon rref(const Matrix& m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot, k), a(r, k));
    }
    const FieldElement inv = a(r, c).inverse();
    for (std::size_t k = c; k < cols; ++k) a(r, k) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const FieldElement factor = a(i, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!a(r, k).is_zero()) a(i, k) -= factor * a(r, k);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw ShapeMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Field f = field_of(m);
  Matrix aug = zero_matrix(f, n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = f.one();
  }
  const RowEchelon e = rref(aug);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  Matrix out = zero_matrix(f, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = e.reduced(r, n + c);
  }
  return out;
}

// ----------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(Field field, std::size_t ambient) : field_(field), ambient_(ambient) {}

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != ambient_) throw ShapeMismatch("vector length does not match ambient dimension");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const FieldElement c = v[pivots_[i]];
    if (c.is_zero()) continue;
    const Vector& row = rows_[i];
    for (std::size_t k = pivots_[i]; k < ambient_; ++k) {
      if (!row[k].is_zero()) v[k] -= c * row[k];
    }
  }
  return v;
}

bool EchelonBasis::contains(std::span<const FieldElement> v) const {
  return is_zero(reduce(Vector(v.begin(), v.end())));
}

bool EchelonBasis::insert(Vector v) {
  v = reduce(std::move(v));
  std::size_t pivot = 0;
  while (pivot < ambient_ && v[pivot].is_zero()) ++pivot;
  if (pivot == ambient_) return false;
  const FieldElement inv = v[pivot].inverse();
  for (std::size_t k = pivot; k < ambient_; ++k) v[k] *= inv;
  for (auto& row : rows_) {
    const FieldElement c = row[pivot];
    if (c.is_zero()) continue;
    for (std::size_t k = pivot; k < ambient_; ++k) {
      if (!v[k].is_zero()) row[k] -= c * v[k];
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, pivot);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

std::optional<Vector> EchelonBasis::coordinates(std::span<const FieldElement> v) const {
  if (!contains(v)) return std::nullopt;
  Vector coords;
  coords.reserve(pivots_.size());
  for (auto p : pivots_) coords.push_back(v[p]);
  return coords;
}

Subspace EchelonBasis::to_subspace() const { return Subspace(field_, ambient_, rows_); }

// ----------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Field field, std::size_t ambient, std::vector<Vector> basis) : field_(field), ambient_(ambient) {
  EchelonBasis e(field, ambient);
  for (auto& v : basis) e.insert(std::move(v));
  basis_ = e.rows();
  pivots_ = e.pivots();
}

Subspace Subspace::zero(const Field& field, std::size_t ambient) { return Subspace(field, ambient, {}); }

Subspace Subspace::whole(const Field& field, std::size_t ambient) {
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < ambient; ++i) basis.push_back(unit_vector(field, ambient, i));
  return Subspace(field, ambient, std::move(basis));
}

Subspace Subspace::span(const Field& field, std::size_t ambient, std::span<const Vector> vectors) {
  return Subspace(field, ambient, std::vector<Vector>(vectors.begin(), vectors.end()));
}

Matrix Subspace::basis_matrix() const { return matrix_from_vectors_as_rows(basis_); }

bool Subspace::contains(std::span<const FieldElement> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(), [&](const Vector& v) { return contains(v); });
}

std::optional<Vector> Subspace::coordinates(std::span<const FieldElement> v) const {
  if (v.size() != ambient_) throw ShapeMismatch("vector length does not match ambient dimension");
  Vector residual(v.begin(), v.end());
  Vector coords;
  coords.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const FieldElement c = residual[pivots_[i]];
    coords.push_back(c);
    if (c.is_zero()) continue;
    for (std::size_t k = pivots_[i]; k < ambient_; ++k) {
      if (!basis_[i][k].is_zero()) residual[k] -= c * basis_[i][k];
    }
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::is_invariant_under(const Matrix& m) const {
  if (m.rows() != ambient_ || m.cols() != ambient_) throw ShapeMismatch("operator does not act on this space");
  return std::all_of(basis_.begin(), basis_.end(), [&](const Vector& v) {
    const Vector image = apply_matrix(m, v);
    return contains(std::span<const FieldElement>(image));
  });
}

Subspace Subspace::annihilator() const {
  if (basis_.empty()) return whole(field_, ambient_);
  return kernel(basis_matrix());
}

Subspace Subspace::intersect_kernel(const Matrix& m) const {
  if (basis_.empty()) return *this;
  // v = sum c_i b_i with m v = 0  <=>  (m B^T) c = 0.
  const Matrix images = m * basis_matrix().transpose();
  const Subspace coeffs = kernel(images);
  std::vector<Vector> out;
  for (const auto& c : coeffs.basis()) {
    Vector v = zero_vector(field_, ambient_);
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      for (std::size_t k = 0; k < ambient_; ++k) v[k] += c[i] * basis_[i][k];
    }
    out.push_back(std::move(v));
  }
  return Subspace(field_, ambient_, std::move(out));
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

bool operator<(const Subspace& a, const Subspace& b) {
  if (a.basis_.size() != b.basis_.size()) return a.basis_.size() < b.basis_.size();
  for (std::size_t i = 0; i < a.basis_.size(); ++i) {
    for (std::size_t k = 0; k < a.ambient_; ++k) {
      if (a.basis_[i][k] != b.basis_[i][k]) return a.basis_[i][k] < b.basis_[i][k];
    }
  }
  return false;
}

Subspace kernel(const Matrix& m) {
  const RowEchelon e = rref(m);
  const Field f = field_of(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, n);
    v[free] = f.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace(f, n, std::move(basis));
}

}  // namespace burnside
