#ifndef BURNSIDE_LINALG_HPP
#define BURNSIDE_LINALG_HPP

// Exact dense linear algebra over a Field.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "burnside/dense_matrix.hpp"
#include "burnside/field.hpp"

namespace burnside {

using Matrix = DenseMatrix<FieldElement>;
using Vector = std::vector<FieldElement>;
using MatrixHash = DenseMatrixHash<FieldElement>;

Field field_of(const Matrix& m);

Matrix zero_matrix(const Field& field, std::size_t rows, std::size_t cols);
Matrix identity_matrix(const Field& field, std::size_t n);
/// E_{row,col}: one in a single position, zero elsewhere.
Matrix unit_matrix(const Field& field, std::size_t n, std::size_t row, std::size_t col);
Matrix matrix_from_rows(const Field& field, const std::vector<std::vector<long>>& rows);
Matrix matrix_from_vectors_as_rows(std::span<const Vector> rows);
Matrix matrix_from_vectors_as_columns(std::span<const Vector> cols);
Vector zero_vector(const Field& field, std::size_t n);
Vector column(const Matrix& m, std::size_t c);
Vector unit_vector(const Field& field, std::size_t n, std::size_t index);
bool is_zero(std::span<const FieldElement> v);

/// Matrix times column vector.
Vector apply_matrix(const Matrix& m, std::span<const FieldElement> v);
Matrix power(const Matrix& m, std::uint64_t exponent);
FieldElement trace(const Matrix& m);
bool is_scalar_matrix(const Matrix& m);
bool is_upper_triangular(const Matrix& m);
/// Row-major flattening to a length rows*cols vector, and back.
Vector flatten(const Matrix& m);
Matrix unflatten(const Field& field, std::span<const FieldElement> v, std::size_t rows, std::size_t cols);
/// Entrywise embedding along a supported tower.
Matrix embed_matrix(const Matrix& m, const Field& target);

std::string to_string(const Matrix& m);

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
RowEchelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Throws SingularMatrix for singular input and ShapeMismatch for non-square input.
Matrix inverse(const Matrix& m);

class Subspace;

/// Incrementally maintained reduced row-echelon basis.
///
/// Rows stay sorted by pivot column with unit pivots and zeros in every other
/// pivot column, so the coordinates of a member vector are its entries at the
/// pivot columns.
class EchelonBasis {
 public:
  EchelonBasis(Field field, std::size_t ambient);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t size() const { return rows_.size(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// v minus its projection onto the span along the pivot coordinates.
  Vector reduce(Vector v) const;
  bool contains(std::span<const FieldElement> v) const;
  /// Adds v to the span; returns false when v already lies in it.
  bool insert(Vector v);
  /// Coordinates with respect to rows(), or nullopt when v is outside the span.
  std::optional<Vector> coordinates(std::span<const FieldElement> v) const;

  Subspace to_subspace() const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// A subspace of F^n stored by its canonical reduced row-echelon basis, so
/// equal subspaces have identical bases.
class Subspace {
 public:
  Subspace(Field field, std::size_t ambient, std::vector<Vector> basis);
  static Subspace zero(const Field& field, std::size_t ambient);
  static Subspace whole(const Field& field, std::size_t ambient);
  static Subspace span(const Field& field, std::size_t ambient, std::span<const Vector> vectors);

  const Field& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Basis vectors as rows; requires dim() > 0.
  Matrix basis_matrix() const;

  bool contains(std::span<const FieldElement> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in basis(), or nullopt if v is not a member.
  std::optional<Vector> coordinates(std::span<const FieldElement> v) const;
  /// Whether m maps this subspace into itself (m acting on column vectors).
  bool is_invariant_under(const Matrix& m) const;
  /// Annihilator {v : <u, v> = 0 for all u here}.
  Subspace annihilator() const;
  /// Intersection with ker(m).
  Subspace intersect_kernel(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  /// Lexicographic order on canonical bases, used for reproducible tie-breaks.
  friend bool operator<(const Subspace& a, const Subspace& b);

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Null space {v : m v = 0} as a canonical subspace of F^{cols}.
Subspace kernel(const Matrix& m);

}  // namespace burnside

#endif  // BURNSIDE_LINALG_HPP
