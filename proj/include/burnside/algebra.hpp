#ifndef BURNSIDE_ALGEBRA_HPP
#define BURNSIDE_ALGEBRA_HPP

// Matrix algebras given by a canonical basis.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "burnside/field.hpp"
#include "burnside/linalg.hpp"

namespace burnside {

/// A subspace of M_n(K) viewed as a vector space over a subfield F of K.
///
/// Every matrix is flattened row-major and each entry is expanded into its F
/// coordinates (power basis of K over F), giving a vector of length n^2 [K:F].
/// The basis is the reduced echelon basis of those vectors, so two equal
/// subspaces have identical bases.
class AlgebraBasis {
 public:
  /// F-span of the given K-matrices. Closedness and unitality are detected.
  static AlgebraBasis span(const Field& entry_field, const Field& scalar_field, std::size_t n,
                           std::span<const Matrix> matrices);

  const Field& field() const { return entry_field_; }
  const Field& scalar_field() const { return scalar_field_; }
  std::size_t n() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Matrix>& basis() const { return basis_; }
  bool multiplication_closed() const { return closed_; }
  bool contains_identity() const { return unital_; }

  /// F-coordinate vector of a matrix (length n^2 [K:F]).
  Vector flatten_over_scalars(const Matrix& m) const;
  bool contains(const Matrix& m) const;
  /// Coordinates over F with respect to basis(), or nullopt for non-members.
  std::optional<Vector> coordinates(const Matrix& m) const;
  /// sum c_i basis()[i] with c_i in F.
  Matrix combination(std::span<const FieldElement> coeffs) const;
  /// Uniformly random F-combination of the basis.
  Matrix random_element(std::mt19937_64& rng) const;

  /// structure_constants()[i][j] holds the coordinates of basis()[i] * basis()[j].
  /// Requires multiplication_closed().
  const std::vector<std::vector<Vector>>& structure_constants() const;

  friend bool operator==(const AlgebraBasis& a, const AlgebraBasis& b);

 private:
  AlgebraBasis(Field entry, Field scalar, std::size_t n, EchelonBasis echelon);
  void finish();

  Field entry_field_;
  Field scalar_field_;
  std::size_t n_;
  EchelonBasis echelon_;
  std::vector<Matrix> basis_;
  bool closed_ = false;
  bool unital_ = false;
  std::vector<std::vector<Vector>> structure_;
};

/// Smallest F-subspace of M_n(K) containing the generators (and I when asked)
/// that is closed under multiplication. scalar_field defaults to the entry field.
AlgebraBasis algebra_closure(const Field& entry_field, std::size_t n, std::span<const Matrix> generators,
                             bool include_identity, std::optional<Field> scalar_field = std::nullopt);
/// Same, reading K and n from a nonempty generator list.
AlgebraBasis algebra_closure(std::span<const Matrix> generators, bool include_identity,
                             std::optional<Field> scalar_field = std::nullopt);

/// Commutant {X in M_n(K) : XB = BX for every basis element B}, as an
/// algebra over K.
AlgebraBasis centralizer(const AlgebraBasis& algebra);

struct DivisionDegree {
  std::size_t r;
  bool dim_check;
};

/// r = dim of the centralizer; dim_check = (dim A * r == n^2 and r | n).
/// Throws StructureViolation when assume_irreducible and the check fails.
DivisionDegree division_degree(const AlgebraBasis& algebra, bool assume_irreducible);

/// Smallest nonzero rank seen among the basis and `samples` random elements.
std::size_t sampled_minimal_rank(const AlgebraBasis& algebra, std::uint64_t seed, std::size_t samples);

/// [L_B] for each basis element B, in the algebra's own basis.
std::vector<Matrix> left_regular_representation(const AlgebraBasis& algebra);

struct SimilarityToFull {
  Matrix p;
  /// units[i * n + j] is e_ij.
  std::vector<Matrix> units;
  /// The element whose simple eigenvalue produced e_11.
  Matrix pivot_element;
  FieldElement eigenvalue;
  std::size_t candidates_tried;
};

struct SimilarityOptions {
  std::uint64_t seed = 0;
  std::size_t random_attempts = 512;
};

/// For an F-algebra A in M_n(K) of F-dimension n^2, finds matrix units
/// e_ij in A and an invertible P over K with P^{-1} e_ij P = E_ij, so that
/// P^{-1} A P = M_n(F). Throws PreconditionViolated or SearchExhausted.
SimilarityToFull construct_similarity_to_full(const AlgebraBasis& algebra, const Field& scalar_field,
                                              const SimilarityOptions& options = {});

/// Checks every postcondition of a similarity result against the algebra.
bool verify_similarity(const AlgebraBasis& algebra, const SimilarityToFull& result);

/// diag(M, ..., M) with k copies.
Matrix inflate(const Matrix& m, std::size_t k);

}  // namespace burnside

#endif  // BURNSIDE_ALGEBRA_HPP
