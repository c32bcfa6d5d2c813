#ifndef BURNSIDE_QUAT_HPP
#define BURNSIDE_QUAT_HPP

// Quaternion matrices, their rational 4n x 4n form, and the decomposition of
// M_n(H), n >= 2, into a multiple of I plus square-zero matrices.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "burnside/dense_matrix.hpp"
#include "burnside/linalg.hpp"
#include "burnside/quaternion.hpp"

namespace burnside {

using QuaternionMatrix = DenseMatrix<Quaternion>;

QuaternionMatrix quaternion_zero(std::size_t n);
QuaternionMatrix quaternion_identity(std::size_t n);
/// E_rc * p.
QuaternionMatrix quaternion_unit(std::size_t n, std::size_t r, std::size_t c, const Quaternion& p);

/// Replaces each entry a + bi + cj + dk by its left-multiplication matrix on
/// the basis 1, i, j, k.
Matrix real_representation(const QuaternionMatrix& x);

/// rep(XY) = rep(X) rep(Y) and rep(I) = I.
bool representation_is_homomorphic(const QuaternionMatrix& x, const QuaternionMatrix& y);

/// rep(X)^{4n} = 0.
bool is_nilpotent_quaternion(const QuaternionMatrix& x);

struct NilpotentTerm {
  mpq_class coefficient;
  QuaternionMatrix n;
};

struct NilpotentDecomposition {
  mpq_class scalar;
  std::vector<NilpotentTerm> terms;

  QuaternionMatrix reconstruct(std::size_t n) const;
};

/// X = scalar I + sum coefficient N with N^2 = 0 for every term. Terms come
/// as off-diagonal single entries (row-major), then [[p, p], [-p, -p]] on
/// consecutive indices, then [[q, w], [-w, q]] for q = i, j, k.
/// Throws NotApplicable for n = 1.
NilpotentDecomposition nilpotent_span_decomposition(const QuaternionMatrix& x);

/// Exact reconstruction and N^2 = 0 for every term.
bool verify_decomposition(const QuaternionMatrix& x, const NilpotentDecomposition& d);

}  // namespace burnside

#endif  // BURNSIDE_QUAT_HPP
