#include "burnside/quat.hpp"

#include <array>

#include "burnside/errors.hpp"

namespace burnside {

QuaternionMatrix quaternion_zero(std::size_t n) { return QuaternionMatrix(n, n, Quaternion()); }

QuaternionMatrix quaternion_identity(std::size_t n) {
  QuaternionMatrix out = quaternion_zero(n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = Quaternion(1);
  return out;
}

QuaternionMatrix quaternion_unit(std::size_t n, std::size_t r, std::size_t c, const Quaternion& p) {
  QuaternionMatrix out = quaternion_zero(n);
  out(r, c) = p;
  return out;
}

Matrix real_representation(const QuaternionMatrix& x) {
  const Field q = Field::rationals();
  Matrix out(4 * x.rows(), 4 * x.cols(), q.zero());
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < x.cols(); ++c) {
      const Quaternion& e = x(r, c);
      const mpq_class a = e.a(), b = e.b(), cc = e.c(), d = e.d();
      const std::array<std::array<mpq_class, 4>, 4> block{{{a, -b, -cc, -d},
                                                           {b, a, -d, cc},
                                                           {cc, d, a, -b},
                                                           {d, -cc, b, a}}};
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out(4 * r + i, 4 * c + j) = q.from_rational(block[i][j]);
    }
  }
  return out;
}

bool representation_is_homomorphic(const QuaternionMatrix& x, const QuaternionMatrix& y) {
  const Field q = Field::rationals();
  if (real_representation(quaternion_identity(x.rows())) != identity_matrix(q, 4 * x.rows())) return false;
  return real_representation(x * y) == real_representation(x) * real_representation(y);
}

bool is_nilpotent_quaternion(const QuaternionMatrix& x) {
  return power(real_representation(x), 4 * x.rows()).is_zero();
}

QuaternionMatrix NilpotentDecomposition::reconstruct(std::size_t n) const {
  QuaternionMatrix out = quaternion_identity(n) * Quaternion(scalar);
  for (const auto& t : terms) out += t.n * Quaternion(t.coefficient);
  return out;
}

namespace {

// [[p, p], [-p, -p]] on indices r, s.
QuaternionMatrix pair_pattern(std::size_t n, std::size_t r, std::size_t s, const Quaternion& p) {
  QuaternionMatrix out = quaternion_zero(n);
  out(r, r) = p;
  out(r, s) = p;
  out(s, r) = -p;
  out(s, s) = -p;
  return out;
}

// [[q, w], [-w, q]] on indices r, s.
QuaternionMatrix unit_pattern(std::size_t n, std::size_t r, std::size_t s, const Quaternion& q,
                              const Quaternion& w) {
  QuaternionMatrix out = quaternion_zero(n);
  out(r, r) = q;
  out(s, s) = q;
  out(r, s) = w;
  out(s, r) = -w;
  return out;
}

}  // namespace

NilpotentDecomposition nilpotent_span_decomposition(const QuaternionMatrix& x) {
  const std::size_t n = x.rows();
  if (x.cols() != n) throw ShapeMismatch("quaternion matrix must be square");
  if (n < 2) throw NotApplicable("M_1(H) = H has no nonzero nilpotents");

  Quaternion mean;
  for (std::size_t i = 0; i < n; ++i) mean += x(i, i);
  mean *= mpq_class(mpz_class(1), mpz_class(static_cast<unsigned long>(n)));

  std::vector<NilpotentTerm> pairs;
  Quaternion running;
  for (std::size_t r = 0; r + 1 < n; ++r) {
    running += x(r, r) - mean;
    if (!running.is_zero()) pairs.push_back({1, pair_pattern(n, r, r + 1, running)});
  }

  std::vector<NilpotentTerm> units;
  const std::array<Quaternion, 3> imaginary{Quaternion::i(), Quaternion::j(), Quaternion::k()};
  for (std::size_t u = 0; u < 3; ++u) {
    const mpq_class beta = mean[u + 1];
    if (beta == 0) continue;
    const Quaternion& q = imaginary[u];
    const Quaternion& w = imaginary[(u + 1) % 3];
    std::size_t start = 0;
    if (n % 2 == 1) {
      const mpq_class half = beta / 2;
      units.push_back({half, unit_pattern(n, 0, 1, q, w)});
      units.push_back({half, unit_pattern(n, 1, 2, q, w)});
      units.push_back({half, unit_pattern(n, 0, 2, q, w)});
      start = 3;
    }
    for (std::size_t r = start; r + 1 < n; r += 2) units.push_back({beta, unit_pattern(n, r, r + 1, q, w)});
  }

  QuaternionMatrix residual = x;
  for (const auto* group : {&pairs, &units})
    for (const auto& t : *group) residual -= t.n * Quaternion(t.coefficient);

  NilpotentDecomposition out;
  out.scalar = mean.a();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c && !residual(r, c).is_zero()) out.terms.push_back({1, quaternion_unit(n, r, c, residual(r, c))});
  for (auto* group : {&pairs, &units})
    for (auto& t : *group) out.terms.push_back(std::move(t));

  if (!verify_decomposition(x, out)) throw StructureViolation("nilpotent decomposition failed verification");
  return out;
}

bool verify_decomposition(const QuaternionMatrix& x, const NilpotentDecomposition& d) {
  const std::size_t n = x.rows();
  for (const auto& t : d.terms) {
    if (t.n.rows() != n || t.n.cols() != n) return false;
    if (!(t.n * t.n).is_zero()) return false;
  }
  return d.reconstruct(n) == x;
}

}  // namespace burnside
