#include "burnside/algebra.hpp"

#include <algorithm>

#include "burnside/errors.hpp"
#include "burnside/polynomial.hpp"

namespace burnside {

namespace {

std::size_t extension_degree(const Field& entry, const Field& scalar) {
  if (entry == scalar) return 1;
  if (!is_supported_tower(scalar, entry)) {
    throw UnsupportedTower(scalar.to_string() + " is not a supported subfield of " + entry.to_string());
  }
  return entry.degree();
}

void check_generators(const Field& field, std::size_t n, std::span<const Matrix> generators) {
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw ShapeMismatch("generators must all be " + std::to_string(n) + "x" + std::to_string(n));
    if (field_of(g) != field) throw MixedFieldError("generator over " + field_of(g).to_string() + ", expected " + field.to_string());
  }
}

}  // namespace

AlgebraBasis::AlgebraBasis(Field entry, Field scalar, std::size_t n, EchelonBasis echelon)
    : entry_field_(entry), scalar_field_(scalar), n_(n), echelon_(std::move(echelon)) {
  finish();
}

AlgebraBasis AlgebraBasis::span(const Field& entry_field, const Field& scalar_field, std::size_t n,
                                std::span<const Matrix> matrices) {
  if (n == 0) throw ShapeMismatch("matrix size must be positive");
  check_generators(entry_field, n, matrices);
  const std::size_t m = extension_degree(entry_field, scalar_field);
  EchelonBasis echelon(scalar_field, n * n * m);
  AlgebraBasis probe(entry_field, scalar_field, n, echelon);
  for (const auto& mat : matrices) echelon.insert(probe.flatten_over_scalars(mat));
  return AlgebraBasis(entry_field, scalar_field, n, std::move(echelon));
}

Vector AlgebraBasis::flatten_over_scalars(const Matrix& m) const {
  if (m.rows() != n_ || m.cols() != n_) throw ShapeMismatch("matrix does not live in this algebra's ambient space");
  if (entry_field_ == scalar_field_) return flatten(m);
  Vector out;
  out.reserve(n_ * n_ * entry_field_.degree());
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) {
      const auto coords = subfield_coordinates(m(r, c), scalar_field_);
      out.insert(out.end(), coords.begin(), coords.end());
    }
  return out;
}

void AlgebraBasis::finish() {
  const std::size_t m = echelon_.ambient() / (n_ * n_);
  basis_.clear();
  for (const auto& row : echelon_.rows()) {
    Matrix mat(n_, n_, entry_field_.zero());
    for (std::size_t k = 0; k < n_ * n_; ++k) {
      mat.data()[k] = from_subfield_coordinates(std::span<const FieldElement>(row).subspan(k * m, m), entry_field_);
    }
    basis_.push_back(std::move(mat));
  }
  unital_ = contains(identity_matrix(entry_field_, n_));
  closed_ = true;
  structure_.assign(basis_.size(), {});
  for (std::size_t i = 0; i < basis_.size() && closed_; ++i) {
    for (std::size_t j = 0; j < basis_.size(); ++j) {
      auto coords = coordinates(basis_[i] * basis_[j]);
      if (!coords) {
        closed_ = false;
        break;
      }
      structure_[i].push_back(std::move(*coords));
    }
  }
  if (!closed_) structure_.clear();
}

bool AlgebraBasis::contains(const Matrix& m) const { return echelon_.contains(flatten_over_scalars(m)); }

std::optional<Vector> AlgebraBasis::coordinates(const Matrix& m) const {
  return echelon_.coordinates(flatten_over_scalars(m));
}

Matrix AlgebraBasis::combination(std::span<const FieldElement> coeffs) const {
  if (coeffs.size() != basis_.size()) throw ShapeMismatch("coefficient count differs from the dimension");
  Matrix out = zero_matrix(entry_field_, n_, n_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    out += basis_[i] * embed_subfield(coeffs[i], entry_field_);
  }
  return out;
}

Matrix AlgebraBasis::random_element(std::mt19937_64& rng) const {
  Vector coeffs;
  coeffs.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) coeffs.push_back(scalar_field_.random(rng));
  return combination(coeffs);
}

const std::vector<std::vector<Vector>>& AlgebraBasis::structure_constants() const {
  if (!closed_) throw PreconditionViolated("structure constants need a multiplication-closed basis");
  return structure_;
}

bool operator==(const AlgebraBasis& a, const AlgebraBasis& b) {
  return a.entry_field_ == b.entry_field_ && a.scalar_field_ == b.scalar_field_ && a.n_ == b.n_ &&
         a.echelon_.rows() == b.echelon_.rows();
}

AlgebraBasis algebra_closure(const Field& entry_field, std::size_t n, std::span<const Matrix> generators,
                             bool include_identity, std::optional<Field> scalar_field) {
  if (generators.empty() && !include_identity) throw EmptyInput("no generators and no identity");
  if (n == 0) throw ShapeMismatch("matrix size must be positive");
  check_generators(entry_field, n, generators);
  const Field scalars = scalar_field.value_or(entry_field);
  AlgebraBasis shape = AlgebraBasis::span(entry_field, scalars, n, {});
  EchelonBasis echelon(scalars, n * n * extension_degree(entry_field, scalars));

  std::vector<Matrix> elements;
  auto add = [&](Matrix m) {
    if (echelon.insert(shape.flatten_over_scalars(m))) elements.push_back(std::move(m));
  };
  if (include_identity) add(identity_matrix(entry_field, n));
  for (const auto& g : generators) add(g);
  // Each new element is multiplied on both sides by everything found before it.
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(elements[i] * elements[j]);
      if (j != i) add(elements[j] * elements[i]);
    }
  }
  AlgebraBasis result = AlgebraBasis::span(entry_field, scalars, n, elements);
  if (!result.multiplication_closed()) throw StructureViolation("closure worklist ended on a non-closed span");
  return result;
}

AlgebraBasis algebra_closure(std::span<const Matrix> generators, bool include_identity,
                             std::optional<Field> scalar_field) {
  if (generators.empty()) throw EmptyInput("the field and size cannot be inferred from an empty generator list");
  return algebra_closure(field_of(generators[0]), generators[0].rows(), generators, include_identity, scalar_field);
}

AlgebraBasis centralizer(const AlgebraBasis& algebra) {
  const Field& k = algebra.field();
  const std::size_t n = algebra.n();
  const std::size_t nn = n * n;
  // Unknown X_{pq} sits in column p*n + q; (XB - BX)_{rs} gives row r*n + s.
  Matrix system = zero_matrix(k, std::max<std::size_t>(1, algebra.dim()) * nn, nn);
  for (std::size_t b = 0; b < algebra.dim(); ++b) {
    const Matrix& m = algebra.basis()[b];
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        const std::size_t row = b * nn + r * n + s;
        for (std::size_t q = 0; q < n; ++q) system(row, r * n + q) += m(q, s);
        for (std::size_t p = 0; p < n; ++p) system(row, p * n + s) -= m(r, p);
      }
  }
  std::vector<Matrix> mats;
  const Subspace solutions = kernel(system);
  for (const auto& v : solutions.basis()) mats.push_back(unflatten(k, v, n, n));
  return AlgebraBasis::span(k, k, n, mats);
}

DivisionDegree division_degree(const AlgebraBasis& algebra, bool assume_irreducible) {
  if (!algebra.contains_identity()) throw PreconditionViolated("division degree needs a unital algebra");
  if (algebra.field() != algebra.scalar_field()) throw PreconditionViolated("division degree needs K = F");
  const std::size_t n = algebra.n();
  DivisionDegree out{centralizer(algebra).dim(), false};
  out.dim_check = algebra.dim() * out.r == n * n && n % out.r == 0;
  if (assume_irreducible && !out.dim_check) {
    throw StructureViolation("irreducible algebra of dimension " + std::to_string(algebra.dim()) +
                             " has centralizer dimension " + std::to_string(out.r) + " in M_" + std::to_string(n));
  }
  return out;
}

std::size_t sampled_minimal_rank(const AlgebraBasis& algebra, std::uint64_t seed, std::size_t samples) {
  std::size_t best = 0;
  auto consider = [&](const Matrix& m) {
    const std::size_t r = rank(m);
    if (r != 0 && (best == 0 || r < best)) best = r;
  };
  for (const auto& b : algebra.basis()) consider(b);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < samples && algebra.dim() > 0; ++i) consider(algebra.random_element(rng));
  return best;
}

std::vector<Matrix> left_regular_representation(const AlgebraBasis& algebra) {
  if (!algebra.multiplication_closed() || !algebra.contains_identity()) {
    throw PreconditionViolated("left regular representation needs a unital closed algebra");
  }
  const Field& f = algebra.scalar_field();
  const std::size_t d = algebra.dim();
  const auto& sc = algebra.structure_constants();
  std::vector<Matrix> reps;
  reps.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Matrix l(d, d, f.zero());
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) l(k, j) = sc[i][j][k];
    reps.push_back(std::move(l));
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Matrix expected(d, d, f.zero());
      for (std::size_t k = 0; k < d; ++k)
        if (!sc[i][j][k].is_zero()) expected += reps[k] * sc[i][j][k];
      if (reps[i] * reps[j] != expected) throw StructureViolation("left regular representation is not multiplicative");
    }
  return reps;
}

namespace {

std::optional<SimilarityToFull> similarity_from(const AlgebraBasis& algebra, const Field& f, const Matrix& s) {
  const Field& k = algebra.field();
  const std::size_t n = algebra.n();
  const Polynomial cp = char_poly(s);
  const auto roots = linear_part(cp).roots;
  for (std::size_t idx = 0; idx < roots.size(); ++idx) {
    const FieldElement& lambda = roots[idx];
    const bool simple = (idx == 0 || roots[idx - 1] != lambda) && (idx + 1 == roots.size() || roots[idx + 1] != lambda);
    if (!simple || !lies_in_subfield(lambda, f)) continue;

    const Polynomial g = cp / Polynomial::linear(lambda);
    const Matrix e = g(s) * g(lambda).inverse();
    if (!algebra.contains(e)) continue;

    // F-bases X of A e and R of e A, both starting with e.
    EchelonBasis left(f, algebra.flatten_over_scalars(e).size());
    EchelonBasis right(f, left.ambient());
    std::vector<Matrix> xs;
    std::vector<Matrix> rs;
    left.insert(algebra.flatten_over_scalars(e));
    right.insert(algebra.flatten_over_scalars(e));
    xs.push_back(e);
    rs.push_back(e);
    for (const auto& b : algebra.basis()) {
      Matrix be = b * e;
      if (left.insert(algebra.flatten_over_scalars(be))) xs.push_back(std::move(be));
      Matrix eb = e * b;
      if (right.insert(algebra.flatten_over_scalars(eb))) rs.push_back(std::move(eb));
    }
    if (xs.size() != n || rs.size() != n) continue;

    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (std::size_t i = 0; i < n * n; ++i)
      if (!e.data()[i].is_zero()) {
        r0 = i / n;
        c0 = i % n;
        break;
      }
    // R_l X_k lies in eAe = F e; record the scalar.
    Matrix gram(n, n, f.zero());
    bool ok = true;
    for (std::size_t l = 0; l < n && ok; ++l)
      for (std::size_t kk = 0; kk < n && ok; ++kk) {
        const Matrix prod = rs[l] * xs[kk];
        const FieldElement c = prod(r0, c0) / e(r0, c0);
        if (!lies_in_subfield(c, f) || prod != e * c) {
          ok = false;
          break;
        }
        gram(l, kk) = restrict_to_subfield(c, f);
      }
    if (!ok || rank(gram) != n) continue;
    const Matrix gram_inv = inverse(gram);

    std::vector<Matrix> ys;
    for (std::size_t j = 0; j < n; ++j) {
      Matrix y = zero_matrix(k, n, n);
      for (std::size_t l = 0; l < n; ++l)
        if (!gram_inv(j, l).is_zero()) y += rs[l] * embed_subfield(gram_inv(j, l), k);
      ys.push_back(std::move(y));
    }
    SimilarityToFull out{zero_matrix(k, n, n), {}, s, lambda, 0};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.units.push_back(xs[i] * ys[j]);

    std::size_t col = 0;
    while (col < n && is_zero(column(e, col))) ++col;
    const Vector v1 = column(e, col);
    std::vector<Vector> cols;
    for (const auto& x : xs) cols.push_back(apply_matrix(x, v1));
    out.p = matrix_from_vectors_as_columns(cols);
    if (rank(out.p) != n) continue;
    if (verify_similarity(algebra, out)) return out;
  }
  return std::nullopt;
}

}  // namespace

SimilarityToFull construct_similarity_to_full(const AlgebraBasis& algebra, const Field& scalar_field,
                                              const SimilarityOptions& options) {
  const std::size_t n = algebra.n();
  if (algebra.scalar_field() != scalar_field) {
    throw PreconditionViolated("algebra is spanned over " + algebra.scalar_field().to_string() + ", not " +
                               scalar_field.to_string());
  }
  if (!algebra.contains_identity() || !algebra.multiplication_closed()) {
    throw PreconditionViolated("similarity construction needs a unital closed algebra");
  }
  if (algebra.dim() != n * n) {
    throw PreconditionViolated("algebra has dimension " + std::to_string(algebra.dim()) + ", expected " +
                               std::to_string(n * n));
  }
  std::size_t tried = 0;
  for (const auto& b : algebra.basis()) {
    ++tried;
    if (auto out = similarity_from(algebra, scalar_field, b)) {
      out->candidates_tried = tried;
      return *out;
    }
  }
  std::mt19937_64 rng(options.seed);
  for (std::size_t i = 0; i < options.random_attempts; ++i) {
    ++tried;
    if (auto out = similarity_from(algebra, scalar_field, algebra.random_element(rng))) {
      out->candidates_tried = tried;
      return *out;
    }
  }
  throw SearchExhausted("no element with a simple eigenvalue in " + scalar_field.to_string() + " among " +
                        std::to_string(tried) + " candidates");
}

bool verify_similarity(const AlgebraBasis& algebra, const SimilarityToFull& result) {
  const Field& k = algebra.field();
  const Field& f = algebra.scalar_field();
  const std::size_t n = algebra.n();
  if (result.units.size() != n * n || result.p.rows() != n || result.p.cols() != n) return false;
  if (rank(result.p) != n) return false;
  const Matrix p_inv = inverse(result.p);
  const auto unit = [&](std::size_t i, std::size_t j) -> const Matrix& { return result.units[i * n + j]; };
  Matrix diagonal_sum = zero_matrix(k, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!algebra.contains(unit(i, j))) return false;
      if (p_inv * unit(i, j) * result.p != unit_matrix(k, n, i, j)) return false;
      for (std::size_t kk = 0; kk < n; ++kk)
        for (std::size_t l = 0; l < n; ++l) {
          const Matrix prod = unit(i, j) * unit(kk, l);
          if (j == kk ? prod != unit(i, l) : !prod.is_zero()) return false;
        }
    }
    diagonal_sum += unit(i, i);
  }
  if (diagonal_sum != identity_matrix(k, n)) return false;
  for (const auto& b : algebra.basis()) {
    const Matrix c = p_inv * b * result.p;
    for (std::size_t i = 0; i < n * n; ++i)
      if (!lies_in_subfield(c.data()[i], f)) return false;
  }
  return true;
}

Matrix inflate(const Matrix& m, std::size_t k) {
  const std::size_t n = m.rows();
  Matrix out = zero_matrix(field_of(m), n * k, m.cols() * k);
  for (std::size_t b = 0; b < k; ++b)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) out(b * n + r, b * m.cols() + c) = m(r, c);
  return out;
}

}  // namespace burnside
