#include "burnside/modstruct.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "burnside/algebra.hpp"

namespace burnside {

namespace {

constexpr std::size_t kMaxEnumeratedPoints = 4096;

struct FamilyShape {
  Field field;
  std::size_t n;
};

FamilyShape check_family(std::span<const Matrix> generators) {
  if (generators.empty()) throw EmptyInput("empty generator family");
  const Field f = field_of(generators[0]);
  const std::size_t n = generators[0].rows();
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw ShapeMismatch("generators must be square of a common size");
    if (field_of(g) != f) throw MixedFieldError("generators over different fields");
  }
  return {f, n};
}

std::vector<Matrix> transposes(std::span<const Matrix> generators) {
  std::vector<Matrix> out;
  out.reserve(generators.size());
  for (const auto& g : generators) out.push_back(g.transpose());
  return out;
}

// Solves C x = t for each target, where the columns of C are independent.
std::vector<Vector> solve_in_columns(std::span<const Vector> cols, std::span<const Vector> targets) {
  const Field f = cols.front().front().field();
  const std::size_t n = cols.front().size();
  const std::size_t k = cols.size();
  Matrix aug(n, k + targets.size(), f.zero());
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < n; ++r) aug(r, c) = cols[c][r];
  for (std::size_t t = 0; t < targets.size(); ++t)
    for (std::size_t r = 0; r < n; ++r) aug(r, k + t) = targets[t][r];
  const RowEchelon e = rref(aug);
  if (e.rank() != k || (k > 0 && e.pivots[k - 1] != k - 1)) {
    throw StructureViolation("target vector outside the span of the given basis");
  }
  std::vector<Vector> out;
  out.reserve(targets.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    Vector x(k, f.zero());
    for (std::size_t i = 0; i < k; ++i) x[i] = e.reduced(i, k + t);
    out.push_back(std::move(x));
  }
  return out;
}

// Unit vectors at the non-pivot columns: a complement of s in F^n.
std::vector<Vector> standard_complement(const Subspace& s) {
  std::vector<bool> pivot(s.ambient(), false);
  for (auto p : s.pivots()) pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t c = 0; c < s.ambient(); ++c)
    if (!pivot[c]) out.push_back(unit_vector(s.field(), s.ambient(), c));
  return out;
}

Vector combine(std::span<const FieldElement> coeffs, std::span<const Vector> vectors, const Field& f, std::size_t n) {
  Vector out = zero_vector(f, n);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r) out[r] += coeffs[i] * vectors[i][r];
  }
  return out;
}

std::uint64_t projective_point_count(const Field& f, std::size_t d) {
  if (!f.is_finite()) return UINT64_MAX;
  mpz_class q = static_cast<unsigned long>(f.order());
  mpz_class total;
  mpz_pow_ui(total.get_mpz_t(), q.get_mpz_t(), d);
  total = (total - 1) / (q - 1);
  return total <= kMaxEnumeratedPoints ? total.get_ui() : UINT64_MAX;
}

// Nonzero vectors of span(basis) whose first nonzero coordinate is one.
template <class Visit>
bool for_each_point(const Field& f, std::span<const Vector> basis, Visit&& visit) {
  const std::size_t d = basis.size();
  const std::size_t n = basis.front().size();
  const std::uint64_t q = f.order();
  std::vector<std::uint64_t> digits(d, 0);
  for (;;) {
    std::size_t i = 0;
    while (i < d && ++digits[i] == q) digits[i++] = 0;
    if (i == d) return true;
    std::size_t lead = d;
    for (std::size_t k = d; k-- > 0;)
      if (digits[k] != 0) {
        lead = k;
        break;
      }
    if (digits[lead] != 1) continue;
    Vector coeffs;
    for (auto c : digits) coeffs.push_back(f.from_code(c));
    if (!visit(combine(coeffs, basis, f, n))) return false;
  }
}

struct NortonFactor {
  Polynomial p;
  bool irreducible;
};

std::vector<NortonFactor> norton_factors(const Polynomial& cp, std::uint64_t seed) {
  std::vector<NortonFactor> out;
  if (cp.field().is_finite()) {
    for (const auto& f : factor_finite(cp, seed)) out.push_back({f.factor, true});
    return out;
  }
  const LinearPart lp = linear_part(cp);
  for (std::size_t i = 0; i < lp.roots.size(); ++i)
    if (i == 0 || lp.roots[i] != lp.roots[i - 1]) out.push_back({Polynomial::linear(lp.roots[i]), true});
  if (lp.cofactor.degree() >= 1) {
    const Polynomial rad = (lp.cofactor / gcd(lp.cofactor, lp.cofactor.derivative())).monic();
    // Without rational roots, degree at most three means irreducible.
    out.push_back({rad, rad.degree() <= 3});
  }
  return out;
}

bool certified_irreducible_factor(const Polynomial& p) {
  if (p.degree() < 1 || !p.is_monic()) return false;
  if (p.field().is_finite()) return is_irreducible_finite(p);
  if (p.degree() == 1) return true;
  return p.degree() <= 3 && linear_part(p).roots.empty();
}

Subspace least(const std::vector<Subspace>& found) {
  return *std::min_element(found.begin(), found.end(), [](const Subspace& a, const Subspace& b) {
    return a.dim() != b.dim() ? a.dim() < b.dim() : a < b;
  });
}

IrreducibilityVerdict reducible(std::span<const Matrix> generators, Subspace witness, std::size_t rounds) {
  if (witness.dim() == 0 || witness.dim() >= witness.ambient() || !is_invariant(witness, generators)) {
    throw StructureViolation("invariant subspace witness failed its recheck");
  }
  return {Irreducibility::Reducible, std::move(witness), std::nullopt, rounds};
}

IrreducibilityVerdict norton(std::span<const Matrix> generators, const FamilyShape& shape,
                             const IrreducibilityOptions& options) {
  const std::size_t n = shape.n;
  const std::vector<Matrix> dual = transposes(generators);
  std::optional<AlgebraBasis> algebra;
  std::mt19937_64 rng(options.seed);
  const std::size_t fixed = generators.size();
  std::size_t rounds = 0;

  for (std::size_t index = 0;; ++index) {
    Matrix b = generators[0];
    if (index < fixed) {
      b = generators[index];
    } else {
      if (!algebra) algebra = algebra_closure(generators, true);
      const std::size_t k = index - fixed;
      if (k < algebra->dim()) b = algebra->basis()[k];
      else if (k < algebra->dim() + options.budget) b = algebra->random_element(rng);
      else break;
    }
    ++rounds;

    std::vector<Subspace> found;
    for (const auto& [p, irreducible] : norton_factors(char_poly(b), options.seed + index)) {
      const Matrix pb = p(b);
      const Subspace kern = kernel(pb);
      const Subspace kern_dual = kernel(pb.transpose());
      if (kern.dim() == 0) continue;
      for (const auto& w : kern.basis()) {
        Subspace s = spin(w, generators);
        if (s.dim() < n) found.push_back(std::move(s));
      }
      for (const auto& w : kern_dual.basis()) {
        const Subspace s = spin(w, dual);
        if (s.dim() < n) found.push_back(s.annihilator());
      }
      if (!found.empty() || !irreducible) continue;

      NortonCertificate cert{NortonCertificate::Kind::NullityEqualsDegree, b, p, kern.basis()[0], kern_dual.basis()[0]};
      if (kern.dim() == static_cast<std::size_t>(p.degree())) {
        return {Irreducibility::Irreducible, std::nullopt, std::move(cert), rounds};
      }
      if (projective_point_count(shape.field, kern.dim()) == UINT64_MAX) continue;
      for_each_point(shape.field, kern.basis(), [&](const Vector& w) {
        Subspace s = spin(w, generators);
        if (s.dim() < n) found.push_back(std::move(s));
        return true;
      });
      for_each_point(shape.field, kern_dual.basis(), [&](const Vector& w) {
        const Subspace s = spin(w, dual);
        if (s.dim() < n) found.push_back(s.annihilator());
        return true;
      });
      if (found.empty()) {
        cert.kind = NortonCertificate::Kind::KernelEnumerated;
        return {Irreducibility::Irreducible, std::nullopt, std::move(cert), rounds};
      }
    }
    if (!found.empty()) return reducible(generators, least(found), rounds);
  }
  return {Irreducibility::Inconclusive, std::nullopt, std::nullopt, rounds};
}

}  // namespace

Subspace spin(std::span<const FieldElement> v, std::span<const Matrix> generators) {
  if (is_zero(v)) throw ZeroVector("cannot spin the zero vector");
  const Field f = v.front().field();
  const std::size_t n = v.size();
  for (const auto& g : generators)
    if (g.rows() != n || g.cols() != n) throw ShapeMismatch("generator does not act on the vector's space");
  EchelonBasis basis(f, n);
  std::deque<Vector> queue;
  basis.insert(Vector(v.begin(), v.end()));
  queue.emplace_back(v.begin(), v.end());
  while (!queue.empty() && basis.size() < n) {
    const Vector u = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : generators) {
      Vector w = apply_matrix(g, u);
      if (basis.insert(w)) queue.push_back(std::move(w));
    }
  }
  Subspace out = basis.to_subspace();
  if (!is_invariant(out, generators)) throw StructureViolation("spun subspace is not invariant");
  return out;
}

bool is_invariant(const Subspace& s, std::span<const Matrix> generators) {
  return std::all_of(generators.begin(), generators.end(), [&](const Matrix& g) { return s.is_invariant_under(g); });
}

std::string to_string(Irreducibility status) {
  switch (status) {
    case Irreducibility::Irreducible: return "Irreducible";
    case Irreducibility::Reducible: return "Reducible";
    case Irreducibility::Inconclusive: return "Inconclusive";
  }
  return "?";
}

std::string to_string(NortonCertificate::Kind kind) {
  switch (kind) {
    case NortonCertificate::Kind::NullityEqualsDegree: return "nullity-equals-degree";
    case NortonCertificate::Kind::KernelEnumerated: return "kernel-enumerated";
    case NortonCertificate::Kind::Exhaustive: return "exhaustive";
    case NortonCertificate::Kind::Trivial: return "trivial";
  }
  return "?";
}

bool exhaustive_search_feasible(const Field& field, std::size_t n) {
  if (!field.is_finite()) return false;
  const mpz_class q = static_cast<unsigned long>(field.order());
  const mpz_class limit = mpz_class(1) << 20;
  for (std::size_t d = 1; d < n; ++d) {
    mpz_class num = 1;
    mpz_class den = 1;
    for (std::size_t i = 0; i < d; ++i) {
      mpz_class a;
      mpz_class b;
      mpz_pow_ui(a.get_mpz_t(), q.get_mpz_t(), n - i);
      mpz_pow_ui(b.get_mpz_t(), q.get_mpz_t(), i + 1);
      num *= a - 1;
      den *= b - 1;
    }
    if (num / den > limit) return false;
  }
  return true;
}

std::optional<Subspace> exhaustive_invariant_subspace(std::span<const Matrix> generators) {
  const FamilyShape shape = check_family(generators);
  const Field& f = shape.field;
  const std::size_t n = shape.n;
  if (!exhaustive_search_feasible(f, n)) {
    throw PreconditionViolated("too many subspaces of " + f.to_string() + "^" + std::to_string(n) + " to enumerate");
  }
  const std::uint64_t q = f.order();
  for (std::size_t d = 1; d < n; ++d) {
    std::optional<Subspace> best;
    std::vector<std::size_t> pivots(d);
    for (std::size_t i = 0; i < d; ++i) pivots[i] = i;
    for (;;) {
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t c = pivots[i] + 1; c < n; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(i, c);
      std::vector<std::uint64_t> digits(free.size(), 0);
      for (;;) {
        std::vector<Vector> rows(d, zero_vector(f, n));
        for (std::size_t i = 0; i < d; ++i) rows[i][pivots[i]] = f.one();
        for (std::size_t k = 0; k < free.size(); ++k) rows[free[k].first][free[k].second] = f.from_code(digits[k]);
        Subspace s(f, n, std::move(rows));
        if (is_invariant(s, generators) && (!best || s < *best)) best = std::move(s);
        std::size_t k = 0;
        while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
        if (k == digits.size()) break;
      }
      std::size_t i = d;
      while (i > 0 && pivots[i - 1] == n - d + i - 1) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t k = i; k < d; ++k) pivots[k] = pivots[k - 1] + 1;
    }
    if (best) return best;
  }
  return std::nullopt;
}

IrreducibilityVerdict find_invariant_subspace(std::span<const Matrix> generators, const IrreducibilityOptions& options) {
  const FamilyShape shape = check_family(generators);
  if (shape.n == 1) {
    return {Irreducibility::Irreducible, std::nullopt, NortonCertificate{NortonCertificate::Kind::Trivial, {}, {}, {}, {}}, 0};
  }
  IrreducibilityVerdict verdict{Irreducibility::Inconclusive, std::nullopt, std::nullopt, 0};
  if (options.engine != IrreducibilityEngine::Exhaustive) {
    verdict = norton(generators, shape, options);
    if (verdict.status != Irreducibility::Inconclusive || options.engine == IrreducibilityEngine::Norton) return verdict;
  }
  if (!exhaustive_search_feasible(shape.field, shape.n)) return verdict;
  if (auto w = exhaustive_invariant_subspace(generators)) return reducible(generators, std::move(*w), verdict.rounds);
  return {Irreducibility::Irreducible, std::nullopt, NortonCertificate{NortonCertificate::Kind::Exhaustive, {}, {}, {}, {}},
          verdict.rounds};
}

bool replay_certificate(std::span<const Matrix> generators, const NortonCertificate& cert) {
  const FamilyShape shape = check_family(generators);
  const std::size_t n = shape.n;
  using Kind = NortonCertificate::Kind;
  if (cert.kind == Kind::Trivial) return n == 1;
  if (cert.kind == Kind::Exhaustive) {
    return exhaustive_search_feasible(shape.field, n) && !exhaustive_invariant_subspace(generators).has_value();
  }
  if (!cert.element || !cert.factor || !cert.kernel_vector || !cert.dual_vector) return false;
  const Matrix& b = *cert.element;
  const Polynomial& p = *cert.factor;
  if (b.rows() != n || b.cols() != n || field_of(b) != shape.field || p.field() != shape.field) return false;
  if (!algebra_closure(generators, true).contains(b)) return false;
  if (!certified_irreducible_factor(p)) return false;
  const Matrix pb = p(b);
  const Subspace kern = kernel(pb);
  const Subspace kern_dual = kernel(pb.transpose());
  const std::vector<Matrix> dual = transposes(generators);
  const auto& w = *cert.kernel_vector;
  const auto& wd = *cert.dual_vector;
  if (w.size() != n || wd.size() != n || is_zero(w) || is_zero(wd)) return false;
  if (!kern.contains(w) || !kern_dual.contains(wd)) return false;
  if (spin(w, generators).dim() != n || spin(wd, dual).dim() != n) return false;
  if (cert.kind == Kind::NullityEqualsDegree) return kern.dim() == static_cast<std::size_t>(p.degree());
  if (projective_point_count(shape.field, kern.dim()) == UINT64_MAX) return false;
  const auto full = [&](std::span<const Matrix> gens) {
    return [&, gens](const Vector& v) { return spin(v, gens).dim() == n; };
  };
  return for_each_point(shape.field, kern.basis(), full(generators)) &&
         for_each_point(shape.field, kern_dual.basis(), full(dual));
}

bool verify_verdict(std::span<const Matrix> generators, const IrreducibilityVerdict& verdict) {
  const FamilyShape shape = check_family(generators);
  switch (verdict.status) {
    case Irreducibility::Reducible:
      return verdict.witness && verdict.witness->ambient() == shape.n && verdict.witness->dim() > 0 &&
             verdict.witness->dim() < shape.n && is_invariant(*verdict.witness, generators);
    case Irreducibility::Irreducible:
      return verdict.certificate && replay_certificate(generators, *verdict.certificate);
    case Irreducibility::Inconclusive:
      return true;
  }
  return false;
}

std::vector<Matrix> restricted_action(std::span<const Matrix> generators, const Subspace& w) {
  std::vector<Matrix> out;
  for (const auto& g : generators) {
    Matrix m(w.dim(), w.dim(), w.field().zero());
    for (std::size_t j = 0; j < w.dim(); ++j) {
      const auto coords = w.coordinates(apply_matrix(g, w.basis()[j]));
      if (!coords) throw StructureViolation("subspace is not invariant");
      for (std::size_t i = 0; i < w.dim(); ++i) m(i, j) = (*coords)[i];
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Matrix> induced_quotient_action(std::span<const Matrix> generators, const Subspace& w,
                                            std::span<const Vector> complement) {
  const std::size_t d = complement.size();
  std::vector<Vector> cols(w.basis().begin(), w.basis().end());
  cols.insert(cols.end(), complement.begin(), complement.end());
  std::vector<Matrix> out;
  for (const auto& g : generators) {
    std::vector<Vector> targets;
    for (const auto& c : complement) targets.push_back(apply_matrix(g, c));
    const auto solved = solve_in_columns(cols, targets);
    Matrix m(d, d, w.field().zero());
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) m(i, j) = solved[j][w.dim() + i];
    out.push_back(std::move(m));
  }
  return out;
}

bool InvariantChain::is_maximal() const {
  return std::all_of(quotient_dims.begin(), quotient_dims.end(), [](std::size_t d) { return d == 1; });
}

InvariantChain make_chain(std::span<const Matrix> generators, std::vector<Subspace> subspaces) {
  const FamilyShape shape = check_family(generators);
  InvariantChain chain;
  chain.n = shape.n;
  chain.subspaces = std::move(subspaces);
  for (std::size_t i = 1; i < chain.subspaces.size(); ++i) {
    const Subspace& lower = chain.subspaces[i - 1];
    EchelonBasis e(shape.field, shape.n);
    for (const auto& v : lower.basis()) e.insert(v);
    std::vector<Vector> complement;
    for (const auto& v : chain.subspaces[i].basis())
      if (e.insert(v)) complement.push_back(v);
    chain.quotient_dims.push_back(complement.size());
    chain.quotient_actions.push_back(induced_quotient_action(generators, lower, complement));
    chain.quotient_bases.push_back(std::move(complement));
  }
  return chain;
}

bool verify_chain(std::span<const Matrix> generators, const InvariantChain& chain) {
  const FamilyShape shape = check_family(generators);
  const auto& s = chain.subspaces;
  if (s.size() < 2 || s.front().dim() != 0 || s.back().dim() != shape.n) return false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].ambient() != shape.n || !is_invariant(s[i], generators)) return false;
    if (i > 0 && (s[i].dim() <= s[i - 1].dim() || !s[i].contains(s[i - 1]))) return false;
  }
  return true;
}

namespace {

struct ChopResult {
  std::vector<Subspace> chain;
  bool complete = true;
};

ChopResult chop(std::span<const Matrix> generators, const Field& f, std::size_t m, const IrreducibilityOptions& options) {
  const IrreducibilityVerdict verdict = find_invariant_subspace(generators, options);
  if (verdict.status != Irreducibility::Reducible) {
    return {{Subspace::zero(f, m), Subspace::whole(f, m)}, verdict.status == Irreducibility::Irreducible};
  }
  const Subspace& w = *verdict.witness;
  const std::vector<Matrix> sub_action = restricted_action(generators, w);
  const ChopResult lower = chop(sub_action, f, w.dim(), options);
  const std::vector<Vector> complement = standard_complement(w);
  const std::vector<Matrix> quot_action = induced_quotient_action(generators, w, complement);
  const ChopResult upper = chop(quot_action, f, m - w.dim(), options);

  ChopResult out;
  out.complete = lower.complete && upper.complete;
  for (const auto& s : lower.chain) {
    std::vector<Vector> vs;
    for (const auto& c : s.basis()) vs.push_back(combine(c, w.basis(), f, m));
    out.chain.push_back(Subspace::span(f, m, vs));
  }
  for (std::size_t i = 1; i < upper.chain.size(); ++i) {
    std::vector<Vector> vs(w.basis().begin(), w.basis().end());
    for (const auto& c : upper.chain[i].basis()) vs.push_back(combine(c, complement, f, m));
    out.chain.push_back(Subspace::span(f, m, vs));
  }
  return out;
}

std::optional<Vector> common_eigenvector(std::span<const Matrix> generators, const Subspace& s, std::size_t index) {
  while (index < generators.size() && is_scalar_matrix(generators[index])) ++index;
  if (index == generators.size()) return s.basis().front();
  const Matrix& g = generators[index];
  const Field f = field_of(g);
  const auto roots = linear_part(char_poly(g)).roots;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i > 0 && roots[i] == roots[i - 1]) continue;
    const Subspace eigen = s.intersect_kernel(g - identity_matrix(f, g.rows()) * roots[i]);
    if (eigen.dim() == 0) continue;
    if (auto v = common_eigenvector(generators, eigen, index + 1)) return v;
  }
  return std::nullopt;
}

// Columns of a triangularizing basis in local coordinates, or the failing node.
std::variant<std::vector<Vector>, NotTriangularizable> triangular_basis(std::span<const Matrix> generators,
                                                                         const Field& f, std::size_t m,
                                                                         std::size_t depth) {
  if (m == 0) return std::vector<Vector>{};
  const auto v = common_eigenvector(generators, Subspace::whole(f, m), 0);
  if (!v) {
    NotTriangularizable fail;
    fail.depth = depth;
    fail.ambient_dim = m;
    return fail;
  }
  const Subspace line = Subspace::span(f, m, std::vector<Vector>{*v});
  const std::vector<Vector> complement = standard_complement(line);
  const std::vector<Matrix> quot = induced_quotient_action(generators, line, complement);
  auto rest = triangular_basis(quot, f, m - 1, depth + 1);
  if (std::holds_alternative<NotTriangularizable>(rest)) return rest;
  std::vector<Vector> out{*v};
  for (const auto& c : std::get<std::vector<Vector>>(rest)) out.push_back(combine(c, complement, f, m));
  return out;
}

}  // namespace

InvariantChain composition_series(std::span<const Matrix> generators, const IrreducibilityOptions& options) {
  const FamilyShape shape = check_family(generators);
  ChopResult result = chop(generators, shape.field, shape.n, options);
  InvariantChain chain = make_chain(generators, std::move(result.chain));
  if (!verify_chain(generators, chain)) throw StructureViolation("composition series failed its recheck");
  if (!result.complete) throw ChopIncomplete("a composition factor could not be decided", std::move(chain));
  return chain;
}

std::string NotTriangularizable::describe() const {
  if (kind == Kind::NonSplitCharPoly) {
    return "characteristic polynomial of generator " + std::to_string(generator) + " has the factor " +
           (factor ? factor->to_string() : std::string("?")) + " with no roots in the field";
  }
  return "no common eigenvector at recursion depth " + std::to_string(depth) + " (quotient dimension " +
         std::to_string(ambient_dim) + ")";
}

std::variant<Triangularization, NotTriangularizable> triangularize_family(std::span<const Matrix> generators) {
  const FamilyShape shape = check_family(generators);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Polynomial cp = char_poly(generators[i]);
    if (splits_with_roots(cp).splits) continue;
    NotTriangularizable fail;
    fail.kind = NotTriangularizable::Kind::NonSplitCharPoly;
    fail.generator = i;
    fail.ambient_dim = shape.n;
    if (shape.field.is_finite()) {
      for (const auto& factor : factor_finite(cp))
        if (factor.factor.degree() > 1) {
          fail.factor = factor.factor;
          break;
        }
    } else {
      fail.factor = linear_part(cp).cofactor.monic();
    }
    return fail;
  }
  auto basis = triangular_basis(generators, shape.field, shape.n, 0);
  if (auto* fail = std::get_if<NotTriangularizable>(&basis)) return *fail;
  const auto& cols = std::get<std::vector<Vector>>(basis);

  Triangularization out{InvariantChain{}, matrix_from_vectors_as_columns(cols), {}};
  const Matrix p_inv = inverse(out.p);
  for (const auto& g : generators) {
    out.conjugated.push_back(p_inv * g * out.p);
    if (!is_upper_triangular(out.conjugated.back())) throw StructureViolation("conjugated generator is not upper triangular");
  }
  std::vector<Subspace> subspaces;
  for (std::size_t k = 0; k <= shape.n; ++k) {
    subspaces.push_back(Subspace::span(shape.field, shape.n, std::span<const Vector>(cols).first(k)));
  }
  out.chain = make_chain(generators, std::move(subspaces));
  if (!verify_chain(generators, out.chain) || !out.chain.is_maximal()) {
    throw StructureViolation("triangularizing chain failed its recheck");
  }
  return out;
}

}  // namespace burnside
