// Acceptance suite: one PASS/FAIL line per criterion. All checks are exact;
// the only tolerances are the wall-clock limits printed with each line.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>
#include <variant>

#include "burnside/algebra.hpp"
#include "burnside/burnside.hpp"
#include "burnside/modstruct.hpp"
#include "burnside/quat.hpp"
#include "test_support.hpp"

using namespace burnside;
using namespace burnside::testing;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::vector<Field> unit_fields() { return {Field::prime(2), Field::prime(3), Field::rationals()}; }

std::vector<Matrix> gf4_copy() { return {matrix_from_rows(Field::prime(2), {{0, 1}, {1, 1}})}; }

Outcome positive_instances() {
  std::size_t ok = 0, total = 0;
  for (const Field& f : unit_fields()) {
    for (std::size_t n : {2, 3, 4}) {
      ++total;
      const BurnsideReport r = check_burnside_general_field(off_diagonal_units(f, n));
      if (r.closure.complete && r.closure.size() == n * n + 1 && r.triangularizable.status == Status::Holds &&
          r.irreducibility.status == Irreducibility::Irreducible && r.algebra_dim == n * n &&
          r.verdict == Verdict::TheoremInstanceVerified)
        ++ok;
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " instances verified"};
}

Outcome hypothesis_necessity() {
  const auto gens = gf4_copy();
  const BurnsideReport r = check_burnside_general_field(gens);
  const bool witness = r.triangularizable.witness && r.closure.elements[*r.triangularizable.witness] == gens[0];
  const bool pass = r.irreducibility.status == Irreducibility::Irreducible && r.algebra_dim == 2 &&
                    r.triangularizable.status == Status::Fails && witness &&
                    r.verdict == Verdict::HypothesisFails;
  return {pass, "irreducibility " + to_string(r.irreducibility.status) + ", dim " + std::to_string(r.algebra_dim) +
                    ", H1 " + to_string(r.triangularizable.status) + (witness ? " (witness omega)" : "") +
                    ", verdict " + to_string(r.verdict)};
}

Outcome division_structure() {
  const Field q = Field::rationals();
  struct Case {
    std::string name;
    std::vector<Matrix> gens;
    std::size_t expected_r;
  };
  const std::vector<Case> cases{
      {"M_2", off_diagonal_units(q, 2), 1},
      {"GF(4) copy", gf4_copy(), 2},
      {"quaternion form", {quaternion_left_mult(0, 1, 0, 0), quaternion_left_mult(0, 0, 1, 0)}, 4},
  };
  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    const AlgebraBasis alg = algebra_closure(c.gens, true);
    const std::size_t n = alg.n();
    const DivisionDegree d = division_degree(alg, false);
    const bool ok = d.r == c.expected_r && alg.dim() * d.r == n * n && n % d.r == 0 && d.dim_check;
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += c.name + ": r=" + std::to_string(d.r) + " dim=" + std::to_string(alg.dim()) + " n=" + std::to_string(n);
  }
  return {pass, detail};
}

std::vector<Matrix> random_unit_cycle(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> s(n);
  std::iota(s.begin(), s.end(), 0);
  std::shuffle(s.begin(), s.end(), rng);
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(unit_matrix(f, n, s[i], s[(i + 1) % n]));
  if (rng() % 2 == 0) {
    const std::size_t d = rng() % n;
    gens.push_back(unit_matrix(f, n, d, d));
  }
  return gens;
}

Outcome descent() {
  std::mt19937_64 rng(2);
  std::size_t ok = 0, total = 0;
  for (const auto& [f, k] : {std::pair{Field::prime(2), Field::finite(2, 2)},
                             std::pair{Field::prime(3), Field::finite(3, 2)}}) {
    for (std::size_t n : {2, 3}) {
      for (int trial = 0; trial < 100; ++trial) {
        ++total;
        std::vector<Matrix> embedded;
        for (const auto& m : random_unit_cycle(f, n, rng)) embedded.push_back(embed_matrix(m, k));
        const auto gens = conjugate_all(embedded, random_invertible(k, n, rng));
        const DescentReport r = check_spectra_descent(gens, f, {.seed = rng()});
        if (r.spectra.status != Status::Holds || r.dim_over_subfield != n * n || !r.similarity) continue;
        const AlgebraBasis alg = algebra_closure(gens, true, f);
        const Matrix p_inv = inverse(r.similarity->p);
        bool in_f = true;
        for (const auto& b : alg.basis()) {
          const Matrix c = p_inv * b * r.similarity->p;
          for (const auto& x : c.data()) in_f = in_f && lies_in_subfield(x, f);
        }
        if (in_f && r.verdict == Verdict::TheoremInstanceVerified) ++ok;
      }
    }
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " conjugations descended"};
}

Outcome quaternion_decomposition() {
  std::mt19937_64 rng(5);
  const auto rational = [&] {
    mpq_class x(static_cast<long>(rng() % 41) - 20, static_cast<unsigned long>(1 + rng() % 12));
    x.canonicalize();
    return x;
  };
  std::size_t ok = 0, total = 0;
  for (std::size_t n : {2, 3, 4}) {
    for (int trial = 0; trial < 100; ++trial) {
      ++total;
      QuaternionMatrix x = quaternion_zero(n);
      for (auto& e : x.data()) e = Quaternion(rational(), rational(), rational(), rational());
      const NilpotentDecomposition d = nilpotent_span_decomposition(x);
      bool good = d.reconstruct(n) == x;
      for (const auto& t : d.terms) good = good && (t.n * t.n).is_zero();
      if (good) ++ok;
    }
  }
  QuaternionMatrix example = quaternion_zero(2);
  example(0, 0) = Quaternion::i();
  example(0, 1) = Quaternion::j();
  example(1, 0) = -Quaternion::j();
  example(1, 1) = Quaternion::i();
  const bool square_zero = (example * example).is_zero() && is_nilpotent_quaternion(example);
  return {ok == total && square_zero, std::to_string(ok) + "/" + std::to_string(total) +
                                          " exact decompositions; [[i,j],[-j,i]]^2 = 0: " +
                                          (square_zero ? "yes" : "no")};
}

std::vector<Matrix> random_family(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<Matrix> gens;
  const std::size_t count = 1 + rng() % 2;
  for (std::size_t g = 0; g < count; ++g) {
    Matrix m = random_matrix(f, n, rng);
    if (rng() % 2 == 0)
      for (std::size_t r = 1; r < n; ++r) m(r, 0) = f.zero();
    gens.push_back(m);
  }
  return gens;
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(6);
  std::size_t disagreements = 0, inconclusive = 0, total = 0;
  for (const Field& f : {Field::prime(2), Field::prime(3)}) {
    for (int trial = 0; trial < 100; ++trial) {
      ++total;
      const std::size_t n = 1 + rng() % 3;
      const auto gens = random_family(f, n, rng);
      const auto norton = find_invariant_subspace(gens, {rng(), 64, IrreducibilityEngine::Norton});
      const auto exhaustive = find_invariant_subspace(gens, {0, 64, IrreducibilityEngine::Exhaustive});
      if (norton.status == Irreducibility::Inconclusive) ++inconclusive;
      else if (norton.status != exhaustive.status) ++disagreements;
    }
  }
  return {disagreements == 0 && inconclusive == 0,
          std::to_string(total) + " families, " + std::to_string(disagreements) + " disagreements, " +
              std::to_string(inconclusive) + " inconclusive"};
}

Outcome no_counterexample() {
  std::mt19937_64 rng(7);
  std::size_t complete = 0, candidates = 0, attempts = 0;
  while (complete < 1000) {
    ++attempts;
    const Field f = rng() % 2 == 0 ? Field::prime(2) : Field::prime(3);
    const std::size_t n = 1 + rng() % 3;
    std::vector<Matrix> gens;
    for (std::size_t g = 0; g < 1 + rng() % 3; ++g) gens.push_back(random_matrix(f, n, rng));
    const BurnsideReport r = check_burnside_general_field(gens, {.seed = rng()});
    if (!r.closure.complete) continue;
    ++complete;
    if (r.verdict == Verdict::CounterexampleCandidate || r.structure_violation) ++candidates;
  }
  return {candidates == 0, std::to_string(complete) + " complete closures (" + std::to_string(attempts) +
                               " sets drawn), " + std::to_string(candidates) + " counterexample candidates"};
}

Outcome triangularization() {
  std::mt19937_64 rng(8);
  std::size_t ok = 0, total = 0;
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::finite(2, 2)}) {
    for (int trial = 0; trial < 100; ++trial) {
      ++total;
      const std::size_t n = 1 + rng() % 4;
      std::vector<Matrix> family;
      for (std::size_t g = 0; g < 1 + rng() % 3; ++g) {
        Matrix m = random_matrix(f, n, rng);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < r; ++c) m(r, c) = f.zero();
        family.push_back(m);
      }
      const auto gens = conjugate_all(family, random_invertible(f, n, rng));
      const auto result = triangularize_family(gens);
      if (!std::holds_alternative<Triangularization>(result)) continue;
      const auto& t = std::get<Triangularization>(result);
      const Matrix p_inv = inverse(t.p);
      bool good = true;
      for (std::size_t i = 0; i < gens.size(); ++i)
        good = good && p_inv * gens[i] * t.p == t.conjugated[i] && is_upper_triangular(t.conjugated[i]);
      if (good) ++ok;
    }
  }
  std::size_t refused = 0, irreducible = 0;
  for (const Field& f : unit_fields()) {
    for (std::size_t n : {2, 3, 4}) {
      ++irreducible;
      if (std::holds_alternative<NotTriangularizable>(triangularize_family(off_diagonal_units(f, n)))) ++refused;
    }
  }
  return {ok == total && refused == irreducible,
          std::to_string(ok) + "/" + std::to_string(total) + " triangularized; " + std::to_string(refused) + "/" +
              std::to_string(irreducible) + " irreducible families refused"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "positive instances (matrix units, GF(2), GF(3), Q, n = 2..4)", 5, positive_instances},
      {2, "hypothesis necessity (GF(4) copy)", 5, hypothesis_necessity},
      {3, "division-degree structure r = 1, 2, 4", 5, division_structure},
      {4, "descent to the subfield with explicit similarity", 60, descent},
      {5, "quaternion identity-plus-nilpotent decomposition", 30, quaternion_decomposition},
      {6, "Norton engine vs exhaustive enumeration", 60, oracle_equivalence},
      {7, "no counterexample on 1000 complete closures", 300, no_counterexample},
      {8, "triangularization soundness", 60, triangularization},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.limit_seconds;
    const bool pass = out.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s criterion %d: %s: %s (%.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id, c.title.c_str(),
                out.detail.c_str(), seconds, c.limit_seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
