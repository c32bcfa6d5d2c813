#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "burnside/burnside.hpp"
#include "burnside/errors.hpp"
#include "test_support.hpp"

using namespace burnside;
using namespace burnside::testing;

namespace {

// Naive fixpoint: multiply every pair until nothing new appears.
std::unordered_set<Matrix, MatrixHash> naive_closure(const std::vector<Matrix>& gens) {
  std::unordered_set<Matrix, MatrixHash> set(gens.begin(), gens.end());
  for (bool grew = true; grew;) {
    grew = false;
    const std::vector<Matrix> current(set.begin(), set.end());
    for (const auto& a : current)
      for (const auto& b : current)
        if (set.insert(a * b).second) grew = true;
  }
  return set;
}

// Cyclic chain E_{s0 s1}, E_{s1 s2}, ..., E_{s(n-1) s0} for a random permutation s.
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

std::vector<Matrix> random_family(const Field& f, std::size_t n, std::mt19937_64& rng) {
  std::vector<Matrix> gens;
  const std::size_t count = 1 + rng() % 3;
  for (std::size_t g = 0; g < count; ++g) gens.push_back(random_matrix(f, n, rng));
  return gens;
}

}  // namespace

TEST_CASE("closure examples") {
  const Field q = Field::rationals();
  const std::vector<Matrix> e11{unit_matrix(q, 2, 0, 0)};
  const SemigroupClosure one = semigroup_closure(e11);
  CHECK(one.complete);
  CHECK(one.size() == 1);
  CHECK(one.elements[0] == e11[0]);

  const SemigroupClosure units = semigroup_closure(off_diagonal_units(q, 2));
  CHECK(units.complete);
  REQUIRE(units.size() == 5);
  std::unordered_set<Matrix, MatrixHash> expected{unit_matrix(q, 2, 0, 1), unit_matrix(q, 2, 1, 0),
                                                  unit_matrix(q, 2, 0, 0), unit_matrix(q, 2, 1, 1),
                                                  zero_matrix(q, 2, 2)};
  for (const auto& m : units.elements) CHECK(expected.contains(m));
  CHECK(units.pairs_checked == 25);
  CHECK(units.direct_pairs_checked == 25);

  const std::vector<Matrix> unipotent{identity_matrix(q, 2) + unit_matrix(q, 2, 0, 1)};
  const SemigroupClosure truncated = semigroup_closure(unipotent, 100);
  CHECK_FALSE(truncated.complete);
  CHECK(truncated.size() == 100);
  CHECK(truncated.pairs_checked == 0);
}

TEST_CASE("closure preconditions") {
  const Field f = Field::prime(2);
  const auto gens = off_diagonal_units(f, 3);
  CHECK_THROWS_AS(semigroup_closure(gens, 5), PreconditionViolated);
  CHECK_THROWS_AS(semigroup_closure(std::vector<Matrix>{}), EmptyInput);
  const std::vector<Matrix> mixed{identity_matrix(f, 2), identity_matrix(f, 3)};
  CHECK_THROWS_AS(semigroup_closure(mixed), ShapeMismatch);
}

TEST_CASE("closure words and table are consistent") {
  const Field f = Field::prime(3);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const auto gens = random_family(f, 2, rng);
    const SemigroupClosure s = semigroup_closure(gens);
    REQUIRE(s.complete);
    for (std::size_t i = 0; i < s.size(); ++i) {
      Matrix w = gens[s.words[i][0]];
      for (std::size_t k = 1; k < s.words[i].size(); ++k) w = w * gens[s.words[i][k]];
      CHECK(w == s.elements[i]);
      for (std::size_t g = 0; g < gens.size(); ++g)
        CHECK(s.elements[s.right_table[i][g]] == s.elements[i] * gens[g]);
    }
  }
}

TEST_CASE("closure agrees with naive fixpoint") {
  std::mt19937_64 rng(5);
  for (const Field& f : {Field::prime(2), Field::prime(3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 1 + rng() % 2;
      const auto gens = random_family(f, n, rng);
      const SemigroupClosure s = semigroup_closure(gens);
      REQUIRE(s.complete);
      const auto oracle = naive_closure(gens);
      CHECK(s.size() == oracle.size());
      for (const auto& m : s.elements) CHECK(oracle.contains(m));
    }
  }
}

TEST_CASE("closure sizes of known groups") {
  const Field f2 = Field::prime(2);
  // Companion matrix of the primitive x^3 + x + 1 has order 7.
  const std::vector<Matrix> companion{matrix_from_rows(f2, {{0, 0, 1}, {1, 0, 1}, {0, 1, 0}})};
  CHECK(semigroup_closure(companion).size() == 7);

  const std::vector<Matrix> s3{matrix_from_rows(f2, {{1, 1}, {0, 1}}), matrix_from_rows(f2, {{0, 1}, {1, 0}})};
  CHECK(semigroup_closure(s3).size() == 6);

  const Field f3 = Field::prime(3);
  const std::vector<Matrix> gl23{matrix_from_rows(f3, {{1, 1}, {0, 1}}), matrix_from_rows(f3, {{1, 0}, {1, 1}}),
                                 matrix_from_rows(f3, {{2, 0}, {0, 1}})};
  CHECK(semigroup_closure(gl23).size() == (9 - 1) * (9 - 3));

  // |GL_2(GF(7))| = 48 * 42 exceeds the exhaustive pair limit.
  const Field f7 = Field::prime(7);
  const std::vector<Matrix> gl27{matrix_from_rows(f7, {{1, 1}, {0, 1}}), matrix_from_rows(f7, {{1, 0}, {1, 1}}),
                                 matrix_from_rows(f7, {{3, 0}, {0, 1}})};
  const SemigroupClosure big = semigroup_closure(gl27);
  CHECK(big.complete);
  CHECK(big.size() == 48 * 42);
  CHECK(big.pairs_checked == big.size() * big.size());
  CHECK(big.direct_pairs_checked == 4096);
}

TEST_CASE("triangularizability of closures") {
  const Field q = Field::rationals();
  CHECK(all_elements_triangularizable(semigroup_closure(off_diagonal_units(q, 2))).status == Status::Holds);

  const Field f2 = Field::prime(2);
  const Matrix omega = matrix_from_rows(f2, {{0, 1}, {1, 1}});
  const std::vector<Matrix> copy{omega};
  const auto fails = all_elements_triangularizable(semigroup_closure(copy));
  CHECK(fails.status == Status::Fails);
  REQUIRE(fails.witness);
  CHECK(semigroup_closure(copy).elements[*fails.witness] == omega);
  CHECK(*fails.char_poly == Polynomial::from_ints(f2, {1, 1, 1}));

  const std::vector<Matrix> unipotent{identity_matrix(q, 2) + unit_matrix(q, 2, 0, 1)};
  CHECK(all_elements_triangularizable(semigroup_closure(unipotent, 50)).status == Status::Unverified);
}

TEST_CASE("burnside check examples") {
  const Field f2 = Field::prime(2);
  const BurnsideReport units = check_burnside_general_field(off_diagonal_units(f2, 3));
  CHECK(units.triangularizable.status == Status::Holds);
  CHECK(units.irreducibility.status == Irreducibility::Irreducible);
  CHECK(units.algebra_dim == 9);
  CHECK(units.closure.size() == 10);
  CHECK(units.conclusion == Status::Holds);
  CHECK(units.verdict == Verdict::TheoremInstanceVerified);
  REQUIRE(units.division);
  CHECK(units.division->r == 1);

  const std::vector<Matrix> copy{matrix_from_rows(f2, {{0, 1}, {1, 1}})};
  const BurnsideReport gf4 = check_burnside_general_field(copy);
  CHECK(gf4.triangularizable.status == Status::Fails);
  CHECK(gf4.irreducibility.status == Irreducibility::Irreducible);
  CHECK(gf4.algebra_dim == 2);
  CHECK(gf4.conclusion == Status::Fails);
  CHECK(gf4.verdict == Verdict::HypothesisFails);
  REQUIRE(gf4.division);
  CHECK(gf4.division->r == 2);
  CHECK_FALSE(gf4.structure_violation);

  const Field q = Field::rationals();
  const std::vector<Matrix> triangular{identity_matrix(q, 2) + unit_matrix(q, 2, 0, 1),
                                       matrix_from_rows(q, {{1, 0}, {0, 2}})};
  const BurnsideReport tri = check_burnside_general_field(triangular, {.cap = 200});
  CHECK(tri.triangularizable.status == Status::Unverified);
  CHECK(tri.irreducibility.status == Irreducibility::Reducible);
  CHECK(tri.algebra_dim < 4);
  CHECK(tri.conclusion == Status::Holds);
  CHECK(tri.verdict == Verdict::Incomplete);
}

TEST_CASE("burnside check is deterministic") {
  const Field f3 = Field::prime(3);
  std::mt19937_64 rng(3);
  const auto gens = random_family(f3, 3, rng);
  const BurnsideReport a = check_burnside_general_field(gens, {.cap = 2000, .seed = 9});
  const BurnsideReport b = check_burnside_general_field(gens, {.cap = 2000, .seed = 9});
  CHECK(a.closure.elements == b.closure.elements);
  CHECK(a.verdict == b.verdict);
  CHECK(a.irreducibility.witness == b.irreducibility.witness);
}

TEST_CASE("no counterexample on random finite closures") {
  std::mt19937_64 rng(2024);
  std::size_t complete = 0;
  std::size_t verified = 0;
  while (complete < 150) {
    const Field f = rng() % 2 == 0 ? Field::prime(2) : Field::prime(3);
    const std::size_t n = 1 + rng() % 3;
    const auto gens = random_family(f, n, rng);
    const BurnsideReport r = check_burnside_general_field(gens, {.cap = 2048, .seed = rng()});
    if (!r.closure.complete) continue;
    ++complete;
    CHECK(r.verdict != Verdict::CounterexampleCandidate);
    CHECK_FALSE(r.structure_violation);
    if (r.verdict == Verdict::TheoremInstanceVerified) ++verified;
    // Monotone consistency.
    if (r.irreducibility.status == Irreducibility::Irreducible && r.triangularizable.status == Status::Holds) {
      REQUIRE(r.division);
      CHECK(r.division->r == 1);
    }
  }
  CHECK(verified > 0);
}

TEST_CASE("descent examples") {
  const Field f2 = Field::prime(2);
  const Field f4 = Field::finite(2, 2);
  std::vector<Matrix> units;
  for (const auto& m : off_diagonal_units(f2, 2)) units.push_back(embed_matrix(m, f4));
  const DescentReport plain = check_spectra_descent(units, f2);
  CHECK(plain.spectra.status == Status::Holds);
  CHECK(plain.irreducible_status == Status::Holds);
  CHECK(plain.dim_over_subfield == 4);
  CHECK(plain.dim_over_field == 4);
  CHECK(plain.similarity_status == Status::Holds);
  CHECK(plain.trace_status == Status::Holds);
  CHECK(plain.verdict == Verdict::TheoremInstanceVerified);

  std::mt19937_64 rng(8);
  const auto conjugated = conjugate_all(units, random_invertible(f4, 2, rng));
  const DescentReport moved = check_spectra_descent(conjugated, f2);
  CHECK(moved.verdict == Verdict::TheoremInstanceVerified);
  REQUIRE(moved.similarity);
  const Matrix p_inv = inverse(moved.similarity->p);
  for (const auto& g : conjugated) {
    const Matrix c = p_inv * g * moved.similarity->p;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(lies_in_subfield(c(i, j), f2));
  }

  const FieldElement t = f4.generator();
  Matrix diag = zero_matrix(f4, 2, 2);
  diag(0, 0) = t;
  diag(1, 1) = t * t;
  const std::vector<Matrix> outside{diag};
  const DescentReport fails = check_spectra_descent(outside, f2);
  CHECK(fails.spectra.status == Status::Fails);
  REQUIRE(fails.spectra.eigenvalue);
  CHECK_FALSE(lies_in_subfield(*fails.spectra.eigenvalue, f2));
  CHECK((*fails.spectra.eigenvalue == t || *fails.spectra.eigenvalue == t * t));
  CHECK(fails.verdict == Verdict::HypothesisFails);

  CHECK_THROWS_AS(check_spectra_descent(units, Field::prime(3)), UnsupportedTower);
}

TEST_CASE("descent on random conjugations") {
  std::mt19937_64 rng(77);
  for (const auto& [f, k] : {std::pair{Field::prime(2), Field::finite(2, 2)},
                             std::pair{Field::prime(3), Field::finite(3, 2)}}) {
    for (std::size_t n : {2, 3}) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<Matrix> embedded;
        for (const auto& m : random_unit_cycle(f, n, rng)) embedded.push_back(embed_matrix(m, k));
        const auto gens = conjugate_all(embedded, random_invertible(k, n, rng));
        const DescentReport r = check_spectra_descent(gens, f, {.seed = rng()});
        CHECK(r.spectra.status == Status::Holds);
        CHECK(r.dim_over_subfield == n * n);
        CHECK(r.similarity_status == Status::Holds);
        CHECK(r.verdict == Verdict::TheoremInstanceVerified);
      }
    }
  }
}
