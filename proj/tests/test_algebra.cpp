#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "burnside/algebra.hpp"
#include "burnside/errors.hpp"
#include "test_support.hpp"

using namespace burnside;
using namespace burnside::testing;

namespace {

const Field& f2() {
  static const Field f = Field::prime(2);
  return f;
}

Matrix omega() { return matrix_from_rows(f2(), {{0, 1}, {1, 1}}); }

AlgebraBasis gf4_copy() {
  const std::vector<Matrix> gens{omega()};
  return algebra_closure(gens, true);
}

AlgebraBasis quaternion_form() {
  const std::vector<Matrix> gens{quaternion_left_mult(0, 1, 0, 0), quaternion_left_mult(0, 0, 1, 0)};
  return algebra_closure(gens, true);
}

AlgebraBasis full_algebra(const Field& f, std::size_t n) {
  return algebra_closure(f, n, off_diagonal_units(f, n), true);
}

}  // namespace

TEST_CASE("closure examples") {
  const Field q = Field::rationals();
  const std::vector<Matrix> units{unit_matrix(q, 2, 0, 1), unit_matrix(q, 2, 1, 0)};
  const AlgebraBasis full = algebra_closure(units, true);
  CHECK(full.dim() == 4);
  // E12 E21 = E11 and E21 E12 = E22 complete the four matrix units.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(full.contains(unit_matrix(q, 2, i, j)));

  const AlgebraBasis scalars = algebra_closure(q, 3, {}, true);
  CHECK(scalars.dim() == 1);
  CHECK(scalars.basis()[0] == identity_matrix(q, 3));

  const AlgebraBasis copy = gf4_copy();
  CHECK(copy.dim() == 2);
  CHECK(copy.contains(omega() * omega()));
  CHECK(copy.multiplication_closed());
  CHECK(copy.contains_identity());

  CHECK_THROWS_AS(algebra_closure(q, 2, {}, false), EmptyInput);
  const std::vector<Matrix> mixed{identity_matrix(q, 2), identity_matrix(q, 3)};
  CHECK_THROWS_AS(algebra_closure(mixed, true), ShapeMismatch);
}

TEST_CASE("non-unital closure of a nilpotent") {
  const Field q = Field::rationals();
  const std::vector<Matrix> gens{unit_matrix(q, 3, 0, 1) + unit_matrix(q, 3, 1, 2)};
  const AlgebraBasis a = algebra_closure(gens, false);
  CHECK(a.dim() == 2);
  CHECK_FALSE(a.contains_identity());
  CHECK(algebra_closure(gens, true).dim() == 3);
}

TEST_CASE("centralizer examples") {
  for (std::size_t n = 1; n <= 4; ++n) CHECK(centralizer(full_algebra(Field::prime(3), n)).dim() == 1);
  const AlgebraBasis copy = gf4_copy();
  CHECK(centralizer(copy) == copy);
  CHECK(centralizer(algebra_closure(Field::rationals(), 3, {}, true)).dim() == 9);
}

TEST_CASE("division degree") {
  const DivisionDegree full = division_degree(full_algebra(f2(), 2), true);
  CHECK(full.r == 1);
  CHECK(full.dim_check);
  const DivisionDegree copy = division_degree(gf4_copy(), true);
  CHECK(copy.r == 2);
  CHECK(copy.dim_check);
  const AlgebraBasis h = quaternion_form();
  CHECK(h.dim() == 4);
  const DivisionDegree quat = division_degree(h, true);
  CHECK(quat.r == 4);
  CHECK(quat.dim_check);

  // Upper triangular 2x2 matrices are reducible: dim 3, centralizer dim 1.
  const Field q = Field::rationals();
  const std::vector<Matrix> gens{unit_matrix(q, 2, 0, 1), unit_matrix(q, 2, 0, 0)};
  const AlgebraBasis tri = algebra_closure(gens, true);
  CHECK_FALSE(division_degree(tri, false).dim_check);
  CHECK_THROWS_AS(division_degree(tri, true), StructureViolation);
}

TEST_CASE("sampled minimal rank matches r on irreducible examples") {
  CHECK(sampled_minimal_rank(full_algebra(Field::prime(3), 3), 0, 64) == 1);
  CHECK(sampled_minimal_rank(gf4_copy(), 0, 64) == 2);
  CHECK(sampled_minimal_rank(quaternion_form(), 0, 64) == 4);
}

TEST_CASE("double centralizer") {
  for (const AlgebraBasis& a : {full_algebra(f2(), 3), gf4_copy(), quaternion_form()}) {
    const AlgebraBasis cc = centralizer(centralizer(a));
    for (const auto& b : a.basis()) CHECK(cc.contains(b));
    CHECK(cc == a);
  }
  std::mt19937_64 rng(2);
  const Field f3 = Field::prime(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::vector<Matrix> gens{random_matrix(f3, 3, rng)};
    const AlgebraBasis a = algebra_closure(gens, true);
    const AlgebraBasis cc = centralizer(centralizer(a));
    for (const auto& b : a.basis()) CHECK(cc.contains(b));
  }
}

TEST_CASE("left regular representation") {
  const Field q = Field::rationals();
  const auto scalar_reps = left_regular_representation(algebra_closure(q, 2, {}, true));
  REQUIRE(scalar_reps.size() == 1);
  CHECK(scalar_reps[0] == identity_matrix(q, 1));

  const AlgebraBasis full = full_algebra(q, 2);
  const auto full_reps = left_regular_representation(full);
  const auto coords = full.coordinates(identity_matrix(q, 2));
  REQUIRE(coords.has_value());
  Matrix l_identity = zero_matrix(q, 4, 4);
  for (std::size_t k = 0; k < 4; ++k) l_identity += full_reps[k] * (*coords)[k];
  CHECK(l_identity == identity_matrix(q, 4));

  const AlgebraBasis copy = gf4_copy();
  REQUIRE(copy.basis()[0] == identity_matrix(f2(), 2));
  REQUIRE(copy.basis()[1] == omega());
  CHECK(left_regular_representation(copy)[1] == matrix_from_rows(f2(), {{0, 1}, {1, 1}}));

  std::mt19937_64 rng(13);
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(5), Field::finite(2, 2)}) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<Matrix> gens{random_matrix(f, 3, rng)};
      const AlgebraBasis a = algebra_closure(gens, true);
      const auto reps = left_regular_representation(a);
      const auto& sc = a.structure_constants();
      for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
          Matrix expected = zero_matrix(f, a.dim(), a.dim());
          for (std::size_t k = 0; k < a.dim(); ++k) expected += reps[k] * sc[i][j][k];
          REQUIRE(reps[i] * reps[j] == expected);
        }
    }
  }
}

TEST_CASE("closure is idempotent and conjugation invariant") {
  std::mt19937_64 rng(19);
  for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::finite(2, 2)}) {
    CAPTURE(f.to_string());
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      std::vector<Matrix> gens;
      for (std::size_t g = 0; g < 1 + rng() % 2; ++g) {
        Matrix m = random_matrix(f, n, rng);
        // Sparse generators give a spread of dimensions instead of mostly M_n.
        for (std::size_t k = 0; k < n * n; ++k)
          if (rng() % 3 != 0) m.data()[k] = f.zero();
        gens.push_back(m);
      }
      const AlgebraBasis a = algebra_closure(gens, trial % 2 == 0);
      if (a.dim() > 0) REQUIRE(algebra_closure(f, n, a.basis(), false) == a);
      const Matrix q = random_invertible(f, n, rng);
      REQUIRE(algebra_closure(conjugate_all(gens, q), trial % 2 == 0).dim() == a.dim());
    }
  }
}

TEST_CASE("closure over a subfield") {
  const Field f4 = Field::finite(2, 2);
  const std::vector<Matrix> units = off_diagonal_units(f4, 2);
  const AlgebraBasis over_f2 = algebra_closure(f4, 2, units, true, Field::prime(2));
  const AlgebraBasis over_f4 = algebra_closure(f4, 2, units, true);
  CHECK(over_f2.dim() == 4);
  CHECK(over_f4.dim() == 4);
  // t I is in the GF(4)-span but not the GF(2)-span.
  const Matrix t_identity = identity_matrix(f4, 2) * f4.generator();
  CHECK(over_f4.contains(t_identity));
  CHECK_FALSE(over_f2.contains(t_identity));
  const std::vector<Matrix> scalar_gen{t_identity};
  CHECK(algebra_closure(scalar_gen, true, Field::prime(2)).dim() == 2);
  CHECK_THROWS_AS(algebra_closure(units, true, Field::prime(3)), UnsupportedTower);
}

TEST_CASE("similarity to the full matrix algebra") {
  const Field f4 = Field::finite(2, 2);
  const Field f2 = Field::prime(2);

  SUBCASE("already in standard position") {
    const AlgebraBasis a = algebra_closure(f4, 2, off_diagonal_units(f4, 2), true, f2);
    const SimilarityToFull s = construct_similarity_to_full(a, f2);
    CHECK(verify_similarity(a, s));
  }

  SUBCASE("degenerate n = 1") {
    const Field q = Field::rationals();
    const AlgebraBasis a = algebra_closure(q, 1, {}, true);
    const SimilarityToFull s = construct_similarity_to_full(a, q);
    CHECK(s.p == identity_matrix(q, 1));
    REQUIRE(s.units.size() == 1);
    CHECK(s.units[0] == identity_matrix(q, 1));
  }

  SUBCASE("random conjugations descend to the subfield") {
    std::mt19937_64 rng(101);
    for (const auto& [sub, ext] : {std::pair{Field::prime(2), Field::finite(2, 2)},
                                   std::pair{Field::prime(3), Field::finite(3, 2)}}) {
      for (std::size_t n : {2, 3}) {
        for (int trial = 0; trial < 20; ++trial) {
          const Matrix q = random_invertible(ext, n, rng);
          const auto gens = conjugate_all(off_diagonal_units(ext, n), q);
          const AlgebraBasis a = algebra_closure(ext, n, gens, true, sub);
          REQUIRE(a.dim() == n * n);
          const SimilarityToFull s = construct_similarity_to_full(a, sub, {static_cast<std::uint64_t>(trial), 512});
          REQUIRE(verify_similarity(a, s));
          // Independent check: conjugated basis, restricted to the subfield, spans all of M_n(F).
          const Matrix p_inv = inverse(s.p);
          std::vector<Matrix> restricted;
          for (const auto& b : a.basis()) {
            const Matrix c = p_inv * b * s.p;
            Matrix r(n, n, sub.zero());
            for (std::size_t k = 0; k < n * n; ++k) r.data()[k] = restrict_to_subfield(c.data()[k], sub);
            restricted.push_back(r);
          }
          REQUIRE(AlgebraBasis::span(sub, sub, n, restricted).dim() == n * n);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
              for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                  const Matrix prod = s.units[i * n + j] * s.units[k * n + l];
                  REQUIRE(prod == (j == k ? s.units[i * n + l] : zero_matrix(ext, n, n)));
                }
        }
      }
    }
  }

  SUBCASE("preconditions") {
    CHECK_THROWS_AS(construct_similarity_to_full(gf4_copy(), f2), PreconditionViolated);
    const AlgebraBasis a = algebra_closure(f4, 2, off_diagonal_units(f4, 2), true, f2);
    CHECK_THROWS_AS(construct_similarity_to_full(a, f4), PreconditionViolated);
  }
}

TEST_CASE("inflation") {
  const Field q = Field::rationals();
  const Matrix a = matrix_from_rows(q, {{1, 2}, {3, 4}});
  const Matrix b = inflate(a, 2);
  CHECK(b.rows() == 4);
  CHECK(b(2, 3) == q.from_int(2));
  CHECK(b(0, 2).is_zero());
  const std::vector<Matrix> gens{inflate(unit_matrix(q, 2, 0, 1), 2), inflate(unit_matrix(q, 2, 1, 0), 2)};
  CHECK(algebra_closure(gens, true).dim() == 4);
}
