#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "burnside/errors.hpp"
#include "burnside/linalg.hpp"
#include "burnside/polynomial.hpp"
#include "test_support.hpp"

using namespace burnside;
using burnside::testing::random_invertible;
using burnside::testing::random_matrix;

namespace {

// Laplace expansion of det(xI - A) with polynomial entries.
Polynomial cofactor_det(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  const Field f = m[0][0].field();
  Polynomial total(f);
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Polynomial term = m[0][c] * cofactor_det(minor);
    if (c % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

Polynomial char_poly_by_expansion(const Matrix& a) {
  const Field f = field_of(a);
  const std::size_t n = a.rows();
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(f)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      m[r][c] = Polynomial::constant(-a(r, c));
      if (r == c) m[r][c] += Polynomial::x(f);
    }
  return cofactor_det(m);
}

// Rational roots by the rational root theorem over integer coefficients.
std::vector<mpq_class> brute_force_rational_roots(const std::vector<long>& coeffs) {
  auto divisors = [](long v) {
    std::vector<long> out;
    v = std::labs(v);
    for (long d = 1; d <= v; ++d)
      if (v % d == 0) out.push_back(d);
    return out;
  };
  std::vector<mpq_class> roots;
  std::size_t low = 0;
  while (coeffs[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  for (long p : divisors(coeffs[low])) {
    for (long q : divisors(coeffs.back())) {
      for (long sign : {1L, -1L}) {
        mpq_class cand(sign * p, q);
        cand.canonicalize();
        mpq_class value = 0;
        for (std::size_t k = coeffs.size(); k-- > 0;) value = value * cand + coeffs[k];
        if (value == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

const std::vector<Field>& test_fields() {
  static const std::vector<Field> fields = {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(7),
                                            Field::finite(2, 2), Field::finite(3, 2)};
  return fields;
}

}  // namespace

TEST_CASE("basic matrix operations") {
  const Field q = Field::rationals();
  const Field f2 = Field::prime(2);
  CHECK(rank(identity_matrix(q, 3)) == 3);
  const Subspace k = kernel(unit_matrix(q, 2, 0, 1));
  CHECK(k == Subspace::span(q, 2, std::vector<Vector>{unit_vector(q, 2, 0)}));
  const Matrix u = matrix_from_rows(f2, {{1, 1}, {0, 1}});
  CHECK(inverse(u) == u);
  CHECK_THROWS_AS(inverse(matrix_from_rows(q, {{1, 2}, {2, 4}})), SingularMatrix);
  CHECK_THROWS_AS(identity_matrix(q, 2) * identity_matrix(q, 3), ShapeMismatch);
  CHECK(zero_matrix(q, 2, 3).is_zero());
  CHECK(identity_matrix(q, 2).transpose() == identity_matrix(q, 2));
}

TEST_CASE("rref and kernel dimensions") {
  std::mt19937_64 rng(3);
  for (const Field& f : test_fields()) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t rows = 1 + rng() % 4;
      const std::size_t cols = 1 + rng() % 4;
      Matrix m(rows, cols, f.zero());
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng() % 3 == 0 ? f.zero() : f.random(rng);
      const RowEchelon e = rref(m);
      for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        CHECK(e.reduced(i, e.pivots[i]).is_one());
        if (i > 0) CHECK(e.pivots[i] > e.pivots[i - 1]);
        for (std::size_t r = 0; r < rows; ++r)
          if (r != i) CHECK(e.reduced(r, e.pivots[i]).is_zero());
      }
      const Subspace k = kernel(m);
      CHECK(k.dim() == cols - e.rank());
      for (const auto& v : k.basis()) CHECK(is_zero(apply_matrix(m, v)));
    }
  }
}

TEST_CASE("subspace canonicalization is idempotent under basis permutation") {
  std::mt19937_64 rng(11);
  for (const Field& f : test_fields()) {
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 2 + rng() % 4;
      std::vector<Vector> vs;
      for (std::size_t k = 0; k < 1 + rng() % n; ++k) {
        Vector v(n, f.zero());
        for (auto& x : v) x = f.random(rng);
        vs.push_back(v);
      }
      const Subspace a = Subspace::span(f, n, vs);
      std::vector<Vector> shuffled = vs;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (auto& v : shuffled) {
        const FieldElement s = f.random(rng);
        if (!s.is_zero())
          for (auto& x : v) x *= s;
      }
      const Subspace b = Subspace::span(f, n, shuffled);
      CHECK(a == b);
      CHECK(a.basis() == b.basis());
      CHECK(Subspace::span(f, n, a.basis()).basis() == a.basis());
    }
  }
}

TEST_CASE("char_poly examples") {
  const Field q = Field::rationals();
  const Field f2 = Field::prime(2);
  CHECK(char_poly(unit_matrix(q, 2, 0, 1)) == Polynomial::from_ints(q, {0, 0, 1}));
  for (std::size_t n = 1; n <= 4; ++n) {
    Polynomial expected = Polynomial::constant(q.one());
    for (std::size_t k = 0; k < n; ++k) expected *= Polynomial::linear(q.one());
    CHECK(char_poly(identity_matrix(q, n)) == expected);
  }
  // companion of x^2 + x + 1: det [[x, 1], [1, x + 1]] = x^2 + x + 1 in characteristic 2.
  const Matrix omega = matrix_from_rows(f2, {{0, 1}, {1, 1}});
  CHECK(char_poly(omega) == Polynomial::from_ints(f2, {1, 1, 1}));
  CHECK_FALSE(is_triangularizable_single(omega));
  CHECK_THROWS_AS(char_poly(zero_matrix(q, 2, 3)), ShapeMismatch);
}

TEST_CASE("char_poly matches cofactor expansion and both elimination paths") {
  std::mt19937_64 rng(5);
  for (const Field& f : test_fields()) {
    for (int trial = 0; trial < 30; ++trial) {
      const Matrix a = random_matrix(f, 1 + rng() % 4, rng);
      const Polynomial expected = char_poly_by_expansion(a);
      CHECK(char_poly(a) == expected);
      CHECK(detail::char_poly_hessenberg(a) == expected);
      CHECK(detail::char_poly_bareiss(a) == expected);
    }
  }
}

TEST_CASE("char_poly is a similarity invariant") {
  std::mt19937_64 rng(17);
  for (const Field& f : test_fields()) {
    CAPTURE(f.to_string());
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      const Matrix a = random_matrix(f, n, rng);
      const Matrix p = random_invertible(f, n, rng);
      const Polynomial c = char_poly(a);
      REQUIRE(c.degree() == static_cast<int>(n));
      REQUIRE(c.is_monic());
      REQUIRE(char_poly(p * a * inverse(p)) == c);
    }
  }
}

TEST_CASE("Cayley-Hamilton") {
  std::mt19937_64 rng(23);
  for (const Field& f : test_fields()) {
    CAPTURE(f.to_string());
    for (int trial = 0; trial < 100; ++trial) {
      const Matrix a = random_matrix(f, 1 + rng() % 5, rng);
      REQUIRE(char_poly(a)(a).is_zero());
    }
  }
}

TEST_CASE("polynomial division and gcd") {
  std::mt19937_64 rng(29);
  for (const Field& f : test_fields()) {
    for (int trial = 0; trial < 100; ++trial) {
      auto rnd = [&](int deg) {
        std::vector<FieldElement> c;
        for (int k = 0; k <= deg; ++k) c.push_back(f.random(rng));
        return Polynomial(f, c);
      };
      const Polynomial a = rnd(static_cast<int>(rng() % 6));
      Polynomial b = rnd(static_cast<int>(rng() % 4));
      if (b.is_zero()) continue;
      const auto [quot, rem] = divmod(a, b);
      CHECK(quot * b + rem == a);
      CHECK(rem.degree() < b.degree());
      const Polynomial g = gcd(a * b, b * b);
      CHECK(((a * b) % g).is_zero());
      CHECK(((b * b) % g).is_zero());
      CHECK((g % b).is_zero());
    }
  }
  CHECK_THROWS_AS(divmod(Polynomial::x(Field::prime(3)), Polynomial(Field::prime(3))), DivisionByZero);
}

TEST_CASE("splits_with_roots examples") {
  const Field f5 = Field::prime(5);
  const auto s = splits_with_roots(Polynomial::from_ints(f5, {1, 0, 1}));
  CHECK(s.splits);
  CHECK(s.roots == std::vector<FieldElement>{f5.from_int(2), f5.from_int(3)});
  CHECK_FALSE(splits_with_roots(Polynomial::from_ints(Field::prime(3), {1, 0, 1})).splits);
  CHECK_FALSE(splits_with_roots(Polynomial::from_ints(Field::rationals(), {1, -3, 1})).splits);
  const auto single = splits_with_roots(Polynomial::linear(Field::rationals().parse_element("-7/3")));
  CHECK(single.splits);
  CHECK(single.roots == std::vector<FieldElement>{Field::rationals().parse_element("-7/3")});
  CHECK_THROWS_AS(splits_with_roots(Polynomial::from_ints(f5, {1, 2})), NonMonicInput);
  CHECK(is_triangularizable_single(matrix_from_rows(f5, {{0, 1}, {-1, 0}})));
  CHECK(is_triangularizable_single(matrix_from_rows(Field::rationals(), {{0, 3, 4}, {0, 0, 5}, {0, 0, 0}})));
}

TEST_CASE("roots reconstruct split polynomials") {
  std::mt19937_64 rng(31);
  for (const Field& f : test_fields()) {
    CAPTURE(f.to_string());
    for (int trial = 0; trial < 100; ++trial) {
      Polynomial g = Polynomial::constant(f.one());
      const int deg = 1 + static_cast<int>(rng() % 5);
      for (int k = 0; k < deg; ++k) g *= Polynomial::linear(f.random(rng));
      if (rng() % 2 == 0) g *= Polynomial::from_ints(f, {1, 1, 1});
      const auto s = splits_with_roots(g);
      if (!s.splits) continue;
      Polynomial rebuilt = Polynomial::constant(f.one());
      for (const auto& r : s.roots) rebuilt *= Polynomial::linear(r);
      REQUIRE(rebuilt == g);
      REQUIRE(std::is_sorted(s.roots.begin(), s.roots.end()));
    }
  }
}

TEST_CASE("rational roots agree with the rational root theorem") {
  std::mt19937_64 rng(37);
  const Field q = Field::rationals();
  for (int trial = 0; trial < 300; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 4);
    std::vector<long> c(deg + 1);
    for (auto& x : c) x = static_cast<long>(rng() % 13) - 6;
    if (c.back() == 0) c.back() = 1 + static_cast<long>(rng() % 4);
    if (std::all_of(c.begin(), c.end() - 1, [](long x) { return x == 0; })) c[0] = 1;
    const Polynomial f = Polynomial::from_ints(q, c);
    std::vector<mpq_class> distinct;
    for (const auto& r : linear_part(f).roots)
      if (distinct.empty() || distinct.back() != r.rational()) distinct.push_back(r.rational());
    CAPTURE(f.to_string());
    CHECK(distinct == brute_force_rational_roots(c));
    const LinearPart lp = linear_part(f);
    Polynomial rebuilt = lp.cofactor;
    for (const auto& r : lp.roots) rebuilt *= Polynomial::linear(r);
    CHECK(rebuilt.monic() == f.monic());
  }
  // Larger roots and denominators.
  Polynomial g = Polynomial::linear(q.parse_element("1234/7")) * Polynomial::linear(q.parse_element("-99/40")) *
                 Polynomial::from_ints(q, {2, 0, 1});
  const LinearPart lp = linear_part(g);
  CHECK(lp.roots == std::vector<FieldElement>{q.parse_element("-99/40"), q.parse_element("1234/7")});
  CHECK(lp.cofactor.monic() == Polynomial::from_ints(q, {2, 0, 1}));
}

TEST_CASE("finite-field factorization") {
  std::mt19937_64 rng(41);
  for (const Field& f : {Field::prime(2), Field::prime(3), Field::prime(7), Field::finite(2, 2), Field::finite(3, 2)}) {
    CAPTURE(f.to_string());
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<FieldElement> c;
      const int deg = 1 + static_cast<int>(rng() % 8);
      for (int k = 0; k < deg; ++k) c.push_back(f.random(rng));
      c.push_back(f.one());
      const Polynomial p(f, c);
      const auto factors = factor_finite(p, trial);
      Polynomial rebuilt = Polynomial::constant(f.one());
      for (const auto& [g, mult] : factors) {
        REQUIRE(g.is_monic());
        REQUIRE(is_irreducible_finite(g));
        for (unsigned k = 0; k < mult; ++k) rebuilt *= g;
      }
      REQUIRE(rebuilt == p);
      for (const auto& [g, mult] : squarefree_decomposition(p)) REQUIRE(gcd(g, g.derivative()).is_one());
    }
  }
  // Exhaustive oracle: irreducible quadratics over GF(3) are those without roots.
  const Field f3 = Field::prime(3);
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b) {
      const Polynomial p = Polynomial::from_ints(f3, {b, a, 1});
      bool has_root = false;
      for (const auto& x : enumerate_elements(f3)) has_root = has_root || p(x).is_zero();
      CHECK(is_irreducible_finite(p) == !has_root);
    }
}

TEST_CASE("echelon basis coordinates") {
  const Field f3 = Field::prime(3);
  EchelonBasis basis(f3, 3);
  CHECK(basis.insert({f3.from_int(1), f3.from_int(2), f3.from_int(0)}));
  CHECK(basis.insert({f3.from_int(0), f3.from_int(1), f3.from_int(1)}));
  CHECK_FALSE(basis.insert({f3.from_int(1), f3.from_int(0), f3.from_int(1)}));
  const Vector v{f3.from_int(2), f3.from_int(0), f3.from_int(2)};
  const auto coords = basis.coordinates(v);
  REQUIRE(coords.has_value());
  Vector rebuilt = zero_vector(f3, 3);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t k = 0; k < 3; ++k) rebuilt[k] += (*coords)[i] * basis.rows()[i][k];
  CHECK(rebuilt == v);
  CHECK_FALSE(basis.coordinates(unit_vector(f3, 3, 2)).has_value());
}
