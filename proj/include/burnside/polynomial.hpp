#ifndef BURNSIDE_POLYNOMIAL_HPP
#define BURNSIDE_POLYNOMIAL_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "burnside/field.hpp"
#include "burnside/linalg.hpp"

namespace burnside {

/// Univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  explicit Polynomial(Field field) : field_(field) {}
  Polynomial(Field field, std::vector<FieldElement> coeffs);

  static Polynomial constant(const FieldElement& c);
  static Polynomial x(const Field& field);
  /// x - root.
  static Polynomial linear(const FieldElement& root);
  static Polynomial from_ints(const Field& field, const std::vector<long>& coeffs);

  const Field& field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  FieldElement coeff(std::size_t k) const;
  const FieldElement& leading() const;

  Polynomial monic() const;
  Polynomial derivative() const;
  FieldElement operator()(const FieldElement& at) const;
  /// Horner evaluation at a square matrix.
  Matrix operator()(const Matrix& at) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const FieldElement& scalar);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const FieldElement& s) { return a *= s; }
  friend Polynomial operator/(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator%(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  /// Canonical order: by degree, then coefficients from the top down.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  Field field_;
  std::vector<FieldElement> coeffs_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// base^exponent mod modulus.
Polynomial powmod(const Polynomial& base, const mpz_class& exponent, const Polynomial& modulus);

/// det(xI - A): fraction-free Bareiss elimination over Q, Hessenberg reduction
/// over finite fields.
Polynomial char_poly(const Matrix& a);

namespace detail {
Polynomial char_poly_bareiss(const Matrix& a);
Polynomial char_poly_hessenberg(const Matrix& a);
}  // namespace detail

struct IrreducibleFactor {
  Polynomial factor;  // monic irreducible
  unsigned multiplicity;
};

/// Squarefree decomposition of a nonzero polynomial over a finite field:
/// pairs (g_i, i) with f = lc * prod g_i^i and every g_i squarefree.
std::vector<IrreducibleFactor> squarefree_decomposition(const Polynomial& f);

/// Complete factorization over a finite field into monic irreducibles,
/// sorted canonically. Randomized splitting draws from the given seed.
std::vector<IrreducibleFactor> factor_finite(const Polynomial& f, std::uint64_t seed = 0);

/// Irreducibility over a finite field (Ben-Or test).
bool is_irreducible_finite(const Polynomial& f);

/// Linear-factor extraction: the roots of f in its field with multiplicity
/// (sorted canonically, repeated per multiplicity) and the cofactor that has
/// no roots left.
struct LinearPart {
  std::vector<FieldElement> roots;
  Polynomial cofactor;
};
LinearPart linear_part(const Polynomial& f);

struct SplitResult {
  bool splits = false;
  /// All roots with multiplicity, canonical order; empty unless splits.
  std::vector<FieldElement> roots;
};

/// Whether f (monic, degree >= 1) is a product of linear factors over its field.
/// Throws NonMonicInput otherwise.
SplitResult splits_with_roots(const Polynomial& f);

/// A square matrix is triangularizable over its field iff its char poly splits.
bool is_triangularizable_single(const Matrix& a);

}  // namespace burnside

#endif  // BURNSIDE_POLYNOMIAL_HPP
