#ifndef BURNSIDE_FIELD_HPP
#define BURNSIDE_FIELD_HPP

// Exact scalar arithmetic over the rationals and over finite fields GF(p^m).
//
// A Field is a cheap handle to an interned descriptor: two handles compare
// equal exactly when kind, characteristic, degree and modulus all agree, and
// the descriptor outlives every element that refers to it.
//
// Elements of GF(p^m) are stored as their integer code sum_i c_i p^i, where
// c_0 + c_1 t + ... + c_{m-1} t^{m-1} is the residue modulo the defining
// polynomial. Codes order elements canonically; rationals order by value.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace burnside {

namespace detail {
struct FieldData;
}

enum class FieldKind { Rationals, FiniteField };

class FieldElement;

class Field {
 public:
  /// The field of rational numbers.
  static Field rationals();
  /// GF(p) for a prime p < 2^32.
  static Field prime(std::uint64_t p);
  /// GF(p^m) with the canonical modulus: the lexicographically least monic
  /// irreducible of degree m, comparing coefficients from degree m-1 down.
  static Field finite(std::uint64_t p, unsigned m);
  /// GF(p^m) with a caller-supplied monic modulus (coefficients lowest degree first).
  static Field finite(std::uint64_t p, const std::vector<std::uint64_t>& modulus);
  /// Parses "Q", "GF(p)", "GF(p^m)", "GF(q)" or "GF(q:poly)" with poly in t.
  static Field parse(std::string_view spec);

  FieldKind kind() const;
  bool is_rationals() const { return kind() == FieldKind::Rationals; }
  bool is_finite() const { return kind() == FieldKind::FiniteField; }
  /// 0 for the rationals.
  std::uint64_t characteristic() const;
  /// Extension degree m over the prime field (1 for Q and GF(p)).
  unsigned degree() const;
  /// Number of elements q = p^m; 0 for the rationals.
  std::uint64_t order() const;
  /// Modulus coefficients lowest degree first; empty unless degree() > 1.
  const std::vector<std::uint64_t>& modulus() const;
  /// Prime subfield GF(p), or Q itself.
  Field prime_field() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long value) const;
  FieldElement from_integer(const mpz_class& value) const;
  FieldElement from_rational(const mpq_class& value) const;
  /// Finite fields only: the element with the given code (< order()).
  FieldElement from_code(std::uint64_t code) const;
  /// Finite fields only: the element c_0 + c_1 t + ... from prime-field digits.
  FieldElement from_digits(const std::vector<std::uint64_t>& digits) const;
  /// The residue class of t (the adjoined root); throws for degree-1 fields.
  FieldElement generator() const;
  /// Parses a scalar literal: "a/b" or "a" over Q; a polynomial in t over GF(p^m).
  FieldElement parse_element(std::string_view literal) const;

  /// Uniform element of a finite field; small-height rational otherwise.
  FieldElement random(std::mt19937_64& rng) const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.data_ == b.data_; }
  friend bool operator!=(const Field& a, const Field& b) { return a.data_ != b.data_; }

  const detail::FieldData* data() const { return data_; }
  explicit Field(const detail::FieldData* data) : data_(data) {}

 private:
  const detail::FieldData* data_;
};

std::ostream& operator<<(std::ostream& os, const Field& field);

class FieldElement {
 public:
  /// An element with no field; only assignable and destructible.
  FieldElement() = default;

  Field field() const;
  bool has_field() const { return field_ != nullptr; }

  bool is_zero() const;
  bool is_one() const;

  /// Finite fields: the integer code. Throws for rationals.
  std::uint64_t code() const;
  /// Rationals: the value. Throws for finite fields.
  const mpq_class& rational() const;
  /// Finite fields: the m coordinates over GF(p), lowest degree first.
  std::vector<std::uint64_t> digits() const;

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;
  FieldElement pow(const mpz_class& exponent) const;

  FieldElement& operator+=(const FieldElement& other);
  FieldElement& operator-=(const FieldElement& other);
  FieldElement& operator*=(const FieldElement& other);
  FieldElement& operator/=(const FieldElement& other);

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement operator-() const;

  /// Throws MixedFieldError when the fields differ.
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  /// Canonical total order: by code over finite fields, by value over Q.
  friend bool operator<(const FieldElement& a, const FieldElement& b);

  std::size_t hash() const;
  std::string to_string() const;

 private:
  friend class Field;
  FieldElement(const detail::FieldData* field, std::uint64_t code) : field_(field), value_(code) {}
  FieldElement(const detail::FieldData* field, mpq_class value) : field_(field), value_(std::move(value)) {}

  void check_same(const FieldElement& other) const;

  const detail::FieldData* field_ = nullptr;
  std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

/// Maps x into K along a supported tower: GF(p) -> GF(p^m) as constants, or F == K.
/// Throws UnsupportedTower for any other pair.
FieldElement embed_subfield(const FieldElement& x, const Field& target);

/// True when (sub, super) is a supported tower.
bool is_supported_tower(const Field& sub, const Field& super);

/// Whether x lies in the image of `sub` under the tower embedding.
bool lies_in_subfield(const FieldElement& x, const Field& sub);

/// Inverse of embed_subfield for elements that lie in the subfield.
FieldElement restrict_to_subfield(const FieldElement& x, const Field& sub);

/// Coordinates of x over `sub` in the power basis 1, t, ..., t^{m-1} (length [K:F]).
std::vector<FieldElement> subfield_coordinates(const FieldElement& x, const Field& sub);

/// Inverse of subfield_coordinates.
FieldElement from_subfield_coordinates(std::span<const FieldElement> coords, const Field& super);

/// Every element of a finite field, in code order.
std::vector<FieldElement> enumerate_elements(const Field& field);

bool is_prime(std::uint64_t n);

}  // namespace burnside

template <>
struct std::hash<burnside::FieldElement> {
  std::size_t operator()(const burnside::FieldElement& x) const { return x.hash(); }
};

#endif  // BURNSIDE_FIELD_HPP
