#ifndef BURNSIDE_QUATERNION_HPP
#define BURNSIDE_QUATERNION_HPP

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace burnside {

/// a + b i + c j + d k with rational coefficients; i^2 = j^2 = k^2 = ijk = -1.
class Quaternion {
 public:
  Quaternion() : coeffs_{0, 0, 0, 0} {}
  Quaternion(mpq_class a, mpq_class b, mpq_class c, mpq_class d);
  explicit Quaternion(const mpq_class& real) : Quaternion(real, 0, 0, 0) {}

  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }
  /// Parses "a+bi+cj+dk" with rational coefficients, e.g. "1/2-i+3k" or "-j".
  static Quaternion parse(std::string_view literal);

  const mpq_class& a() const { return coeffs_[0]; }
  const mpq_class& b() const { return coeffs_[1]; }
  const mpq_class& c() const { return coeffs_[2]; }
  const mpq_class& d() const { return coeffs_[3]; }
  const mpq_class& operator[](std::size_t index) const { return coeffs_[index]; }

  bool is_zero() const;
  Quaternion conj() const;
  /// a^2 + b^2 + c^2 + d^2.
  mpq_class norm() const;
  Quaternion inverse() const;

  Quaternion& operator+=(const Quaternion& other);
  Quaternion& operator-=(const Quaternion& other);
  Quaternion& operator*=(const Quaternion& other);
  Quaternion& operator*=(const mpq_class& scalar);

  friend Quaternion operator+(Quaternion x, const Quaternion& y) { return x += y; }
  friend Quaternion operator-(Quaternion x, const Quaternion& y) { return x -= y; }
  friend Quaternion operator*(const Quaternion& x, const Quaternion& y);
  friend Quaternion operator*(Quaternion x, const mpq_class& s) { return x *= s; }
  friend Quaternion operator*(const mpq_class& s, Quaternion x) { return x *= s; }
  Quaternion operator-() const;

  friend bool operator==(const Quaternion& x, const Quaternion& y) { return x.coeffs_ == y.coeffs_; }
  friend bool operator!=(const Quaternion& x, const Quaternion& y) { return !(x == y); }

  std::size_t hash() const;
  std::string to_string() const;

 private:
  std::array<mpq_class, 4> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Quaternion& x);

}  // namespace burnside

#endif  // BURNSIDE_QUATERNION_HPP
