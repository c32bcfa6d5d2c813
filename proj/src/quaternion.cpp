#include "burnside/quaternion.hpp"

#include <cctype>
#include <ostream>

#include "burnside/errors.hpp"

namespace burnside {

Quaternion::Quaternion(mpq_class a, mpq_class b, mpq_class c, mpq_class d)
    : coeffs_{std::move(a), std::move(b), std::move(c), std::move(d)} {
  for (auto& x : coeffs_) x.canonicalize();
}

Quaternion Quaternion::parse(std::string_view literal) {
  const std::string original(literal);
  std::string s;
  for (char ch : literal) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw ParseError("empty quaternion literal", original, 0, 1);
  Quaternion out;
  std::size_t pos = 0;
  bool first = true;
  while (pos < s.size()) {
    const std::size_t start = pos;
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' between terms", original, 0, pos + 1);
    }
    std::string num;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) num.push_back(s[pos++]);
    std::string den;
    if (pos < s.size() && s[pos] == '/') {
      if (num.empty()) throw ParseError("'/' without numerator", original, 0, pos + 1);
      ++pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) den.push_back(s[pos++]);
      if (den.empty()) throw ParseError("expected denominator digits", original, 0, pos + 1);
    }
    if (pos < s.size() && s[pos] == '*') {
      if (num.empty()) throw ParseError("'*' without coefficient", original, 0, pos + 1);
      ++pos;
    }
    std::size_t unit = 0;
    if (pos < s.size() && (s[pos] == 'i' || s[pos] == 'j' || s[pos] == 'k')) {
      unit = s[pos] == 'i' ? 1 : (s[pos] == 'j' ? 2 : 3);
      ++pos;
    } else if (num.empty()) {
      throw ParseError("expected a coefficient or unit", original, 0, start + 1);
    }
    mpz_class n = num.empty() ? mpz_class(1) : mpz_class(num);
    mpz_class d = den.empty() ? mpz_class(1) : mpz_class(den);
    if (d == 0) throw ParseError("zero denominator", original, 0, start + 1);
    mpq_class value(n, d);
    value.canonicalize();
    if (sign < 0) value = -value;
    out.coeffs_[unit] += value;
    first = false;
  }
  return out;
}

bool Quaternion::is_zero() const {
  for (const auto& x : coeffs_) {
    if (x != 0) return false;
  }
  return true;
}

Quaternion Quaternion::conj() const { return {coeffs_[0], -coeffs_[1], -coeffs_[2], -coeffs_[3]}; }

mpq_class Quaternion::norm() const {
  mpq_class n = 0;
  for (const auto& x : coeffs_) n += x * x;
  return n;
}

Quaternion Quaternion::inverse() const {
  const mpq_class n = norm();
  if (n == 0) throw DivisionByZero("inverse of the zero quaternion");
  Quaternion c = conj();
  c *= mpq_class(1 / n);
  return c;
}

Quaternion& Quaternion::operator+=(const Quaternion& other) {
  for (std::size_t i = 0; i < 4; ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Quaternion& Quaternion::operator-=(const Quaternion& other) {
  for (std::size_t i = 0; i < 4; ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Quaternion operator*(const Quaternion& x, const Quaternion& y) {
  const auto& [a1, b1, c1, d1] = x.coeffs_;
  const auto& [a2, b2, c2, d2] = y.coeffs_;
  return {a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2, a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
          a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2, a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2};
}

Quaternion& Quaternion::operator*=(const Quaternion& other) { return *this = *this * other; }

Quaternion& Quaternion::operator*=(const mpq_class& scalar) {
  for (auto& x : coeffs_) x *= scalar;
  return *this;
}

Quaternion Quaternion::operator-() const { return {-coeffs_[0], -coeffs_[1], -coeffs_[2], -coeffs_[3]}; }

std::size_t Quaternion::hash() const {
  std::size_t h = 0;
  for (const auto& x : coeffs_) {
    h = h * 1000003UL ^ (mpz_fdiv_ui(x.get_num_mpz_t(), 1000000007UL) * 31 + mpz_fdiv_ui(x.get_den_mpz_t(), 998244353UL));
  }
  return h;
}

std::string Quaternion::to_string() const {
  static const char* units[] = {"", "i", "j", "k"};
  std::string out;
  for (std::size_t u = 0; u < 4; ++u) {
    const mpq_class& x = coeffs_[u];
    if (x == 0) continue;
    std::string mag = mpq_class(abs(x)).get_str();
    if (x < 0) {
      out += "-";
    } else if (!out.empty()) {
      out += "+";
    }
    if (u == 0 || mag != "1") out += mag;
    out += units[u];
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& x) { return os << x.to_string(); }

}  // namespace burnside
