#include "burnside/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <tuple>

#include "burnside/errors.hpp"

namespace burnside {

namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::Rationals;
  std::uint64_t p = 0;
  unsigned m = 1;
  std::uint64_t q = 0;
  std::vector<std::uint64_t> modulus;  // monic, size m + 1, only when m > 1
  std::vector<std::uint64_t> pow_p;    // p^i for i < m
  // Zech-style log tables for small extension fields.
  bool has_tables = false;
  std::vector<std::uint32_t> log_table;
  std::vector<std::uint32_t> exp_table;  // length 2(q-1)
};

}  // namespace detail

using detail::FieldData;

namespace {

using Digits = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    e >>= 1U;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// --- dense polynomials over GF(p), used before any Field exists ---

void trim(Digits& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Digits poly_mod(Digits a, const Digits& b, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = invmod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Digits poly_mulmod(const Digits& a, const Digits& b, const Digits& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Digits prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = (prod[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  return poly_mod(std::move(prod), f, p);
}

Digits poly_gcd(Digits a, Digits b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Digits r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Digits poly_powmod_p(const Digits& base, std::uint64_t e, const Digits& f, std::uint64_t p) {
  Digits result{1};
  Digits b = poly_mod(base, f, p);
  while (e > 0) {
    if (e & 1U) result = poly_mulmod(result, b, f, p);
    b = poly_mulmod(b, b, f, p);
    e >>= 1U;
  }
  return result;
}

// Ben-Or: f of degree m is irreducible iff gcd(f, x^{p^i} - x) = 1 for i <= m/2.
bool is_irreducible_mod_p(const Digits& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  if (m <= 1) return m == 1;
  Digits h{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = poly_powmod_p(h, p, f, p);
    Digits diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    if (diff.empty()) return false;
    if (poly_gcd(f, diff, p).size() > 1) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// --- element-level arithmetic on codes ---

Digits decode(const FieldData& f, std::uint64_t code) {
  Digits d(f.m, 0);
  for (unsigned i = 0; i < f.m; ++i) {
    d[i] = code % f.p;
    code /= f.p;
  }
  return d;
}

std::uint64_t encode(const FieldData& f, const Digits& d) {
  std::uint64_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * f.p + d[i];
  return code;
}

std::uint64_t add_codes(const FieldData& f, std::uint64_t a, std::uint64_t b) {
  if (f.m == 1) {
    const std::uint64_t s = a + b;
    return s >= f.p ? s - f.p : s;
  }
  if (f.p == 2) return a ^ b;
  std::uint64_t result = 0;
  for (unsigned i = 0; i < f.m; ++i) {
    const std::uint64_t da = a % f.p;
    const std::uint64_t db = b % f.p;
    a /= f.p;
    b /= f.p;
    std::uint64_t s = da + db;
    if (s >= f.p) s -= f.p;
    result += s * f.pow_p[i];
  }
  return result;
}

std::uint64_t neg_code(const FieldData& f, std::uint64_t a) {
  if (f.m == 1) return a == 0 ? 0 : f.p - a;
  if (f.p == 2) return a;
  std::uint64_t result = 0;
  for (unsigned i = 0; i < f.m; ++i) {
    const std::uint64_t d = a % f.p;
    a /= f.p;
    result += (d == 0 ? 0 : f.p - d) * f.pow_p[i];
  }
  return result;
}

std::uint64_t slow_mul_codes(const FieldData& f, std::uint64_t a, std::uint64_t b) {
  return encode(f, poly_mulmod(decode(f, a), decode(f, b), f.modulus, f.p));
}

std::uint64_t mul_codes(const FieldData& f, std::uint64_t a, std::uint64_t b) {
  if (f.m == 1) return mulmod(a, b, f.p);
  if (a == 0 || b == 0) return 0;
  if (f.has_tables) return f.exp_table[f.log_table[a] + f.log_table[b]];
  return slow_mul_codes(f, a, b);
}

std::uint64_t pow_codes(const FieldData& f, std::uint64_t a, std::uint64_t e) {
  std::uint64_t result = 1;
  while (e > 0) {
    if (e & 1U) result = mul_codes(f, result, a);
    a = mul_codes(f, a, a);
    e >>= 1U;
  }
  return result;
}

std::uint64_t inv_code(const FieldData& f, std::uint64_t a) {
  if (f.m == 1) return invmod(a, f.p);
  if (f.has_tables) return f.exp_table[(f.q - 1 - f.log_table[a]) % (f.q - 1)];
  return pow_codes(f, a, f.q - 2);
}

void build_tables(FieldData& f) {
  if (f.m == 1 || f.q > (1U << 16)) return;
  const std::uint64_t order = f.q - 1;
  const auto factors = prime_factors(order);
  std::uint64_t g = 0;
  for (std::uint64_t c = 2; c < f.q; ++c) {
    bool primitive = true;
    for (auto r : factors) {
      if (pow_codes(f, c, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = c;
      break;
    }
  }
  f.exp_table.assign(2 * order, 0);
  f.log_table.assign(f.q, 0);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    f.exp_table[i] = static_cast<std::uint32_t>(x);
    f.exp_table[i + order] = static_cast<std::uint32_t>(x);
    f.log_table[x] = static_cast<std::uint32_t>(i);
    x = slow_mul_codes(f, x, g);
  }
  f.has_tables = true;
}

// --- interning registry ---

using Key = std::tuple<int, std::uint64_t, std::vector<std::uint64_t>>;

const FieldData* intern(FieldData data) {
  static std::mutex mutex;
  static std::map<Key, std::unique_ptr<FieldData>> registry;
  Key key{static_cast<int>(data.kind), data.p, data.modulus};
  if (data.kind == FieldKind::FiniteField && data.m == 1) std::get<2>(key) = {};
  std::lock_guard<std::mutex> lock(mutex);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();
  auto owned = std::make_unique<FieldData>(std::move(data));
  build_tables(*owned);
  const FieldData* ptr = owned.get();
  registry.emplace(std::move(key), std::move(owned));
  return ptr;
}

FieldData make_finite(std::uint64_t p, unsigned m, Digits modulus) {
  if (!is_prime(p)) throw PreconditionViolated("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) throw PreconditionViolated("characteristic must be below 2^32");
  if (m == 0) throw PreconditionViolated("extension degree must be positive");
  FieldData d;
  d.kind = FieldKind::FiniteField;
  d.p = p;
  d.m = m;
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < m; ++i) {
    d.pow_p.push_back(static_cast<std::uint64_t>(q));
    q *= p;
    if (q > (static_cast<unsigned __int128>(1) << 62)) throw PreconditionViolated("field order must be below 2^62");
  }
  d.q = static_cast<std::uint64_t>(q);
  if (m > 1) d.modulus = std::move(modulus);
  return d;
}

std::string trim_spaces(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// Parses a polynomial in t with integer coefficients; returns coefficients
// (possibly negative, unreduced) lowest degree first.
std::vector<mpz_class> parse_int_poly(const std::string& s, const std::string& original) {
  if (s.empty()) throw ParseError("empty polynomial literal", original, 0, 1);
  std::vector<mpz_class> coeffs;
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    const std::size_t term_start = i;
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (any) {
      throw ParseError("expected '+' or '-' between terms", original, 0, i + 1);
    }
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    bool has_t = false;
    unsigned long exponent = 0;
    if (i < s.size() && s[i] == '*') {
      if (digits.empty()) throw ParseError("'*' without coefficient", original, 0, i + 1);
      ++i;
      if (i >= s.size() || s[i] != 't') throw ParseError("expected 't' after '*'", original, 0, i + 1);
    }
    if (i < s.size() && s[i] == 't') {
      has_t = true;
      exponent = 1;
      ++i;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string e;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e.push_back(s[i++]);
        if (e.empty()) throw ParseError("expected exponent after '^'", original, 0, i + 1);
        if (e.size() > 6) throw ParseError("exponent too large", original, 0, i + 1);
        exponent = std::stoul(e);
      }
    }
    if (digits.empty() && !has_t) throw ParseError("expected a term", original, 0, term_start + 1);
    mpz_class c = digits.empty() ? mpz_class(1) : mpz_class(digits);
    if (sign < 0) c = -c;
    if (coeffs.size() <= exponent) coeffs.resize(exponent + 1, 0);
    coeffs[exponent] += c;
    any = true;
  }
  return coeffs;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// ----------------------------------------------------------------------------
// Field

Field Field::rationals() {
  FieldData d;
  d.kind = FieldKind::Rationals;
  return Field(intern(std::move(d)));
}

Field Field::prime(std::uint64_t p) { return Field(intern(make_finite(p, 1, {}))); }

Field Field::finite(std::uint64_t p, unsigned m) {
  if (m == 1) return prime(p);
  FieldData probe = make_finite(p, m, {});
  // Lowest code of the lower coefficients first; code order equals
  // lexicographic order from the degree m-1 coefficient down.
  for (std::uint64_t code = 1; code < probe.q; ++code) {
    if (code % p == 0) continue;  // constant term must be nonzero
    Digits f(m + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[m] = 1;
    if (is_irreducible_mod_p(f, p)) return Field(intern(make_finite(p, m, f)));
  }
  throw StructureViolation("no irreducible polynomial found");
}

Field Field::finite(std::uint64_t p, const std::vector<std::uint64_t>& modulus) {
  if (!is_prime(p)) throw PreconditionViolated("field characteristic " + std::to_string(p) + " is not prime");
  Digits f = modulus;
  for (auto& c : f) c %= p;
  trim(f);
  if (f.size() < 2) throw PreconditionViolated("modulus must have positive degree");
  if (f.back() != 1) throw PreconditionViolated("modulus must be monic");
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  if (m == 1) return prime(p);
  if (!is_irreducible_mod_p(f, p)) throw PreconditionViolated("modulus is reducible over GF(" + std::to_string(p) + ")");
  return Field(intern(make_finite(p, m, f)));
}

Field Field::parse(std::string_view spec) {
  const std::string original(spec);
  const std::string s = trim_spaces(spec);
  if (s == "Q" || s == "QQ") return rationals();
  if (s.size() < 5 || s.compare(0, 3, "GF(") != 0 || s.back() != ')') {
    throw ParseError("unknown field; expected Q or GF(...)", original, 0, 1);
  }
  std::string body = s.substr(3, s.size() - 4);
  std::string poly;
  if (auto colon = body.find(':'); colon != std::string::npos) {
    poly = body.substr(colon + 1);
    body = body.substr(0, colon);
  }
  std::uint64_t p = 0;
  unsigned m = 1;
  try {
    std::size_t used = 0;
    if (auto caret = body.find('^'); caret != std::string::npos) {
      p = std::stoull(body.substr(0, caret), &used);
      if (used != caret) throw ParseError("bad characteristic", original, 0, 4);
      const std::string e = body.substr(caret + 1);
      m = static_cast<unsigned>(std::stoul(e, &used));
      if (used != e.size() || m == 0) throw ParseError("bad extension degree", original, 0, 4 + caret + 1);
    } else {
      std::uint64_t q = std::stoull(body, &used);
      if (used != body.size()) throw ParseError("bad field order", original, 0, 4);
      if (q < 2) throw ParseError("field order must be a prime power", original, 0, 4);
      // Smallest prime factor determines p.
      std::uint64_t d = 2;
      while (d * d <= q && q % d != 0) ++d;
      p = (q % d == 0) ? d : q;
      std::uint64_t rest = q;
      m = 0;
      while (rest % p == 0) {
        rest /= p;
        ++m;
      }
      if (rest != 1) throw ParseError("field order must be a prime power", original, 0, 4);
    }
  } catch (const std::invalid_argument&) {
    throw ParseError("bad field specification", original, 0, 4);
  } catch (const std::out_of_range&) {
    throw ParseError("field specification out of range", original, 0, 4);
  }
  if (!is_prime(p)) throw ParseError("characteristic is not prime", original, 0, 4);
  try {
    if (poly.empty()) return finite(p, m);
    auto coeffs = parse_int_poly(poly, original);
    Digits f(coeffs.size());
    const mpz_class pz(std::to_string(p));
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      mpz_class r = coeffs[i] % pz;
      if (r < 0) r += pz;
      f[i] = r.get_ui();
    }
    trim(f);
    if (f.size() != m + 1) throw ParseError("modulus degree does not match field order", original, 0, 1);
    return finite(p, f);
  } catch (const PreconditionViolated& e) {
    throw ParseError(e.what(), original, 0, 1);
  }
}

FieldKind Field::kind() const { return data_->kind; }
std::uint64_t Field::characteristic() const { return data_->p; }
unsigned Field::degree() const { return data_->m; }
std::uint64_t Field::order() const { return data_->q; }
const std::vector<std::uint64_t>& Field::modulus() const { return data_->modulus; }

Field Field::prime_field() const {
  if (is_rationals()) return *this;
  return prime(data_->p);
}

FieldElement Field::zero() const {
  if (is_rationals()) return FieldElement(data_, mpq_class(0));
  return FieldElement(data_, std::uint64_t{0});
}

FieldElement Field::one() const {
  if (is_rationals()) return FieldElement(data_, mpq_class(1));
  return FieldElement(data_, std::uint64_t{1});
}

FieldElement Field::from_int(long value) const {
  if (is_rationals()) return FieldElement(data_, mpq_class(value));
  const auto p = static_cast<long long>(data_->p);
  long long r = static_cast<long long>(value) % p;
  if (r < 0) r += p;
  return FieldElement(data_, static_cast<std::uint64_t>(r));
}

FieldElement Field::from_integer(const mpz_class& value) const {
  if (is_rationals()) return FieldElement(data_, mpq_class(value));
  const mpz_class pz(std::to_string(data_->p));
  mpz_class r = value % pz;
  if (r < 0) r += pz;
  return FieldElement(data_, static_cast<std::uint64_t>(r.get_ui()));
}

FieldElement Field::from_rational(const mpq_class& value) const {
  if (is_rationals()) {
    mpq_class v = value;
    v.canonicalize();
    return FieldElement(data_, std::move(v));
  }
  return from_integer(value.get_num()) / from_integer(value.get_den());
}

FieldElement Field::from_code(std::uint64_t code) const {
  if (is_rationals()) throw PreconditionViolated("codes exist only for finite fields");
  if (code >= data_->q) throw PreconditionViolated("element code out of range");
  return FieldElement(data_, code);
}

FieldElement Field::from_digits(const std::vector<std::uint64_t>& digits) const {
  if (is_rationals()) throw PreconditionViolated("digits exist only for finite fields");
  if (digits.size() > data_->m) throw PreconditionViolated("too many digits");
  Digits d = digits;
  for (auto& x : d) x %= data_->p;
  d.resize(data_->m, 0);
  return FieldElement(data_, encode(*data_, d));
}

FieldElement Field::generator() const {
  if (is_rationals() || data_->m == 1) throw PreconditionViolated("field has no adjoined generator");
  return FieldElement(data_, data_->p);
}

FieldElement Field::parse_element(std::string_view literal) const {
  const std::string original(literal);
  const std::string s = trim_spaces(literal);
  if (s.empty()) throw ParseError("empty scalar literal", original, 0, 1);
  if (is_rationals()) {
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-') ++i;
    const std::size_t num_start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == num_start) throw ParseError("expected digits", original, 0, i + 1);
    mpz_class num(s.substr(num_start, i - num_start));
    if (s[0] == '-') num = -num;
    mpz_class den = 1;
    if (i < s.size()) {
      if (s[i] != '/') throw ParseError("unexpected character in rational literal", original, 0, i + 1);
      ++i;
      const std::size_t den_start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      if (i == den_start) throw ParseError("expected denominator digits", original, 0, i + 1);
      if (i != s.size()) throw ParseError("trailing characters in rational literal", original, 0, i + 1);
      den = mpz_class(s.substr(den_start, i - den_start));
      if (den == 0) throw ParseError("zero denominator", original, 0, den_start + 1);
    }
    mpq_class v(num, den);
    v.canonicalize();
    return FieldElement(data_, std::move(v));
  }
  if (data_->m == 1 && s.find('t') != std::string::npos) {
    throw ParseError("prime field literals cannot mention t", original, 0, s.find('t') + 1);
  }
  const auto coeffs = parse_int_poly(s, original);
  FieldElement result = zero();
  FieldElement power = one();
  const FieldElement t = data_->m > 1 ? generator() : one();
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    if (e > 0) power *= t;
    if (coeffs[e] != 0) result += from_integer(coeffs[e]) * power;
  }
  return result;
}

FieldElement Field::random(std::mt19937_64& rng) const {
  if (is_rationals()) {
    const long num = static_cast<long>(rng() % 19) - 9;
    const long den = static_cast<long>(rng() % 4) + 1;
    mpq_class v(num, den);
    v.canonicalize();
    return FieldElement(data_, std::move(v));
  }
  return FieldElement(data_, rng() % data_->q);
}

std::string Field::to_string() const {
  if (is_rationals()) return "Q";
  if (data_->m == 1) return "GF(" + std::to_string(data_->p) + ")";
  return "GF(" + std::to_string(data_->p) + "^" + std::to_string(data_->m) + ")";
}

std::ostream& operator<<(std::ostream& os, const Field& field) { return os << field.to_string(); }

// ----------------------------------------------------------------------------
// FieldElement

Field FieldElement::field() const {
  if (field_ == nullptr) throw MixedFieldError("element has no field");
  return Field(field_);
}

void FieldElement::check_same(const FieldElement& other) const {
  if (field_ != other.field_ || field_ == nullptr) {
    const std::string a = field_ ? Field(field_).to_string() : "<none>";
    const std::string b = other.field_ ? Field(other.field_).to_string() : "<none>";
    throw MixedFieldError("operands live in different fields: " + a + " vs " + b);
  }
}

bool FieldElement::is_zero() const {
  if (const auto* c = std::get_if<std::uint64_t>(&value_)) return *c == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool FieldElement::is_one() const {
  if (const auto* c = std::get_if<std::uint64_t>(&value_)) return *c == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t FieldElement::code() const {
  if (const auto* c = std::get_if<std::uint64_t>(&value_)) return *c;
  throw PreconditionViolated("rational elements have no code");
}

const mpq_class& FieldElement::rational() const {
  if (const auto* v = std::get_if<mpq_class>(&value_)) return *v;
  throw PreconditionViolated("finite-field elements are not rationals");
}

std::vector<std::uint64_t> FieldElement::digits() const { return decode(*field_, code()); }

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (field_->kind == FieldKind::Rationals) {
    mpq_class v = 1 / std::get<mpq_class>(value_);
    return FieldElement(field_, std::move(v));
  }
  return FieldElement(field_, inv_code(*field_, std::get<std::uint64_t>(value_)));
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  FieldElement result = Field(field_).one();
  FieldElement base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

FieldElement FieldElement::pow(const mpz_class& exponent) const {
  if (exponent < 0) return inverse().pow(mpz_class(-exponent));
  FieldElement result = Field(field_).one();
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result *= *this;
  }
  return result;
}

FieldElement& FieldElement::operator+=(const FieldElement& other) {
  check_same(other);
  if (auto* c = std::get_if<std::uint64_t>(&value_)) {
    *c = add_codes(*field_, *c, std::get<std::uint64_t>(other.value_));
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& other) {
  check_same(other);
  if (auto* c = std::get_if<std::uint64_t>(&value_)) {
    *c = add_codes(*field_, *c, neg_code(*field_, std::get<std::uint64_t>(other.value_)));
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& other) {
  check_same(other);
  if (auto* c = std::get_if<std::uint64_t>(&value_)) {
    *c = mul_codes(*field_, *c, std::get<std::uint64_t>(other.value_));
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& other) {
  check_same(other);
  if (other.is_zero()) throw DivisionByZero("division by zero in " + Field(field_).to_string());
  if (auto* c = std::get_if<std::uint64_t>(&value_)) {
    *c = mul_codes(*field_, *c, inv_code(*field_, std::get<std::uint64_t>(other.value_)));
  } else {
    std::get<mpq_class>(value_) /= std::get<mpq_class>(other.value_);
  }
  return *this;
}

FieldElement FieldElement::operator-() const {
  if (const auto* c = std::get_if<std::uint64_t>(&value_)) return FieldElement(field_, neg_code(*field_, *c));
  mpq_class v = -std::get<mpq_class>(value_);
  return FieldElement(field_, std::move(v));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  if (const auto* c = std::get_if<std::uint64_t>(&a.value_)) return *c == std::get<std::uint64_t>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

bool operator<(const FieldElement& a, const FieldElement& b) {
  a.check_same(b);
  if (const auto* c = std::get_if<std::uint64_t>(&a.value_)) return *c < std::get<std::uint64_t>(b.value_);
  return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

std::size_t FieldElement::hash() const {
  if (const auto* c = std::get_if<std::uint64_t>(&value_)) return std::hash<std::uint64_t>{}(*c);
  const auto& v = std::get<mpq_class>(value_);
  const std::size_t hn = mpz_fdiv_ui(v.get_num_mpz_t(), 1000000007UL) + (mpz_sgn(v.get_num_mpz_t()) < 0 ? 17 : 0);
  const std::size_t hd = mpz_fdiv_ui(v.get_den_mpz_t(), 998244353UL);
  return hn * 1315423911UL ^ hd;
}

std::string FieldElement::to_string() const {
  if (field_ == nullptr) return "<unset>";
  if (const auto* v = std::get_if<mpq_class>(&value_)) return v->get_str();
  const std::uint64_t code = std::get<std::uint64_t>(value_);
  if (field_->m == 1) return std::to_string(code);
  if (code == 0) return "0";
  const Digits d = decode(*field_, code);
  std::string out;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(d[i]);
    } else {
      if (d[i] != 1) out += std::to_string(d[i]);
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.to_string(); }

// ----------------------------------------------------------------------------
// Towers

bool is_supported_tower(const Field& sub, const Field& super) {
  if (sub == super) return true;
  return sub.is_finite() && super.is_finite() && sub.degree() == 1 &&
         sub.characteristic() == super.characteristic();
}

FieldElement embed_subfield(const FieldElement& x, const Field& target) {
  const Field source = x.field();
  if (source == target) return x;
  if (!is_supported_tower(source, target)) {
    throw UnsupportedTower("cannot embed " + source.to_string() + " into " + target.to_string());
  }
  return target.from_code(x.code());
}

bool lies_in_subfield(const FieldElement& x, const Field& sub) {
  const Field super = x.field();
  if (sub == super) return true;
  if (!is_supported_tower(sub, super)) {
    throw UnsupportedTower(sub.to_string() + " is not a supported subfield of " + super.to_string());
  }
  return x.code() < sub.characteristic();
}

FieldElement restrict_to_subfield(const FieldElement& x, const Field& sub) {
  if (!lies_in_subfield(x, sub)) {
    throw PreconditionViolated(x.to_string() + " does not lie in " + sub.to_string());
  }
  if (sub == x.field()) return x;
  return sub.from_code(x.code());
}

std::vector<FieldElement> subfield_coordinates(const FieldElement& x, const Field& sub) {
  const Field super = x.field();
  if (sub == super) return {x};
  if (!is_supported_tower(sub, super)) {
    throw UnsupportedTower(sub.to_string() + " is not a supported subfield of " + super.to_string());
  }
  std::vector<FieldElement> out;
  out.reserve(super.degree());
  for (auto d : x.digits()) out.push_back(sub.from_code(d));
  return out;
}

FieldElement from_subfield_coordinates(std::span<const FieldElement> coords, const Field& super) {
  if (coords.empty()) throw EmptyInput("no coordinates");
  const Field sub = coords[0].field();
  if (sub == super) {
    if (coords.size() != 1) throw ShapeMismatch("expected a single coordinate");
    return coords[0];
  }
  if (!is_supported_tower(sub, super)) {
    throw UnsupportedTower(sub.to_string() + " is not a supported subfield of " + super.to_string());
  }
  if (coords.size() != super.degree()) throw ShapeMismatch("coordinate count differs from the extension degree");
  std::vector<std::uint64_t> digits;
  digits.reserve(coords.size());
  for (const auto& c : coords) {
    if (c.field() != sub) throw MixedFieldError("coordinates over different fields");
    digits.push_back(c.code());
  }
  return super.from_digits(digits);
}

std::vector<FieldElement> enumerate_elements(const Field& field) {
  if (!field.is_finite()) throw PreconditionViolated("cannot enumerate an infinite field");
  std::vector<FieldElement> out;
  out.reserve(field.order());
  for (std::uint64_t c = 0; c < field.order(); ++c) out.push_back(field.from_code(c));
  return out;
}

}  // namespace burnside
