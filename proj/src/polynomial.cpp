#include "burnside/polynomial.hpp"

#include <algorithm>

#include "burnside/errors.hpp"

namespace burnside {

Polynomial::Polynomial(Field field, std::vector<FieldElement> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.field() != field_) throw MixedFieldError("polynomial coefficient from another field");
  }
  normalize();
}

Polynomial Polynomial::constant(const FieldElement& c) { return Polynomial(c.field(), {c}); }

Polynomial Polynomial::x(const Field& field) { return Polynomial(field, {field.zero(), field.one()}); }

Polynomial Polynomial::linear(const FieldElement& root) {
  const Field f = root.field();
  return Polynomial(f, {-root, f.one()});
}

Polynomial Polynomial::from_ints(const Field& field, const std::vector<long>& coeffs) {
  std::vector<FieldElement> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.push_back(field.from_int(v));
  return Polynomial(field, std::move(c));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement Polynomial::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : field_.zero(); }

const FieldElement& Polynomial::leading() const {
  if (coeffs_.empty()) throw PreconditionViolated("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d.push_back(coeffs_[k] * field_.from_int(static_cast<long>(k)));
  }
  return Polynomial(field_, std::move(d));
}

FieldElement Polynomial::operator()(const FieldElement& at) const {
  FieldElement acc = field_.zero();
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc *= at;
    acc += coeffs_[k];
  }
  return acc;
}

Matrix Polynomial::operator()(const Matrix& at) const {
  if (!at.is_square()) throw ShapeMismatch("polynomial evaluation needs a square matrix");
  const std::size_t n = at.rows();
  Matrix acc = zero_matrix(field_, n, n);
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    acc = acc * at;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += coeffs_[k];
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (field_ != other.field_) throw MixedFieldError("polynomials over different fields");
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), field_.zero());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (field_ != other.field_) throw MixedFieldError("polynomials over different fields");
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), field_.zero());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  if (field_ != other.field_) throw MixedFieldError("polynomials over different fields");
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<FieldElement> out(coeffs_.size() + other.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      if (!other.coeffs_[j].is_zero()) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const FieldElement& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (a.field() != b.field()) throw MixedFieldError("polynomials over different fields");
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Field f = a.field();
  if (a.degree() < b.degree()) return {Polynomial(f), a};
  std::vector<FieldElement> rem = a.coeffs();
  std::vector<FieldElement> quo(a.degree() - b.degree() + 1, f.zero());
  const FieldElement lead_inv = b.leading().inverse();
  const auto bd = static_cast<std::size_t>(b.degree());
  for (std::size_t k = rem.size(); k-- > bd;) {
    if (rem[k].is_zero()) continue;
    const FieldElement c = rem[k] * lead_inv;
    quo[k - bd] = c;
    for (std::size_t i = 0; i <= bd; ++i) {
      if (!b.coeffs()[i].is_zero()) rem[k - bd + i] -= c * b.coeffs()[i];
    }
  }
  rem.resize(bd);
  return {Polynomial(f, std::move(quo)), Polynomial(f, std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

bool operator==(const Polynomial& a, const Polynomial& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t k = a.coeffs_.size(); k-- > 0;) {
    if (a.coeffs_[k] != b.coeffs_[k]) return a.coeffs_[k] < b.coeffs_[k];
  }
  return false;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const FieldElement& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    const bool compound = cs.find_first_of("+-", 1) != std::string::npos || cs.find('/') != std::string::npos;
    if (!out.empty()) {
      if (cs[0] == '-' && !compound) {
        out += " - ";
        cs = cs.substr(1);
      } else {
        out += " + ";
      }
    }
    if (k == 0) {
      out += compound ? "(" + cs + ")" : cs;
      continue;
    }
    if (cs == "-1") {
      out += "-";
    } else if (cs != "1") {
      out += compound ? "(" + cs + ")" : cs;
    }
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a;
  Polynomial y = b;
  while (!y.is_zero()) {
    Polynomial r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Polynomial powmod(const Polynomial& base, const mpz_class& exponent, const Polynomial& modulus) {
  if (exponent < 0) throw PreconditionViolated("negative exponent");
  Polynomial result = Polynomial::constant(base.field().one()) % modulus;
  const Polynomial b = base % modulus;
  const std::size_t bits = exponent == 0 ? 0 : mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % modulus;
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = (result * b) % modulus;
  }
  return result;
}

// ----------------------------------------------------------------------------
// Characteristic polynomials

namespace detail {

Polynomial char_poly_bareiss(const Matrix& a) {
  if (!a.is_square()) throw ShapeMismatch("characteristic polynomial of a non-square matrix");
  const Field f = field_of(a);
  const std::size_t n = a.rows();
  // Entries of xI - A. Leading principal minors of xI - A are monic, so no
  // pivot ever vanishes and no row exchanges are needed.
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(f)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = Polynomial::constant(-a(i, j));
      if (i == j) m[i][j] += Polynomial::x(f);
    }
  }
  Polynomial prev = Polynomial::constant(f.one());
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        auto [q, r] = divmod(num, prev);
        if (!r.is_zero()) throw StructureViolation("Bareiss division was not exact");
        m[i][j] = std::move(q);
      }
    }
    prev = m[k][k];
  }
  return m[n - 1][n - 1];
}

Polynomial char_poly_hessenberg(const Matrix& a) {
  if (!a.is_square()) throw ShapeMismatch("characteristic polynomial of a non-square matrix");
  const Field f = field_of(a);
  const std::size_t n = a.rows();
  Matrix h = a;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1).is_zero()) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t k = 0; k < n; ++k) std::swap(h(i, k), h(m, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(h(k, i), h(k, m));
    }
    const FieldElement t_inv = h(m, m - 1).inverse();
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h(j, m - 1).is_zero()) continue;
      const FieldElement u = h(j, m - 1) * t_inv;
      for (std::size_t k = 0; k < n; ++k) {
        if (!h(m, k).is_zero()) h(j, k) -= u * h(m, k);
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (!h(k, j).is_zero()) h(k, m) += u * h(k, j);
      }
    }
  }
  std::vector<Polynomial> p;
  p.push_back(Polynomial::constant(f.one()));
  const Polynomial x = Polynomial::x(f);
  for (std::size_t k = 1; k <= n; ++k) {
    Polynomial pk = (x - Polynomial::constant(h(k - 1, k - 1))) * p[k - 1];
    FieldElement prod = f.one();
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod.is_zero()) break;
      const FieldElement c = h(i - 1, k - 1) * prod;
      if (!c.is_zero()) pk -= p[i - 1] * c;
    }
    p.push_back(std::move(pk));
  }
  return p[n];
}

}  // namespace detail

Polynomial char_poly(const Matrix& a) {
  if (!a.is_square()) throw ShapeMismatch("characteristic polynomial of a non-square matrix");
  if (field_of(a).is_rationals()) return detail::char_poly_bareiss(a);
  return detail::char_poly_hessenberg(a);
}

// ----------------------------------------------------------------------------
// Finite-field factorization

namespace {

FieldElement element_pth_root(const FieldElement& a) {
  const Field f = a.field();
  // Frobenius has order m, so its inverse is a -> a^{p^{m-1}}.
  FieldElement r = a;
  for (unsigned i = 1; i < f.degree(); ++i) r = r.pow(f.characteristic());
  return r;
}

Polynomial pth_root(const Polynomial& g) {
  const Field f = g.field();
  const std::uint64_t p = f.characteristic();
  std::vector<FieldElement> out;
  for (std::size_t k = 0; k < g.coeffs().size(); k += p) out.push_back(element_pth_root(g.coeffs()[k]));
  return Polynomial(f, std::move(out));
}

mpz_class field_order(const Field& f) { return mpz_class(std::to_string(f.order())); }

std::vector<IrreducibleFactor> squarefree_monic(const Polynomial& f) {
  std::vector<IrreducibleFactor> out;
  if (f.degree() <= 0) return out;
  const Field fld = f.field();
  const auto p = static_cast<unsigned>(fld.characteristic());
  const Polynomial one = Polynomial::constant(fld.one());
  const Polynomial d = f.derivative();
  if (d.is_zero()) {
    for (auto& [g, k] : squarefree_monic(pth_root(f))) out.push_back({g, k * p});
    return out;
  }
  Polynomial c = gcd(f, d);
  Polynomial w = f / c;
  unsigned i = 1;
  while (!w.is_one()) {
    Polynomial y = gcd(w, c);
    Polynomial fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i});
    w = y;
    c = c / y;
    ++i;
  }
  if (!c.is_one() && c.degree() > 0) {
    for (auto& [g, k] : squarefree_monic(pth_root(c.monic()))) out.push_back({g, k * p});
  }
  return out;
}

std::vector<std::pair<Polynomial, unsigned>> distinct_degree(const Polynomial& f) {
  std::vector<std::pair<Polynomial, unsigned>> out;
  const Field fld = f.field();
  const Polynomial x = Polynomial::x(fld);
  const mpz_class q = field_order(fld);
  Polynomial rest = f;
  Polynomial h = x % rest;
  unsigned i = 1;
  while (rest.degree() >= 2 * static_cast<int>(i)) {
    h = powmod(h, q, rest);
    Polynomial g = gcd(rest, h - x);
    if (!g.is_one()) {
      out.emplace_back(g, i);
      rest = rest / g;
      h = h % rest;
    }
    ++i;
  }
  if (rest.degree() > 0) out.emplace_back(rest.monic(), static_cast<unsigned>(rest.degree()));
  return out;
}

Polynomial random_poly(const Field& f, int below_degree, std::mt19937_64& rng) {
  std::vector<FieldElement> c;
  for (int k = 0; k < below_degree; ++k) c.push_back(f.random(rng));
  return Polynomial(f, std::move(c));
}

void equal_degree(const Polynomial& g, unsigned d, std::mt19937_64& rng, std::vector<Polynomial>& out) {
  if (g.degree() == static_cast<int>(d)) {
    out.push_back(g.monic());
    return;
  }
  const Field f = g.field();
  const mpz_class q = field_order(f);
  while (true) {
    Polynomial a = random_poly(f, g.degree(), rng);
    if (a.degree() <= 0) continue;
    Polynomial b(f);
    if (f.characteristic() == 2) {
      // Trace map a + a^2 + ... + a^{2^{md-1}}.
      Polynomial t = a % g;
      b = t;
      const unsigned steps = f.degree() * d;
      for (unsigned k = 1; k < steps; ++k) {
        t = (t * t) % g;
        b += t;
      }
    } else {
      mpz_class e;
      mpz_pow_ui(e.get_mpz_t(), q.get_mpz_t(), d);
      e = (e - 1) / 2;
      b = powmod(a, e, g) - Polynomial::constant(f.one());
    }
    Polynomial h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

void require_finite(const Polynomial& f) {
  if (!f.field().is_finite()) throw PreconditionViolated("operation requires a finite field");
}

// Distinct roots of a polynomial over a finite field.
std::vector<FieldElement> distinct_roots_finite(const Polynomial& f) {
  const Field fld = f.field();
  const Polynomial x = Polynomial::x(fld);
  Polynomial g = gcd(f, powmod(x, field_order(fld), f) - x);
  std::vector<FieldElement> roots;
  if (g.degree() <= 0) return roots;
  if (fld.order() <= (1U << 16)) {
    for (std::uint64_t c = 0; c < fld.order() && static_cast<int>(roots.size()) < g.degree(); ++c) {
      const FieldElement e = fld.from_code(c);
      if (g(e).is_zero()) roots.push_back(e);
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::vector<Polynomial> lin;
    equal_degree(g, 1, rng, lin);
    for (const auto& l : lin) roots.push_back(-l.coeff(0));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Integer roots of a monic squarefree integer polynomial with nonzero constant term.
std::vector<mpz_class> integer_roots(const std::vector<mpz_class>& s) {
  const std::size_t deg = s.size() - 1;
  std::vector<mpz_class> out;
  if (deg == 0) return out;
  mpz_class bound = 0;
  for (std::size_t k = 0; k < deg; ++k) bound = std::max(bound, mpz_class(abs(s[k])));
  bound += 1;
  auto eval_mod = [&](const mpz_class& at, const mpz_class& mod) {
    mpz_class acc = 0;
    for (std::size_t k = s.size(); k-- > 0;) {
      acc = (acc * at + s[k]) % mod;
    }
    if (acc < 0) acc += mod;
    return acc;
  };
  auto eval_deriv_mod = [&](const mpz_class& at, const mpz_class& mod) {
    mpz_class acc = 0;
    for (std::size_t k = s.size(); k-- > 1;) {
      acc = (acc * at + s[k] * static_cast<unsigned long>(k)) % mod;
    }
    if (acc < 0) acc += mod;
    return acc;
  };
  for (std::uint64_t p = 3; p < 100000; p += 2) {
    if (!is_prime(p)) continue;
    const Field fp = Field::prime(p);
    std::vector<FieldElement> coeffs;
    for (const auto& c : s) coeffs.push_back(fp.from_integer(c));
    const Polynomial sp(fp, coeffs);
    if (gcd(sp, sp.derivative()).degree() > 0) continue;
    const mpz_class two_bound = 2 * bound;
    for (const auto& r0 : distinct_roots_finite(sp)) {
      mpz_class r = static_cast<unsigned long>(r0.code());
      mpz_class pe = static_cast<unsigned long>(p);
      while (pe <= two_bound) {
        const mpz_class pe2 = pe * pe;
        const mpz_class val = eval_mod(r, pe2);
        const mpz_class der = eval_deriv_mod(r, pe2);
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), der.get_mpz_t(), pe2.get_mpz_t()) == 0) {
          throw StructureViolation("Hensel lift hit a non-invertible derivative");
        }
        r = (r - val * inv) % pe2;
        if (r < 0) r += pe2;
        pe = pe2;
      }
      mpz_class c = r;
      if (c > pe / 2) c -= pe;
      mpz_class acc = 0;
      for (std::size_t k = s.size(); k-- > 0;) acc = acc * c + s[k];
      if (acc == 0) out.push_back(c);
    }
    return out;
  }
  throw StructureViolation("no prime of good reduction found below 100000");
}

// Roots over Q with multiplicity; f is monic and nonzero.
LinearPart linear_part_rational(const Polynomial& f) {
  const Field q = f.field();
  LinearPart out{{}, f.monic()};
  Polynomial& g = out.cofactor;
  while (g.degree() > 0 && g.coeff(0).is_zero()) {
    out.roots.push_back(q.zero());
    g = g / Polynomial::x(q);
  }
  if (g.degree() <= 0) return out;
  // Substituting x = y / D with D the common denominator gives a monic
  // integer polynomial whose rational roots are integers.
  mpz_class denom = 1;
  for (const auto& c : g.coeffs()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.rational().get_den_mpz_t());
  const auto n = static_cast<std::size_t>(g.degree());
  std::vector<FieldElement> scaled;
  mpz_class dpow = 1;
  std::vector<mpz_class> powers(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    powers[k] = dpow;
    dpow *= denom;
  }
  for (std::size_t k = 0; k <= n; ++k) scaled.push_back(q.from_rational(g.coeff(k).rational() * powers[n - k]));
  const Polynomial h(q, scaled);
  const Polynomial sq = (h / gcd(h, h.derivative())).monic();
  std::vector<mpz_class> ints;
  for (const auto& c : sq.coeffs()) {
    if (c.rational().get_den() != 1) throw StructureViolation("squarefree part is not integral");
    ints.push_back(c.rational().get_num());
  }
  std::vector<FieldElement> distinct;
  for (const auto& z : integer_roots(ints)) distinct.push_back(q.from_rational(mpq_class(z, denom)));
  std::sort(distinct.begin(), distinct.end());
  for (const auto& r : distinct) {
    const Polynomial lin = Polynomial::linear(r);
    while (true) {
      auto [quo, rem] = divmod(g, lin);
      if (!rem.is_zero()) break;
      out.roots.push_back(r);
      g = std::move(quo);
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace

std::vector<IrreducibleFactor> squarefree_decomposition(const Polynomial& f) {
  require_finite(f);
  if (f.is_zero()) throw PreconditionViolated("squarefree decomposition of zero");
  auto out = squarefree_monic(f.monic());
  std::sort(out.begin(), out.end(),
            [](const IrreducibleFactor& a, const IrreducibleFactor& b) { return a.multiplicity < b.multiplicity; });
  return out;
}

std::vector<IrreducibleFactor> factor_finite(const Polynomial& f, std::uint64_t seed) {
  require_finite(f);
  if (f.is_zero()) throw PreconditionViolated("factorization of zero");
  std::mt19937_64 rng(seed);
  std::vector<IrreducibleFactor> out;
  for (const auto& [g, mult] : squarefree_monic(f.monic())) {
    for (const auto& [h, d] : distinct_degree(g)) {
      std::vector<Polynomial> pieces;
      equal_degree(h, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const IrreducibleFactor& a, const IrreducibleFactor& b) {
    if (a.factor != b.factor) return a.factor < b.factor;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_irreducible_finite(const Polynomial& f) {
  require_finite(f);
  if (f.degree() < 1) return false;
  const Polynomial g = f.monic();
  const Field fld = f.field();
  const Polynomial x = Polynomial::x(fld);
  const mpz_class q = field_order(fld);
  Polynomial h = x % g;
  for (int i = 1; i <= g.degree() / 2; ++i) {
    h = powmod(h, q, g);
    if (gcd(g, h - x).degree() > 0) return false;
  }
  return true;
}

LinearPart linear_part(const Polynomial& f) {
  if (f.is_zero()) throw PreconditionViolated("roots of the zero polynomial");
  if (f.field().is_rationals()) return linear_part_rational(f);
  LinearPart out{{}, f.monic()};
  for (const auto& r : distinct_roots_finite(out.cofactor)) {
    const Polynomial lin = Polynomial::linear(r);
    while (true) {
      auto [quo, rem] = divmod(out.cofactor, lin);
      if (!rem.is_zero()) break;
      out.roots.push_back(r);
      out.cofactor = std::move(quo);
    }
  }
  return out;
}

SplitResult splits_with_roots(const Polynomial& f) {
  if (f.degree() < 1 || !f.is_monic()) throw NonMonicInput("splitting test needs a monic polynomial of degree >= 1");
  SplitResult out;
  if (f.field().is_finite()) {
    // f splits iff rad(f) divides x^q - x.
    Polynomial rad = Polynomial::constant(f.field().one());
    for (const auto& [g, mult] : squarefree_monic(f)) rad *= g;
    const Polynomial x = Polynomial::x(f.field());
    out.splits = (powmod(x, field_order(f.field()), rad) - x) % rad == Polynomial(f.field());
    if (out.splits) out.roots = linear_part(f).roots;
    return out;
  }
  LinearPart lp = linear_part(f);
  out.splits = lp.cofactor.degree() == 0;
  if (out.splits) out.roots = std::move(lp.roots);
  return out;
}

bool is_triangularizable_single(const Matrix& a) { return splits_with_roots(char_poly(a)).splits; }

}  // namespace burnside
