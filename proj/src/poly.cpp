#include "delpezzo/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "delpezzo/arith.hpp"
#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

using ZPoly = std::vector<mpz_class>;

void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Primitive integer polynomial with positive leading coefficient, same roots as p.
ZPoly primitive_integer(const Poly& p) {
  ZPoly out;
  if (p.is_zero()) return out;
  mpz_class lcm = 1;
  for (const auto& c : p.coefficients()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
  out.reserve(p.coefficients().size());
  mpz_class content = 0;
  for (const auto& c : p.coefficients()) {
    out.push_back(c.num() * (lcm / c.den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) content = -content;
  for (auto& c : out) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
  return out;
}

void make_primitive(ZPoly& p) {
  trim(p);
  if (p.empty()) return;
  mpz_class content = 0;
  for (const auto& c : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  if (p.back() < 0) content = -content;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), content.get_mpz_t());
}

// a <- prem(a, b), up to a nonzero constant factor.
void pseudo_remainder(ZPoly& a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class la = a.back();
    const mpz_class lb = b.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
}

Poly from_integer(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return Poly(std::move(c));
}

std::vector<mpz_class> divisors(const mpz_class& n) {
  const Factorization f = factor_integer(n);
  if (!f.complete) throw DomainError("coefficient too large to enumerate its divisors");
  std::vector<mpz_class> out{1};
  for (const auto& [prime, exponent] : f.factors) {
    const std::size_t base = out.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  return out;
}

}  // namespace

Poly::Poly(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Poly::Poly(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Poly Poly::monomial(const Rational& coefficient, std::size_t degree) {
  std::vector<Rational> c(degree + 1);
  c[degree] = coefficient;
  return Poly(std::move(c));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Poly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational();
}

Rational Poly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational Poly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rational> c(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) c[k - 1] = coeffs_[k] * Rational(k);
  return Poly(std::move(c));
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result(Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

std::string Poly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << '*';
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly operator-(const Poly& a) { return a * Rational(-1); }

Rational poly_eval(const Poly& p, const Rational& x) { return p.eval(x); }

std::pair<Poly, Poly> divmod(const Poly& numerator, const Poly& divisor) {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  std::vector<Rational> rem = numerator.coefficients();
  const auto& d = divisor.coefficients();
  if (rem.size() < d.size()) return {Poly(), numerator};
  std::vector<Rational> quot(rem.size() - d.size() + 1);
  const Rational lead_inv = d.back().inverse();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const Rational factor = rem[k + d.size() - 1] * lead_inv;
    quot[k] = factor;
    if (factor.is_zero()) continue;
    for (std::size_t i = 0; i < d.size(); ++i) rem[k + i] -= factor * d[i];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  ZPoly x = primitive_integer(a);
  ZPoly y = primitive_integer(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    pseudo_remainder(x, y);
    make_primitive(x);
    std::swap(x, y);
  }
  return from_integer(x).monic();
}

Rational resultant(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Rational();
  const std::size_t m = static_cast<std::size_t>(a.degree());
  const std::size_t n = static_cast<std::size_t>(b.degree());
  const std::size_t size = m + n;
  if (size == 0) return Rational(1);
  std::vector<std::vector<Rational>> mat(size, std::vector<Rational>(size));
  // Rows hold coefficients from the leading term down.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) mat[r][r + k] = a.coefficient(m - k);
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) mat[n + r][r + k] = b.coefficient(n - k);
  }
  Rational det(1);
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && mat[pivot][col].is_zero()) ++pivot;
    if (pivot == size) return Rational();
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      det = -det;
    }
    det *= mat[col][col];
    const Rational inv = mat[col][col].inverse();
    for (std::size_t r = col + 1; r < size; ++r) {
      if (mat[r][col].is_zero()) continue;
      const Rational factor = mat[r][col] * inv;
      for (std::size_t k = col; k < size; ++k) mat[r][k] -= factor * mat[col][k];
    }
  }
  return det;
}

Rational discriminant(const Poly& p) {
  if (p.degree() < 1) throw DomainError("discriminant needs degree >= 1");
  const long n = p.degree();
  const Rational sign = ((n * (n - 1) / 2) % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * resultant(p, p.derivative()) / p.leading();
}

bool has_multiple_root(const Poly& p) {
  if (p.degree() < 1) throw DomainError("has_multiple_root needs degree >= 1");
  return gcd(p, p.derivative()).degree() >= 1;
}

std::vector<RootMultiplicity> rational_roots(const Poly& p) {
  if (p.is_zero()) throw DomainError("rational_roots of the zero polynomial");
  std::vector<RootMultiplicity> out;
  ZPoly z = primitive_integer(p);

  unsigned zero_mult = 0;
  while (!z.empty() && z.front() == 0) {
    z.erase(z.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.push_back({Rational(), zero_mult});
  if (z.size() <= 1) return out;

  // Candidates +-r/s with r | a0 and s | an (rational root theorem).
  std::set<Rational> candidates;
  const auto tops = divisors(z.front());
  const auto bottoms = divisors(z.back());
  for (const auto& r : tops) {
    for (const auto& s : bottoms) {
      candidates.insert(Rational(r, s));
      candidates.insert(Rational(-r, s));
    }
  }

  Poly rest = from_integer(z);
  for (const auto& c : candidates) {
    unsigned mult = 0;
    const Poly linear(std::vector<Rational>{-c, Rational(1)});
    while (rest.degree() >= 1 && rest.eval(c).is_zero()) {
      rest = divmod(rest, linear).first;
      ++mult;
    }
    if (mult > 0) out.push_back({c, mult});
  }
  std::sort(out.begin(), out.end(), [](const RootMultiplicity& a, const RootMultiplicity& b) {
    const Rational aa = a.root.abs(), bb = b.root.abs();
    if (aa != bb) return aa < bb;
    return a.root > b.root;
  });
  return out;
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
  std::vector<Poly> out;
  if (p.degree() < 1) return out;
  const Poly f = p.monic();
  const Poly df = f.derivative();
  const Poly a0 = gcd(f, df);
  Poly b = divmod(f, a0).first;
  Poly c = divmod(df, a0).first;
  Poly d = c - b.derivative();
  while (b.degree() >= 1) {
    Poly a = gcd(b, d);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
    out.push_back(a.monic());
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

}  // namespace delpezzo
