#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// The zero polynomial has no coefficients and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);
  explicit Poly(const Rational& constant);

  static Poly monomial(const Rational& coefficient, std::size_t degree);
  // The indeterminate itself.
  static Poly identity() { return monomial(Rational(1), 1); }

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Coefficient of x^k; zero beyond the degree.
  [[nodiscard]] Rational coefficient(std::size_t k) const;
  [[nodiscard]] Rational leading() const;

  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] Poly derivative() const;
  // this(inner(x)).
  [[nodiscard]] Poly compose(const Poly& inner) const;
  [[nodiscard]] Poly pow(unsigned exponent) const;
  // Scaled to leading coefficient 1; zero stays zero.
  [[nodiscard]] Poly monic() const;

  [[nodiscard]] std::string str(char var = 'x') const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(const Poly& a);

  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

Rational poly_eval(const Poly& p, const Rational& x);

// Quotient and remainder; throws DomainError when dividing by zero.
std::pair<Poly, Poly> divmod(const Poly& numerator, const Poly& divisor);

// Monic gcd (zero when both inputs are zero). Runs the primitive
// pseudo-remainder sequence over Z so intermediate coefficients stay small.
Poly gcd(const Poly& a, const Poly& b);

// Resultant via the Sylvester determinant.
Rational resultant(const Poly& a, const Poly& b);

// (-1)^(n(n-1)/2) res(p, p') / lc(p). Requires degree >= 1.
Rational discriminant(const Poly& p);

// True iff p has a repeated complex root, i.e. deg gcd(p, p') >= 1.
bool has_multiple_root(const Poly& p);

struct RootMultiplicity {
  Rational root;
  unsigned multiplicity;

  friend bool operator==(const RootMultiplicity&, const RootMultiplicity&) = default;
};

// All rational roots with multiplicities, in increasing order of |root| then
// sign (nonnegative first). Throws DomainError on the zero polynomial.
std::vector<RootMultiplicity> rational_roots(const Poly& p);

// Yun's squarefree decomposition: p = lc(p) * prod_i factors[i]^(i+1) with
// each factor monic and squarefree, pairwise coprime. Trailing ones trimmed.
std::vector<Poly> squarefree_decomposition(const Poly& p);

}  // namespace delpezzo
