#pragma once

#include <ostream>
#include <string>

#include "delpezzo/poly.hpp"

namespace delpezzo {

// Element of Q(x): numerator / denominator, kept coprime with a monic
// denominator after every operation.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(const Poly& p) : num_(p), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  // Throws DomainError when den is the zero polynomial.
  RatFunc(Poly num, Poly den);

  [[nodiscard]] const Poly& num() const { return num_; }
  [[nodiscard]] const Poly& den() const { return den_; }
  [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
  [[nodiscard]] bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  // Throws DomainError at a pole.
  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] RatFunc pow(unsigned exponent) const;
  [[nodiscard]] std::string str(char var = 'x') const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator-(const RatFunc& a) { return RatFunc(-a.num_, a.den_); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << r.str(); }

 private:
  void normalize();

  Poly num_;
  Poly den_;
};

// p(g(x)) by Horner's rule in Q(x).
RatFunc compose(const Poly& p, const RatFunc& g);

// Identity checks: true iff the expression is the zero element after full
// expansion and cancellation.
inline bool is_identically_zero(const RatFunc& r) { return r.is_zero(); }
inline bool is_identically_zero(const Poly& p) { return p.is_zero(); }

}  // namespace delpezzo
