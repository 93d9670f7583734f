#include "delpezzo/ratfunc.hpp"

#include <utility>

#include "delpezzo/errors.hpp"

namespace delpezzo {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  normalize();
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(Rational(1));
    return;
  }
  const Poly g = gcd(num_, den_);
  if (g.degree() >= 1) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational lead = den_.leading();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RatFunc::eval(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw DomainError("rational function evaluated at a pole");
  return num_.eval(x) / d;
}

RatFunc RatFunc::pow(unsigned exponent) const {
  // Coprime inputs stay coprime under powers.
  RatFunc out;
  out.num_ = num_.pow(exponent);
  out.den_ = den_.pow(exponent);
  return out;
}

std::string RatFunc::str(char var) const {
  if (den_.degree() == 0) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) {
    num_ -= o.num_;
  } else {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
  }
  normalize();
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) throw DomainError("division by the zero rational function");
  num_ = num_ * o.den_;
  den_ = den_ * o.num_;
  normalize();
  return *this;
}

RatFunc compose(const Poly& p, const RatFunc& g) {
  RatFunc acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc *= g;
    acc += RatFunc(*it);
  }
  return acc;
}

}  // namespace delpezzo
