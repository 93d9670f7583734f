#pragma once

#include <cstddef>
#include <vector>

#include "delpezzo/poly.hpp"

namespace delpezzo {

// Dense polynomial in two variables over Q. Entry (i, j) is the coefficient
// of x^i y^j. Trailing zero rows and columns are trimmed.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(const Rational& constant);
  explicit BiPoly(std::vector<std::vector<Rational>> coefficients);

  static BiPoly x();
  static BiPoly y();
  static BiPoly monomial(const Rational& coefficient, std::size_t deg_x, std::size_t deg_y);
  // Embeds a univariate polynomial in x or in y.
  static BiPoly in_x(const Poly& p);
  static BiPoly in_y(const Poly& p);

  [[nodiscard]] bool is_zero() const { return rows_.empty(); }
  [[nodiscard]] int degree_x() const { return static_cast<int>(rows_.size()) - 1; }
  [[nodiscard]] int degree_y() const;
  [[nodiscard]] Rational coefficient(std::size_t deg_x, std::size_t deg_y) const;
  [[nodiscard]] const std::vector<std::vector<Rational>>& coefficients() const { return rows_; }

  [[nodiscard]] Rational eval(const Rational& x, const Rational& y) const;
  [[nodiscard]] BiPoly pow(unsigned exponent) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& s);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
  friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
  friend BiPoly operator-(const BiPoly& a) { return a * Rational(-1); }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.rows_ == b.rows_; }

 private:
  void trim();

  std::vector<std::vector<Rational>> rows_;
};

inline bool is_identically_zero(const BiPoly& p) { return p.is_zero(); }

}  // namespace delpezzo
