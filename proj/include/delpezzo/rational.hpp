#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace delpezzo {

// Exact rational number backed by GMP. Always canonical: the denominator is
// positive and coprime to the numerator, zero is 0/1.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I value) : value_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)

  template <std::unsigned_integral I>
  Rational(I value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(google-explicit-constructor)

  Rational(const mpz_class& integer) : value_(integer) {}  // NOLINT(google-explicit-constructor)

  // Throws DomainError if den == 0.
  Rational(const mpz_class& num, const mpz_class& den);

  // Accepts "p" or "p/q" with optional sign and surrounding whitespace.
  // Throws ParseError.
  static Rational parse(std::string_view text);

  [[nodiscard]] mpz_class num() const { return value_.get_num(); }
  [[nodiscard]] mpz_class den() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_one() const { return value_ == 1; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  [[nodiscard]] Rational abs() const;
  // Throws DomainError on zero.
  [[nodiscard]] Rational inverse() const;
  // Negative exponents invert; 0^negative throws DomainError.
  [[nodiscard]] Rational pow(long exponent) const;

  // "num/den", with "/den" omitted when the denominator is 1.
  [[nodiscard]] std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

  mpq_class value_;
};

// Exact k-th root of an integer, if one exists (k >= 1; odd k admits negatives).
std::optional<mpz_class> exact_root(const mpz_class& n, unsigned k);

// Exact k-th root of a rational, if one exists.
std::optional<Rational> exact_root(const Rational& r, unsigned k);

}  // namespace delpezzo
