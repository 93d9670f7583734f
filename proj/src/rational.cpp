#include "delpezzo/rational.hpp"

#include <cctype>
#include <utility>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num_text = trim(s.substr(0, slash));
  const std::string_view den_text =
      slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_digits(num_text) || !is_digits(den_text)) {
    throw ParseError("not a rational number: '" + std::string(text) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  const mpz_class den(std::string(den_text), 10);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return Rational(mpq_class(1 / value_));
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(n, d);
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  return *this;
}

std::optional<mpz_class> exact_root(const mpz_class& n, unsigned k) {
  if (k == 0) throw DomainError("zeroth root");
  if (n < 0 && k % 2 == 0) return std::nullopt;
  mpz_class root;
  const mpz_class magnitude = ::abs(n);
  if (mpz_root(root.get_mpz_t(), magnitude.get_mpz_t(), k) == 0) return std::nullopt;
  if (n < 0) root = -root;
  return root;
}

std::optional<Rational> exact_root(const Rational& r, unsigned k) {
  auto num = exact_root(r.num(), k);
  if (!num) return std::nullopt;
  auto den = exact_root(r.den(), k);
  if (!den) return std::nullopt;
  return Rational(*num, *den);
}

}  // namespace delpezzo
