#include "delpezzo/arith.hpp"

#include <algorithm>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

constexpr unsigned long kTrialBound = 1UL << 20;

unsigned strip(mpz_class& n, unsigned long p) {
  unsigned e = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++e;
  }
  return e;
}

}  // namespace

Factorization factor_integer(const mpz_class& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  Factorization out;
  mpz_class rest = ::abs(n);

  if (unsigned e = strip(rest, 2); e > 0) out.factors.push_back({mpz_class(2), e});
  for (unsigned long p = 3; p <= kTrialBound && rest > 1; p += 2) {
    if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) break;
    if (unsigned e = strip(rest, p); e > 0) out.factors.push_back({mpz_class(p), e});
  }
  if (rest == 1) return out;

  if (mpz_cmp_ui(rest.get_mpz_t(), kTrialBound * kTrialBound) < 0 ||
      mpz_probab_prime_p(rest.get_mpz_t(), 40) != 0) {
    out.factors.push_back({rest, 1});
  } else {
    // No prime below the trial bound divides the cofactor. Record it as the
    // largest perfect power we can see; the base is prime only if probing says so.
    unsigned best_k = 1;
    mpz_class base = rest;
    for (unsigned k = 64; k >= 2; --k) {
      if (auto g = exact_root(rest, k)) {
        best_k = k;
        base = *g;
        break;
      }
    }
    out.factors.push_back({base, best_k});
    out.complete = mpz_probab_prime_p(base.get_mpz_t(), 40) != 0;
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

Rational discriminant_cubic(const Rational& A, const Rational& B) {
  return Rational(-16) * (Rational(4) * A.pow(3) + Rational(27) * B.pow(2));
}

Rational sixth_power_free_part(const Rational& k) {
  if (k.is_zero()) throw DomainError("sixth_power_free_part of zero");
  // n/d = n d^5 / d^6, so the class has an integer representative.
  mpz_class den5;
  const mpz_class den = k.den();
  mpz_pow_ui(den5.get_mpz_t(), den.get_mpz_t(), 5);
  const mpz_class integer = k.num() * den5;

  const Factorization f = factor_integer(integer);
  mpz_class reduced = integer < 0 ? -1 : 1;
  for (const auto& [prime, exponent] : f.factors) {
    mpz_class piece;
    mpz_pow_ui(piece.get_mpz_t(), prime.get_mpz_t(), exponent % 6);
    reduced *= piece;
  }
  return Rational(reduced);
}

}  // namespace delpezzo
