#pragma once

#include <gmpxx.h>

#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

struct PrimePower {
  mpz_class prime;
  unsigned exponent;
};

struct Factorization {
  // Sorted by prime. When complete is false the last entry is a composite
  // cofactor without small prime factors and should not be read as prime.
  std::vector<PrimePower> factors;
  bool complete = true;
};

// Factorization of |n| by trial division up to 2^20, then primality and
// perfect-power probing of the cofactor. Throws DomainError for n == 0.
Factorization factor_integer(const mpz_class& n);

// Discriminant -16(4A^3 + 27B^2) of the cubic X^3 + AX + B.
Rational discriminant_cubic(const Rational& A, const Rational& B);

// Integer k' in the sixth-power class of k: k = k' * w^6 for a rational w and
// every prime exponent of |k'| lies in [0, 5]. Throws DomainError for k == 0.
Rational sixth_power_free_part(const Rational& k);

}  // namespace delpezzo
