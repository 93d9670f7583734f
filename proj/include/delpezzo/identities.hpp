#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "delpezzo/bipoly.hpp"
#include "delpezzo/surface_point.hpp"

namespace delpezzo {

// Surface x^2 + a y^5 - z^6 = b with free parameter u; a, u nonzero.
struct QuinticSexticParams {
  Rational a;
  Rational b;
  Rational u;
};

// Surface a x^2 + b y^3 + c z^5 = d.
struct WeightedTernaryParams {
  Rational a;
  Rational b;
  Rational c;
  Rational d;
};

// Surface x^2 + a y^5 + b y - (z^6 + c z) = d with free parameter u.
struct LinearPerturbedParams {
  Rational a;
  Rational b;
  Rational c;
  Rational d;
  Rational u;
};

// The rational solution of f2 = f3 = f4 = f5 = 0 for the ansatz
// x = T^3 + p T^2 + q T + r, y = u T + v, z = T on x^2 + a y^5 - z^6:
// p = -a u^5 / 2, q = 3 a^2 u^10 / 16, r = a^3 u^15 / 64, v = -a u^6 / 8.
struct SexticAnsatz {
  Rational p, q, r, v;
};

SexticAnsatz sextic_ansatz(const Rational& a, const Rational& u);

// x^2 + a y^5 - z^6 - b.
Rational thm2_residual(const QuinticSexticParams& params, const SurfacePoint& p);
// a x^2 + b y^3 + c z^5 - d.
Rational cor3_residual(const WeightedTernaryParams& params, const SurfacePoint& p);
// x^2 + a y^5 + b y - (z^6 + c z) - d.
Rational cor4_residual(const LinearPerturbedParams& params, const SurfacePoint& p);

// Point of x^2 + a y^5 - z^6 = b by solving f0 + f1 T = b. Verified exactly and
// cross-checked against the closed forms (y exactly, x and z up to sign).
// Throws DomainError (a or u zero), DegenerateFiber, IdentityFailure.
SurfacePoint thm2_point(const QuinticSexticParams& params);

// The closed forms
//   x = (118441 a^18 u^90 + 2^15 11863 a^12 b u^60 - 2^30 137 a^6 b^2 u^30 + 2^45 b^3)
//       / (2^9 29^3 a^15 u^75)
//   y = -(9 a^6 u^30 - 2^13 b) / (58 a^5 u^24)
//   z = (7 a^6 u^30 - 2^15 b) / (232 a^5 u^25)
SurfacePoint thm2_closed_form(const QuinticSexticParams& params);

// Point of X^2 - Y^3 - Z^5 = a^15 b^20 c^24 d mapped back with
// x = X / (a^8 b^10 c^12), y = -Y / (a^5 b^7 c^8), z = -Z / (a^3 b^4 c^5).
// (X, Y, Z) is the lift of (15, 90) on the fiber a^15 b^20 d / c^6 scaled by
// (c^15, c^10, c^6); lifting directly on the big fiber gives a different point.
// Cross-checked against the closed form (y, z exactly, x up to sign).
// Throws DomainError when a, b or c is zero.
SurfacePoint cor3_point(const WeightedTernaryParams& params);

// The closed form of the (15, 90) lift with K = a^15 b^20 d:
//   x = (25875323 c^18 + 720748 K c^12 + 8336 K^2 c^6 + 64 K^3) / (1560896 a^8 b^10 c^15)
//   y = -(87709 c^12 + 1544 K c^6 + 16 K^2) / (13456 a^5 b^7 c^10)
//   z = (135 c^6 + 4 K) / (116 a^3 b^4 c^5)
SurfacePoint cor3_closed_form(const WeightedTernaryParams& params);

// True iff every prime dividing a denominator of p also divides modulus.
bool denominators_supported_by(const SurfacePoint& p, const mpz_class& modulus);

// Reuses the sextic ansatz. The extra terms b y and -c z are linear in T, so
// only the two lowest coefficients move:
//   f0 = r^2 + a v^5 + b v,   f1 = 2 q r + 5 a u v^4 + b u - c,
// and f0 + f1 T = d is solved for T. Throws DomainError, DegenerateFiber.
SurfacePoint cor4_point(const LinearPerturbedParams& params);

// Coefficients f2..f5 of the sextic ansatz expansion with the ansatz values
// substituted, as polynomials in (a, u). All four vanish identically.
std::vector<BiPoly> sextic_ansatz_high_coefficients();

struct IdentityCheck {
  std::string name;
  bool passed = false;
  std::size_t samples = 0;  // 0 for a single symbolic check
  std::string detail;
};

// Expands the printed identities symbolically (after the weighted
// substitutions A = a^6 u^30 and (C, K) = (c^6, a^15 b^20 d) that make them
// bivariate) and evaluates them literally at random parameters: 100 triples
// (a, b, u) and 50 quadruples (a, b, c, d). Deterministic for a given seed.
std::vector<IdentityCheck> verify_printed_identities(std::uint64_t seed = 20240607);

}  // namespace delpezzo
