#include "delpezzo/identities.hpp"

#include <random>

#include "delpezzo/construction.hpp"
#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

Rational two_pow(unsigned e) { return Rational(2).pow(e); }

Rational random_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 20);
  while (true) {
    Rational r(mpz_class(num(rng)), mpz_class(den(rng)));
    if (!nonzero || !r.is_zero()) return r;
  }
}

// f0 and f1 of the sextic ansatz with optional linear perturbation.
struct LowCoefficients {
  Rational f0, f1;
};

LowCoefficients low_coefficients(const Rational& a, const Rational& u, const Rational& b_lin,
                                 const Rational& c_lin, const SexticAnsatz& s) {
  const Rational v4 = s.v.pow(4);
  return {s.r * s.r + a * v4 * s.v + b_lin * s.v,
          Rational(2) * s.q * s.r + Rational(5) * a * u * v4 + b_lin * u - c_lin};
}

SurfacePoint evaluate_ansatz(const SexticAnsatz& s, const Rational& u, const Rational& T) {
  const Rational x = ((T + s.p) * T + s.q) * T + s.r;
  return {x, u * T + s.v, T};
}

IdentityCheck thm2_symbolic() {
  // With A = a^6 u^30 every term is a function of (A, b); multiplied by A^5:
  //   P(A,b)^2 / (2^18 29^6) - A (9A - 2^13 b)^5 / 58^5 - (7A - 2^15 b)^6 / 232^6 - b A^5 = 0.
  const BiPoly A = BiPoly::x();
  const BiPoly b = BiPoly::y();
  const BiPoly P = Rational(118441) * A.pow(3) + two_pow(15) * Rational(11863) * A * A * b -
                   two_pow(30) * Rational(137) * A * b * b + two_pow(45) * b.pow(3);
  const BiPoly lhs = P * P * (two_pow(18) * Rational(29).pow(6)).inverse() -
                     A * (Rational(9) * A - two_pow(13) * b).pow(5) * Rational(58).pow(-5) -
                     (Rational(7) * A - two_pow(15) * b).pow(6) * Rational(232).pow(-6) -
                     b * A.pow(5);
  IdentityCheck out{"theorem2_symbolic", lhs.is_zero(), 0, "bivariate expansion in (a^6 u^30, b)"};
  return out;
}

IdentityCheck thm2_samples(std::mt19937_64& rng) {
  IdentityCheck out{"theorem2_samples", true, 100, ""};
  for (std::size_t i = 0; i < out.samples; ++i) {
    const QuinticSexticParams params{random_rational(rng, true), random_rational(rng, false),
                                     random_rational(rng, true)};
    if (!thm2_residual(params, thm2_closed_form(params)).is_zero()) {
      out.passed = false;
      out.detail = "nonzero residual at a=" + params.a.str() + " b=" + params.b.str() +
                   " u=" + params.u.str();
      return out;
    }
  }
  out.detail = "closed form residual exactly zero";
  return out;
}

IdentityCheck cor3_symbolic() {
  // With C = c^6 and K = a^15 b^20 d, multiplying by K C^5 / d leaves
  //   P(C,K)^2 / 1560896^2 - Q(C,K)^3 / 13456^3 + C R(C,K)^5 / 116^5 - K C^5 = 0.
  const BiPoly C = BiPoly::x();
  const BiPoly K = BiPoly::y();
  const BiPoly P = Rational(25875323) * C.pow(3) + Rational(720748) * K * C * C +
                   Rational(8336) * K * K * C + Rational(64) * K.pow(3);
  const BiPoly Q = Rational(87709) * C * C + Rational(1544) * K * C + Rational(16) * K * K;
  const BiPoly R = Rational(135) * C + Rational(4) * K;
  const BiPoly lhs = P * P * Rational(1560896).pow(-2) - Q.pow(3) * Rational(13456).pow(-3) +
                     C * R.pow(5) * Rational(116).pow(-5) - K * C.pow(5);
  return {"corollary3_symbolic", lhs.is_zero(), 0, "bivariate expansion in (c^6, a^15 b^20 d)"};
}

IdentityCheck cor3_samples(std::mt19937_64& rng) {
  IdentityCheck out{"corollary3_samples", true, 50, ""};
  for (std::size_t i = 0; i < out.samples; ++i) {
    const WeightedTernaryParams params{random_rational(rng, true), random_rational(rng, true),
                                       random_rational(rng, true), random_rational(rng, true)};
    if (!cor3_residual(params, cor3_closed_form(params)).is_zero()) {
      out.passed = false;
      out.detail = "nonzero residual at a=" + params.a.str() + " b=" + params.b.str() +
                   " c=" + params.c.str() + " d=" + params.d.str();
      return out;
    }
  }
  out.detail = "closed form residual exactly zero";
  return out;
}

IdentityCheck sextic_ansatz_check() {
  bool all_zero = true;
  for (const auto& f : sextic_ansatz_high_coefficients()) all_zero = all_zero && f.is_zero();
  return {"theorem2_ansatz", all_zero, 0, "f2..f5 vanish in Q[a, u]"};
}

}  // namespace

SexticAnsatz sextic_ansatz(const Rational& a, const Rational& u) {
  const Rational au5 = a * u.pow(5);
  return {-au5 / Rational(2), Rational(3) * au5 * au5 / Rational(16), au5.pow(3) / Rational(64),
          -au5 * u / Rational(8)};
}

Rational thm2_residual(const QuinticSexticParams& params, const SurfacePoint& p) {
  return p.x * p.x + params.a * p.y.pow(5) - p.z.pow(6) - params.b;
}

Rational cor3_residual(const WeightedTernaryParams& params, const SurfacePoint& p) {
  return params.a * p.x * p.x + params.b * p.y.pow(3) + params.c * p.z.pow(5) - params.d;
}

Rational cor4_residual(const LinearPerturbedParams& params, const SurfacePoint& p) {
  return p.x * p.x + params.a * p.y.pow(5) + params.b * p.y - (p.z.pow(6) + params.c * p.z) -
         params.d;
}

SurfacePoint thm2_point(const QuinticSexticParams& params) {
  if (params.a.is_zero() || params.u.is_zero()) throw DomainError("a and u must be nonzero");
  const SexticAnsatz s = sextic_ansatz(params.a, params.u);
  const LowCoefficients low = low_coefficients(params.a, params.u, Rational(), Rational(), s);
  if (low.f1.is_zero()) throw DegenerateFiber("f1 = 0 for the sextic ansatz");
  const SurfacePoint p = evaluate_ansatz(s, params.u, (params.b - low.f0) / low.f1);
  if (!thm2_residual(params, p).is_zero()) throw IdentityFailure("quintic-sextic point off the surface");

  const SurfacePoint closed = thm2_closed_form(params);
  if (p.y != closed.y || p.z.abs() != closed.z.abs() || p.x.abs() != closed.x.abs()) {
    throw IdentityFailure("quintic-sextic point disagrees with the closed form");
  }
  return p;
}

SurfacePoint thm2_closed_form(const QuinticSexticParams& params) {
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational& u = params.u;
  if (a.is_zero() || u.is_zero()) throw DomainError("a and u must be nonzero");
  const Rational A = a.pow(6) * u.pow(30);
  const Rational x = (Rational(118441) * A.pow(3) + two_pow(15) * Rational(11863) * A * A * b -
                      two_pow(30) * Rational(137) * A * b * b + two_pow(45) * b.pow(3)) /
                     (two_pow(9) * Rational(29).pow(3) * a.pow(15) * u.pow(75));
  const Rational y = -(Rational(9) * A - two_pow(13) * b) / (Rational(58) * a.pow(5) * u.pow(24));
  const Rational z = (Rational(7) * A - two_pow(15) * b) / (Rational(232) * a.pow(5) * u.pow(25));
  return {x, y, z};
}

SurfacePoint cor3_point(const WeightedTernaryParams& params) {
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational& c = params.c;
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw DomainError("a, b, c must be nonzero");
  // Lift on the fiber a^15 b^20 d / c^6 and scale by weights (c^15, c^10, c^6)
  // back onto a^15 b^20 c^24 d; this keeps c out of the lifted denominators.
  const QuinticCoeffs f{Rational(), Rational(), Rational(), a.pow(15) * b.pow(20) * params.d / c.pow(6)};
  const SurfacePoint lifted = lift_point(f, CurvePoint(Rational(15), Rational(90)), Branch::Plus);
  const SurfacePoint p{lifted.x * c.pow(15) / (a.pow(8) * b.pow(10) * c.pow(12)),
                       -lifted.y * c.pow(10) / (a.pow(5) * b.pow(7) * c.pow(8)),
                       -lifted.z * c.pow(6) / (a.pow(3) * b.pow(4) * c.pow(5))};
  if (!cor3_residual(params, p).is_zero()) throw IdentityFailure("weighted ternary point off the surface");

  const SurfacePoint closed = cor3_closed_form(params);
  if (p.y != closed.y || p.z != closed.z || p.x.abs() != closed.x.abs()) {
    throw IdentityFailure("weighted ternary point disagrees with the closed form");
  }
  return p;
}

SurfacePoint cor3_closed_form(const WeightedTernaryParams& params) {
  const Rational& a = params.a;
  const Rational& b = params.b;
  const Rational& c = params.c;
  if (a.is_zero() || b.is_zero() || c.is_zero()) throw DomainError("a, b, c must be nonzero");
  const Rational K = a.pow(15) * b.pow(20) * params.d;
  const Rational c6 = c.pow(6);
  const Rational x = (Rational(25875323) * c6.pow(3) + Rational(720748) * K * c6 * c6 +
                      Rational(8336) * K * K * c6 + Rational(64) * K.pow(3)) /
                     (Rational(1560896) * a.pow(8) * b.pow(10) * c.pow(15));
  const Rational y = -(Rational(87709) * c6 * c6 + Rational(1544) * K * c6 + Rational(16) * K * K) /
                     (Rational(13456) * a.pow(5) * b.pow(7) * c.pow(10));
  const Rational z = (Rational(135) * c6 + Rational(4) * K) / (Rational(116) * a.pow(3) * b.pow(4) * c.pow(5));
  return {x, y, z};
}

bool denominators_supported_by(const SurfacePoint& p, const mpz_class& modulus) {
  for (const Rational* r : {&p.x, &p.y, &p.z}) {
    mpz_class den = r->den();
    mpz_class g;
    while (true) {
      mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
      if (g == 1) break;
      den /= g;
    }
    if (den != 1) return false;
  }
  return true;
}

SurfacePoint cor4_point(const LinearPerturbedParams& params) {
  if (params.a.is_zero() || params.u.is_zero()) throw DomainError("a and u must be nonzero");
  const SexticAnsatz s = sextic_ansatz(params.a, params.u);
  const LowCoefficients low = low_coefficients(params.a, params.u, params.b, params.c, s);
  if (low.f1.is_zero()) throw DegenerateFiber("f1 = 2qr + 5auv^4 + bu - c vanishes");
  const SurfacePoint p = evaluate_ansatz(s, params.u, (params.d - low.f0) / low.f1);
  if (!cor4_residual(params, p).is_zero()) throw IdentityFailure("linearly perturbed point off the surface");
  return p;
}

std::vector<BiPoly> sextic_ansatz_high_coefficients() {
  // Variables (a, u).
  const BiPoly a = BiPoly::x();
  const BiPoly u = BiPoly::y();
  const BiPoly au5 = a * u.pow(5);
  const BiPoly p = Rational(-1, 2) * au5;
  const BiPoly q = Rational(3, 16) * au5 * au5;
  const BiPoly r = Rational(1, 64) * au5.pow(3);
  const BiPoly v = Rational(-1, 8) * au5 * u;
  const Rational two(2);
  return {
      q * q + two * p * r + Rational(10) * a * u * u * v.pow(3),
      two * p * q + two * r + Rational(10) * a * u.pow(3) * v * v,
      p * p + two * q + Rational(5) * a * u.pow(4) * v,
      two * p + a * u.pow(5),
  };
}

std::vector<IdentityCheck> verify_printed_identities(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<IdentityCheck> out;
  out.push_back(sextic_ansatz_check());
  out.push_back(thm2_symbolic());
  out.push_back(thm2_samples(rng));
  out.push_back(cor3_symbolic());
  out.push_back(cor3_samples(rng));
  return out;
}

}  // namespace delpezzo
