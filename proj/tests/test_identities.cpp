#include <random>

#include "delpezzo/errors.hpp"
#include "delpezzo/identities.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace delpezzo;

namespace {

Rational Q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

// Evaluates the ansatz curve at T from the literal formulas and solves the
// fiber equation by interpolation: the residual g(T) is a polynomial of
// degree <= 6, so agreeing with a line at 7 points makes it linear.
struct Interpolated {
  bool linear = true;
  SurfacePoint point;
};

Interpolated interpolate_sextic(const Rational& a, const Rational& u, const Rational& lin_y, const Rational& lin_z,
                                const Rational& rhs) {
  const Rational au5 = a * u.pow(5);
  const Rational p = -au5 / Q(2), q = Q(3) * au5 * au5 / Q(16), r = au5.pow(3) / Q(64), v = -au5 * u / Q(8);
  auto at = [&](const Rational& T) {
    return SurfacePoint{T.pow(3) + p * T * T + q * T + r, u * T + v, T};
  };
  auto g = [&](const Rational& T) {
    const SurfacePoint s = at(T);
    return s.x * s.x + a * s.y.pow(5) + lin_y * s.y - s.z.pow(6) - lin_z * s.z;
  };
  Interpolated out;
  const Rational g0 = g(Q(0));
  const Rational slope = g(Q(1)) - g0;
  for (long k = 2; k <= 6; ++k) out.linear = out.linear && g(Q(k)) == g0 + slope * Q(k);
  if (!out.linear || slope.is_zero()) return out;
  out.point = at((rhs - g0) / slope);
  return out;
}

}  // namespace

TEST_CASE("sextic ansatz") {
  const SexticAnsatz s = sextic_ansatz(Q(1), Q(1));
  CHECK(s.p == Q(-1, 2));
  CHECK(s.q == Q(3, 16));
  CHECK(s.r == Q(1, 64));
  CHECK(s.v == Q(-1, 8));
  const auto high = sextic_ansatz_high_coefficients();
  CHECK(high.size() == 4);
  for (const auto& f : high) CHECK(f.is_zero());
}

TEST_CASE("quintic-sextic anchor values") {
  const SurfacePoint p = thm2_point({Q(1), Q(1), Q(1)});
  CHECK(p.y == Q(8183, 58));
  CHECK(p.z.abs() == Q(32761, 232));
  CHECK(thm2_residual({Q(1), Q(1), Q(1)}, p).is_zero());
  CHECK(thm2_point({Q(1), Q(0), Q(1)}).z == Q(-7, 232));
  CHECK(thm2_closed_form({Q(1), Q(0), Q(1)}).z == Q(7, 232));
  CHECK_THROWS_AS(thm2_point({Q(0), Q(1), Q(1)}), DomainError);
  CHECK_THROWS_AS(thm2_point({Q(1), Q(1), Q(0)}), DomainError);
}

TEST_CASE("quintic-sextic points against the closed forms and interpolation") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    const QuinticSexticParams prm{oracle::random_rational(rng, 20, 20, true), oracle::random_rational(rng),
                                  oracle::random_rational(rng, 20, 20, true)};
    const SurfacePoint p = thm2_point(prm);
    CHECK(thm2_residual(prm, p).is_zero());
    const SurfacePoint closed = thm2_closed_form(prm);
    CHECK(p.y == closed.y);
    CHECK(p.z.abs() == closed.z.abs());
    const Interpolated ref = interpolate_sextic(prm.a, prm.u, Q(0), Q(0), prm.b);
    CHECK(ref.linear);
    CHECK(ref.point == p);
  }
}

TEST_CASE("weighted ternary anchor and closed form") {
  const WeightedTernaryParams one{Q(1), Q(1), Q(1), Q(0)};
  const SurfacePoint p = cor3_point(one);
  CHECK(p.x.abs() == Q(25875323, 1560896));
  CHECK(p.y == Q(-87709, 13456));
  CHECK(p.z == Q(135, 116));
  CHECK(cor3_residual(one, p).is_zero());
  CHECK_THROWS_AS(cor3_point({Q(0), Q(1), Q(1), Q(1)}), DomainError);
}

TEST_CASE("weighted ternary S-integrality") {
  for (long a = 1; a <= 5; ++a) {
    for (long b = 1; b <= 5; ++b) {
      for (long c = 1; c <= 5; ++c) {
        for (long d = 1; d <= 3; ++d) {
          const WeightedTernaryParams prm{Q(a), Q(b), Q(c), Q(d)};
          const SurfacePoint p = cor3_point(prm);
          CHECK(cor3_residual(prm, p).is_zero());
          CHECK(denominators_supported_by(p, mpz_class(58 * a * b * c)));
        }
      }
    }
  }
}

TEST_CASE("weighted ternary with rational coefficients") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 30; ++i) {
    const WeightedTernaryParams prm{oracle::random_rational(rng, 9, 5, true), oracle::random_rational(rng, 9, 5, true),
                                    oracle::random_rational(rng, 9, 5, true), oracle::random_rational(rng, 9, 5)};
    const SurfacePoint p = cor3_point(prm);
    CHECK(prm.a * p.x * p.x + prm.b * p.y.pow(3) + prm.c * p.z.pow(5) == prm.d);
  }
}

TEST_CASE("denominators_supported_by") {
  CHECK(denominators_supported_by({Q(1, 8), Q(3, 29), Q(5)}, mpz_class(58)));
  CHECK_FALSE(denominators_supported_by({Q(1, 8), Q(1, 87), Q(5)}, mpz_class(58)));
  CHECK(denominators_supported_by({Q(1), Q(2), Q(3)}, mpz_class(1)));
}

TEST_CASE("linearly perturbed surface") {
  std::mt19937_64 rng(43);
  int solved = 0;
  for (int i = 0; i < 60; ++i) {
    const LinearPerturbedParams prm{oracle::random_rational(rng, 20, 20, true), oracle::random_rational(rng),
                                    oracle::random_rational(rng), oracle::random_rational(rng),
                                    oracle::random_rational(rng, 20, 20, true)};
    const Interpolated ref = interpolate_sextic(prm.a, prm.u, prm.b, prm.c, prm.d);
    CHECK(ref.linear);
    try {
      const SurfacePoint p = cor4_point(prm);
      CHECK(cor4_residual(prm, p).is_zero());
      CHECK(ref.point == p);
      ++solved;
    } catch (const DegenerateFiber&) {
    }
  }
  CHECK(solved >= 55);

  // c chosen to cancel the linear coefficient.
  const Rational a = Q(1), u = Q(1), b = Q(2);
  const SexticAnsatz s = sextic_ansatz(a, u);
  const Rational c = Q(2) * s.q * s.r + Q(5) * a * u * s.v.pow(4) + b * u;
  CHECK_THROWS_AS(cor4_point({a, b, c, Q(3), u}), DegenerateFiber);
}

TEST_CASE("printed identities verify") {
  const auto checks = verify_printed_identities();
  REQUIRE(checks.size() == 5);
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
  CHECK(checks[2].samples == 100);
  CHECK(checks[4].samples == 50);
}
