#include <random>

#include "delpezzo/degenerate.hpp"
#include "delpezzo/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace delpezzo;

namespace {

Rational Q(long n, long d = 1) { return Rational(mpz_class(n), mpz_class(d)); }

// The closed form for psi evaluated numerically at t.
std::optional<Rational> psi_value(const RationalDoubleRootQuintic& f, const Rational& t) {
  const Rational& a = f.a1;
  const Rational num = Q(9) * t.pow(4) - Q(36) * t.pow(3) + Q(6) * (Q(4) * a + Q(5)) * t * t -
                       Q(12) * (Q(4) * a - Q(1)) * t + Q(16) * a * a - Q(8) * a - Q(64) * f.c1 + Q(1);
  const Rational den = Q(8) * (t.pow(3) - Q(15) * t * t + Q(3) * (Q(4) * a - Q(3)) * t + Q(4) * a -
                               Q(8) * f.b1 - Q(1));
  if (den.is_zero()) return std::nullopt;
  return -num / den;
}

Rational quintic_at(const RationalDoubleRootQuintic& f, const Rational& z) {
  return z * z * (z.pow(3) + f.a1 * z * z + f.b1 * z + f.c1);
}

}  // namespace

TEST_CASE("canonical shapes") {
  const RationalDoubleRootQuintic r{Q(1), Q(2), Q(3)};
  CHECK(r.poly() == Poly({Q(0), Q(0), Q(3), Q(2), Q(1), Q(1)}));
  const IrrationalDoubleRootQuintic i{Q(-2), Q(5)};
  // (z^2 - 2)^2 (z + 5) = z^5 + 5z^4 - 4z^3 - 20z^2 + 4z + 20
  CHECK(i.poly() == Poly({Q(20), Q(4), Q(-20), Q(-4), Q(5), Q(1)}));
  CHECK(i.roots_irrational());
  CHECK_FALSE(IrrationalDoubleRootQuintic{Q(-4), Q(0)}.roots_irrational());
  CHECK(IrrationalDoubleRootQuintic{Q(1), Q(0)}.roots_irrational());

  const auto mi = match_irrational_double_root(i.poly());
  REQUIRE(mi.has_value());
  CHECK(mi->a1 == Q(-2));
  CHECK(mi->b1 == Q(5));
  CHECK_FALSE(match_irrational_double_root(r.poly()).has_value());
  const auto m = match_rational_double_root(r.poly());
  REQUIRE(m.has_value());
  CHECK(m->a1 == Q(1));
  CHECK(m->b1 == Q(2));
  CHECK(m->c1 == Q(3));
  CHECK_FALSE(match_rational_double_root(i.poly()).has_value());
}

TEST_CASE("psi anchor values") {
  const RationalDoubleRootQuintic zero{Q(0), Q(0), Q(0)};
  const RatFunc p = psi(zero);
  CHECK(p.eval(Q(1)) == Q(1, 12));
  CHECK(psi(RationalDoubleRootQuintic{Q(1), Q(0), Q(0)}).eval(Q(0)) == Q(-3, 8));
  const SectionOverQt s = section(zero);
  CHECK(s.at(Q(1)) == SurfacePoint{Q(-47, 1728), Q(13, 144), Q(1, 12)});
  CHECK(section_p(zero) == Poly({Q(1, 2), Q(3, 2)}));
  CHECK(section_q(zero) == Poly({Q(-1, 8), Q(-3, 4), Q(3, 8)}));
}

TEST_CASE("section over Q(t) for random rational double roots") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 20; ++i) {
    const RationalDoubleRootQuintic f{oracle::random_rational(rng, 20, 1), oracle::random_rational(rng, 20, 1),
                                      oracle::random_rational(rng, 20, 1)};
    const RatFunc from_system = psi_from_system(f);
    CHECK(psi(f) == from_system);
    const SectionOverQt s = section(f);
    CHECK(is_identically_zero(section_residual(f, s)));
    CHECK(s.z == from_system);

    // Independent numeric check from the closed form.
    for (int j = 0; j < 10; ++j) {
      const Rational t = oracle::random_rational(rng);
      const auto Z = psi_value(f, t);
      if (!Z) continue;
      const Rational pp = (Q(1) + Q(3) * t) / Q(2);
      const Rational qq = (Q(-1) + Q(4) * f.a1 - Q(6) * t + Q(3) * t * t) / Q(8);
      const SurfacePoint pt{*Z * (*Z * *Z + pp * *Z + qq), *Z * (*Z + t), *Z};
      CHECK(pt.x * pt.x - pt.y.pow(3) == quintic_at(f, pt.z));
      CHECK(s.at(t) == pt);
    }
  }
}

TEST_CASE("the section is not torsion") {
  std::mt19937_64 rng(32);
  for (int i = 0; i < 10; ++i) {
    const RationalDoubleRootQuintic f{oracle::random_rational(rng, 20, 1), oracle::random_rational(rng, 20, 1),
                                      oracle::random_rational(rng, 20, 1, true)};
    const NontorsionEvidence ev = nontorsion_evidence(f);
    CHECK(ev.nonconstant);
    CHECK(ev.sixth_power_free);
    CHECK(ev.max_multiplicity >= 1);
    CHECK(ev.f_of_psi == compose(f.poly(), psi(f)));
  }
}

TEST_CASE("genus-zero parametrization for irrational double roots") {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 20; ++i) {
    const IrrationalDoubleRootQuintic f{oracle::random_rational(rng, 20, 1, true), oracle::random_rational(rng, 20, 1)};
    CHECK(is_identically_zero(genus0_residual(f)));
    const Genus0Forms g = genus0_forms(f);
    for (int j = 0; j < 10; ++j) {
      const Rational t = oracle::random_rational(rng, 10, 5);
      const Rational u = oracle::random_rational(rng, 10, 5, true);
      const Rational den = g.den.eval(t, u);
      if (den.is_zero()) {
        CHECK_THROWS_AS(genus0_param(f, t, u), ParamPole);
        continue;
      }
      const Rational X = g.x_num.eval(t, u) / den;
      const Rational Z = g.z_num.eval(t, u) / den;
      const Rational u6 = u.pow(6);
      CHECK(X * X == u6 * Z * Z + Z + f.a1 * u6 + f.b1);
      const SurfacePoint p = genus0_param(f, t, u);
      CHECK(p.z == Z);
      CHECK(p.x * p.x - p.y.pow(3) == (p.z * p.z + f.a1).pow(2) * (p.z + f.b1));
      CHECK(surface_residual(f, p).is_zero());
    }
  }
  const IrrationalDoubleRootQuintic f{Q(-2), Q(1)};
  CHECK_THROWS_AS(genus0_param(f, Q(1, 2), Q(1)), ParamPole);
  CHECK_THROWS_AS(genus0_param(IrrationalDoubleRootQuintic{Q(0), Q(1)}, Q(1), Q(1)), DomainError);
}
