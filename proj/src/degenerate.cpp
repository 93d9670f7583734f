#include "delpezzo/degenerate.hpp"

#include <algorithm>

#include "delpezzo/errors.hpp"

namespace delpezzo {

namespace {

bool is_monic_quintic(const Poly& f) { return f.degree() == 5 && f.leading().is_one(); }

unsigned max_multiplicity(const Poly& p) {
  return static_cast<unsigned>(squarefree_decomposition(p).size());
}

}  // namespace

Poly RationalDoubleRootQuintic::poly() const {
  return Poly({Rational(), Rational(), c1, b1, a1, Rational(1)});
}

Poly IrrationalDoubleRootQuintic::poly() const {
  const Poly square({a1, Rational(), Rational(1)});
  return square * square * Poly({b1, Rational(1)});
}

bool IrrationalDoubleRootQuintic::roots_irrational() const { return !exact_root(-a1, 2).has_value(); }

std::optional<RationalDoubleRootQuintic> match_rational_double_root(const Poly& f) {
  if (!is_monic_quintic(f) || !f.coefficient(0).is_zero() || !f.coefficient(1).is_zero()) {
    return std::nullopt;
  }
  return RationalDoubleRootQuintic{f.coefficient(4), f.coefficient(3), f.coefficient(2)};
}

std::optional<IrrationalDoubleRootQuintic> match_irrational_double_root(const Poly& f) {
  if (!is_monic_quintic(f)) return std::nullopt;
  const Rational b1 = f.coefficient(4);
  const Rational a1 = f.coefficient(3) / Rational(2);
  if (a1.is_zero()) return std::nullopt;
  IrrationalDoubleRootQuintic candidate{a1, b1};
  if (candidate.poly() != f) return std::nullopt;
  return candidate;
}

Rational surface_residual(const RationalDoubleRootQuintic& f, const SurfacePoint& p) {
  return p.x * p.x - p.y.pow(3) - f.poly().eval(p.z);
}

Rational surface_residual(const IrrationalDoubleRootQuintic& f, const SurfacePoint& p) {
  return p.x * p.x - p.y.pow(3) - f.poly().eval(p.z);
}

Poly section_p(const RationalDoubleRootQuintic&) {
  return Poly({Rational(1, 2), Rational(3, 2)});
}

Poly section_q(const RationalDoubleRootQuintic& f) {
  return Poly({(Rational(-1) + Rational(4) * f.a1) / Rational(8), Rational(-6, 8), Rational(3, 8)});
}

RatFunc psi_from_system(const RationalDoubleRootQuintic& f) {
  const Poly p = section_p(f);
  const Poly q = section_q(f);
  const Poly f0 = q * q - Poly(f.c1);
  const Poly f1 = Rational(2) * p * q - Poly::monomial(Rational(1), 3) - Poly(f.b1);
  return RatFunc(-f0, f1);
}

RatFunc psi(const RationalDoubleRootQuintic& f) {
  const Rational& a = f.a1;
  const Poly num({Rational(16) * a * a - Rational(8) * a - Rational(64) * f.c1 + Rational(1),
                  Rational(-12) * (Rational(4) * a - Rational(1)),
                  Rational(6) * (Rational(4) * a + Rational(5)), Rational(-36), Rational(9)});
  const Poly den({Rational(4) * a - Rational(8) * f.b1 - Rational(1),
                  Rational(3) * (Rational(4) * a - Rational(3)), Rational(-15), Rational(1)});
  RatFunc closed(-num, Rational(8) * den);
  if (closed != psi_from_system(f)) {
    throw IdentityFailure("closed form of psi disagrees with -f0/f1");
  }
  return closed;
}

SectionOverQt section(const RationalDoubleRootQuintic& f) {
  const RatFunc Z = psi(f);
  const RatFunc p(section_p(f));
  const RatFunc q(section_q(f));
  const RatFunc t(Poly::identity());
  SectionOverQt out{Z * (Z * Z + p * Z + q), Z * (Z + t), Z};
  if (!is_identically_zero(section_residual(f, out))) {
    throw IdentityFailure("section is not on x^2 - y^3 - f(z) = 0");
  }
  return out;
}

RatFunc section_residual(const RationalDoubleRootQuintic& f, const SectionOverQt& s) {
  return s.x * s.x - s.y.pow(3) - compose(f.poly(), s.z);
}

NontorsionEvidence nontorsion_evidence(const RationalDoubleRootQuintic& f) {
  NontorsionEvidence out;
  out.f_of_psi = compose(f.poly(), psi(f));
  out.nonconstant = !out.f_of_psi.is_constant();
  // num and den are coprime, so the multiplicities of num * den are the
  // union of those of num and den.
  out.max_multiplicity =
      std::max(max_multiplicity(out.f_of_psi.num()), max_multiplicity(out.f_of_psi.den()));
  out.sixth_power_free = !out.f_of_psi.is_zero() && out.max_multiplicity < 6;
  return out;
}

Genus0Forms genus0_forms(const IrrationalDoubleRootQuintic& f) {
  const BiPoly t = BiPoly::x();
  const BiPoly u = BiPoly::y();
  const BiPoly u3 = u.pow(3);
  const BiPoly u6 = u3 * u3;
  const BiPoly one(Rational(1));
  Genus0Forms out;
  out.den = Rational(2) * u3 * t - one;
  out.z_num = f.a1 * u6 + BiPoly(f.b1) - t * t;
  out.x_num = f.a1 * u6 * u3 + f.b1 * u3 + u3 * t * t - t;
  return out;
}

BiPoly genus0_residual(const IrrationalDoubleRootQuintic& f) {
  const Genus0Forms g = genus0_forms(f);
  const BiPoly u6 = BiPoly::y().pow(6);
  const BiPoly constant = f.a1 * u6 + BiPoly(f.b1);
  return g.x_num * g.x_num - (u6 * g.z_num * g.z_num + g.z_num * g.den + constant * g.den * g.den);
}

SurfacePoint genus0_param(const IrrationalDoubleRootQuintic& f, const Rational& t, const Rational& u) {
  if (f.a1.is_zero()) throw DomainError("a1 must be nonzero");
  const Rational u3 = u.pow(3);
  const Rational den = Rational(2) * u3 * t - Rational(1);
  if (den.is_zero()) throw ParamPole("2u^3 t - 1 = 0");
  const Rational u6 = u3 * u3;
  const Rational Z = (f.a1 * u6 + f.b1 - t * t) / den;
  const Rational X = (f.a1 * u6 * u3 + f.b1 * u3 + u3 * t * t - t) / den;
  if (X * X != u6 * Z * Z + Z + f.a1 * u6 + f.b1) {
    throw IdentityFailure("parametrized point is off X^2 = u^6 Z^2 + Z + a1 u^6 + b1");
  }
  const Rational scale = Z * Z + f.a1;
  SurfacePoint out{scale * X, scale * u * u, Z};
  if (!surface_residual(f, out).is_zero()) throw IdentityFailure("genus-zero point off the surface");
  return out;
}

}  // namespace delpezzo
