#pragma once

#include <optional>
#include <vector>

#include "delpezzo/bipoly.hpp"
#include "delpezzo/ratfunc.hpp"
#include "delpezzo/surface_point.hpp"

namespace delpezzo {

// f(z) = z^2 (z^3 + a1 z^2 + b1 z + c1): a rational double root at 0.
struct RationalDoubleRootQuintic {
  Rational a1;
  Rational b1;
  Rational c1;

  [[nodiscard]] Poly poly() const;
};

// f(z) = (z^2 + a1)^2 (z + b1), a1 != 0.
struct IrrationalDoubleRootQuintic {
  Rational a1;
  Rational b1;

  [[nodiscard]] Poly poly() const;
  // True when the double roots +-sqrt(-a1) are irrational, i.e. -a1 is not a
  // rational square.
  [[nodiscard]] bool roots_irrational() const;
};

// Recognise the canonical shapes inside a general monic quintic.
std::optional<RationalDoubleRootQuintic> match_rational_double_root(const Poly& f);
std::optional<IrrationalDoubleRootQuintic> match_irrational_double_root(const Poly& f);

// x^2 - y^3 - f(z) for either shape.
Rational surface_residual(const RationalDoubleRootQuintic& f, const SurfacePoint& p);
Rational surface_residual(const IrrationalDoubleRootQuintic& f, const SurfacePoint& p);

// p = (1 + 3t)/2 and q = (-1 + 4 a1 - 6t + 3t^2)/8 as polynomials in t.
Poly section_p(const RationalDoubleRootQuintic& f);
Poly section_q(const RationalDoubleRootQuintic& f);

// psi(t) = -f0/f1 for f0 = -c1 + q^2, f1 = -b1 + 2pq - t^3.
RatFunc psi_from_system(const RationalDoubleRootQuintic& f);

// The closed form
//   psi(t) = -(9t^4 - 36t^3 + 6(4a1+5)t^2 - 12(4a1-1)t + 16a1^2 - 8a1 - 64c1 + 1)
//            / (8(t^3 - 15t^2 + 3(4a1-3)t + 4a1 - 8b1 - 1)),
// checked against psi_from_system; throws IdentityFailure on mismatch.
RatFunc psi(const RationalDoubleRootQuintic& f);

struct SectionOverQt {
  RatFunc x;
  RatFunc y;
  RatFunc z;

  [[nodiscard]] SurfacePoint at(const Rational& t) const { return {x.eval(t), y.eval(t), z.eval(t)}; }
};

// With Z = psi(t): x = Z (Z^2 + p Z + q), y = Z (Z + t), z = Z. The factor Z
// in y comes from the birational map (x, y, z) = (Z X, Z Y, Z).
// Throws IdentityFailure if the symbolic residual is nonzero.
SectionOverQt section(const RationalDoubleRootQuintic& f);

// x^2 - y^3 - f(z) in Q(t).
RatFunc section_residual(const RationalDoubleRootQuintic& f, const SectionOverQt& s);

struct NontorsionEvidence {
  RatFunc f_of_psi;
  bool nonconstant = false;
  bool sixth_power_free = false;
  // Largest multiplicity in the squarefree decomposition of num * den.
  unsigned max_multiplicity = 0;
};

NontorsionEvidence nontorsion_evidence(const RationalDoubleRootQuintic& f);

// Z(t,u) = (-t^2 + a1 u^6 + b1) / (2u^3 t - 1) and X = Z u^3 + t, i.e.
// X(t,u) = (a1 u^9 + b1 u^3 + u^3 t^2 - t) / (2u^3 t - 1), which satisfy
// X^2 = u^6 Z^2 + Z + a1 u^6 + b1. Variables of the BiPolys are (t, u).
struct Genus0Forms {
  BiPoly x_num;
  BiPoly z_num;
  BiPoly den;
};

Genus0Forms genus0_forms(const IrrationalDoubleRootQuintic& f);

// X_num^2 - (u^6 Z_num^2 + Z_num den + (a1 u^6 + b1) den^2), the curve
// equation with (2u^3 t - 1)^2 cleared. Identically zero.
BiPoly genus0_residual(const IrrationalDoubleRootQuintic& f);

// Point of x^2 - y^3 - (z^2 + a1)^2 (z + b1) = 0 from the parametrization:
// x = (Z^2 + a1) X, y = (Z^2 + a1) u^2, z = Z. Throws ParamPole when
// 2u^3 t = 1, DomainError when a1 = 0.
SurfacePoint genus0_param(const IrrationalDoubleRootQuintic& f, const Rational& t, const Rational& u);

}  // namespace delpezzo
