#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "delpezzo/elliptic.hpp"
#include "delpezzo/poly.hpp"
#include "delpezzo/ratfunc.hpp"
#include "delpezzo/surface_point.hpp"

namespace delpezzo {

// f(z) = z^5 + a z^3 + b z^2 + c z + d.
struct QuinticCoeffs {
  Rational a;
  Rational b;
  Rational c;
  Rational d;

  [[nodiscard]] Poly poly() const;
  [[nodiscard]] Rational eval(const Rational& z) const;
  [[nodiscard]] std::string str() const { return poly().str('z'); }

  // Requires a monic quintic without a z^4 term; throws ParseError otherwise.
  static QuinticCoeffs from_poly(const Poly& p);
  static QuinticCoeffs parse(std::string_view text);

  friend bool operator==(const QuinticCoeffs&, const QuinticCoeffs&) = default;
};

// x^2 - y^3 - f(z).
Rational surface_residual(const QuinticCoeffs& f, const SurfacePoint& p);

enum class Branch { Plus, Minus };
std::string to_string(Branch branch);

// E_{a,b}: Y^2 = X^3 + 135(2a - 15) X - 1350(5a + 2b - 26).
WeierstrassCurve auxiliary_curve(const Rational& a, const Rational& b);

// Right-hand side of C_{a,b}: v^2 = 15 s^3 + 90 s^2 + 9(2a + 5) s + 6(a - 2b + 1).
Rational c_curve_rhs(const Rational& a, const Rational& b, const Rational& s);

// The affine isomorphism C_{a,b} -> E_{a,b}, (X, Y) = (15(s + 2), 15 v), and back.
std::pair<Rational, Rational> c_curve_to_e(const Rational& s, const Rational& v);
std::pair<Rational, Rational> e_to_c_curve(const Rational& X, const Rational& Y);

// Both roots u = (-9 - 30 s + 3 s^2 +- 4 v) / 12 of the quadratic that makes
// the T^2 coefficient vanish. Throws DomainError when (s, v) is off C_{a,b}.
std::pair<Rational, Rational> u_branches(const Rational& a, const Rational& b, const Rational& s,
                                         const Rational& v);

// Ansatz x = T^3 + p T^2 + q T + r, y = T^2 + s T + u, z = T. With p, q, r as
// below, x^2 - y^3 - f(T) collapses to f0 + f1 T. Generic over the field so
// the same code runs over Q and over Q(U).
template <class Field>
struct LiftForms {
  Field s, v, u, p, q, r, f0, f1;
};

template <class Field>
LiftForms<Field> lift_forms(const QuinticCoeffs& f, const Field& X, const Field& Y, Branch branch) {
  auto k = [](long n) { return Field(Rational(n)); };
  LiftForms<Field> L;
  L.s = (X - k(30)) / k(15);
  L.v = Y / k(15);
  const Field& s = L.s;
  const Field s2 = s * s;
  const Field root_term = k(4) * L.v;
  const Field base = k(-9) - k(30) * s + k(3) * s2;
  L.u = (branch == Branch::Plus ? base + root_term : base - root_term) / k(12);
  const Field& u = L.u;
  L.p = (k(1) + k(3) * s) / k(2);
  L.q = (k(-1) - k(6) * s + k(3) * s2 + k(12) * u) / k(8);
  L.r = (k(1) + Field(Rational(8) * f.a) + k(9) * s + k(15) * s2 - s2 * s - k(12) * u +
         k(12) * s * u) /
        k(16);
  L.f0 = Field(-f.d) + L.r * L.r - u * u * u;
  L.f1 = Field(-f.c) + k(2) * L.q * L.r - k(3) * s * u * u;
  return L;
}

struct LiftIntermediates {
  Rational s, v, u, p, q, r, f0, f1;
  Branch branch = Branch::Plus;
};

// Intermediates for an affine point of E_{a,b}; no singularity check.
LiftIntermediates lift_intermediates(const QuinticCoeffs& f, const CurvePoint& P, Branch branch);

// x(T)^2 - y(T)^3 - f(T) as a polynomial in T for the given intermediates.
Poly fiber_expansion(const QuinticCoeffs& f, const LiftIntermediates& li);

// Lifts an affine point of E_{f.a, f.b} to a rational point of x^2 - y^3 = f(z).
// Throws SingularAuxiliary, DegenerateFiber (f1 = 0), DomainError (P off the
// curve or infinite), IdentityFailure (exact verification failed).
SurfacePoint lift_point(const QuinticCoeffs& f, const CurvePoint& P, Branch branch);

// x(t), y(t), z(t) in Q[t] with x^2 - y^3 - f(z) = t identically.
struct PolySolution {
  Poly x;
  Poly y;
  Poly z;
};

// Substitutes T = (t - f0) / f1 into the lifted forms. Same errors as lift_point.
PolySolution polynomial_solution(const QuinticCoeffs& f, const CurvePoint& P, Branch branch);

// x(t)^2 - y(t)^3 - f(z(t)); equals t for every valid PolySolution.
Poly polynomial_residual(const QuinticCoeffs& f, const PolySolution& sol);

enum class BranchPolicy { Plus, Minus, Both, PlusThenMinus };

// Height bound used when searching for a seed point: DP_SEARCH_BOUND if set
// to a positive integer, else 10^4.
long default_search_bound();

// First non-torsion point of search_points over bounds 10, 100, ... up to
// height_bound. Throws NoSeedPoint.
CurvePoint find_seed_point(const WeierstrassCurve& E, long height_bound);

struct GenerateOptions {
  std::optional<CurvePoint> seed;
  BranchPolicy policy = BranchPolicy::PlusThenMinus;
  long search_bound = 0;  // 0 means default_search_bound()
};

struct GeneratedPoint {
  SurfacePoint point;
  long multiplier = 0;
  Branch branch = Branch::Plus;
};

// attempts == points.size() + degenerate_fibers + duplicates.
struct GenerationReport {
  CurvePoint seed;
  std::vector<GeneratedPoint> points;
  std::size_t attempts = 0;
  std::size_t degenerate_fibers = 0;
  std::size_t duplicates = 0;
};

// Lifts m * seed for m = 1..count on the branches the policy selects.
// PlusThenMinus tries the minus branch only when the plus fiber degenerates.
// Degenerate fibers and repeated points are skipped and counted.
// Throws SingularAuxiliary, NoSeedPoint (nothing found, or the seed is torsion).
GenerationReport generate_surface_points(const QuinticCoeffs& f, long count,
                                         const GenerateOptions& options = {});

// Singular members of the auxiliary family: for every rational t,
// a = (675 - t^2) / 90 and b = (-2t^3 + 75t^2 - 15525) / 2700 give
// E_{a,b}: Y^2 = (X - t)^2 (X + 2t).
struct SingularFamily {
  Rational t;
  Rational a;
  Rational b;
  WeierstrassCurve curve;
};

SingularFamily singular_family(const Rational& t);

// (U^2 - 2t, U(U^2 - 3t)), a point of Y^2 = (X - t)^2 (X + 2t).
CurvePoint singular_param_point(const Rational& t, const Rational& U);

// The t with E_{a,b} = singular_family(t).curve, if E_{a,b} is singular.
std::optional<Rational> singular_parameter(const Rational& a, const Rational& b);

// Lifts singular_param_point(t, U) for the t of a singular E_{f.a, f.b}.
// Throws DomainError if E_{f.a, f.b} is nonsingular; DegenerateFiber as lift_point.
SurfacePoint lift_singular_point(const QuinticCoeffs& f, const Rational& U, Branch branch);

// The rational curve traced by lift_singular_point as U varies: x, y, z in
// Q(U) with x^2 - y^3 - f(z) = 0 verified symbolically.
struct RationalCurve {
  RatFunc x;
  RatFunc y;
  RatFunc z;
};

RationalCurve singular_family_curve(const QuinticCoeffs& f, Branch branch);

}  // namespace delpezzo
