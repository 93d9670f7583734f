#include "delpezzo/construction.hpp"

#include <cstdlib>
#include <set>

#include "delpezzo/errors.hpp"
#include "delpezzo/parse.hpp"

namespace delpezzo {

namespace {

constexpr long kDefaultSearchBound = 10000;

Poly lifted_x(const LiftIntermediates& li) {
  return Poly({li.r, li.q, li.p, Rational(1)});
}

Poly lifted_y(const LiftIntermediates& li) { return Poly({li.u, li.s, Rational(1)}); }

LiftIntermediates to_intermediates(const LiftForms<Rational>& L, Branch branch) {
  return {L.s, L.v, L.u, L.p, L.q, L.r, L.f0, L.f1, branch};
}

// Shared tail of lift_point and lift_singular_point: solve f0 + f1 T = 0 and
// verify both the collapsed expansion and the final point exactly.
SurfacePoint finish_lift(const QuinticCoeffs& f, const LiftIntermediates& li) {
  if (li.f1.is_zero()) throw DegenerateFiber("f1 = 0: this point of E_{a,b} gives no fiber");
  if (fiber_expansion(f, li) != Poly({li.f0, li.f1})) {
    throw IdentityFailure("lifted forms do not collapse to f0 + f1 T");
  }
  const Rational T = -li.f0 / li.f1;
  SurfacePoint out{lifted_x(li).eval(T), lifted_y(li).eval(T), T};
  if (!surface_residual(f, out).is_zero()) throw IdentityFailure("lifted point is off the surface");
  return out;
}

}  // namespace

Poly QuinticCoeffs::poly() const { return Poly({d, c, b, a, Rational(), Rational(1)}); }

Rational QuinticCoeffs::eval(const Rational& z) const { return poly().eval(z); }

QuinticCoeffs QuinticCoeffs::from_poly(const Poly& p) {
  if (p.degree() != 5) {
    throw ParseError("expected a quintic, got degree " + std::to_string(p.degree()));
  }
  if (!p.leading().is_one()) throw ParseError("quintic must be monic");
  if (!p.coefficient(4).is_zero()) throw ParseError("quintic must not have a z^4 term");
  return {p.coefficient(3), p.coefficient(2), p.coefficient(1), p.coefficient(0)};
}

QuinticCoeffs QuinticCoeffs::parse(std::string_view text) {
  return from_poly(parse_polynomial(text, 'z'));
}

Rational surface_residual(const QuinticCoeffs& f, const SurfacePoint& p) {
  return p.x * p.x - p.y * p.y * p.y - f.eval(p.z);
}

std::string to_string(Branch branch) { return branch == Branch::Plus ? "plus" : "minus"; }

WeierstrassCurve auxiliary_curve(const Rational& a, const Rational& b) {
  return {Rational(135) * (Rational(2) * a - Rational(15)),
          Rational(-1350) * (Rational(5) * a + Rational(2) * b - Rational(26))};
}

Rational c_curve_rhs(const Rational& a, const Rational& b, const Rational& s) {
  return Rational(15) * s.pow(3) + Rational(90) * s * s +
         Rational(9) * (Rational(2) * a + Rational(5)) * s +
         Rational(6) * (a - Rational(2) * b + Rational(1));
}

std::pair<Rational, Rational> c_curve_to_e(const Rational& s, const Rational& v) {
  return {Rational(15) * (s + Rational(2)), Rational(15) * v};
}

std::pair<Rational, Rational> e_to_c_curve(const Rational& X, const Rational& Y) {
  return {(X - Rational(30)) / Rational(15), Y / Rational(15)};
}

std::pair<Rational, Rational> u_branches(const Rational& a, const Rational& b, const Rational& s,
                                         const Rational& v) {
  if (v * v != c_curve_rhs(a, b, s)) throw DomainError("(s, v) is not on C_{a,b}");
  const Rational base = Rational(-9) - Rational(30) * s + Rational(3) * s * s;
  const Rational root = Rational(4) * v;
  return {(base + root) / Rational(12), (base - root) / Rational(12)};
}

LiftIntermediates lift_intermediates(const QuinticCoeffs& f, const CurvePoint& P, Branch branch) {
  if (P.is_infinity()) throw DomainError("cannot lift the point at infinity");
  const WeierstrassCurve E = auxiliary_curve(f.a, f.b);
  if (!on_curve(E, P)) throw DomainError("point " + P.str() + " is not on E_{a,b}");
  return to_intermediates(lift_forms(f, P.x(), P.y(), branch), branch);
}

Poly fiber_expansion(const QuinticCoeffs& f, const LiftIntermediates& li) {
  const Poly x = lifted_x(li);
  const Poly y = lifted_y(li);
  return x * x - y.pow(3) - f.poly();
}

SurfacePoint lift_point(const QuinticCoeffs& f, const CurvePoint& P, Branch branch) {
  if (auxiliary_curve(f.a, f.b).is_singular()) {
    throw SingularAuxiliary("E_{a,b} is singular; use the singular-family parametrization");
  }
  return finish_lift(f, lift_intermediates(f, P, branch));
}

PolySolution polynomial_solution(const QuinticCoeffs& f, const CurvePoint& P, Branch branch) {
  if (auxiliary_curve(f.a, f.b).is_singular()) {
    throw SingularAuxiliary("E_{a,b} is singular; use the singular-family parametrization");
  }
  const LiftIntermediates li = lift_intermediates(f, P, branch);
  // Validates f1 and the collapsed expansion.
  finish_lift(f, li);
  const Rational inv = li.f1.inverse();
  const Poly T({-li.f0 * inv, inv});
  PolySolution sol{lifted_x(li).compose(T), lifted_y(li).compose(T), T};
  if (polynomial_residual(f, sol) != Poly::identity()) {
    throw IdentityFailure("polynomial solution does not satisfy x^2 - y^3 - f(z) = t");
  }
  return sol;
}

Poly polynomial_residual(const QuinticCoeffs& f, const PolySolution& sol) {
  return sol.x * sol.x - sol.y.pow(3) - f.poly().compose(sol.z);
}

long default_search_bound() {
  if (const char* env = std::getenv("DP_SEARCH_BOUND")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultSearchBound;
}

CurvePoint find_seed_point(const WeierstrassCurve& E, long height_bound) {
  if (E.is_singular()) throw SingularAuxiliary("no group law on a singular auxiliary curve");
  if (height_bound < 1) throw NoSeedPoint("search bound must be positive");
  long bound = std::min(10L, height_bound);
  while (true) {
    for (const auto& P : search_points(E, bound)) {
      if (!is_torsion(E, P)) return P;
    }
    if (bound == height_bound) break;
    bound = bound > height_bound / 10 ? height_bound : bound * 10;
  }
  throw NoSeedPoint("no non-torsion point on E_{a,b} up to height " + std::to_string(height_bound));
}

GenerationReport generate_surface_points(const QuinticCoeffs& f, long count,
                                         const GenerateOptions& options) {
  const WeierstrassCurve E = auxiliary_curve(f.a, f.b);
  if (E.is_singular()) {
    throw SingularAuxiliary("E_{a,b} is singular; use the singular-family parametrization");
  }
  GenerationReport report;
  if (count <= 0) {
    if (options.seed) report.seed = *options.seed;
    return report;
  }
  if (options.seed) {
    if (!on_curve(E, *options.seed)) {
      throw DomainError("seed point " + options.seed->str() + " is not on E_{a,b}");
    }
    if (is_torsion(E, *options.seed)) throw NoSeedPoint("seed point " + options.seed->str() + " is torsion");
    report.seed = *options.seed;
  } else {
    report.seed = find_seed_point(E, options.search_bound > 0 ? options.search_bound
                                                               : default_search_bound());
  }

  std::vector<Branch> order;
  switch (options.policy) {
    case BranchPolicy::Plus: order = {Branch::Plus}; break;
    case BranchPolicy::Minus: order = {Branch::Minus}; break;
    case BranchPolicy::Both:
    case BranchPolicy::PlusThenMinus: order = {Branch::Plus, Branch::Minus}; break;
  }

  std::set<SurfacePoint> seen;
  CurvePoint multiple;
  for (long m = 1; m <= count; ++m) {
    multiple = add(E, multiple, report.seed);
    for (Branch branch : order) {
      ++report.attempts;
      try {
        SurfacePoint p = lift_point(f, multiple, branch);
        if (seen.insert(p).second) {
          report.points.push_back({std::move(p), m, branch});
        } else {
          ++report.duplicates;
        }
      } catch (const DegenerateFiber&) {
        ++report.degenerate_fibers;
        continue;
      }
      if (options.policy == BranchPolicy::PlusThenMinus) break;
    }
  }
  return report;
}

SingularFamily singular_family(const Rational& t) {
  const Rational a = (Rational(675) - t * t) / Rational(90);
  const Rational b = (Rational(-2) * t.pow(3) + Rational(75) * t * t - Rational(15525)) / Rational(2700);
  return {t, a, b, auxiliary_curve(a, b)};
}

CurvePoint singular_param_point(const Rational& t, const Rational& U) {
  return {U * U - Rational(2) * t, U * (U * U - Rational(3) * t)};
}

std::optional<Rational> singular_parameter(const Rational& a, const Rational& b) {
  const WeierstrassCurve E = auxiliary_curve(a, b);
  if (!E.is_singular()) return std::nullopt;
  // A = -3t^2 and B = 2t^3, so t = -3B / (2A) (and t = 0 at the cusp).
  const Rational t = E.A.is_zero() ? Rational() : Rational(-3) * E.B / (Rational(2) * E.A);
  if (singular_family(t).curve != E) throw IdentityFailure("singular E_{a,b} outside the family");
  return t;
}

SurfacePoint lift_singular_point(const QuinticCoeffs& f, const Rational& U, Branch branch) {
  const auto t = singular_parameter(f.a, f.b);
  if (!t) throw DomainError("E_{a,b} is nonsingular; use lift_point");
  const CurvePoint P = singular_param_point(*t, U);
  if (!on_curve(auxiliary_curve(f.a, f.b), P)) throw IdentityFailure("parametrized point off the curve");
  return finish_lift(f, to_intermediates(lift_forms(f, P.x(), P.y(), branch), branch));
}

RationalCurve singular_family_curve(const QuinticCoeffs& f, Branch branch) {
  const auto t = singular_parameter(f.a, f.b);
  if (!t) throw DomainError("E_{a,b} is nonsingular; the family curve needs a singular E_{a,b}");
  const Poly U = Poly::identity();
  const RatFunc X(U * U - Poly(Rational(2) * *t));
  const RatFunc Y(U * (U * U - Poly(Rational(3) * *t)));
  const LiftForms<RatFunc> L = lift_forms(f, X, Y, branch);
  if (L.f1.is_zero()) throw DegenerateFiber("f1 vanishes identically along the family curve");
  const RatFunc T = -L.f0 / L.f1;
  const RatFunc T2 = T * T;
  RationalCurve out{T2 * T + L.p * T2 + L.q * T + L.r, T2 + L.s * T + L.u, T};
  const RatFunc residual = out.x * out.x - out.y.pow(3) - compose(f.poly(), out.z);
  if (!is_identically_zero(residual)) throw IdentityFailure("family curve is off the surface");
  return out;
}

}  // namespace delpezzo
