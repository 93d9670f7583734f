#include "delpezzo/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "delpezzo/arith.hpp"
#include "delpezzo/errors.hpp"

namespace delpezzo {

Rational WeierstrassCurve::discriminant() const { return discriminant_cubic(A, B); }

Rational WeierstrassCurve::rhs(const Rational& X) const { return (X * X + A) * X + B; }

std::string CurvePoint::str() const {
  if (is_infinity()) return "O";
  return affine_->x.str() + "," + affine_->y.str();
}

CurvePoint CurvePoint::parse(const std::string& text) {
  std::string compact;
  for (char c : text) {
    if (c != ' ' && c != '(' && c != ')') compact.push_back(c);
  }
  if (compact == "O") return infinity();
  const auto comma = compact.find(',');
  if (comma == std::string::npos) throw ParseError("expected a point \"X,Y\", got '" + text + "'");
  return {Rational::parse(compact.substr(0, comma)), Rational::parse(compact.substr(comma + 1))};
}

bool on_curve(const WeierstrassCurve& E, const CurvePoint& P) {
  if (P.is_infinity()) return true;
  return P.y() * P.y() == E.rhs(P.x());
}

CurvePoint negate(const CurvePoint& P) {
  if (P.is_infinity()) return P;
  return {P.x(), -P.y()};
}

CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q) {
  if (E.is_singular()) throw SingularAuxiliary("group law on a singular curve");
  if (!on_curve(E, P) || !on_curve(E, Q)) throw DomainError("point is not on the curve");
  if (P.is_infinity()) return Q;
  if (Q.is_infinity()) return P;

  Rational slope;
  if (P.x() == Q.x()) {
    if (P.y() != Q.y() || P.y().is_zero()) return CurvePoint::infinity();
    slope = (Rational(3) * P.x() * P.x() + E.A) / (Rational(2) * P.y());
  } else {
    slope = (Q.y() - P.y()) / (Q.x() - P.x());
  }
  Rational x3 = slope * slope - P.x() - Q.x();
  Rational y3 = slope * (P.x() - x3) - P.y();
  return {std::move(x3), std::move(y3)};
}

CurvePoint scalar_mul(const WeierstrassCurve& E, long n, const CurvePoint& P) {
  CurvePoint base = n < 0 ? negate(P) : P;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  CurvePoint acc;
  while (k > 0) {
    if (k & 1UL) acc = add(E, acc, base);
    k >>= 1UL;
    if (k > 0) base = add(E, base, base);
  }
  return acc;
}

std::optional<int> torsion_order(const WeierstrassCurve& E, const CurvePoint& P) {
  CurvePoint acc = P;
  for (int n = 1; n <= 12; ++n) {
    if (acc.is_infinity()) return n;
    acc = add(E, acc, P);
  }
  return std::nullopt;
}

bool is_torsion(const WeierstrassCurve& E, const CurvePoint& P) {
  return torsion_order(E, P).has_value();
}

std::string to_string(TorsionTag tag) {
  switch (tag) {
    case TorsionTag::Z6: return "Z6";
    case TorsionTag::Z3_square: return "Z3_square";
    case TorsionTag::Z3_minus432: return "Z3_minus432";
    case TorsionTag::Z2_cube: return "Z2_cube";
    case TorsionTag::Trivial: return "Trivial";
  }
  return "Trivial";
}

int order(TorsionTag tag) {
  switch (tag) {
    case TorsionTag::Z6: return 6;
    case TorsionTag::Z3_square:
    case TorsionTag::Z3_minus432: return 3;
    case TorsionTag::Z2_cube: return 2;
    case TorsionTag::Trivial: return 1;
  }
  return 1;
}

TorsionClass torsion_of_mordell(const Rational& k) {
  if (k.is_zero()) throw DomainError("Y^2 = X^3 is singular");
  TorsionClass out;
  out.k = k;
  out.reduced_k = sixth_power_free_part(k);

  // k = reduced_k * w^6; witnesses on the reduced curve scale by (w^2, w^3).
  const auto w = exact_root(k / out.reduced_k, 6);
  if (!w) throw IdentityFailure("sixth-power class representative is not a sixth-power twist");
  const Rational w2 = w->pow(2);
  const Rational w3 = w->pow(3);
  auto scaled = [&](long X, long Y) { return CurvePoint(Rational(X) * w2, Rational(Y) * w3); };

  if (out.reduced_k.is_one()) {
    out.tag = TorsionTag::Z6;
    out.witnesses = {scaled(2, 3), scaled(2, -3), scaled(0, 1), scaled(0, -1), scaled(-1, 0)};
  } else if (auto root = exact_root(k, 2)) {
    out.tag = TorsionTag::Z3_square;
    out.witnesses = {CurvePoint(Rational(), *root), CurvePoint(Rational(), -*root)};
  } else if (out.reduced_k == Rational(-432)) {
    out.tag = TorsionTag::Z3_minus432;
    out.witnesses = {scaled(12, 36), scaled(12, -36)};
  } else if (auto cube = exact_root(k, 3)) {
    out.tag = TorsionTag::Z2_cube;
    out.witnesses = {CurvePoint(-*cube, Rational())};
  }
  return out;
}

std::vector<CurvePoint> search_points(const WeierstrassCurve& E, long height_bound) {
  std::vector<CurvePoint> found;
  if (height_bound < 1) return found;

  // With L = lcm(den A, den B) and X = m/e^2:
  //   X^3 + AX + B = N / (L e^6),  N = L m^3 + (L A) m e^4 + (L B) e^6,
  // which is a square iff N L is a nonnegative perfect square.
  mpz_class L;
  const mpz_class dA = E.A.den(), dB = E.B.den();
  mpz_lcm(L.get_mpz_t(), dA.get_mpz_t(), dB.get_mpz_t());
  const mpz_class LA = E.A.num() * (L / E.A.den());
  const mpz_class LB = E.B.num() * (L / E.B.den());

  const long e_max = static_cast<long>(std::ceil(std::sqrt(static_cast<double>(height_bound))));
  mpz_class e2, e4, e6, N, NL, root, m3;
  for (long e = 1; e <= e_max; ++e) {
    e2 = e * e;
    e4 = e2 * e2;
    e6 = e4 * e2;
    const mpz_class LAe4 = LA * e4;
    const mpz_class LBe6 = LB * e6;
    for (long m = -height_bound; m <= height_bound; ++m) {
      // Non-reduced m/e^2 with gcd(m, e)^2 | m repeats a smaller e.
      if (e > 1 && std::gcd(m, e) > 1) {
        const long g = std::gcd(m, e);
        if (m % (g * g) == 0) continue;
      }
      const mpz_class mm = m;
      m3 = mm * mm * mm;
      N = L * m3 + LAe4 * mm + LBe6;
      NL = N * L;
      if (NL < 0 || mpz_perfect_square_p(NL.get_mpz_t()) == 0) continue;
      mpz_sqrt(root.get_mpz_t(), NL.get_mpz_t());
      const Rational X(mm, e2);
      const Rational Y(root, L * e2 * e);
      found.emplace_back(X, Y);
      if (!Y.is_zero()) found.emplace_back(X, -Y);
    }
  }

  auto key = [](const CurvePoint& p) {
    return std::make_tuple(mpz_class(::abs(p.x().num())), p.x().sign() < 0 ? 1 : 0, p.x().den(), -p.y());
  };
  std::sort(found.begin(), found.end(),
            [&](const CurvePoint& a, const CurvePoint& b) { return key(a) < key(b); });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace delpezzo
