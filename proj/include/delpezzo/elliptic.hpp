#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "delpezzo/rational.hpp"

namespace delpezzo {

// Short Weierstrass model Y^2 = X^3 + A X + B over Q. Singular models are
// representable (the singular auxiliary family needs them) but the group law
// refuses them.
struct WeierstrassCurve {
  Rational A;
  Rational B;

  [[nodiscard]] Rational discriminant() const;
  [[nodiscard]] bool is_singular() const { return discriminant().is_zero(); }
  // X^3 + A X + B.
  [[nodiscard]] Rational rhs(const Rational& X) const;

  friend bool operator==(const WeierstrassCurve&, const WeierstrassCurve&) = default;
};

// Point at infinity or an affine point (X, Y).
class CurvePoint {
 public:
  CurvePoint() = default;  // infinity
  CurvePoint(Rational X, Rational Y) : affine_(Affine{std::move(X), std::move(Y)}) {}

  static CurvePoint infinity() { return {}; }

  [[nodiscard]] bool is_infinity() const { return !affine_.has_value(); }
  // Precondition: !is_infinity().
  [[nodiscard]] const Rational& x() const { return affine_->x; }
  [[nodiscard]] const Rational& y() const { return affine_->y; }

  // "X,Y" or "O".
  [[nodiscard]] std::string str() const;
  // Inverse of str(); throws ParseError.
  static CurvePoint parse(const std::string& text);

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) = default;
  friend std::ostream& operator<<(std::ostream& os, const CurvePoint& p) { return os << p.str(); }

 private:
  struct Affine {
    Rational x;
    Rational y;
    friend bool operator==(const Affine&, const Affine&) = default;
  };
  std::optional<Affine> affine_;
};

bool on_curve(const WeierstrassCurve& E, const CurvePoint& P);

CurvePoint negate(const CurvePoint& P);

// Chord-tangent addition. Throws SingularAuxiliary on a singular curve and
// DomainError when an input is off the curve.
CurvePoint add(const WeierstrassCurve& E, const CurvePoint& P, const CurvePoint& Q);

// n P by double-and-add; negative n uses -P.
CurvePoint scalar_mul(const WeierstrassCurve& E, long n, const CurvePoint& P);

// True iff n P = O for some 1 <= n <= 12 (Mazur's bound over Q).
bool is_torsion(const WeierstrassCurve& E, const CurvePoint& P);

// Order of P if it is at most 12, otherwise nullopt.
std::optional<int> torsion_order(const WeierstrassCurve& E, const CurvePoint& P);

enum class TorsionTag { Z6, Z3_square, Z3_minus432, Z2_cube, Trivial };

std::string to_string(TorsionTag tag);
// Group order asserted by the tag.
int order(TorsionTag tag);

// Rational torsion of the Mordell curve Y^2 = X^3 + k.
struct TorsionClass {
  TorsionTag tag = TorsionTag::Trivial;
  Rational k;          // the curve Y^2 = X^3 + k the witnesses live on
  Rational reduced_k;  // sixth_power_free_part(k), which decides the tag
  std::vector<CurvePoint> witnesses;  // nonzero torsion points of Y^2 = X^3 + k
};

// Classification of Tors(Y^2 = X^3 + k): Z/6 for the class of 1, Z/3 when k
// is a square or in the class of -432, Z/2 when k is a cube, else trivial.
// Throws DomainError for k == 0.
TorsionClass torsion_of_mordell(const Rational& k);

// Every affine point with X = m / e^2, |m| <= height_bound and
// 1 <= e <= ceil(sqrt(height_bound)), sorted by (|num X|, sign of X with
// nonnegative first, den X, Y descending).
std::vector<CurvePoint> search_points(const WeierstrassCurve& E, long height_bound);

}  // namespace delpezzo
