#pragma once

#include <ostream>

#include "delpezzo/rational.hpp"

namespace delpezzo {

// An exact rational triple (x, y, z) on some surface.
struct SurfacePoint {
  Rational x;
  Rational y;
  Rational z;

  friend bool operator==(const SurfacePoint&, const SurfacePoint&) = default;
  friend auto operator<=>(const SurfacePoint&, const SurfacePoint&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const SurfacePoint& p) {
  return os << '(' << p.x << ", " << p.y << ", " << p.z << ')';
}

}  // namespace delpezzo
