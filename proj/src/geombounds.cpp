#include "bianchi/geombounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bianchi {

double ball_area_bound(double r) {
  if (!(r >= 0.0)) throw std::domain_error("ball_area_bound: radius must be non-negative");
  return 2.0 * std::numbers::pi * (std::cosh(r) - 1.0);
}

int min_genus_from_area(double area) {
  if (!(area >= 0.0)) throw std::domain_error("min_genus_from_area: area must be non-negative");
  const double g = area / (4.0 * std::numbers::pi) + 1.0;
  return static_cast<int>(std::ceil(g - kGeomTolerance * g));
}

double min_area_from_systole(double sys) {
  if (!(sys > 0.0)) throw std::domain_error("min_area_from_systole: systole must be positive");
  return ball_area_bound(sys / 2.0);
}

double genus2_exclusion_threshold() {
  const double value = std::max(2.0 * std::acosh(3.0), std::min(2.0 * std::acosh(4.5), 4.0 * std::acosh(3.0)));
  const double expected = 2.0 * std::acosh(4.5);
  if (std::abs(value - expected) > kGeomTolerance * expected) {
    throw std::logic_error("genus-2 exclusion threshold does not reduce to 2 arccosh(9/2)");
  }
  return value;
}

bool excludes_genus2(double sys) {
  if (!(sys > 0.0)) throw std::domain_error("excludes_genus2: systole must be positive");
  return sys > genus2_exclusion_threshold();
}

}  // namespace bianchi
