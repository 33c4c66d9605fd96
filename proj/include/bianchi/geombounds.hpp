#pragma once

namespace bianchi {

/// Comparison tolerance for the closed-form thresholds below.
inline constexpr double kGeomTolerance = 1e-12;

/// 2 pi (cosh r - 1): area of a minimal surface inside a radius-r ball about
/// one of its points. Throws std::domain_error for r < 0.
double ball_area_bound(double r);

/// Smallest integer g with g >= area / (4 pi) + 1, up to kGeomTolerance
/// relative slack so that exact multiples of 4 pi are not rounded up.
int min_genus_from_area(double area);

/// 2 pi (cosh(sys / 2) - 1). Throws std::domain_error for sys <= 0.
double min_area_from_systole(double sys);

/// max{2 arccosh 3, min{2 arccosh(9/2), 4 arccosh 3}}, checked against
/// 2 arccosh(9/2) to kGeomTolerance.
double genus2_exclusion_threshold();

/// Strict: sys > genus2_exclusion_threshold().
bool excludes_genus2(double sys);

}  // namespace bianchi
