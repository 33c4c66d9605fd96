#include <doctest.h>

#include <cmath>

#include "bianchi/congruence.hpp"
#include "bianchi/geombounds.hpp"

using namespace bianchi;

TEST_CASE("ball_area_bound") {
  CHECK(ball_area_bound(0.0) == 0.0);
  CHECK(ball_area_bound(std::acosh(4.5)) == doctest::Approx(7 * M_PI).epsilon(1e-14));
  CHECK(ball_area_bound(1.0) == doctest::Approx(2 * M_PI * (std::cosh(1.0) - 1)));
  CHECK_THROWS_AS(ball_area_bound(-0.5), std::domain_error);
}

TEST_CASE("min_genus_from_area") {
  CHECK(min_genus_from_area(7 * M_PI) == 3);
  CHECK(min_genus_from_area(0.0) == 1);
  CHECK(min_genus_from_area(4 * M_PI) == 2);
  CHECK(min_genus_from_area(4 * M_PI * 1.001) == 3);
  CHECK(min_genus_from_area(8 * M_PI) == 3);
  CHECK(min_genus_from_area(1e-6) == 2);
}

TEST_CASE("min_area_from_systole") {
  CHECK(min_area_from_systole(2 * std::acosh(4.5)) == doctest::Approx(7 * M_PI).epsilon(1e-14));
  CHECK(min_area_from_systole(1e-9) < 1e-17);
  CHECK_THROWS_AS(min_area_from_systole(0.0), std::domain_error);
  CHECK_THROWS_AS(min_area_from_systole(-1.0), std::domain_error);
  for (double sys = 4.3691; sys < 12.0; sys += 0.05) CHECK(min_genus_from_area(min_area_from_systole(sys)) >= 3);
}

TEST_CASE("genus 2 exclusion threshold") {
  const double t = genus2_exclusion_threshold();
  CHECK(t == doctest::Approx(2 * std::acosh(4.5)).epsilon(1e-15));
  CHECK(t == doctest::Approx(4.369287583210218).epsilon(1e-13));
  CHECK(std::abs(t - 4.369) < 1e-3);
  CHECK(2 * std::acosh(3.0) == doctest::Approx(3.525494348078172).epsilon(1e-13));
  CHECK(2 * std::acosh(3.0) < t);
  CHECK(4 * std::acosh(3.0) == doctest::Approx(7.050988696156344).epsilon(1e-13));
  CHECK(4 * std::acosh(3.0) > t);
}

TEST_CASE("excludes_genus2") {
  CHECK(excludes_genus2(systole_lower_bound(QuadInt::gaussian(3, 2))));
  CHECK_FALSE(excludes_genus2(4.0));
  CHECK_FALSE(excludes_genus2(genus2_exclusion_threshold()));
  CHECK(excludes_genus2(std::nextafter(genus2_exclusion_threshold(), 10.0)));
}

TEST_CASE("bounds are monotone on a grid") {
  double prev_ball = -1, prev_sys = -1;
  int prev_genus = 0;
  for (int k = 1; k <= 2000; ++k) {
    const double x = k * 0.005;
    const double b = ball_area_bound(x), s = min_area_from_systole(x);
    CHECK(b > prev_ball);
    CHECK(s > prev_sys);
    const int genus = min_genus_from_area(x * 10);
    CHECK(genus >= prev_genus);
    prev_ball = b;
    prev_sys = s;
    prev_genus = genus;
  }
}

TEST_CASE("norm above 11 excludes genus 2") {
  int checked = 0;
  for (long x = -10; x <= 10; ++x)
    for (long y = -10; y <= 10; ++y) {
      const long norm = x * x + y * y;
      if (norm <= 4) continue;
      const bool excluded = excludes_genus2(systole_lower_bound(QuadInt::gaussian(x, y)));
      if (norm > 11 && norm <= 100) {
        CHECK(excluded);
        ++checked;
      }
      // (N - 2) / 2 > 9/2 exactly when N > 11.
      if (norm <= 11) CHECK_FALSE(excluded);
    }
  CHECK(checked > 250);
}
