#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "planecol/errors.hpp"
#include "planecol/geometry.hpp"

using namespace planecol;

TEST_CASE("tolerance validation") {
  CHECK(Tolerance{}.tau == 1e-9);
  CHECK_NOTHROW(Tolerance{1e-12});
  CHECK_THROWS_AS(Tolerance{0.0}, std::invalid_argument);
  CHECK_THROWS_AS(Tolerance{-1e-9}, std::invalid_argument);
  CHECK_THROWS_AS(Tolerance{2e-6}, std::invalid_argument);
}

TEST_CASE("distance interval validation") {
  CHECK_NOTHROW(DistanceInterval(1.0, 1.0));
  CHECK_NOTHROW(DistanceInterval(1.0, 1.05));
  CHECK_THROWS_AS(DistanceInterval(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DistanceInterval(-1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DistanceInterval(1.05, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(DistanceInterval(1.0, std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

TEST_CASE("rational angle validation and value") {
  CHECK_THROWS_AS((RationalAngle{0, 3}), std::invalid_argument);
  CHECK_THROWS_AS((RationalAngle{3, 3}), std::invalid_argument);
  CHECK_THROWS_AS((RationalAngle{4, 3}), std::invalid_argument);
  CHECK_THROWS_AS((RationalAngle{2, 4}), std::invalid_argument);  // not coprime
  RationalAngle a{1, 3};
  CHECK(a.radians() == doctest::Approx(2.0 * std::numbers::pi / 3.0).epsilon(1e-15));
}

TEST_CASE("distance") {
  CHECK(distance(Point{0, 0}, Point{3, 4}) == 5.0);
  CHECK(distance(Point{1, 1}, Point{1, 1}) == 0.0);
}

TEST_CASE("interval membership closes under tau on both ends") {
  DistanceInterval iv{1.0, 1.0};
  Tolerance tol{};  // 1e-9
  CHECK(in_interval(Point{0, 0}, Point{1, 0}, iv, tol));
  CHECK(in_interval(Point{0, 0}, Point{1.0 + 1e-10, 0}, iv, tol));
  CHECK(in_interval(Point{0, 0}, Point{1.0 - 1e-10, 0}, iv, tol));
  CHECK_FALSE(in_interval(Point{0, 0}, Point{1.0 + 1e-8, 0}, iv, tol));
  CHECK_FALSE(in_interval(Point{0, 0}, Point{1.0 - 1e-8, 0}, iv, tol));
}

TEST_CASE("rotate_about is exact at trivial powers") {
  Point c{0.3, -0.7};
  Point p{1.9, 2.4};
  RationalAngle a{2, 7};

  // Powers 0 and k reduce to the identity before any trigonometry runs.
  Point r0 = rotate_about(c, a, 0, p);
  CHECK(r0.x() == p.x());
  CHECK(r0.y() == p.y());
  Point rk = rotate_about(c, a, 7, p);
  CHECK(rk.x() == p.x());
  CHECK(rk.y() == p.y());

  // Negative powers reduce mod k to the same bits as their positive residue.
  Point rneg = rotate_about(c, a, -3, p);
  Point rpos = rotate_about(c, a, 4, p);
  CHECK(rneg.x() == rpos.x());
  CHECK(rneg.y() == rpos.y());
  Point rbig = rotate_about(c, a, 11, p);
  CHECK(rbig.x() == rpos.x());
  CHECK(rbig.y() == rpos.y());
}

TEST_CASE("rotate_about moves by the stated angle and keeps the radius") {
  Point c{1.0, 2.0};
  Point p{3.5, 2.0};
  RationalAngle a{1, 5};
  double r = distance(c, p);
  Point prev = p;
  for (int e = 1; e <= 5; ++e) {
    Point cur = rotate_about(c, a, e, p);
    CHECK(distance(c, cur) == doctest::Approx(r).epsilon(1e-12));
    CHECK(distance(prev, cur) ==
          doctest::Approx(2.0 * r * std::sin(std::numbers::pi / 5.0)).epsilon(1e-12));
    prev = cur;
  }
  CHECK(prev.x() == p.x());  // closed the full turn
  CHECK(prev.y() == p.y());
}
