#include <cmath>

#include "doctest.h"
#include "hopspan/geometry.hpp"

using namespace hopspan;

TEST_CASE("point set rejects duplicates with their indices") {
  try {
    PointSet ps({{0, 0}, {1, 2}, {0.5, 0.5}, {1, 2}});
    FAIL("expected DuplicatePointError");
  } catch (const DuplicatePointError& e) {
    CHECK(e.first() == 1);
    CHECK(e.second() == 3);
  }
  CHECK_THROWS_AS(PointSet({{0, NAN}}), Error);
  CHECK_THROWS_AS(PointSet({{INFINITY, 0}}), Error);
  CHECK(PointSet({{0, 0}, {0, 1e-300}}).size() == 2);
}

TEST_CASE("unit distance is inclusive") {
  CHECK(within_unit({0, 0}, {1, 0}));
  CHECK(within_unit({0, 0}, {0.6, 0.8}));
  CHECK_FALSE(within_unit({0, 0}, {1.000001, 0}));
}

TEST_CASE("orientation band") {
  CHECK(orient_sign({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient_sign({0, 0}, {1, 0}, {0, -1}) == -1);
  CHECK(orient_sign({0, 0}, {1, 0}, {0.5, 1e-14}) == 0);
}

TEST_CASE("below-axis circle through two points") {
  SUBCASE("analytic example") {
    auto c = circle_below_axis_through({0, 0.6}, {0.8, 0.6});
    REQUIRE(c);
    CHECK(c->x == doctest::Approx(0.4));
    CHECK(c->y == doctest::Approx(0.6 - std::sqrt(0.84)));
    CHECK(c->y == doctest::Approx(-0.3165).epsilon(1e-3));
  }
  SUBCASE("centers above the axis only") {
    CHECK_FALSE(circle_below_axis_through({0, 1.5}, {0.1, 1.5}));
  }
  SUBCASE("symmetric pair gives x = 0") {
    auto c = circle_below_axis_through({-0.3, 0.4}, {0.3, 0.4});
    REQUIRE(c);
    CHECK(c->x == doctest::Approx(0.0));
  }
  SUBCASE("too far apart") { CHECK_FALSE(circle_below_axis_through({0, 0.1}, {2.5, 0.1})); }
  SUBCASE("errors") {
    CHECK_THROWS(circle_below_axis_through({0, 0.5}, {0, 0.5}));
    CHECK_THROWS(circle_below_axis_through({0, -0.5}, {0.2, 0.5}));
  }
  SUBCASE("result is on both unit circles") {
    for (double dx : {0.1, 0.5, 0.9, 1.4}) {
      const Point2D p{0.2, 0.3}, q{0.2 + dx, 0.7};
      if (auto c = circle_below_axis_through(p, q)) {
        CHECK(dist(*c, p) == doctest::Approx(1.0));
        CHECK(dist(*c, q) == doctest::Approx(1.0));
        CHECK(c->y <= 0.0);
      }
    }
  }
}

TEST_CASE("circles on the axis through a point") {
  CHECK(circles_on_axis_through({0, 1.2}).empty());
  CHECK(circles_on_axis_through({0.3, 1.0}).size() == 1);
  const auto two = circles_on_axis_through({0.3, 0.6});
  REQUIRE(two.size() == 2);
  for (const Point2D& c : two) {
    CHECK(c.y == 0.0);
    CHECK(dist(c, {0.3, 0.6}) == doctest::Approx(1.0));
  }
}

TEST_CASE("frame round trip") {
  const OrientedLine line{{1.0, 2.0}, {0.6, 0.8}};
  const Frame f(line);
  const Point2D p{-0.7, 3.3};
  const Point2D local = f.to_local(p);
  CHECK(local.y == doctest::Approx(line.signed_distance(p)));
  const Point2D back = f.to_world(local);
  CHECK(back.x == doctest::Approx(p.x));
  CHECK(back.y == doctest::Approx(p.y));
}
