#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hopspan/gen.hpp"
#include "hopspan/io.hpp"
#include "hopspan/udg.hpp"
#include "hopspan/verify.hpp"
#include "oracles.hpp"

using namespace hopspan;

namespace {

double meta(const Instance& inst, const std::string& key) {
  for (const auto& [k, v] : inst.meta) {
    if (k == key) return v;
  }
  FAIL("missing meta key " << key);
  return 0;
}

}  // namespace

TEST_CASE("random source") {
  std::mt19937_64 reference;
  reference.discard(9999);
  CHECK(reference() == 9981545732273789042ull);  // value fixed by the C++ standard
  Rng rng(123);
  std::mt19937_64 raw(123);
  for (int i = 0; i < 100; ++i) {
    const double u = rng.uniform();
    CHECK(u == static_cast<double>(raw() >> 11) * 0x1.0p-53);
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("eight-point instance") {
  const Instance inst = gen_circle8();
  const auto& p = inst.points;
  REQUIRE(p.size() == 8);
  CHECK(meta(inst, "alpha_deg") == doctest::Approx(15.0));
  CHECK(meta(inst, "beta_deg") == doctest::Approx(16.50998).epsilon(1e-6));
  for (const Point2D& q : p) CHECK(std::hypot(q.x, q.y) == doctest::Approx(1.0));
  auto d = [&](int i, int j) { return dist(p[i - 1], p[j - 1]); };
  CHECK(d(1, 4) == doctest::Approx(0.78965).epsilon(1e-5));
  CHECK(d(1, 4) == doctest::Approx(2 * std::sin(23.25 * std::numbers::pi / 180)).epsilon(1e-4));
  CHECK(d(1, 5) == doctest::Approx(1.02274).epsilon(1e-5));
  CHECK(d(2, 6) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d(3, 7) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d(1, 2) == doctest::Approx(1.1 * d(2, 3)));
  CHECK(p[0].y == doctest::Approx(p[7].y));
  const UnitDiskGraph g = udg_build(p);
  const std::vector<Edge> expected{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                                   {2, 6}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}};
  CHECK(std::vector<Edge>(g.edges().begin(), g.edges().end()) == expected);
  CHECK(in_convex_position(p.points()));
}

TEST_CASE("n-gon instance") {
  const Instance inst = gen_ngon_lb(100, 0.02);
  CHECK(meta(inst, "m") == 31);
  CHECK(meta(inst, "radius_lo") == doctest::Approx(0.6045360217032707).epsilon(1e-14));
  CHECK(meta(inst, "radius_hi") == doctest::Approx(0.6180339887498949).epsilon(1e-14));
  CHECK(meta(inst, "radius") == doctest::Approx(0.6112850052265828).epsilon(1e-14));
  CHECK(meta(inst, "radius_lo") == doctest::Approx(1 / (2 * std::sin(0.31 * std::numbers::pi))));
  CHECK(meta(inst, "radius_hi") == doctest::Approx(1 / (2 * std::sin(0.30 * std::numbers::pi))));
  const auto& p = inst.points;
  REQUIRE(p.size() == 100);
  CHECK(p[0].y == 0.0);
  double max31 = 0, min32 = 10;
  for (std::size_t s = 0; s < 100; ++s) {
    double w31 = 0, w32 = 0;
    for (std::size_t a = 0; a < 32; ++a) {
      for (std::size_t b = a + 1; b < 32; ++b) {
        const double dd = dist(p[(s + a) % 100], p[(s + b) % 100]);
        w32 = std::max(w32, dd);
        if (b < 31) w31 = std::max(w31, dd);
      }
    }
    max31 = std::max(max31, w31);
    min32 = std::min(min32, w32);
  }
  CHECK(max31 == doctest::Approx(0.98908).epsilon(1e-5));
  CHECK(min32 == doctest::Approx(1.01116).epsilon(1e-5));
  CHECK(max31 <= 1.0);
  CHECK(min32 > 1.0);
  CHECK_THROWS_AS(gen_ngon_lb(100, 0.03), std::invalid_argument);
  CHECK_THROWS_AS(gen_ngon_lb(99, 0.02), std::invalid_argument);
  CHECK_NOTHROW(gen_ngon_lb(250, 0.01));
}

TEST_CASE("clique chains") {
  const Instance two = gen_clique_chain(1, 2);
  REQUIRE(two.points.size() == 6);
  const UnitDiskGraph g = udg_build(two.points);
  CHECK(g.edges().size() == 7);
  CHECK(find_triangle(g).has_value());
  CHECK(dist(two.points[2], two.points[3]) == 1.0);

  const UnitDiskGraph one = udg_build(gen_clique_chain(4, 1).points);
  CHECK(one.edges().size() == 36);
  for (std::size_t t : {1u, 3u, 25u}) {
    for (std::size_t groups : {1u, 2u, 5u}) {
      const std::size_t s = 2 * t + 1;
      CHECK(udg_build(gen_clique_chain(t, groups).points).edges().size() == groups * s * (s - 1) / 2 + groups - 1);
    }
  }
}

TEST_CASE("random families") {
  CHECK(udg_build(gen_unit_clique(5, 0).points).edges().size() == 10);
  const Instance c = gen_circle_uniform(16, 0.4, 3);
  CHECK(udg_build(c.points).edges().size() == 120);
  for (const Point2D& p : c.points) CHECK(std::hypot(p.x, p.y) == doctest::Approx(0.4));
  CHECK(io::points_to_json(gen_uniform(300, 5, 9)) == io::points_to_json(gen_uniform(300, 5, 9)));
  CHECK(io::points_to_json(gen_uniform(300, 5, 9)) != io::points_to_json(gen_uniform(300, 5, 10)));
  for (const Point2D& p : gen_uniform(500, 3, 1).points) {
    CHECK(p.x >= 0);
    CHECK(p.x < 3);
  }
  const Instance tf = gen_triangle_free(200, 20, 6);
  CHECK(tf.points.size() == 200);
  CHECK_FALSE(find_triangle(udg_build(tf.points)));
  CHECK_THROWS(gen_triangle_free(200, 2, 6));

  const Instance two = gen_two_cluster(400, 5);
  CHECK(meta(two, "separation") >= 0.6);
  CHECK(meta(two, "separation") <= 1.3);
  CHECK(gen_cluster(300, 4, 3, 2).points.size() == 300);
}

TEST_CASE("kind names round trip") {
  for (int k = 0; k <= static_cast<int>(GenKind::triangle_free); ++k) {
    const auto kind = static_cast<GenKind>(k);
    CHECK(parse_gen_kind(to_string(kind)) == kind);
  }
  CHECK_FALSE(parse_gen_kind("hexagon"));
}
