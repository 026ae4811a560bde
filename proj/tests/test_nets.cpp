#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "doctest.h"
#include "hopspan/gen.hpp"
#include "hopspan/nets.hpp"
#include "oracles.hpp"

using namespace hopspan;
using namespace hopspan::nets;

namespace {

struct Scene {
  std::vector<Point2D> above, below;
};

Scene random_scene(std::size_t na, std::size_t nb, std::uint64_t seed, double b_shift = 0.0) {
  Rng rng(seed);
  Scene s;
  auto sample = [&](Point2D c) {
    const double rho = 0.5 * std::sqrt(rng.uniform());
    const double phi = 2 * std::numbers::pi * rng.uniform();
    return Point2D{c.x + rho * std::cos(phi), c.y + rho * std::sin(phi)};
  };
  for (std::size_t i = 0; i < na; ++i) s.above.push_back(sample({0.0, 0.55}));
  for (std::size_t i = 0; i < nb; ++i) s.below.push_back(sample({b_shift, -0.55}));
  return s;
}

bool empty_disk(Point2D c, const std::vector<Point2D>& pts) {
  for (const Point2D& q : pts) {
    if ((q.x - c.x) * (q.x - c.x) + (q.y - c.y) * (q.y - c.y) < 1.0 - 1e-12) return false;
  }
  return true;
}

// Hull membership by the finite candidate family: the vertical disk, the
// below-axis unit circle through p and each other point, and the circles
// through p centered on the axis.
std::vector<std::size_t> hull_oracle(const std::vector<Point2D>& a) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Point2D p = a[i];
    std::vector<Point2D> cand{{p.x, p.y - 1.0}};
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j == i) continue;
      const Point2D q = a[j];
      const double dx = q.x - p.x, dy = q.y - p.y, d2 = dx * dx + dy * dy;
      if (d2 > 4.0) continue;
      const double h = std::sqrt(std::max(0.0, 1.0 - d2 / 4));
      const double d = std::sqrt(d2);
      const Point2D m{(p.x + q.x) / 2, (p.y + q.y) / 2};
      for (double sgn : {-1.0, 1.0}) {
        const Point2D c{m.x + sgn * h * -dy / d, m.y + sgn * h * dx / d};
        if (c.y <= 0.0) cand.push_back(c);
      }
    }
    if (p.y <= 1.0) {
      const double w = std::sqrt(1.0 - p.y * p.y);
      cand.push_back({p.x - w, 0.0});
      cand.push_back({p.x + w, 0.0});
    }
    for (const Point2D& c : cand) {
      if (c.y <= 0.0 && empty_disk(c, a)) {
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

std::size_t hits(const std::vector<Point2D>& a, Point2D center) {
  std::size_t k = 0;
  for (const Point2D& p : a) k += within_unit(p, center);
  return k;
}

bool is_net(const std::vector<Point2D>& a, const std::vector<std::size_t>& n, double eps,
            const std::vector<Point2D>& family) {
  for (const Point2D& c : family) {
    if (static_cast<double>(hits(a, c)) < eps * static_cast<double>(a.size())) continue;
    if (std::none_of(n.begin(), n.end(), [&](std::size_t v) { return within_unit(a[v], c); })) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hull boundary examples") {
  SUBCASE("single point") {
    const std::vector<Point2D> a{{0, 0.5}};
    const HullBoundarySet h = hull_boundary(a);
    REQUIRE(h.members == std::vector<std::size_t>{0});
    CHECK(h.witnesses[0].x == doctest::Approx(0.0));
    CHECK(h.witnesses[0].y == doctest::Approx(-0.5));
  }
  SUBCASE("point shadowed from below") {
    const std::vector<Point2D> a{{0, 0.5}, {0, 0.9}};
    CHECK(hull_boundary(a).members == std::vector<std::size_t>{0});
  }
  SUBCASE("two side by side") {
    const std::vector<Point2D> a{{-0.3, 0.5}, {0.3, 0.5}};
    CHECK(hull_boundary(a).members == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("empty") { CHECK(hull_boundary({}).members.empty()); }
  SUBCASE("out of reach") { CHECK(hull_boundary(std::vector<Point2D>{{0, 1.2}}).members.empty()); }
}

TEST_CASE("hull boundary matches the candidate-family oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Scene s = random_scene(10 + seed * 3, 1, seed);
    const HullBoundarySet h = hull_boundary(s.above);
    std::vector<std::size_t> sorted = h.members;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == hull_oracle(s.above));
    for (std::size_t k = 0; k < h.members.size(); ++k) {
      const Point2D c = h.witnesses[k];
      CHECK(c.y <= 0.0);
      CHECK(dist(c, s.above[h.members[k]]) == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(empty_disk(c, s.above));
      if (k > 0) CHECK(x_order_less(s.above, h.members[k - 1], h.members[k]));
    }
  }
}

TEST_CASE("every nonempty disk meets the hull boundary") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Scene s = random_scene(80, 80, 100 + seed, 0.3);
    const HullBoundarySet h = hull_boundary(s.above);
    for (const Point2D& b : s.below) {
      if (hits(s.above, b) == 0) continue;
      CHECK(std::any_of(h.members.begin(), h.members.end(), [&](std::size_t m) { return within_unit(s.above[m], b); }));
    }
  }
}

TEST_CASE("minimal eps-net") {
  SUBCASE("one heavy disk holding everything") {
    const std::vector<Point2D> a{{-0.2, 0.3}, {0.1, 0.2}, {0.25, 0.4}, {0.0, 0.6}};
    const std::vector<Point2D> family{{0.0, -0.3}};
    REQUIRE(hits(a, family[0]) == a.size());
    const EpsNet net = minimal_eps_net(a, hull_boundary(a), 0.5, family);
    CHECK(net.members.size() == 1);
  }
  SUBCASE("empty family") {
    const std::vector<Point2D> a{{-0.2, 0.3}, {0.1, 0.2}};
    CHECK(minimal_eps_net(a, hull_boundary(a), 0.5, {}).members.empty());
  }
  SUBCASE("eps domain") {
    const std::vector<Point2D> a{{0, 0.5}};
    CHECK_THROWS_AS(minimal_eps_net(a, hull_boundary(a), 0.0, {}), std::invalid_argument);
    CHECK_THROWS_AS(minimal_eps_net(a, hull_boundary(a), 2.0 / 3.0, {}), std::invalid_argument);
  }
  SUBCASE("random scene, eps = 1/4") {
    const Scene s = random_scene(50, 50, 7, 0.2);
    const HullBoundarySet h = hull_boundary(s.above);
    const EpsNet net = minimal_eps_net(s.above, h, 0.25, s.below);
    CHECK(net.members.size() <= 8);
    CHECK(is_net(s.above, net.members, 0.25, s.below));
    for (std::size_t drop = 0; drop < net.members.size(); ++drop) {
      auto smaller = net.members;
      smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK_FALSE(is_net(s.above, smaller, 0.25, s.below));
    }
    for (std::size_t v : net.members) CHECK(std::count(h.members.begin(), h.members.end(), v) == 1);
  }
}

TEST_CASE("disk levels") {
  CHECK(disk_level(3, 8) == 2);
  CHECK(disk_level(0, 8) == 0);
  CHECK(disk_level(8, 8) == 1);
  CHECK(disk_level(4, 8) == 1);
  CHECK(disk_level(1, 8) == 3);
  CHECK(disk_level(1, 9) == 4);
  CHECK(disk_level(1, 1) == 1);
  for (std::size_t total = 1; total < 70; ++total) {
    for (std::size_t h = 1; h < total; ++h) {
      const int i = disk_level(h, total);
      CHECK(static_cast<double>(total) / std::ldexp(1.0, i) <= static_cast<double>(h));
      CHECK(static_cast<double>(h) < static_cast<double>(total) / std::ldexp(1.0, i - 1));
    }
  }
}

TEST_CASE("bins partition the disks that hold A-points") {
  const Scene s = random_scene(60, 60, 11, 0.4);
  std::set<std::size_t> seen;
  int last = 0;
  for (const DiskBin& bin : bin_disks(s.above, s.below)) {
    CHECK(bin.level > last);
    last = bin.level;
    for (std::size_t b : bin.disks) {
      CHECK(seen.insert(b).second);
      CHECK(disk_level(hits(s.above, s.below[b]), s.above.size()) == bin.level);
    }
  }
  for (std::size_t b = 0; b < s.below.size(); ++b) CHECK(seen.contains(b) == (hits(s.above, s.below[b]) > 0));
}

TEST_CASE("bipartite 2-hop construction") {
  SUBCASE("singleton") {
    const BipartiteSpanner h = bipartite_2hop(std::vector<Point2D>{{0, 0.3}}, std::vector<Point2D>{{0.1, -0.4}});
    CHECK(h.edges == std::vector<Edge>{{0, 1}});
  }
  SUBCASE("no cross edges") {
    const BipartiteSpanner h = bipartite_2hop(std::vector<Point2D>{{0, 0.8}}, std::vector<Point2D>{{0.1, -0.8}});
    CHECK(h.edges.empty());
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_WITH_AS(bipartite_2hop(std::vector<Point2D>{{0, 0.1}, {1.2, 0.1}}, std::vector<Point2D>{{0, -0.1}}),
                         doctest::Contains("diam(A)"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(bipartite_2hop(std::vector<Point2D>{{0, 0.1}}, std::vector<Point2D>{{0, 0.1}}),
                         doctest::Contains("below"), std::invalid_argument);
  }
  for (std::uint64_t seed : {3u, 4u, 5u, 6u}) {
    CAPTURE(seed);
    const Scene s = random_scene(100, 100, seed, 0.1 * static_cast<double>(seed));
    const BipartiteSpanner h = bipartite_2hop(s.above, s.below);
    const std::size_t na = s.above.size(), n = na + s.below.size();
    auto point = [&](PointIndex v) { return v < na ? s.above[v] : s.below[v - na]; };
    for (const Edge& e : h.edges) CHECK(within_unit(point(e.u), point(e.v)));

    const auto d = oracle::apsp(n, h.edges);
    for (std::size_t a = 0; a < na; ++a) {
      for (std::size_t b = 0; b < s.below.size(); ++b) {
        if (within_unit(s.above[a], s.below[b])) CHECK(d[a][na + b] <= 2);
      }
    }
    const int log_n = static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
    std::map<int, std::map<std::size_t, int>> b_degree, a_stars;
    std::map<int, std::size_t> level_edges;
    for (const Star& st : h.stars) {
      for (std::size_t b : st.below_leaves) ++b_degree[st.level][b];
      ++a_stars[st.level][st.center];
      for (std::size_t a : st.above_leaves) ++a_stars[st.level][a];
      level_edges[st.level] += st.above_leaves.size() + st.below_leaves.size();
    }
    std::map<std::size_t, int> b_total;
    for (const auto& [level, degs] : b_degree) {
      for (const auto& [b, k] : degs) {
        CHECK(k <= 1);
        b_total[b] += k;
      }
    }
    for (const auto& [b, k] : b_total) CHECK(k <= log_n);
    for (const auto& [level, counts] : a_stars) {
      for (const auto& [a, k] : counts) CHECK(k <= 5);
      CHECK(level_edges[level] <= 5 * na + s.below.size());
    }
    CHECK(h.edges.size() <= 5 * n * static_cast<std::size_t>(log_n));
  }
}
