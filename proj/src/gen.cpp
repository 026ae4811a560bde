#include "hopspan/gen.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hopspan/error.hpp"
#include "hopspan/udg.hpp"

namespace hopspan {
namespace {

constexpr double kPi = std::numbers::pi;

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("generator constraint failed: " + what);
}

void require_n(std::size_t n) {
  if (n < 1) throw std::invalid_argument("generator: n must be at least 1");
}

Point2D in_disk(Rng& rng, Point2D center, double radius) {
  const double rho = radius * std::sqrt(rng.uniform());
  const double phi = 2 * kPi * rng.uniform();
  return {center.x + rho * std::cos(phi), center.y + rho * std::sin(phi)};
}

double chord(double r, double angle) { return 2 * r * std::sin(angle / 2); }

}  // namespace

const char* to_string(GenKind kind) {
  switch (kind) {
    case GenKind::uniform: return "uniform";
    case GenKind::cluster: return "cluster";
    case GenKind::unit_clique: return "unit_clique";
    case GenKind::circle8: return "circle8";
    case GenKind::ngon_lb: return "ngon_lb";
    case GenKind::clique_chain: return "clique_chain";
    case GenKind::circle_uniform: return "circle_uniform";
    case GenKind::two_cluster: return "two_cluster";
    case GenKind::triangle_free: return "triangle_free";
  }
  return "?";
}

std::optional<GenKind> parse_gen_kind(std::string_view name) {
  for (int k = 0; k <= static_cast<int>(GenKind::triangle_free); ++k) {
    if (name == to_string(static_cast<GenKind>(k))) return static_cast<GenKind>(k);
  }
  return std::nullopt;
}

Instance generate(const GenSpec& s) {
  switch (s.kind) {
    case GenKind::uniform: return gen_uniform(s.n, s.box, s.seed);
    case GenKind::cluster: return gen_cluster(s.n, s.box, s.groups, s.seed);
    case GenKind::unit_clique: return gen_unit_clique(s.n, s.seed);
    case GenKind::circle8: return gen_circle8();
    case GenKind::ngon_lb: return gen_ngon_lb(s.n, s.eps);
    case GenKind::clique_chain: return gen_clique_chain(s.t, s.groups);
    case GenKind::circle_uniform: return gen_circle_uniform(s.n, s.radius, s.seed);
    case GenKind::two_cluster: return gen_two_cluster(s.n, s.seed);
    case GenKind::triangle_free: return gen_triangle_free(s.n, s.box, s.seed);
  }
  throw std::invalid_argument("unknown generator kind");
}

Instance gen_uniform(std::size_t n, double box, std::uint64_t seed) {
  require_n(n);
  if (!(box > 0)) throw std::invalid_argument("gen_uniform: box must be positive");
  Rng rng(seed);
  std::vector<Point2D> pts(n);
  for (Point2D& p : pts) {
    p.x = box * rng.uniform();
    p.y = box * rng.uniform();
  }
  return {PointSet(std::move(pts)), {{"n", double(n)}, {"box", box}, {"seed", double(seed)}}};
}

Instance gen_cluster(std::size_t n, double box, std::size_t groups, std::uint64_t seed) {
  require_n(n);
  if (!(box > 0) || groups < 1) throw std::invalid_argument("gen_cluster: need box > 0 and groups >= 1");
  Rng rng(seed);
  std::vector<Point2D> centers(groups);
  for (Point2D& c : centers) c = {box * rng.uniform(), box * rng.uniform()};
  std::vector<Point2D> pts(n);
  for (Point2D& p : pts) p = in_disk(rng, centers[rng.below(groups)], 0.5);
  return {PointSet(std::move(pts)),
          {{"n", double(n)}, {"box", box}, {"groups", double(groups)}, {"seed", double(seed)}}};
}

Instance gen_unit_clique(std::size_t n, std::uint64_t seed) {
  require_n(n);
  Rng rng(seed);
  std::vector<Point2D> pts(n);
  for (Point2D& p : pts) p = in_disk(rng, {0, 0}, 0.5);
  PointSet ps(std::move(pts));
  require(udg_build(ps).edges().size() == n * (n - 1) / 2, "unit clique UDG is complete");
  return {std::move(ps), {{"n", double(n)}, {"seed", double(seed)}}};
}

Instance gen_circle_uniform(std::size_t n, double r, std::uint64_t seed) {
  require_n(n);
  if (!(r > 0)) throw std::invalid_argument("gen_circle_uniform: radius must be positive");
  Rng rng(seed);
  std::vector<Point2D> pts(n);
  for (Point2D& p : pts) {
    const double phi = 2 * kPi * rng.uniform();
    p = {r * std::cos(phi), r * std::sin(phi)};
  }
  return {PointSet(std::move(pts)), {{"n", double(n)}, {"radius", r}, {"seed", double(seed)}}};
}

Instance gen_two_cluster(std::size_t n, std::uint64_t seed) {
  require_n(n);
  Rng rng(seed);
  const Point2D c1{2.0 + rng.uniform(), 2.0 + rng.uniform()};
  const double sep = rng.uniform(0.6, 1.3);
  const double phi = 2 * kPi * rng.uniform();
  const Point2D c2 = c1 + sep * Point2D{std::cos(phi), std::sin(phi)};
  std::vector<Point2D> pts(n);
  for (std::size_t i = 0; i < n; ++i) pts[i] = in_disk(rng, i % 2 == 0 ? c1 : c2, 0.35);
  return {PointSet(std::move(pts)), {{"n", double(n)}, {"separation", sep}, {"seed", double(seed)}}};
}

Instance gen_triangle_free(std::size_t n, double box, std::uint64_t seed) {
  require_n(n);
  if (!(box > 0)) throw std::invalid_argument("gen_triangle_free: box must be positive");
  Rng rng(seed);
  std::vector<Point2D> pts;
  pts.reserve(n);
  const std::size_t max_attempts = 1000 * n + 1000;
  std::vector<std::size_t> near;
  for (std::size_t attempt = 0; pts.size() < n; ++attempt) {
    if (attempt == max_attempts) {
      std::ostringstream msg;
      msg << "gen_triangle_free: placed only " << pts.size() << " of " << n << " points in box " << box;
      throw Error(msg.str());
    }
    const Point2D p{box * rng.uniform(), box * rng.uniform()};
    near.clear();
    bool ok = true;
    for (std::size_t i = 0; i < pts.size() && ok; ++i) {
      if (pts[i] == p) ok = false;
      if (within_unit(pts[i], p)) near.push_back(i);
    }
    for (std::size_t a = 0; a < near.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < near.size() && ok; ++b) ok = !within_unit(pts[near[a]], pts[near[b]]);
    }
    if (ok) pts.push_back(p);
  }
  return {PointSet(std::move(pts)), {{"n", double(n)}, {"box", box}, {"seed", double(seed)}}};
}

Instance gen_circle8() {
  const double r = 1.0;
  const double alpha = kPi / 12;  // chord(alpha) with 4 steps spanning p2..p6 = 1
  const double beta = 2 * std::asin(1.1 * std::sin(alpha / 2));
  const double span = 2 * beta + 5 * alpha;
  std::vector<Point2D> pts;
  double theta = kPi / 2 - span / 2;
  for (int i = 0; i < 8; ++i) {
    pts.push_back({r * std::cos(theta), r * std::sin(theta)});
    theta += (i == 0 || i == 6) ? beta : alpha;
  }
  const double tol = 1e-10;
  auto d = [&](int i, int j) { return dist(pts[i - 1], pts[j - 1]); };
  require(std::abs(d(1, 2) - 1.1 * d(2, 3)) < tol && std::abs(d(7, 8) - 1.1 * d(2, 3)) < tol,
          "|p1p2| = |p7p8| = 1.1 |p2p3|");
  for (int i = 3; i <= 6; ++i) require(std::abs(d(i, i + 1) - d(2, 3)) < tol, "equal inner arcs");
  require(std::abs(d(2, 6) - 1.0) < tol && std::abs(d(3, 7) - 1.0) < tol, "|p2p6| = |p3p7| = 1");
  require(within_unit(pts[1], pts[5]) && within_unit(pts[2], pts[6]), "p2p6 and p3p7 are UDG edges");
  require(d(1, 4) < 1.0 && d(5, 8) < 1.0, "|p1p4| = |p5p8| < 1");
  require(d(1, 5) > 1.0 && d(4, 8) > 1.0, "|p1p5| = |p4p8| > 1");
  require(std::abs(pts[0].y - pts[7].y) < tol, "p1p8 is horizontal");
  return {PointSet(std::move(pts)), {{"radius", r}, {"alpha_deg", alpha * 180 / kPi}, {"beta_deg", beta * 180 / kPi}}};
}

Instance gen_ngon_lb(std::size_t n, double eps) {
  if (!(eps > 0.0 && eps <= 1.0 / 50 + 1e-12)) {
    throw std::invalid_argument("gen_ngon_lb: eps must lie in (0, 1/50]");
  }
  const auto min_n = static_cast<std::size_t>(std::ceil(2.0 / eps - 1e-9));
  if (n < min_n) throw std::invalid_argument("gen_ngon_lb: n must be at least ceil(2/eps) = " + std::to_string(min_n));
  const auto m = static_cast<std::size_t>(std::floor((1.0 / 3.0 - eps) * static_cast<double>(n)));
  const double nn = static_cast<double>(n);
  // Windows of m points span m-1 steps; windows of m+1 span m steps.
  const double r_lo = 1.0 / (2 * std::sin(kPi * static_cast<double>(m) / nn));
  const double r_hi = 1.0 / (2 * std::sin(kPi * static_cast<double>(m - 1) / nn));
  if (!(m >= 2 && r_lo < r_hi)) throw Error("gen_ngon_lb: empty feasible radius interval");
  const double r = 0.5 * (r_lo + r_hi);
  std::vector<Point2D> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double phi = 2 * kPi * static_cast<double>(i) / nn;
    pts[i] = {r * std::cos(phi), r * std::sin(phi)};
  }
  require(chord(r, 2 * kPi * static_cast<double>(m - 1) / nn) <= 1.0, "m-window diameter <= 1");
  require(chord(r, 2 * kPi * static_cast<double>(m) / nn) > 1.0, "(m+1)-window diameter > 1");
  return {PointSet(std::move(pts)),
          {{"n", nn}, {"eps", eps}, {"m", double(m)}, {"radius", r}, {"radius_lo", r_lo}, {"radius_hi", r_hi}}};
}

Instance gen_clique_chain(std::size_t t, std::size_t groups) {
  if (t < 1 || groups < 1) throw std::invalid_argument("gen_clique_chain: need t >= 1 and groups >= 1");
  // Group centers 2 apart on the x-axis; each group has connectors at
  // center -+ 1/2, so facing connectors of neighbors are exactly 1 apart,
  // and the rest of the group sits within radius 0.4 of the center.
  constexpr double kSpacing = 2.0;
  const std::size_t size = 2 * t + 1;
  const double golden = kPi * (3.0 - std::sqrt(5.0));
  std::vector<Point2D> pts;
  pts.reserve(size * groups);
  for (std::size_t g = 0; g < groups; ++g) {
    const double cx = kSpacing * static_cast<double>(g);
    pts.push_back({cx - 0.5, 0.0});
    const std::size_t inner = size - 2;
    for (std::size_t k = 0; k < inner; ++k) {
      const double rho = 0.4 * std::sqrt((static_cast<double>(k) + 0.5) / static_cast<double>(inner));
      const double phi = golden * static_cast<double>(k);
      pts.push_back({cx + rho * std::cos(phi), rho * std::sin(phi)});
    }
    pts.push_back({cx + 0.5, 0.0});
  }
  PointSet ps(std::move(pts));
  const UnitDiskGraph g = udg_build(ps);
  require(g.edges().size() == groups * size * (size - 1) / 2 + (groups - 1), "clique chain edge count");
  return {std::move(ps), {{"t", double(t)}, {"groups", double(groups)}, {"spacing", kSpacing}}};
}

}  // namespace hopspan
