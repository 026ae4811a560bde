#include "hopspan/nets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "hopspan/simd/kernels.hpp"
#include "hopspan/spanner_graph.hpp"

namespace hopspan::nets {
namespace {

constexpr double kPi = std::numbers::pi;

struct Interval {
  double lo, hi;  // open
};

// Candidate witness centers p + (cos t, sin t) for t in [lo, hi] are exactly
// the unit circles through p centered on or below the axis. Each other point
// q forbids the open arc of angles whose disk would hold q strictly inside.
// Returns an uncovered angle, if any.
std::optional<double> free_angle(std::span<const Point2D> above, std::size_t i) {
  const Point2D p = above[i];
  if (p.y > 1.0) return std::nullopt;
  const double phi = std::asin(p.y);
  const double lo = -kPi + phi;
  const double hi = -phi;

  std::vector<Interval> blocked;
  for (std::size_t j = 0; j < above.size(); ++j) {
    if (j == i) continue;
    const Point2D w = above[j] - p;
    const double d2 = dot(w, w);
    if (d2 >= 4.0) continue;
    const double d = std::sqrt(d2);
    // |p + u - q|^2 < s  <=>  cos(t - psi) > (1 + d^2 - s) / (2d)
    const double kappa = (1.0 + d2 - kStrictInsideSq) / (2.0 * d);
    if (kappa >= 1.0) continue;
    const double delta = std::acos(kappa);
    const double psi = std::atan2(w.y, w.x);
    for (double shift : {-2 * kPi, 0.0, 2 * kPi}) {
      const double a = psi + shift - delta;
      const double b = psi + shift + delta;
      if (b > lo && a < hi) blocked.push_back({a, b});
    }
  }
  std::sort(blocked.begin(), blocked.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });

  double cur = lo;
  for (const Interval& iv : blocked) {
    if (iv.lo >= cur) return iv.lo > cur ? 0.5 * (cur + std::min(iv.lo, hi)) : cur;
    cur = std::max(cur, iv.hi);
    if (cur > hi) return std::nullopt;
  }
  return cur < hi ? 0.5 * (cur + hi) : cur;
}

// Candidate-family fallback for one point when the angular sweep lands on a
// numerically ambiguous angle.
std::optional<Point2D> candidate_witness(std::span<const Point2D> above, std::size_t i) {
  const Point2D p = above[i];
  std::vector<Point2D> candidates{{p.x, p.y - 1.0}};
  for (std::size_t j = 0; j < above.size(); ++j) {
    if (j == i) continue;
    if (auto c = circle_below_axis_through(p, above[j])) candidates.push_back(*c);
  }
  for (const Point2D& c : circles_on_axis_through(p)) candidates.push_back(c);
  for (const Point2D& c : candidates) {
    if (c.y <= 0.0 && is_empty_disk(c, above)) return c;
  }
  return std::nullopt;
}

std::vector<std::size_t> x_sorted(std::span<const Point2D> pts, std::vector<std::size_t> ids) {
  std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) { return x_order_less(pts, a, b); });
  return ids;
}

double max_pair_dist_sq(std::span<const Point2D> pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, dist_sq(pts[i], pts[j]));
  }
  return best;
}

}  // namespace

BipartiteScene make_scene(const PointSet& points, std::span<const PointIndex> above_ids,
                          std::span<const PointIndex> below_ids, const OrientedLine& axis) {
  BipartiteScene scene;
  scene.axis = axis;
  scene.above_ids.assign(above_ids.begin(), above_ids.end());
  scene.below_ids.assign(below_ids.begin(), below_ids.end());
  const Frame frame(axis);
  for (PointIndex i : above_ids) scene.above.push_back(frame.to_local(points[i]));
  for (PointIndex i : below_ids) scene.below.push_back(frame.to_local(points[i]));
  return scene;
}

bool x_order_less(std::span<const Point2D> pts, std::size_t a, std::size_t b) {
  if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
  if (pts[a].y != pts[b].y) return pts[a].y < pts[b].y;
  return a < b;
}

bool is_empty_disk(Point2D center, std::span<const Point2D> above) {
  return !simd::any_strictly_within(center, simd::PointColumns(above), kStrictInsideSq);
}

HullBoundarySet hull_boundary(std::span<const Point2D> above) {
  const simd::PointColumns cols(above);
  std::vector<std::pair<std::size_t, Point2D>> found;
  for (std::size_t i = 0; i < above.size(); ++i) {
    const auto t = free_angle(above, i);
    if (!t) continue;
    Point2D c = above[i] + Point2D{std::cos(*t), std::sin(*t)};
    c.y = std::min(c.y, 0.0);
    if (!simd::any_strictly_within(c, cols, kStrictInsideSq)) {
      found.emplace_back(i, c);
    } else if (auto alt = candidate_witness(above, i)) {
      found.emplace_back(i, *alt);
    }
  }
  std::sort(found.begin(), found.end(),
            [&](const auto& a, const auto& b) { return x_order_less(above, a.first, b.first); });
  HullBoundarySet out;
  for (const auto& [i, c] : found) {
    out.members.push_back(i);
    out.witnesses.push_back(c);
  }
  return out;
}

EpsNet minimal_eps_net(std::span<const Point2D> above, const HullBoundarySet& hull, double eps,
                       std::span<const Point2D> family) {
  if (!(eps > 0.0 && eps < 2.0 / 3.0)) {
    throw std::invalid_argument("minimal_eps_net: eps must lie in (0, 2/3), got " + std::to_string(eps));
  }
  EpsNet net;
  net.eps = eps;
  net.family.assign(family.begin(), family.end());

  const simd::PointColumns cols(above);
  const double threshold = eps * static_cast<double>(above.size());
  std::vector<std::size_t> heavy;
  for (std::size_t d = 0; d < family.size(); ++d) {
    if (static_cast<double>(simd::count_within(family[d], cols, kUnitDistanceSq)) >= threshold) {
      heavy.push_back(d);
    }
  }

  const std::vector<std::size_t> candidates = x_sorted(above, hull.members);
  // disks_of[k]: heavy disks (as indices into `heavy`) containing candidate k.
  std::vector<std::vector<std::size_t>> disks_of(candidates.size());
  std::vector<std::size_t> hits(heavy.size(), 0);
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    for (std::size_t h = 0; h < heavy.size(); ++h) {
      if (within_unit(above[candidates[k]], family[heavy[h]])) {
        disks_of[k].push_back(h);
        ++hits[h];
      }
    }
  }
  for (std::size_t h = 0; h < heavy.size(); ++h) {
    if (hits[h] == 0) {
      throw std::logic_error("minimal_eps_net: hull boundary misses a heavy disk");
    }
  }

  std::vector<bool> kept(candidates.size(), true);
  for (std::size_t k = candidates.size(); k-- > 0;) {
    const bool removable =
        std::all_of(disks_of[k].begin(), disks_of[k].end(), [&](std::size_t h) { return hits[h] >= 2; });
    if (!removable) continue;
    kept[k] = false;
    for (std::size_t h : disks_of[k]) --hits[h];
  }
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (kept[k]) net.members.push_back(candidates[k]);
  }
  return net;
}

int disk_level(std::size_t hits, std::size_t total) {
  if (hits == 0) return 0;
  if (hits >= total) return 1;
  int level = 1;
  // smallest level with hits * 2^level >= total
  while ((static_cast<unsigned long long>(hits) << level) < total) ++level;
  return level;
}

std::vector<DiskBin> bin_disks(std::span<const Point2D> above, std::span<const Point2D> below) {
  const simd::PointColumns cols(above);
  std::map<int, std::vector<std::size_t>> by_level;
  for (std::size_t b = 0; b < below.size(); ++b) {
    const int level = disk_level(simd::count_within(below[b], cols, kUnitDistanceSq), above.size());
    if (level > 0) by_level[level].push_back(b);
  }
  std::vector<DiskBin> bins;
  for (auto& [level, disks] : by_level) bins.push_back({level, std::move(disks)});
  return bins;
}

BipartiteSpanner bipartite_2hop(std::span<const Point2D> above, std::span<const Point2D> below) {
  for (std::size_t i = 0; i < above.size(); ++i) {
    if (!(above[i].y > 0.0)) {
      throw std::invalid_argument("bipartite_2hop: A-point " + std::to_string(i) + " is not above the axis");
    }
  }
  for (std::size_t j = 0; j < below.size(); ++j) {
    if (!(below[j].y < 0.0)) {
      throw std::invalid_argument("bipartite_2hop: B-point " + std::to_string(j) + " is not below the axis");
    }
  }
  if (const double d2 = max_pair_dist_sq(above); d2 > kUnitDistanceSq) {
    throw std::invalid_argument("bipartite_2hop: diam(A) = " + std::to_string(std::sqrt(d2)) + " exceeds 1");
  }
  if (const double d2 = max_pair_dist_sq(below); d2 > kUnitDistanceSq) {
    throw std::invalid_argument("bipartite_2hop: diam(B) = " + std::to_string(std::sqrt(d2)) + " exceeds 1");
  }

  BipartiteSpanner out;
  if (above.empty() || below.empty()) return out;

  out.bins = bin_disks(above, below);
  if (out.bins.empty()) return out;
  out.hull = hull_boundary(above);

  const simd::Kernels& kern = simd::active();
  const simd::PointColumns cols(above);
  const auto a_count = static_cast<PointIndex>(above.size());
  std::vector<std::uint32_t> covered(above.size());

  for (const DiskBin& bin : out.bins) {
    std::vector<Point2D> family;
    for (std::size_t b : bin.disks) family.push_back(below[b]);
    EpsNet net = minimal_eps_net(above, out.hull, std::ldexp(1.0, -bin.level), family);

    std::map<std::size_t, std::size_t> star_of_center;
    for (std::size_t b : bin.disks) {
      const auto leftmost = std::find_if(net.members.begin(), net.members.end(),
                                         [&](std::size_t v) { return within_unit(above[v], below[b]); });
      if (leftmost == net.members.end()) {
        throw std::logic_error("bipartite_2hop: net misses a binned disk");
      }
      auto [it, inserted] = star_of_center.try_emplace(*leftmost, out.stars.size());
      if (inserted) out.stars.push_back(Star{bin.level, *leftmost, {}, {}});
      Star& star = out.stars[it->second];
      star.below_leaves.push_back(b);
      const std::size_t hits = kern.collect_within(below[b].x, below[b].y, cols.xs.data(), cols.ys.data(),
                                                   cols.size(), kUnitDistanceSq, covered.data());
      for (std::size_t h = 0; h < hits; ++h) {
        if (covered[h] != star.center) star.above_leaves.push_back(covered[h]);
      }
    }
    out.nets.push_back(std::move(net));
  }

  for (Star& star : out.stars) {
    std::sort(star.above_leaves.begin(), star.above_leaves.end());
    star.above_leaves.erase(std::unique(star.above_leaves.begin(), star.above_leaves.end()),
                            star.above_leaves.end());
    const auto c = static_cast<PointIndex>(star.center);
    for (std::size_t a : star.above_leaves) out.edges.push_back(make_edge(c, static_cast<PointIndex>(a)));
    for (std::size_t b : star.below_leaves) out.edges.push_back({c, a_count + static_cast<PointIndex>(b)});
  }
  sort_unique(out.edges);
  return out;
}

}  // namespace hopspan::nets
