#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "hopspan/verify.hpp"

namespace hopspan {
namespace {

bool on_segment(Point2D a, Point2D b, Point2D p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

struct BucketKey {
  long long x, y;
  friend bool operator==(const BucketKey&, const BucketKey&) = default;
};

struct BucketKeyHash {
  std::size_t operator()(const BucketKey& k) const noexcept {
    return std::hash<long long>{}(k.x * 1000003LL ^ k.y);
  }
};

}  // namespace

bool segments_intersect(Point2D a, Point2D b, Point2D c, Point2D d) {
  const int o1 = orient_sign(a, b, c);
  const int o2 = orient_sign(a, b, d);
  const int o3 = orient_sign(c, d, a);
  const int o4 = orient_sign(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

bool edges_conflict(std::span<const Point2D> pts, Edge e, Edge f) {
  if (e == f) return false;
  // Shared endpoint: only a collinear overlap counts.
  auto shared = [&](PointIndex s, PointIndex x, PointIndex y) {
    const Point2D o = pts[s], p = pts[x], q = pts[y];
    return orient_sign(o, p, q) == 0 && dot(p - o, q - o) > 0.0;
  };
  if (e.u == f.u) return shared(e.u, e.v, f.v);
  if (e.u == f.v) return shared(e.u, e.v, f.u);
  if (e.v == f.u) return shared(e.v, e.u, f.v);
  if (e.v == f.v) return shared(e.v, e.u, f.u);
  return segments_intersect(pts[e.u], pts[e.v], pts[f.u], pts[f.v]);
}

PlanarityResult is_plane(std::span<const Point2D> pts, std::span<const Edge> edges) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  sort_unique(sorted);

  // Unit grid over edge bounding boxes; two conflicting edges share a bucket.
  constexpr double kBucket = 1.0;
  auto bucket_range = [&](const Edge& e, auto&& visit) {
    const Point2D a = pts[e.u], b = pts[e.v];
    const auto x0 = static_cast<long long>(std::floor(std::min(a.x, b.x) / kBucket));
    const auto x1 = static_cast<long long>(std::floor(std::max(a.x, b.x) / kBucket));
    const auto y0 = static_cast<long long>(std::floor(std::min(a.y, b.y) / kBucket));
    const auto y1 = static_cast<long long>(std::floor(std::max(a.y, b.y) / kBucket));
    for (long long x = x0; x <= x1; ++x) {
      for (long long y = y0; y <= y1; ++y) visit(BucketKey{x, y});
    }
  };
  std::unordered_map<BucketKey, std::vector<std::size_t>, BucketKeyHash> buckets;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    bucket_range(sorted[i], [&](BucketKey k) { buckets[k].push_back(i); });
  }

  for (std::size_t i = 0; i < sorted.size(); ++i) {
    std::size_t best = sorted.size();
    bucket_range(sorted[i], [&](BucketKey k) {
      const auto& list = buckets[k];
      for (auto it = std::upper_bound(list.begin(), list.end(), i); it != list.end() && *it < best; ++it) {
        if (edges_conflict(pts, sorted[i], sorted[*it])) {
          best = *it;
          break;
        }
      }
    });
    if (best < sorted.size()) return {false, Crossing{sorted[i], sorted[best]}};
  }
  return {};
}

PlanarityResult is_plane(const SpannerGraph& s) { return is_plane(s.base().points().points(), s.edges()); }

}  // namespace hopspan
