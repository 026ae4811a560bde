#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "hopspan/error.hpp"
#include "hopspan/spanners.hpp"

namespace hopspan {
namespace {

constexpr double kConcyclicTol = 1e-9;

// Kasa fit on centered coordinates: solve the normal equations of
// u^2 + v^2 = 2 a u + 2 b v + c.
std::optional<Point2D> kasa_center(std::span<const Point2D> pts) {
  double mx = 0.0, my = 0.0;
  for (Point2D p : pts) {
    mx += p.x;
    my += p.y;
  }
  mx /= static_cast<double>(pts.size());
  my /= static_cast<double>(pts.size());
  double suu = 0, suv = 0, svv = 0, suuu = 0, svvv = 0, suvv = 0, svuu = 0;
  for (Point2D p : pts) {
    const double u = p.x - mx, v = p.y - my;
    suu += u * u;
    suv += u * v;
    svv += v * v;
    suuu += u * u * u;
    svvv += v * v * v;
    suvv += u * v * v;
    svuu += v * u * u;
  }
  const double det = suu * svv - suv * suv;
  const double scale = (suu + svv) * (suu + svv);
  if (!(std::abs(det) > 1e-14 * scale)) return std::nullopt;
  const double r1 = 0.5 * (suuu + suvv);
  const double r2 = 0.5 * (svvv + svuu);
  const double uc = (r1 * svv - r2 * suv) / det;
  const double vc = (suu * r2 - suv * r1) / det;
  return Point2D{mx + uc, my + vc};
}

}  // namespace

CircleFit fit_circle(std::span<const Point2D> pts) {
  if (pts.empty()) throw Error("fit_circle: no points");
  CircleFit fit;
  if (pts.size() == 1) {
    fit.center = pts[0];
  } else if (pts.size() == 2) {
    fit.center = 0.5 * (pts[0] + pts[1]);
  } else {
    auto c = kasa_center(pts);
    if (!c) throw Error("points are not concyclic (collinear)");
    fit.center = *c;
  }
  double sum = 0.0;
  for (Point2D p : pts) sum += dist(p, fit.center);
  fit.radius = sum / static_cast<double>(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double dev = std::abs(dist(pts[i], fit.center) - fit.radius);
    if (dev > kConcyclicTol) {
      std::ostringstream msg;
      msg << "points are not concyclic: point " << i << " is " << dev << " off the fitted radius " << fit.radius;
      throw Error(msg.str());
    }
  }
  return fit;
}

GreedyChain greedy_circle_chain(const UnitDiskGraph& g) {
  const PointSet& ps = g.points();
  GreedyChain out;
  out.circle = fit_circle(ps.points());
  const std::size_t n = ps.size();

  std::vector<double> angle(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D d = ps[i] - out.circle.center;
    angle[i] = std::atan2(d.y, d.x);
  }
  std::vector<PointIndex> ccw(n);
  for (std::size_t i = 0; i < n; ++i) ccw[i] = static_cast<PointIndex>(i);
  std::sort(ccw.begin(), ccw.end(), [&](PointIndex a, PointIndex b) {
    return angle[a] != angle[b] ? angle[a] < angle[b] : a < b;
  });

  // Largest gap between cyclically consecutive points; the covering arc
  // starts right after it.
  std::size_t start = 0;
  double widest = -1.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double gap = k + 1 < n ? angle[ccw[k + 1]] - angle[ccw[k]]
                                 : angle[ccw[0]] + 2 * std::numbers::pi - angle[ccw[k]];
    if (gap > widest) {
      widest = gap;
      start = (k + 1) % n;
    }
  }
  out.order.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.order.push_back(ccw[(start + k) % n]);

  auto s = [&](std::size_t pos) { return ps[out.order[pos]]; };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!within_unit(s(k), s(k + 1))) {
      std::ostringstream msg;
      msg << "unit disk graph is disconnected: consecutive circle points " << out.order[k] << " and "
          << out.order[k + 1] << " are " << dist(s(k), s(k + 1)) << " apart";
      throw Error(msg.str());
    }
  }

  out.chain.push_back(0);
  std::size_t cur = 0;
  while (cur + 1 < n) {
    std::size_t next = cur + 1;
    while (next + 1 < n && within_unit(s(cur), s(next + 1))) ++next;
    out.chain.push_back(next);
    cur = next;
  }
  // The step that reached s_n ends the chain at its predecessor when that
  // vertex can close back to s_1; s_n then lies in the closing block.
  const std::size_t m = out.chain.size();
  if (m >= 4 && within_unit(s(out.chain[m - 2]), s(0))) {
    out.chain.pop_back();
    out.closed = true;
    return out;
  }
  out.closed = out.chain.size() >= 3 && within_unit(s(out.chain.back()), s(0));
  return out;
}

SpannerGraph build_circle_hop4(const UnitDiskGraph& g) {
  const std::size_t n = g.size();
  std::vector<Edge> edges;
  if (n <= 1) return SpannerGraph(g, {});
  const CircleFit fit = fit_circle(g.points().points());
  if (fit.radius <= 0.5) {
    for (PointIndex v = 1; v < n; ++v) edges.push_back({0, v});
    return SpannerGraph(g, std::move(edges));
  }
  const GreedyChain chain = greedy_circle_chain(g);
  auto id = [&](std::size_t pos) { return chain.order[pos]; };
  for (std::size_t b = 0; b + 1 < chain.chain.size(); ++b) {
    const std::size_t lo = chain.chain[b];
    const std::size_t hi = chain.chain[b + 1];
    for (std::size_t pos = lo + 1; pos <= hi; ++pos) edges.push_back(make_edge(id(lo), id(pos)));
  }
  if (chain.closed) {
    const std::size_t lo = chain.chain.back();
    for (std::size_t pos = lo + 1; pos < n; ++pos) edges.push_back(make_edge(id(lo), id(pos)));
    edges.push_back(make_edge(id(lo), id(0)));
  }
  return SpannerGraph(g, std::move(edges));
}

}  // namespace hopspan
