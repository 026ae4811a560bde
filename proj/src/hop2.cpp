#include <algorithm>
#include <stdexcept>

#include "hopspan/spanners.hpp"

namespace hopspan {
namespace {

bool sides_ok(const nets::BipartiteScene& s) {
  return std::all_of(s.above.begin(), s.above.end(), [](Point2D p) { return p.y > 0.0; }) &&
         std::all_of(s.below.begin(), s.below.end(), [](Point2D p) { return p.y < 0.0; });
}

// Cell points sit on the closed hexagons, so the bisector can pass through a
// point on a shared side. Shift the line into the gap between the groups when
// that happens; nullopt when no parallel line separates them.
std::optional<nets::BipartiteScene> separated_scene(const PointSet& pts, std::span<const PointIndex> a,
                                                    std::span<const PointIndex> b, OrientedLine axis) {
  nets::BipartiteScene scene = nets::make_scene(pts, a, b, axis);
  if (sides_ok(scene)) return scene;
  double a_min = scene.above.front().y;
  double b_max = scene.below.front().y;
  for (Point2D p : scene.above) a_min = std::min(a_min, p.y);
  for (Point2D p : scene.below) b_max = std::max(b_max, p.y);
  if (!(a_min > b_max)) return std::nullopt;
  axis.origin = axis.origin + (0.5 * (a_min + b_max)) * axis.normal;
  scene = nets::make_scene(pts, a, b, axis);
  if (sides_ok(scene)) return scene;
  return std::nullopt;
}

std::vector<PointIndex> to_global(const std::vector<PointIndex>& ids, const std::vector<std::size_t>& local) {
  std::vector<PointIndex> out;
  out.reserve(local.size());
  for (std::size_t i : local) out.push_back(ids[i]);
  return out;
}

}  // namespace

SpannerGraph build_hop2(const UnitDiskGraph& g, std::vector<PairTrace>* trace) {
  const CellPartition cells(g.points());
  const BridgeMap bridges(g, cells);
  std::vector<Edge> edges;
  for (const auto& [cell, members] : cells.cells()) {
    for (PointIndex v : members) {
      if (v != members.front()) edges.push_back({members.front(), v});
    }
  }

  // Bridge keys are exactly the cell pairs joined by at least one UDG edge.
  for (const auto& [pair, bridge] : bridges.bridges()) {
    const auto [sigma, tau] = pair;
    const std::span<const PointIndex> a = cells.points_in(sigma);
    const std::span<const PointIndex> b = cells.points_in(tau);
    PairTrace rec{sigma, tau, false, {}, {}};

    std::optional<nets::BipartiteSpanner> local;
    std::optional<nets::BipartiteScene> scene = separated_scene(g.points(), a, b, separating_line(sigma, tau));
    if (scene) {
      try {
        local = nets::bipartite_2hop(scene->above, scene->below);
      } catch (const std::invalid_argument&) {
        local.reset();
      }
    }

    if (!local) {
      rec.direct = true;
      for (PointIndex i : a) {
        for (PointIndex j : g.neighbors(i)) {
          if (cells.cell_of(j) == tau) edges.push_back(make_edge(i, j));
        }
      }
    } else {
      const auto a_count = scene->above_ids.size();
      auto global = [&](PointIndex v) {
        return v < a_count ? scene->above_ids[v] : scene->below_ids[v - a_count];
      };
      for (const Edge& e : local->edges) edges.push_back(make_edge(global(e.u), global(e.v)));
      if (trace) {
        rec.hull = to_global(scene->above_ids, local->hull.members);
        for (std::size_t k = 0; k < local->bins.size(); ++k) {
          rec.nets.emplace_back(local->bins[k].level, to_global(scene->above_ids, local->nets[k].members));
        }
      }
    }
    if (trace) trace->push_back(std::move(rec));
  }
  return SpannerGraph(g, std::move(edges));
}

}  // namespace hopspan
