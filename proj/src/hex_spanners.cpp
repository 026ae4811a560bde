#include <algorithm>
#include <stdexcept>

#include "hopspan/spanners.hpp"

namespace hopspan {

const char* to_string(SpannerKind kind) {
  switch (kind) {
    case SpannerKind::hop5: return "hop5";
    case SpannerKind::hop3: return "hop3";
    case SpannerKind::hop2: return "hop2";
    case SpannerKind::circle4: return "circle4";
  }
  return "?";
}

std::optional<SpannerKind> parse_spanner_kind(std::string_view name) {
  for (SpannerKind k : {SpannerKind::hop5, SpannerKind::hop3, SpannerKind::hop2, SpannerKind::circle4}) {
    if (name == to_string(k)) return k;
  }
  return std::nullopt;
}

int stretch_bound(SpannerKind kind) {
  switch (kind) {
    case SpannerKind::hop5: return 5;
    case SpannerKind::hop3: return 3;
    case SpannerKind::hop2: return 2;
    case SpannerKind::circle4: return 4;
  }
  return 0;
}

BridgeMap::BridgeMap(const UnitDiskGraph& g, const CellPartition& cells) {
  // Edges come sorted, so the first edge seen for a pair is the smallest.
  for (const Edge& e : g.edges()) {
    const HexCellId cu = cells.cell_of(e.u);
    const HexCellId cv = cells.cell_of(e.v);
    if (cu == cv) continue;
    const bool is_short = hex_distance(cu, cv) == 1;
    if (cu < cv) {
      bridges_.try_emplace({cu, cv}, Bridge{e.u, e.v, is_short});
    } else {
      bridges_.try_emplace({cv, cu}, Bridge{e.v, e.u, is_short});
    }
  }
}

std::optional<Bridge> BridgeMap::find(HexCellId a, HexCellId b) const {
  if (a < b) {
    auto it = bridges_.find({a, b});
    if (it == bridges_.end()) return std::nullopt;
    return it->second;
  }
  auto it = bridges_.find({b, a});
  if (it == bridges_.end()) return std::nullopt;
  return Bridge{it->second.q, it->second.p, it->second.is_short};
}

namespace {

void add_star(std::vector<Edge>& out, PointIndex root, std::span<const PointIndex> members) {
  for (PointIndex v : members) {
    if (v != root) out.push_back(make_edge(root, v));
  }
}

}  // namespace

SpannerGraph build_hop5(const UnitDiskGraph& g) {
  const CellPartition cells(g.points());
  const BridgeMap bridges(g, cells);
  std::vector<Edge> edges;
  for (const auto& [cell, members] : cells.cells()) add_star(edges, members.front(), members);
  for (const auto& [pair, b] : bridges.bridges()) edges.push_back(make_edge(b.p, b.q));
  return SpannerGraph(g, std::move(edges));
}

SpannerGraph build_hop3(const UnitDiskGraph& g) {
  const CellPartition cells(g.points());
  const BridgeMap bridges(g, cells);

  // Cells holding a UDG neighbor of each point, sorted.
  std::vector<std::vector<HexCellId>> neighbor_cells(g.size());
  for (PointIndex i = 0; i < g.size(); ++i) {
    auto& nc = neighbor_cells[i];
    for (PointIndex j : g.neighbors(i)) {
      if (cells.cell_of(j) != cells.cell_of(i)) nc.push_back(cells.cell_of(j));
    }
    std::sort(nc.begin(), nc.end());
    nc.erase(std::unique(nc.begin(), nc.end()), nc.end());
  }
  auto reaches = [&](PointIndex i, HexCellId target) {
    const double d = cell_distance(target, g.points()[i]);
    return d * d <= kUnitDistanceSq ||
           std::binary_search(neighbor_cells[i].begin(), neighbor_cells[i].end(), target);
  };

  std::vector<Edge> edges;
  std::map<HexCellId, bool> has_short;
  std::map<HexCellId, PointIndex> long_root;
  auto attach = [&](HexCellId own, PointIndex p, HexCellId other, bool is_short) {
    for (PointIndex i : cells.points_in(own)) {
      if (i != p && reaches(i, other)) edges.push_back(make_edge(i, p));
    }
    if (is_short) {
      has_short[own] = true;
    } else {
      auto [it, inserted] = long_root.try_emplace(own, p);
      if (!inserted) it->second = std::min(it->second, p);
    }
  };
  for (const auto& [pair, b] : bridges.bridges()) {
    edges.push_back(make_edge(b.p, b.q));
    attach(pair.first, b.p, pair.second, b.is_short);
    attach(pair.second, b.q, pair.first, b.is_short);
  }
  for (const auto& [cell, members] : cells.cells()) {
    if (has_short.contains(cell)) continue;
    auto it = long_root.find(cell);
    add_star(edges, it != long_root.end() ? it->second : members.front(), members);
  }
  return SpannerGraph(g, std::move(edges));
}

SpannerGraph build_spanner(const UnitDiskGraph& g, SpannerKind kind) {
  switch (kind) {
    case SpannerKind::hop5: return build_hop5(g);
    case SpannerKind::hop3: return build_hop3(g);
    case SpannerKind::hop2: return build_hop2(g);
    case SpannerKind::circle4: return build_circle_hop4(g);
  }
  throw std::invalid_argument("unknown spanner kind");
}

}  // namespace hopspan
