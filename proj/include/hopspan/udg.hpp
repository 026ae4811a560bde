#pragma once

#include <compare>
#include <span>
#include <vector>

#include "hopspan/geometry.hpp"

namespace hopspan {

/// Undirected edge stored with u < v.
struct Edge {
  PointIndex u = 0;
  PointIndex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline constexpr Edge make_edge(PointIndex a, PointIndex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Compressed adjacency over a sorted, duplicate-free edge list.
class Adjacency {
 public:
  Adjacency() = default;
  Adjacency(std::size_t vertex_count, std::span<const Edge> edges);

  std::span<const PointIndex> neighbors(PointIndex i) const {
    return {targets_.data() + offsets_[i], targets_.data() + offsets_[i + 1]};
  }
  std::size_t degree(PointIndex i) const { return offsets_[i + 1] - offsets_[i]; }
  bool adjacent(PointIndex a, PointIndex b) const;
  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<PointIndex> targets_;
};

/// Point set plus every pair at distance <= 1 (see kUnitDistanceSq).
class UnitDiskGraph {
 public:
  UnitDiskGraph() = default;
  UnitDiskGraph(PointSet points, std::vector<Edge> sorted_edges);

  const PointSet& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  /// Lexicographically sorted.
  std::span<const Edge> edges() const { return edges_; }
  std::span<const PointIndex> neighbors(PointIndex i) const { return adjacency_.neighbors(i); }
  std::size_t degree(PointIndex i) const { return adjacency_.degree(i); }
  bool has_edge(PointIndex a, PointIndex b) const { return adjacency_.adjacent(a, b); }
  const Adjacency& adjacency() const { return adjacency_; }

 private:
  PointSet points_;
  std::vector<Edge> edges_;
  Adjacency adjacency_;
};

/// Builds the unit disk graph with a unit-grid bucket scan.
UnitDiskGraph udg_build(PointSet points);

}  // namespace hopspan
