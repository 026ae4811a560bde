#pragma once

#include <span>
#include <vector>

#include "hopspan/udg.hpp"

namespace hopspan {

/// Raised when a candidate spanner contains pairs that are not unit disk
/// graph edges (or reference points that do not exist).
class NotSubgraphError : public Error {
 public:
  explicit NotSubgraphError(std::vector<Edge> foreign);
  const std::vector<Edge>& foreign_edges() const { return foreign_; }

 private:
  std::vector<Edge> foreign_;
};

/// Edge subset of a unit disk graph. Holds a non-owning pointer to the base
/// graph, which must outlive the spanner.
class SpannerGraph {
 public:
  /// Sorts and deduplicates `edges`; throws NotSubgraphError if any edge is
  /// missing from `base`.
  SpannerGraph(const UnitDiskGraph& base, std::vector<Edge> edges);

  const UnitDiskGraph& base() const { return *base_; }
  std::size_t size() const { return base_->size(); }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const PointIndex> neighbors(PointIndex i) const { return adjacency_.neighbors(i); }
  std::size_t degree(PointIndex i) const { return adjacency_.degree(i); }
  bool has_edge(PointIndex a, PointIndex b) const { return adjacency_.adjacent(a, b); }
  std::size_t max_degree() const;

 private:
  const UnitDiskGraph* base_;
  std::vector<Edge> edges_;
  Adjacency adjacency_;
};

/// Edges of `edges` that are not edges of `base`, in input order.
std::vector<Edge> foreign_edges(const UnitDiskGraph& base, std::span<const Edge> edges);

void sort_unique(std::vector<Edge>& edges);

}  // namespace hopspan
