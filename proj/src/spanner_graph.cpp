#include "hopspan/spanner_graph.hpp"

#include <algorithm>
#include <string>

namespace hopspan {
namespace {

std::string describe(const std::vector<Edge>& foreign) {
  std::string msg = "spanner is not a subgraph of the unit disk graph; foreign edges:";
  const std::size_t shown = std::min<std::size_t>(foreign.size(), 10);
  for (std::size_t k = 0; k < shown; ++k) {
    msg += " (" + std::to_string(foreign[k].u) + "," + std::to_string(foreign[k].v) + ")";
  }
  if (foreign.size() > shown) msg += " ... (" + std::to_string(foreign.size()) + " total)";
  return msg;
}

}  // namespace

NotSubgraphError::NotSubgraphError(std::vector<Edge> foreign)
    : Error(describe(foreign)), foreign_(std::move(foreign)) {}

void sort_unique(std::vector<Edge>& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

std::vector<Edge> foreign_edges(const UnitDiskGraph& base, std::span<const Edge> edges) {
  std::vector<Edge> out;
  for (const Edge& e : edges) {
    if (e.u == e.v || e.u >= base.size() || e.v >= base.size() || !base.has_edge(e.u, e.v)) {
      out.push_back(e);
    }
  }
  return out;
}

SpannerGraph::SpannerGraph(const UnitDiskGraph& base, std::vector<Edge> edges)
    : base_(&base), edges_(std::move(edges)) {
  for (Edge& e : edges_) e = make_edge(e.u, e.v);
  sort_unique(edges_);
  if (auto foreign = foreign_edges(base, edges_); !foreign.empty()) {
    throw NotSubgraphError(std::move(foreign));
  }
  adjacency_ = Adjacency(base.size(), edges_);
}

std::size_t SpannerGraph::max_degree() const {
  std::size_t best = 0;
  for (PointIndex i = 0; i < size(); ++i) best = std::max(best, degree(i));
  return best;
}

}  // namespace hopspan
