#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hopspan/hexgrid.hpp"
#include "hopspan/nets.hpp"
#include "hopspan/spanner_graph.hpp"
#include "hopspan/udg.hpp"

namespace hopspan {

enum class SpannerKind { hop5, hop3, hop2, circle4 };

const char* to_string(SpannerKind kind);
/// Parses "hop5" / "hop3" / "hop2" / "circle4"; nullopt otherwise.
std::optional<SpannerKind> parse_spanner_kind(std::string_view name);
/// Hop-stretch guarantee of each construction.
int stretch_bound(SpannerKind kind);

/// One chosen UDG edge between two cells; p lies in the smaller cell of the
/// pair, q in the larger.
struct Bridge {
  PointIndex p = 0;
  PointIndex q = 0;
  bool is_short = false;  // the cells share a side
};

using CellPair = std::pair<HexCellId, HexCellId>;

/// At most one bridge per unordered cell pair: the lexicographically smallest
/// UDG edge between the two cells.
class BridgeMap {
 public:
  BridgeMap(const UnitDiskGraph& g, const CellPartition& cells);

  /// Keyed by (smaller cell, larger cell).
  const std::map<CellPair, Bridge>& bridges() const { return bridges_; }
  std::size_t size() const { return bridges_.size(); }
  /// Bridge between a and b, oriented so that p lies in a.
  std::optional<Bridge> find(HexCellId a, HexCellId b) const;

 private:
  std::map<CellPair, Bridge> bridges_;
};

SpannerGraph build_hop5(const UnitDiskGraph& g);
SpannerGraph build_hop3(const UnitDiskGraph& g);

/// Per cell pair record of the 2-hop construction, in global point ids.
struct PairTrace {
  HexCellId above_cell;
  HexCellId below_cell;
  bool direct = false;  // no separating line fit; all cross edges were kept
  std::vector<PointIndex> hull;
  std::vector<std::pair<int, std::vector<PointIndex>>> nets;  // (level, net)
};

/// Optional trace sink for build_hop2.
SpannerGraph build_hop2(const UnitDiskGraph& g, std::vector<PairTrace>* trace = nullptr);

struct CircleFit {
  Point2D center;
  double radius = 0.0;
};

/// Least-squares circle through the points; throws Error unless every point is
/// within 1e-9 of the fitted radius.
CircleFit fit_circle(std::span<const Point2D> pts);

/// Polygonal chain p_1..p_k over the points of a circle, listed along the
/// shortest arc that covers them.
struct GreedyChain {
  CircleFit circle;
  std::vector<PointIndex> order;  // s_1..s_n
  std::vector<std::size_t> chain;  // positions into order; block b is [chain[b], chain[b+1]]
                                  // closed: last block is chain.back()..n-1 plus position 0
  bool closed = false;            // edge p_k p_1 present
};

GreedyChain greedy_circle_chain(const UnitDiskGraph& g);

/// Plane 4-hop spanner of concyclic points. Throws Error when the points are
/// not concyclic or the UDG is disconnected.
SpannerGraph build_circle_hop4(const UnitDiskGraph& g);

SpannerGraph build_spanner(const UnitDiskGraph& g, SpannerKind kind);

}  // namespace hopspan
