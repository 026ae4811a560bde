#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hopspan/spanner_graph.hpp"
#include "hopspan/spanners.hpp"
#include "hopspan/udg.hpp"

namespace hopspan {

/// Stretch value reported when some UDG edge has its endpoints in different
/// components of the spanner.
inline constexpr std::uint32_t kInfiniteStretch = std::numeric_limits<std::uint32_t>::max();

struct BoundCheck {
  std::string name;
  double bound = 0.0;
  double observed = 0.0;
  bool pass = false;
};

struct Crossing {
  Edge first;
  Edge second;
};

struct PlanarityResult {
  bool plane = true;
  std::optional<Crossing> crossing;  // lexicographically first crossing pair
};

struct VerificationReport {
  std::uint32_t stretch = 0;       // 0 for a UDG without edges
  std::optional<Edge> worst_edge;  // first UDG edge attaining `stretch`
  std::size_t edge_count = 0;
  std::optional<PlanarityResult> planarity;
  std::vector<BoundCheck> checks;

  bool connected() const { return stretch != kInfiniteStretch; }
  bool checks_pass() const;
};

/// Largest spanner distance between the endpoints of a UDG edge. One
/// breadth-first search per vertex, stopped once all of its higher-numbered
/// UDG neighbors are labeled.
VerificationReport hop_stretch(const SpannerGraph& s);

/// Closed-segment intersection of ab and cd with the collinearity band.
bool segments_intersect(Point2D a, Point2D b, Point2D c, Point2D d);

/// Whether two distinct straight-line edges violate planarity: disjoint edges
/// must not touch, edges sharing one endpoint must not overlap.
bool edges_conflict(std::span<const Point2D> pts, Edge e, Edge f);

PlanarityResult is_plane(std::span<const Point2D> pts, std::span<const Edge> edges);
PlanarityResult is_plane(const SpannerGraph& s);

/// Edge-count, stretch and (circle4) planarity checks for a builder's output.
/// Fills in report.planarity when the kind needs it.
std::vector<BoundCheck> audit_bounds(const SpannerGraph& s, SpannerKind kind, VerificationReport& report);

/// Edge bound for the kind's output on n points; nullopt when none applies.
std::optional<double> edge_bound(SpannerKind kind, std::size_t n);

/// ceil(log2 n) for n >= 1.
int ceil_log2(std::size_t n);

/// Minimum hop stretch over all maximal plane subgraphs of the UDG of a
/// convex-position set with at most 12 points, capped at `cap`. Throws
/// std::invalid_argument for larger or non-convex inputs.
int brute_min_plane_stretch(const PointSet& ps, int cap = 8);

/// True iff every point is a strict vertex of the convex hull.
bool in_convex_position(std::span<const Point2D> pts);

/// Most vertices within k hops of a vertex in a graph of maximum degree delta:
/// 1 + sum_{i=1..k} delta (delta-1)^(i-1). Throws std::invalid_argument for
/// k < 1 or delta < 2 and std::overflow_error when it does not fit.
std::uint64_t moore_bound(int k, int delta);

enum class CertificateShape { complete, clique_chain };
enum class CertificateCriterion { moore_ball, path_encoding };

struct ImpossibilityCertificate {
  int k = 0;
  int delta = 0;
  std::uint64_t moore = 0;
  std::size_t n = 0;
  CertificateShape shape = CertificateShape::complete;
  CertificateCriterion criterion = CertificateCriterion::moore_ball;
  std::size_t t = 0;       // clique chain: groups have 2t+1 points
  std::size_t groups = 0;  // clique chain: number of groups
  std::uint64_t encoding_threshold = 0;  // 2 delta^k
  bool valid = false;
};

/// Proves that no k-hop spanner of max degree <= delta exists, for complete
/// UDGs (ball-growth count) and clique chains (path-encoding count). Throws
/// Error if g matches neither shape.
ImpossibilityCertificate certify_no_bounded_degree_spanner(const UnitDiskGraph& g, int k, int delta);

struct TriangleFreeAudit {
  bool applicable = false;
  std::optional<std::array<PointIndex, 3>> triangle;  // witness when inapplicable
  std::size_t max_degree = 0;
  std::size_t edges = 0;
  std::vector<BoundCheck> checks;

  bool pass() const;
};

TriangleFreeAudit audit_triangle_free(const UnitDiskGraph& g);

/// First triangle in lexicographic order, if any.
std::optional<std::array<PointIndex, 3>> find_triangle(const UnitDiskGraph& g);

}  // namespace hopspan
