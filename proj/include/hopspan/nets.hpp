#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hopspan/geometry.hpp"
#include "hopspan/udg.hpp"

// Unit-disk hulls, epsilon-nets and the bipartite 2-hop construction. All
// functions here work in an axis-aligned frame: "above" points have y > 0,
// "below" points y < 0, and the ranges are unit disks centered on or below the
// x-axis. Point references are positions into the above/below arrays.
namespace hopspan::nets {

/// Two point groups on opposite sides of an oriented line, in that line's frame.
struct BipartiteScene {
  std::vector<PointIndex> above_ids;
  std::vector<PointIndex> below_ids;
  std::vector<Point2D> above;
  std::vector<Point2D> below;
  OrientedLine axis;
};

BipartiteScene make_scene(const PointSet& points, std::span<const PointIndex> above_ids,
                          std::span<const PointIndex> below_ids, const OrientedLine& axis);

/// Strict x-order used for hull and net members: x, then y, then position.
bool x_order_less(std::span<const Point2D> pts, std::size_t a, std::size_t b);

/// Points of A on the boundary of the unit-disk hull, with one witness each:
/// a unit disk centered on or below the axis that has the member on its
/// boundary and no point of A strictly inside.
struct HullBoundarySet {
  std::vector<std::size_t> members;  // x-order
  std::vector<Point2D> witnesses;    // parallel to members
};

/// True iff the unit disk at `center` has no point of `above` strictly inside.
bool is_empty_disk(Point2D center, std::span<const Point2D> above);

HullBoundarySet hull_boundary(std::span<const Point2D> above);

/// Minimal epsilon-net of A drawn from the hull boundary, for the finite range
/// family of unit disks centered at `family`.
struct EpsNet {
  double eps = 0.0;
  std::vector<std::size_t> members;  // positions into A, x-order
  std::vector<Point2D> family;
};

/// Starts from every hull member and deletes points in decreasing x-order
/// while every disk with at least eps*|A| points still contains a member.
/// Throws std::invalid_argument unless 0 < eps < 2/3.
EpsNet minimal_eps_net(std::span<const Point2D> above, const HullBoundarySet& hull, double eps,
                       std::span<const Point2D> family);

/// Disks D_b grouped by how many A-points they hold.
struct DiskBin {
  int level = 0;
  std::vector<std::size_t> disks;  // positions into B, ascending
};

/// Level of a disk holding `hits` of `total` points: the i >= 1 with
/// total/2^i <= hits < total/2^(i-1); a full disk is level 1 and an empty one
/// is 0 (unbinned).
int disk_level(std::size_t hits, std::size_t total);

/// Nonempty bins in increasing level.
std::vector<DiskBin> bin_disks(std::span<const Point2D> above, std::span<const Point2D> below);

struct Star {
  int level = 0;
  std::size_t center = 0;                 // position into A
  std::vector<std::size_t> above_leaves;  // A-points covered by the star's disks, center excluded
  std::vector<std::size_t> below_leaves;
};

/// Result of the bipartite construction. Edge endpoints use local vertex ids:
/// A-position i is vertex i and B-position j is vertex |A| + j.
struct BipartiteSpanner {
  HullBoundarySet hull;
  std::vector<DiskBin> bins;
  std::vector<EpsNet> nets;  // parallel to bins
  std::vector<Star> stars;
  std::vector<Edge> edges;
};

/// Union of stars in which every A-B pair at distance <= 1 is joined by a
/// path of at most two edges. Requires A above and B below the axis and both
/// diameters <= 1; throws std::invalid_argument naming the violated
/// condition.
BipartiteSpanner bipartite_2hop(std::span<const Point2D> above, std::span<const Point2D> below);

}  // namespace hopspan::nets
