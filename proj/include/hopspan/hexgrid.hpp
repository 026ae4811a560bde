#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

#include "hopspan/geometry.hpp"

namespace hopspan {

/// Axial coordinate of a pointy-top hexagonal tile with circumradius 1/2
/// (unit diameter). Cell (0,0) is centered at the origin; (q+1, r) is the
/// east neighbor and (q, r+1) the neighbor at 60 degrees.
struct HexCellId {
  int q = 0;
  int r = 0;

  friend constexpr auto operator<=>(const HexCellId&, const HexCellId&) = default;
  friend constexpr HexCellId operator+(HexCellId a, HexCellId b) { return {a.q + b.q, a.r + b.r}; }
  friend constexpr HexCellId operator-(HexCellId a, HexCellId b) { return {a.q - b.q, a.r - b.r}; }
};

inline constexpr double kHexCircumradius = 0.5;
inline constexpr double kHexApothem = std::numbers::sqrt3 / 4;

/// Neighbor offsets in counterclockwise order starting from east.
inline constexpr std::array<HexCellId, 6> kHexDirections{{
    {1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

Point2D cell_center(HexCellId c);

/// Corners in counterclockwise order starting at angle 30 degrees.
std::array<Point2D, 6> cell_vertices(HexCellId c);

/// Lattice (ring) distance between two cells.
int hex_distance(HexCellId a, HexCellId b);

/// Closed-hexagon membership.
bool cell_contains(HexCellId c, Point2D p);

/// Euclidean distance from p to the closed hexagon (0 inside).
double cell_distance(HexCellId c, Point2D p);

/// The cell whose closed hexagon contains p. A point on a shared boundary goes
/// to the candidate with the lexicographically smallest (q, r).
HexCellId cell_of(Point2D p);

/// Cells of the first (6) or second (12) layer around c, counterclockwise.
/// Layer 1 starts at the east neighbor; layer 2 starts at the unique
/// second-layer cell touching only the first entry of layer 1.
std::vector<HexCellId> layer_cells(HexCellId c, int layer);

/// Perpendicular bisector of the centers of c1 and c2, oriented so that c1 is
/// on the positive side. Throws std::invalid_argument when c1 == c2.
OrientedLine separating_line(HexCellId c1, HexCellId c2);

struct HexCellIdHash {
  std::size_t operator()(const HexCellId& c) const noexcept {
    return std::hash<long long>{}((static_cast<long long>(c.q) << 32) ^
                                  static_cast<unsigned int>(c.r));
  }
};

/// Bucketing of a point set into hexagonal cells.
class CellPartition {
 public:
  CellPartition() = default;
  explicit CellPartition(const PointSet& points);

  /// Nonempty cells in lexicographic order, each with its point indices in
  /// increasing order.
  const std::map<HexCellId, std::vector<PointIndex>>& cells() const { return cells_; }
  HexCellId cell_of(PointIndex i) const { return cell_of_[i]; }
  /// Points of a cell; empty span for an empty cell.
  std::span<const PointIndex> points_in(HexCellId c) const;
  std::size_t point_count() const { return cell_of_.size(); }

 private:
  std::map<HexCellId, std::vector<PointIndex>> cells_;
  std::vector<HexCellId> cell_of_;
};

}  // namespace hopspan
