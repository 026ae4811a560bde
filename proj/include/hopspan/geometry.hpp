#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hopspan/error.hpp"

namespace hopspan {

using PointIndex = std::uint32_t;

// All lengths are in units of the disk radius. Two points are adjacent in the
// unit disk graph iff their squared distance is at most kUnitDistanceSq; a
// point lies strictly inside a unit disk iff its squared distance to the
// center is below kStrictInsideSq.
inline constexpr double kUnitDistanceSq = 1.0 + 1e-12;
inline constexpr double kStrictInsideSq = 1.0 - 1e-12;
inline constexpr double kOrientationEps = 1e-12;

struct Point2D {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point2D&, const Point2D&) = default;
  friend constexpr Point2D operator+(Point2D a, Point2D b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Point2D operator-(Point2D a, Point2D b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2D operator*(double s, Point2D a) { return {s * a.x, s * a.y}; }
};

constexpr double dot(Point2D a, Point2D b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2D a, Point2D b) { return a.x * b.y - a.y * b.x; }

constexpr double dist_sq(Point2D a, Point2D b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double dist(Point2D a, Point2D b) { return std::sqrt(dist_sq(a, b)); }

/// True iff |ab| <= 1 under the shared edge tolerance.
constexpr bool within_unit(Point2D a, Point2D b) { return dist_sq(a, b) <= kUnitDistanceSq; }

/// Twice the signed area of abc; positive for a counterclockwise turn.
constexpr double orient(Point2D a, Point2D b, Point2D c) { return cross(b - a, c - a); }

/// Sign of orient() with values inside the collinearity band mapped to 0.
constexpr int orient_sign(Point2D a, Point2D b, Point2D c) {
  const double o = orient(a, b, c);
  if (o > kOrientationEps) return 1;
  if (o < -kOrientationEps) return -1;
  return 0;
}

class DuplicatePointError : public Error {
 public:
  DuplicatePointError(PointIndex first, PointIndex second);
  PointIndex first() const { return first_; }
  PointIndex second() const { return second_; }

 private:
  PointIndex first_;
  PointIndex second_;
};

/// Ordered, validated point set. The id of a point is its index. Construction
/// rejects non-finite coordinates and exact duplicates.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point2D> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point2D& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point2D> points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

 private:
  std::vector<Point2D> points_;
};

/// Center of the unique unit circle through p1 and p2 whose center lies on or
/// below the x-axis, if any. Both points must be strictly above the axis and
/// distinct.
std::optional<Point2D> circle_below_axis_through(Point2D p1, Point2D p2);

/// Centers of the unit circles through p that are centered on the x-axis
/// (none when p.y > 1, one when p.y == 1).
std::vector<Point2D> circles_on_axis_through(Point2D p);

/// Line through `origin` with unit normal `normal`; the side the normal points
/// to is "above".
struct OrientedLine {
  Point2D origin;
  Point2D normal;

  double signed_distance(Point2D p) const { return dot(p - origin, normal); }
};

/// Rigid frame whose x-axis is an oriented line and whose y-axis is the line's
/// normal.
class Frame {
 public:
  explicit Frame(const OrientedLine& line);

  Point2D to_local(Point2D p) const;
  Point2D to_world(Point2D p) const;

 private:
  Point2D origin_;
  Point2D x_axis_;
  Point2D y_axis_;
};

}  // namespace hopspan
