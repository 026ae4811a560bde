#include "hopspan/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hopspan {

DuplicatePointError::DuplicatePointError(PointIndex first, PointIndex second)
    : Error("duplicate points at indices " + std::to_string(first) + " and " +
            std::to_string(second)),
      first_(first),
      second_(second) {}

PointSet::PointSet(std::vector<Point2D> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
      throw Error("point " + std::to_string(i) + " has a non-finite coordinate");
    }
  }
  std::vector<PointIndex> order(points_.size());
  std::iota(order.begin(), order.end(), PointIndex{0});
  auto key = [this](PointIndex i) { return std::pair(points_[i].x, points_[i].y); };
  std::sort(order.begin(), order.end(), [&](PointIndex a, PointIndex b) {
    return key(a) != key(b) ? key(a) < key(b) : a < b;
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (points_[order[k - 1]] == points_[order[k]]) {
      throw DuplicatePointError(order[k - 1], order[k]);
    }
  }
}

std::optional<Point2D> circle_below_axis_through(Point2D p1, Point2D p2) {
  if (p1 == p2) throw std::invalid_argument("circle_below_axis_through: coincident points");
  if (!(p1.y > 0.0) || !(p2.y > 0.0)) {
    throw std::invalid_argument("circle_below_axis_through: points must lie above the axis");
  }
  const Point2D chord = p2 - p1;
  const double half_sq = 0.25 * dot(chord, chord);
  if (half_sq > 1.0) return std::nullopt;
  const Point2D mid = 0.5 * (p1 + p2);
  const double len = std::sqrt(4.0 * half_sq);
  const double h = std::sqrt(std::max(0.0, 1.0 - half_sq));
  // Unit normal to the chord; the two candidate centers are mid +- h * n.
  const Point2D n{-chord.y / len, chord.x / len};
  const Point2D c1 = mid + h * n;
  const Point2D c2 = mid - h * n;
  const Point2D& low = c1.y <= c2.y ? c1 : c2;
  if (low.y <= 0.0) return low;
  return std::nullopt;
}

std::vector<Point2D> circles_on_axis_through(Point2D p) {
  const double ay = std::abs(p.y);
  if (ay > 1.0) return {};
  const double w = std::sqrt(1.0 - ay * ay);
  if (w == 0.0) return {Point2D{p.x, 0.0}};
  return {Point2D{p.x - w, 0.0}, Point2D{p.x + w, 0.0}};
}

Frame::Frame(const OrientedLine& line)
    : origin_(line.origin),
      x_axis_{line.normal.y, -line.normal.x},
      y_axis_(line.normal) {}

Point2D Frame::to_local(Point2D p) const {
  const Point2D d = p - origin_;
  return {dot(d, x_axis_), dot(d, y_axis_)};
}

Point2D Frame::to_world(Point2D p) const { return origin_ + p.x * x_axis_ + p.y * y_axis_; }

}  // namespace hopspan
