#include "hopspan/hexgrid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace hopspan {
namespace {

constexpr double kSqrt3 = std::numbers::sqrt3;

// Outward edge normals of a pointy-top hexagon (0, 60, 120 degrees; the other
// three are their negations).
constexpr std::array<Point2D, 3> kEdgeNormals{{{1.0, 0.0}, {0.5, kSqrt3 / 2}, {-0.5, kSqrt3 / 2}}};

// Largest slab excess of p over the hexagon; <= 0 iff p is in the closed cell.
double slab_excess(HexCellId c, Point2D p) {
  const Point2D d = p - cell_center(c);
  double worst = -std::numeric_limits<double>::infinity();
  for (const Point2D& n : kEdgeNormals) worst = std::max(worst, std::abs(dot(d, n)) - kHexApothem);
  return worst;
}

HexCellId axial_round(double fq, double fr) {
  const double fs = -fq - fr;
  double q = std::round(fq);
  double r = std::round(fr);
  const double s = std::round(fs);
  const double dq = std::abs(q - fq);
  const double dr = std::abs(r - fr);
  const double ds = std::abs(s - fs);
  if (dq > dr && dq > ds) {
    q = -r - s;
  } else if (dr > ds) {
    r = -q - s;
  }
  return {static_cast<int>(q), static_cast<int>(r)};
}

double segment_distance(Point2D p, Point2D a, Point2D b) {
  const Point2D ab = b - a;
  const double t = std::clamp(dot(p - a, ab) / dot(ab, ab), 0.0, 1.0);
  return dist(p, a + t * ab);
}

}  // namespace

Point2D cell_center(HexCellId c) {
  return {kSqrt3 / 2 * (c.q + 0.5 * c.r), 0.75 * c.r};
}

std::array<Point2D, 6> cell_vertices(HexCellId c) {
  const Point2D o = cell_center(c);
  std::array<Point2D, 6> v;
  for (int k = 0; k < 6; ++k) {
    const double a = std::numbers::pi / 6 + k * std::numbers::pi / 3;
    v[k] = o + kHexCircumradius * Point2D{std::cos(a), std::sin(a)};
  }
  return v;
}

int hex_distance(HexCellId a, HexCellId b) {
  const HexCellId d = a - b;
  return (std::abs(d.q) + std::abs(d.r) + std::abs(d.q + d.r)) / 2;
}

bool cell_contains(HexCellId c, Point2D p) { return slab_excess(c, p) <= 0.0; }

double cell_distance(HexCellId c, Point2D p) {
  if (cell_contains(c, p)) return 0.0;
  const auto v = cell_vertices(c);
  double best = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 6; ++k) best = std::min(best, segment_distance(p, v[k], v[(k + 1) % 6]));
  return best;
}

HexCellId cell_of(Point2D p) {
  const double fr = p.y / 0.75;
  const double fq = p.x / (kSqrt3 / 2) - 0.5 * fr;
  const HexCellId guess = axial_round(fq, fr);

  std::array<HexCellId, 7> candidates;
  candidates[0] = guess;
  for (int k = 0; k < 6; ++k) candidates[k + 1] = guess + kHexDirections[k];
  std::sort(candidates.begin(), candidates.end());

  HexCellId best = guess;
  double best_excess = std::numeric_limits<double>::infinity();
  for (const HexCellId& c : candidates) {
    const double e = slab_excess(c, p);
    if (e <= 0.0) return c;  // lexicographically smallest containing cell
    if (e < best_excess) {
      best_excess = e;
      best = c;
    }
  }
  // Rounding left p outside every candidate by a few ulps.
  return best;
}

std::vector<HexCellId> layer_cells(HexCellId c, int layer) {
  if (layer != 1 && layer != 2) throw std::invalid_argument("layer_cells: layer must be 1 or 2");
  std::vector<HexCellId> out;
  if (layer == 1) {
    for (const HexCellId& d : kHexDirections) out.push_back(c + d);
    return out;
  }
  // Corner 2*d_k followed by the edge cell d_k + d_{k+1}.
  for (int k = 0; k < 6; ++k) {
    const HexCellId d = kHexDirections[k];
    const HexCellId e = kHexDirections[(k + 1) % 6];
    out.push_back(c + HexCellId{2 * d.q, 2 * d.r});
    out.push_back(c + d + e);
  }
  return out;
}

OrientedLine separating_line(HexCellId c1, HexCellId c2) {
  if (c1 == c2) throw std::invalid_argument("separating_line: cells must differ");
  const Point2D a = cell_center(c1);
  const Point2D b = cell_center(c2);
  const Point2D d = a - b;
  const double len = std::sqrt(dot(d, d));
  return {0.5 * (a + b), (1.0 / len) * d};
}

CellPartition::CellPartition(const PointSet& points) : cell_of_(points.size()) {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const HexCellId c = hopspan::cell_of(points[i]);
    cell_of_[i] = c;
    cells_[c].push_back(static_cast<PointIndex>(i));
  }
}

std::span<const PointIndex> CellPartition::points_in(HexCellId c) const {
  const auto it = cells_.find(c);
  if (it == cells_.end()) return {};
  return it->second;
}

}  // namespace hopspan
