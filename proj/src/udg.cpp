#include "hopspan/udg.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "hopspan/simd/kernels.hpp"

namespace hopspan {

Adjacency::Adjacency(std::size_t vertex_count, std::span<const Edge> edges)
    : offsets_(vertex_count + 1, 0), targets_(2 * edges.size()) {
  for (const Edge& e : edges) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < vertex_count; ++i) offsets_[i + 1] += offsets_[i];
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so each list comes out ascending: smaller neighbors are
  // appended while scanning as v, larger ones as u.
  for (const Edge& e : edges) targets_[fill[e.v]++] = e.u;
  for (const Edge& e : edges) targets_[fill[e.u]++] = e.v;
}

bool Adjacency::adjacent(PointIndex a, PointIndex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  const auto n = neighbors(a);
  return std::binary_search(n.begin(), n.end(), b);
}

UnitDiskGraph::UnitDiskGraph(PointSet points, std::vector<Edge> sorted_edges)
    : points_(std::move(points)),
      edges_(std::move(sorted_edges)),
      adjacency_(points_.size(), edges_) {}

UnitDiskGraph udg_build(PointSet points) {
  const std::size_t n = points.size();
  if (n == 0) return UnitDiskGraph(std::move(points), {});

  // Bucket points into unit squares, stored contiguously per bucket.
  struct Key {
    long long gx, gy;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      return std::hash<long long>{}(k.gx * 0x9E3779B97F4A7C15ULL ^ k.gy);
    }
  };
  auto key_of = [](Point2D p) {
    return Key{static_cast<long long>(std::floor(p.x)), static_cast<long long>(std::floor(p.y))};
  };

  std::unordered_map<Key, std::vector<PointIndex>, KeyHash> buckets;
  for (std::size_t i = 0; i < n; ++i) buckets[key_of(points[i])].push_back(static_cast<PointIndex>(i));

  struct Bucket {
    std::vector<PointIndex> ids;
    simd::PointColumns cols;
  };
  std::unordered_map<Key, Bucket, KeyHash> columns;
  for (auto& [k, ids] : buckets) {
    Bucket b;
    for (PointIndex i : ids) b.cols.push_back(points[i]);
    b.ids = std::move(ids);
    columns.emplace(k, std::move(b));
  }

  const simd::Kernels& kern = simd::active();
  std::vector<std::vector<PointIndex>> higher(n);
  std::vector<std::uint32_t> scratch;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2D p = points[i];
    const Key k = key_of(p);
    for (long long dx = -1; dx <= 1; ++dx) {
      for (long long dy = -1; dy <= 1; ++dy) {
        const auto it = columns.find(Key{k.gx + dx, k.gy + dy});
        if (it == columns.end()) continue;
        const Bucket& b = it->second;
        scratch.resize(b.ids.size());
        const std::size_t hits = kern.collect_within(p.x, p.y, b.cols.xs.data(), b.cols.ys.data(),
                                                     b.ids.size(), kUnitDistanceSq, scratch.data());
        for (std::size_t h = 0; h < hits; ++h) {
          const PointIndex j = b.ids[scratch[h]];
          if (j > i) higher[i].push_back(j);
        }
      }
    }
  }

  std::size_t total = 0;
  for (auto& h : higher) {
    std::sort(h.begin(), h.end());
    total += h.size();
  }
  std::vector<Edge> edges;
  edges.reserve(total);
  for (std::size_t i = 0; i < n; ++i) {
    for (PointIndex j : higher[i]) edges.push_back({static_cast<PointIndex>(i), j});
    std::vector<PointIndex>().swap(higher[i]);
  }
  return UnitDiskGraph(std::move(points), std::move(edges));
}

}  // namespace hopspan
