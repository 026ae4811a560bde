#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "hopspan/verify.hpp"

namespace hopspan {
namespace {

constexpr std::size_t kMaxPoints = 12;
constexpr std::size_t kMaxEdges = kMaxPoints * (kMaxPoints - 1) / 2;
using EdgeSet = std::bitset<kMaxEdges>;
constexpr int kUnreachable = 1 << 20;

class PlaneSearch {
 public:
  PlaneSearch(const UnitDiskGraph& g, int cap) : n_(g.size()), best_(cap) {
    edges_.assign(g.edges().begin(), g.edges().end());
    const auto pts = g.points().points();
    std::stable_sort(edges_.begin(), edges_.end(), [&](const Edge& a, const Edge& b) {
      return dist_sq(pts[a.u], pts[a.v]) < dist_sq(pts[b.u], pts[b.v]);
    });
    m_ = edges_.size();
    conflicts_.assign(m_, {});
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < m_; ++j) {
        if (i != j && edges_conflict(pts, edges_[i], edges_[j])) conflicts_[i].set(j);
      }
    }
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = i; j < m_; ++j) suffix_[i].set(j);
    }
    bool plane = true;
    for (std::size_t i = 0; i < m_; ++i) plane = plane && conflicts_[i].none();
    floor_ = plane ? 1 : 2;
  }

  int run() {
    if (m_ == 0) return 0;
    search(0, EdgeSet{});
    return best_;
  }

 private:
  // Hop stretch of the subgraph `set`, or kUnreachable when disconnected.
  int stretch(const EdgeSet& set) const {
    std::array<std::uint16_t, kMaxPoints> adj{};
    for (std::size_t i = 0; i < m_; ++i) {
      if (set.test(i)) {
        adj[edges_[i].u] |= std::uint16_t(1u << edges_[i].v);
        adj[edges_[i].v] |= std::uint16_t(1u << edges_[i].u);
      }
    }
    int worst = 0;
    for (std::size_t u = 0; u < n_; ++u) {
      // dist_to[v] via frontier expansion
      std::array<int, kMaxPoints> d{};
      d.fill(kUnreachable);
      std::uint16_t seen = std::uint16_t(1u << u), frontier = seen;
      d[u] = 0;
      for (int level = 1; frontier; ++level) {
        std::uint16_t next = 0;
        for (std::size_t x = 0; x < n_; ++x) {
          if (frontier >> x & 1u) next |= adj[x];
        }
        next &= std::uint16_t(~seen);
        for (std::size_t x = 0; x < n_; ++x) {
          if (next >> x & 1u) d[x] = level;
        }
        seen |= next;
        frontier = next;
      }
      for (std::size_t i = 0; i < m_; ++i) {
        if (edges_[i].u == u) worst = std::max(worst, d[edges_[i].v]);
      }
    }
    return worst;
  }

  void search(std::size_t k, const EdgeSet& included) {
    if (best_ <= floor_) return;
    // Optimistic completion: every undecided edge compatible with the
    // current choice. Adding edges never raises the stretch.
    EdgeSet optimistic = included;
    for (std::size_t i = k; i < m_; ++i) {
      if ((conflicts_[i] & included).none()) optimistic.set(i);
    }
    if (stretch(optimistic) >= best_) return;
    if (k == m_) {
      for (std::size_t i = 0; i < m_; ++i) {
        if (!included.test(i) && (conflicts_[i] & included).none()) return;  // not maximal
      }
      best_ = stretch(included);
      return;
    }
    if ((conflicts_[k] & included).none()) {
      EdgeSet with = included;
      with.set(k);
      search(k + 1, with);
    }
    // Excluding edge k keeps maximality only if some chosen or later edge
    // blocks it.
    if ((conflicts_[k] & (included | suffix_[k + 1])).any()) {
      search(k + 1, included);
    }
  }

  std::size_t n_;
  std::size_t m_ = 0;
  int best_;
  int floor_ = 1;
  std::vector<Edge> edges_;
  std::vector<EdgeSet> conflicts_;
  std::array<EdgeSet, kMaxEdges + 1> suffix_{};
};

}  // namespace

bool in_convex_position(std::span<const Point2D> pts) {
  const std::size_t n = pts.size();
  if (n <= 2) return true;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return pts[a].x != pts[b].x ? pts[a].x < pts[b].x : pts[a].y < pts[b].y;
  });
  // Monotone chain keeping only strict turns.
  std::vector<std::size_t> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (std::size_t i : idx) {
      while (hull.size() >= base + 2 && orient_sign(pts[hull[hull.size() - 2]], pts[hull.back()], pts[i]) <= 0) {
        hull.pop_back();
      }
      hull.push_back(i);
    }
    hull.pop_back();
    std::reverse(idx.begin(), idx.end());
  }
  return hull.size() == n;
}

int brute_min_plane_stretch(const PointSet& ps, int cap) {
  if (ps.size() > kMaxPoints) {
    throw std::invalid_argument("brute_min_plane_stretch: n = " + std::to_string(ps.size()) + " exceeds " +
                                std::to_string(kMaxPoints));
  }
  if (!in_convex_position(ps.points())) {
    throw std::invalid_argument("brute_min_plane_stretch: points are not in convex position");
  }
  const UnitDiskGraph g = udg_build(ps);
  return PlaneSearch(g, cap).run();
}

}  // namespace hopspan
