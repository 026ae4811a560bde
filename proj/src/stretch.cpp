#include <algorithm>

#include "hopspan/verify.hpp"

namespace hopspan {

bool VerificationReport::checks_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

VerificationReport hop_stretch(const SpannerGraph& s) {
  const UnitDiskGraph& g = s.base();
  const std::size_t n = g.size();
  VerificationReport report;
  report.edge_count = s.edge_count();

  constexpr std::uint32_t kUnseen = kInfiniteStretch;
  std::vector<std::uint32_t> dist(n, kUnseen);
  std::vector<PointIndex> queue;
  queue.reserve(n);
  // target_of[v] == u + 1 marks v as a pending UDG neighbor of source u.
  std::vector<PointIndex> target_of(n, 0);

  for (PointIndex u = 0; u < n; ++u) {
    const auto nbrs = g.neighbors(u);
    const auto first_up = std::upper_bound(nbrs.begin(), nbrs.end(), u);
    std::size_t pending = static_cast<std::size_t>(nbrs.end() - first_up);
    if (pending == 0) continue;
    for (auto it = first_up; it != nbrs.end(); ++it) target_of[*it] = u + 1;

    queue.clear();
    queue.push_back(u);
    dist[u] = 0;
    for (std::size_t head = 0; head < queue.size() && pending > 0; ++head) {
      const PointIndex x = queue[head];
      for (PointIndex y : s.neighbors(x)) {
        if (dist[y] != kUnseen) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
        if (target_of[y] == u + 1 && --pending == 0) break;
      }
    }

    for (auto it = first_up; it != nbrs.end(); ++it) {
      const std::uint32_t d = dist[*it];
      if (d == kUnseen) {
        report.stretch = kInfiniteStretch;
        report.worst_edge = Edge{u, *it};
        return report;
      }
      if (d > report.stretch) {
        report.stretch = d;
        report.worst_edge = Edge{u, *it};
      }
    }
    for (PointIndex x : queue) dist[x] = kUnseen;
  }
  return report;
}

}  // namespace hopspan
