#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "hopspan/error.hpp"
#include "hopspan/simd/kernels.hpp"
#include "hopspan/verify.hpp"

namespace hopspan {
namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("moore_bound: overflow");
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("moore_bound: overflow");
  return out;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

bool have_common_neighbor(const UnitDiskGraph& g, PointIndex a, PointIndex b) {
  const auto na = g.neighbors(a), nb = g.neighbors(b);
  auto i = na.begin(), j = nb.begin();
  while (i != na.end() && j != nb.end()) {
    if (*i == *j) return true;
    *i < *j ? ++i : ++j;
  }
  return false;
}

[[noreturn]] void not_a_template(const std::string& why) {
  throw Error("graph is neither a complete UDG nor a clique chain: " + why);
}

}  // namespace

std::uint64_t moore_bound(int k, int delta) {
  if (k < 1 || delta < 2) throw std::invalid_argument("moore_bound: need k >= 1 and delta >= 2");
  std::uint64_t total = 1;
  std::uint64_t layer = static_cast<std::uint64_t>(delta);
  for (int i = 1; i <= k; ++i) {
    total = checked_add(total, layer);
    if (i < k) layer = checked_mul(layer, static_cast<std::uint64_t>(delta - 1));
  }
  return total;
}

ImpossibilityCertificate certify_no_bounded_degree_spanner(const UnitDiskGraph& g, int k, int delta) {
  ImpossibilityCertificate cert;
  cert.k = k;
  cert.delta = delta;
  cert.moore = moore_bound(k, delta);
  cert.n = g.size();
  const std::size_t n = g.size();
  std::uint64_t power = 1;
  for (int i = 0; i < k; ++i) power = checked_mul(power, static_cast<std::uint64_t>(delta));
  cert.encoding_threshold = checked_mul(2, power);

  if (n >= 1 && g.edges().size() == n * (n - 1) / 2) {
    cert.shape = CertificateShape::complete;
    cert.criterion = CertificateCriterion::moore_ball;
    cert.valid = n > cert.moore;
    return cert;
  }

  // Clique chain: connectors are the edges whose endpoints share no
  // neighbor; removing them must leave equal odd cliques (the last group may
  // be smaller) strung along a path.
  DisjointSets groups(n);
  std::vector<Edge> connectors;
  for (const Edge& e : g.edges()) {
    if (have_common_neighbor(g, e.u, e.v)) {
      groups.unite(e.u, e.v);
    } else {
      connectors.push_back(e);
    }
  }
  std::map<std::size_t, std::vector<PointIndex>> members;
  for (PointIndex i = 0; i < n; ++i) members[groups.find(i)].push_back(i);
  std::size_t group_size = 0;
  for (const auto& [root, m] : members) group_size = std::max(group_size, m.size());
  if (group_size < 3 || group_size % 2 == 0) not_a_template("group size must be odd and at least 3");
  std::size_t short_groups = 0;
  for (const auto& [root, m] : members) {
    if (m.size() != group_size) ++short_groups;
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        if (!g.has_edge(m[a], m[b])) not_a_template("a group is not a clique");
      }
    }
  }
  if (short_groups > 1) not_a_template("more than one group has irregular size");

  std::map<std::size_t, std::size_t> link_degree;
  std::set<std::pair<std::size_t, std::size_t>> links;
  for (const Edge& e : connectors) {
    std::size_t a = groups.find(e.u), b = groups.find(e.v);
    if (a == b) not_a_template("connector inside a group");
    if (a > b) std::swap(a, b);
    if (!links.emplace(a, b).second) not_a_template("two groups share more than one edge");
    ++link_degree[a];
    ++link_degree[b];
  }
  DisjointSets chain(n);
  for (const auto& [a, b] : links) chain.unite(a, b);
  std::set<std::size_t> chain_roots;
  for (const auto& [root, m] : members) chain_roots.insert(chain.find(root));
  for (const auto& [root, d] : link_degree) {
    if (d > 2) not_a_template("group linked to more than two others");
  }
  if (chain_roots.size() != 1 || links.size() + 1 != members.size()) {
    not_a_template("groups do not form a single path");
  }

  cert.shape = CertificateShape::clique_chain;
  cert.criterion = CertificateCriterion::path_encoding;
  cert.t = (group_size - 1) / 2;
  cert.groups = members.size();
  cert.valid = cert.t > cert.encoding_threshold;
  return cert;
}

std::optional<std::array<PointIndex, 3>> find_triangle(const UnitDiskGraph& g) {
  const std::size_t n = g.size();
  // The first edge with any common neighbor starts the lexicographically
  // first triangle, and all its common neighbors exceed its endpoints.
  constexpr std::size_t kBitsetLimit = 8192;
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> bits;
  if (n <= kBitsetLimit) {
    bits.assign(n * words, 0);
    for (const Edge& e : g.edges()) {
      bits[e.u * words + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
      bits[e.v * words + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
    }
  }
  for (const Edge& e : g.edges()) {
    const bool hit = bits.empty() ? have_common_neighbor(g, e.u, e.v)
                                  : simd::bits_intersect({bits.data() + e.u * words, words},
                                                         {bits.data() + e.v * words, words});
    if (!hit) continue;
    for (PointIndex w : g.neighbors(e.u)) {
      if (w > e.v && g.has_edge(e.v, w)) return std::array<PointIndex, 3>{e.u, e.v, w};
    }
  }
  return std::nullopt;
}

bool TriangleFreeAudit::pass() const {
  return applicable && std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
}

TriangleFreeAudit audit_triangle_free(const UnitDiskGraph& g) {
  TriangleFreeAudit audit;
  audit.edges = g.edges().size();
  for (PointIndex i = 0; i < g.size(); ++i) audit.max_degree = std::max(audit.max_degree, g.degree(i));
  audit.triangle = find_triangle(g);
  audit.applicable = !audit.triangle.has_value();
  if (!audit.applicable) return audit;
  const double n = static_cast<double>(g.size());
  audit.checks.push_back({"max_degree<=5", 5.0, static_cast<double>(audit.max_degree), audit.max_degree <= 5});
  audit.checks.push_back({"edges<=2.5n", 2.5 * n, static_cast<double>(audit.edges),
                          static_cast<double>(audit.edges) <= 2.5 * n});
  return audit;
}

int ceil_log2(std::size_t n) {
  int k = 0;
  while ((std::size_t{1} << k) < n) ++k;
  return k;
}

std::optional<double> edge_bound(SpannerKind kind, std::size_t n) {
  const double dn = static_cast<double>(n);
  switch (kind) {
    case SpannerKind::hop5: return 5.5 * dn;
    case SpannerKind::hop3: return 11.0 * dn;
    case SpannerKind::hop2: return 10.0 * dn * ceil_log2(std::max<std::size_t>(n, 1));
    case SpannerKind::circle4: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<BoundCheck> audit_bounds(const SpannerGraph& s, SpannerKind kind, VerificationReport& report) {
  std::vector<BoundCheck> checks;
  const std::string prefix = to_string(kind);
  if (auto bound = edge_bound(kind, s.size())) {
    const auto observed = static_cast<double>(s.edge_count());
    checks.push_back({prefix + ".edges", *bound, observed, observed <= *bound});
  }
  const int limit = stretch_bound(kind);
  checks.push_back({prefix + ".stretch", static_cast<double>(limit),
                    report.connected() ? static_cast<double>(report.stretch) : std::numeric_limits<double>::infinity(),
                    report.connected() && report.stretch <= static_cast<std::uint32_t>(limit)});
  if (kind == SpannerKind::circle4) {
    if (!report.planarity) report.planarity = is_plane(s);
    checks.push_back({prefix + ".planar", 1.0, report.planarity->plane ? 1.0 : 0.0, report.planarity->plane});
  }
  return checks;
}

}  // namespace hopspan
