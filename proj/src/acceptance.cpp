#include "hopspan/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hopspan/gen.hpp"
#include "hopspan/io.hpp"
#include "hopspan/nets.hpp"
#include "hopspan/spanners.hpp"
#include "hopspan/verify.hpp"

namespace hopspan::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct SweepCase {
  std::string label;
  Instance inst;
};

std::vector<SweepCase> uniform_sweep(bool quick) {
  static constexpr std::size_t kSizes[] = {100, 1000, 5000};
  static constexpr double kBoxes[] = {2, 5, 10};
  const std::size_t count = quick ? 6 : 50;
  std::vector<SweepCase> out;
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t n = quick ? std::min<std::size_t>(kSizes[s % 3], 1000) : kSizes[s % 3];
    const double box = kBoxes[(s / 3) % 3];
    std::ostringstream label;
    label << "uniform n=" << n << " box=" << box << " seed=" << s;
    out.push_back({label.str(), gen_uniform(n, box, s)});
  }
  return out;
}

struct BuilderTally {
  bool pass = true;
  std::size_t instances = 0;
  std::uint32_t max_stretch = 0;
  double max_edge_ratio = 0.0;  // |E'| / edge bound unit (n, or n ceil(log2 n))
  double seconds = 0.0;
  std::string first_failure;
};

void run_builder(SpannerKind kind, const std::vector<SweepCase>& cases, BuilderTally& tally, std::ostream* log) {
  for (const SweepCase& c : cases) {
    const auto t0 = Clock::now();
    const UnitDiskGraph g = udg_build(c.inst.points);
    const SpannerGraph s = build_spanner(g, kind);
    VerificationReport r = hop_stretch(s);
    r.checks = audit_bounds(s, kind, r);
    tally.seconds += seconds_since(t0);
    ++tally.instances;
    if (r.connected()) tally.max_stretch = std::max(tally.max_stretch, r.stretch);
    const double n = static_cast<double>(g.size());
    const double unit = kind == SpannerKind::hop2 ? n * ceil_log2(g.size()) : n;
    if (unit > 0) tally.max_edge_ratio = std::max(tally.max_edge_ratio, static_cast<double>(s.edge_count()) / unit);
    if (log) {
      *log << "  " << to_string(kind) << ' ' << c.label << ": udg=" << g.edges().size() << " edges=" << s.edge_count()
           << " stretch=" << (r.connected() ? std::to_string(r.stretch) : "inf") << '\n';
    }
    if (!r.checks_pass() && tally.pass) {
      tally.pass = false;
      std::ostringstream msg;
      msg << c.label << " failed:";
      for (const BoundCheck& b : r.checks) {
        if (!b.pass) msg << ' ' << b.name << " observed " << b.observed << " bound " << b.bound;
      }
      tally.first_failure = msg.str();
    }
  }
}

CriterionResult builder_criterion(int id, const char* name, SpannerKind kind, const std::vector<SweepCase>& cases,
                                  double budget, std::ostream* log) {
  BuilderTally t;
  run_builder(kind, cases, t, log);
  std::ostringstream d;
  d << t.instances << " instances, max stretch " << t.max_stretch << ", max |E'|/n " << t.max_edge_ratio << ", "
    << t.seconds << " s (budget " << budget << " s)";
  if (!t.first_failure.empty()) d << "; " << t.first_failure;
  return {id, name, t.pass && t.seconds < budget, d.str(), t.seconds};
}

CriterionResult criterion_hop2(const std::vector<SweepCase>& uniform, bool quick, std::ostream* log) {
  std::vector<SweepCase> cases = uniform;
  const std::size_t adversarial = quick ? 4 : 20;
  for (std::size_t s = 0; s < adversarial; ++s) {
    cases.push_back({"two_cluster n=1000 seed=" + std::to_string(s), gen_two_cluster(1000, s)});
  }
  BuilderTally t;
  run_builder(SpannerKind::hop2, cases, t, log);
  std::ostringstream d;
  d << t.instances << " instances, max stretch " << t.max_stretch << ", max observed C = |E'|/(n ceil(log2 n)) "
    << t.max_edge_ratio << " (limit 10), " << t.seconds << " s (budget 300 s)";
  if (!t.first_failure.empty()) d << "; " << t.first_failure;
  return {3, "hop2 stretch <= 2 and |E'| <= 10 n ceil(log2 n)", t.pass && t.seconds < 300, d.str(), t.seconds};
}

// Random A above and B below the axis, each inside a disk of unit diameter.
nets::BipartiteScene random_scene(std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t na = 20 + rng.below(181);
  const std::size_t nb = 20 + rng.below(181);
  const Point2D ca{0.0, 0.5 + 0.3 * rng.uniform()};
  const Point2D cb{rng.uniform(-0.8, 0.8), -(0.5 + 0.3 * rng.uniform())};
  nets::BipartiteScene scene;
  auto sample = [&](Point2D c) {
    const double rho = 0.5 * std::sqrt(rng.uniform());
    const double phi = 2 * std::numbers::pi * rng.uniform();
    return Point2D{c.x + rho * std::cos(phi), c.y + rho * std::sin(phi)};
  };
  for (std::size_t i = 0; i < na; ++i) scene.above.push_back(sample(ca));
  for (std::size_t i = 0; i < nb; ++i) scene.below.push_back(sample(cb));
  return scene;
}

// Checks one net against the stated properties over the given disk family.
std::string net_violation(const nets::BipartiteScene& sc, const nets::HullBoundarySet& hull, const nets::EpsNet& net,
                          std::span<const Point2D> family) {
  std::ostringstream why;
  const double eps = net.eps;
  const auto limit = static_cast<std::size_t>(std::floor(2.0 / eps));
  if (net.members.size() > limit) {
    why << "|N| = " << net.members.size() << " > floor(2/eps) = " << limit;
    return why.str();
  }
  for (std::size_t v : net.members) {
    if (std::find(hull.members.begin(), hull.members.end(), v) == hull.members.end()) return "N not a subset of M";
  }
  const double na = static_cast<double>(sc.above.size());
  for (std::size_t d = 0; d < family.size(); ++d) {
    std::vector<std::size_t> hit_positions;
    for (std::size_t k = 0; k < net.members.size(); ++k) {
      if (within_unit(sc.above[net.members[k]], family[d])) hit_positions.push_back(k);
    }
    if (!hit_positions.empty() && hit_positions.back() - hit_positions.front() + 1 != hit_positions.size()) {
      why << "N cap D not consecutive for disk " << d;
      return why.str();
    }
    std::size_t in_a = 0;
    for (const Point2D& a : sc.above) in_a += within_unit(a, family[d]);
    if (static_cast<double>(in_a) >= eps * na && hit_positions.empty()) {
      why << "heavy disk " << d << " missed";
      return why.str();
    }
    if (hit_positions.size() >= 5 && static_cast<double>(in_a) < 2 * eps * na) {
      why << "|N cap D| = " << hit_positions.size() << " but |A cap D| = " << in_a << " < 2 eps |A|";
      return why.str();
    }
  }
  return {};
}

CriterionResult criterion_nets(bool quick) {
  const auto t0 = Clock::now();
  const std::size_t scenes = quick ? 20 : 100;
  std::size_t nets_checked = 0;
  std::string failure;
  for (std::size_t s = 0; s < scenes && failure.empty(); ++s) {
    const nets::BipartiteScene sc = random_scene(1000 + s);
    const nets::HullBoundarySet hull = nets::hull_boundary(sc.above);
    // Nets of the bipartite construction, each against its bin's disks.
    const nets::BipartiteSpanner h = nets::bipartite_2hop(sc.above, sc.below);
    for (const nets::EpsNet& net : h.nets) {
      ++nets_checked;
      if (auto why = net_violation(sc, h.hull, net, net.family); !why.empty()) {
        failure = "scene " + std::to_string(s) + ": " + why;
        break;
      }
    }
    // Fixed eps against the whole family of B-disks.
    for (double eps : {0.5, 0.25, 0.1, 0.05}) {
      if (!failure.empty()) break;
      const nets::EpsNet net = nets::minimal_eps_net(sc.above, hull, eps, sc.below);
      ++nets_checked;
      if (auto why = net_violation(sc, hull, net, sc.below); !why.empty()) {
        failure = "scene " + std::to_string(s) + " eps " + std::to_string(eps) + ": " + why;
      }
    }
  }
  std::ostringstream d;
  d << scenes << " scenes, " << nets_checked << " nets checked";
  if (!failure.empty()) d << "; " << failure;
  return {4, "eps-net properties", failure.empty(), d.str(), seconds_since(t0)};
}

CriterionResult criterion_circle8() {
  const auto t0 = Clock::now();
  const Instance inst = gen_circle8();
  const int brute = brute_min_plane_stretch(inst.points);
  const UnitDiskGraph g = udg_build(inst.points);
  const SpannerGraph s = build_circle_hop4(g);
  VerificationReport r = hop_stretch(s);
  const PlanarityResult plane = is_plane(s);
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "min plane stretch " << brute << ", circle4 stretch " << r.stretch << (plane.plane ? " plane" : " NOT plane")
    << ", " << secs << " s";
  return {5, "8-point instance: min plane stretch = 3, circle4 plane with stretch <= 4",
          brute == 3 && plane.plane && r.connected() && r.stretch <= 4 && secs < 30, d.str(), secs};
}

CriterionResult criterion_square() {
  const auto t0 = Clock::now();
  const PointSet square({{0, 0}, {0.5, 0}, {0.5, 0.5}, {0, 0.5}});
  const int brute = brute_min_plane_stretch(square);
  return {6, "side-1/2 square: min plane stretch = 2", brute == 2, "min plane stretch " + std::to_string(brute),
          seconds_since(t0)};
}

CriterionResult criterion_ngon() {
  const auto t0 = Clock::now();
  const Instance inst = gen_ngon_lb(100, 0.02);
  const auto pts = inst.points.points();
  const std::size_t n = pts.size();
  auto window_diameter = [&](std::size_t start, std::size_t len) {
    double best = 0;
    for (std::size_t a = 0; a < len; ++a) {
      for (std::size_t b = a + 1; b < len; ++b) best = std::max(best, dist(pts[(start + a) % n], pts[(start + b) % n]));
    }
    return best;
  };
  double max31 = 0, min32 = 1e300;
  for (std::size_t s = 0; s < n; ++s) {
    max31 = std::max(max31, window_diameter(s, 31));
    min32 = std::min(min32, window_diameter(s, 32));
  }
  std::ostringstream d;
  d.precision(12);
  d << "n=100 eps=0.02: max 31-window diameter " << max31 << ", min 32-window diameter " << min32;
  return {7, "n-gon windows: 31 consecutive <= 1, 32 consecutive > 1", n == 100 && max31 <= 1.0 && min32 > 1.0,
          d.str(), seconds_since(t0)};
}

// Diameter <= 2 of a graph on at most 64 vertices given as neighbor masks.
bool diameter_at_most_two(const std::vector<std::uint64_t>& adj) {
  const std::size_t n = adj.size();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::size_t u = 0; u < n; ++u) {
    std::uint64_t ball = adj[u] | (std::uint64_t{1} << u);
    for (std::size_t v = 0; v < n; ++v) {
      if (adj[u] >> v & 1u) ball |= adj[v];
    }
    if (ball != all) return false;
  }
  return true;
}

CriterionResult criterion_degree(bool quick) {
  const auto t0 = Clock::now();
  const Instance inst = gen_unit_clique(11, 0);
  const UnitDiskGraph g = udg_build(inst.points);
  const ImpossibilityCertificate cert = certify_no_bounded_degree_spanner(g, 2, 3);

  const std::size_t samples = quick ? 10000 : 100000;
  Rng rng(11);
  std::vector<Edge> all(g.edges().begin(), g.edges().end());
  std::size_t found = 0;
  std::vector<std::uint64_t> adj(11);
  std::vector<int> deg(11);
  for (std::size_t k = 0; k < samples; ++k) {
    for (std::size_t i = all.size(); i > 1; --i) std::swap(all[i - 1], all[rng.below(i)]);
    std::fill(adj.begin(), adj.end(), 0);
    std::fill(deg.begin(), deg.end(), 0);
    for (const Edge& e : all) {
      if (deg[e.u] < 3 && deg[e.v] < 3) {
        ++deg[e.u], ++deg[e.v];
        adj[e.u] |= std::uint64_t{1} << e.v;
        adj[e.v] |= std::uint64_t{1} << e.u;
      }
    }
    found += diameter_at_most_two(adj);
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "K_11: moore_bound(2,3) = " << cert.moore << ", certificate " << (cert.valid ? "valid" : "invalid") << "; "
    << samples << " random maximal degree-3 subgraphs, " << found << " with stretch <= 2, " << secs << " s";
  return {8, "degree impossibility on K_11 (k=2, delta=3)",
          cert.valid && cert.moore == 10 && cert.shape == CertificateShape::complete && found == 0 && secs < 120,
          d.str(), secs};
}

CriterionResult criterion_triangle_free(bool quick) {
  const auto t0 = Clock::now();
  const std::size_t count = quick ? 10 : 50;
  std::size_t max_degree = 0;
  double max_ratio = 0;
  std::string failure;
  for (std::size_t s = 0; s < count; ++s) {
    const std::size_t n = 50 + 9 * s;
    const Instance inst = gen_triangle_free(n, std::sqrt(static_cast<double>(n)), 500 + s);
    const UnitDiskGraph g = udg_build(inst.points);
    const TriangleFreeAudit audit = audit_triangle_free(g);
    max_degree = std::max(max_degree, audit.max_degree);
    max_ratio = std::max(max_ratio, static_cast<double>(audit.edges) / static_cast<double>(n));
    if (!audit.pass() && failure.empty()) {
      failure = "n=" + std::to_string(n) + (audit.applicable ? " violates a bound" : " has a triangle");
    }
  }
  std::ostringstream d;
  d << count << " instances, max degree " << max_degree << ", max |E|/n " << max_ratio;
  if (!failure.empty()) d << "; " << failure;
  return {9, "triangle-free UDGs: max degree <= 5 and |E| <= 2.5n", failure.empty(), d.str(), seconds_since(t0)};
}

CriterionResult criterion_determinism() {
  const auto t0 = Clock::now();
  std::vector<GenSpec> specs;
  for (int k = 0; k <= static_cast<int>(GenKind::triangle_free); ++k) {
    GenSpec s;
    s.kind = static_cast<GenKind>(k);
    s.n = s.kind == GenKind::ngon_lb ? 100 : 300;
    s.seed = 17;
    s.t = 3;
    s.groups = 4;
    s.radius = s.kind == GenKind::circle_uniform ? 3.0 : 1.0;
    s.box = s.kind == GenKind::triangle_free ? 30.0 : 4.0;
    specs.push_back(s);
  }
  std::size_t compared = 0;
  std::string failure;
  for (const GenSpec& spec : specs) {
    const std::string p1 = io::points_to_json(generate(spec), to_string(spec.kind));
    const std::string p2 = io::points_to_json(generate(spec), to_string(spec.kind));
    ++compared;
    if (p1 != p2) failure = std::string("gen ") + to_string(spec.kind);
    const UnitDiskGraph g = udg_build(generate(spec).points);
    for (SpannerKind kind : {SpannerKind::hop5, SpannerKind::hop3, SpannerKind::hop2, SpannerKind::circle4}) {
      const bool circular = spec.kind == GenKind::circle8 || spec.kind == GenKind::ngon_lb ||
                            spec.kind == GenKind::circle_uniform;
      if (kind == SpannerKind::circle4 && !circular) continue;
      const std::string e1 = io::edges_to_text(build_spanner(g, kind).edges());
      const std::string e2 = io::edges_to_text(build_spanner(udg_build(generate(spec).points), kind).edges());
      ++compared;
      if (e1 != e2) failure = std::string("build ") + to_string(kind) + " on " + to_string(spec.kind);
    }
  }
  std::ostringstream d;
  d << compared << " gen/build outputs compared byte for byte";
  if (!failure.empty()) d << "; differs: " << failure;
  return {10, "determinism of gen and build", failure.empty(), d.str(), seconds_since(t0)};
}

}  // namespace

std::string format(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " -- " << r.detail;
  return out.str();
}

std::vector<CriterionResult> run_all(const Options& opt, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  auto record = [&](CriterionResult r) {
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  };
  const std::vector<SweepCase> sweep = uniform_sweep(opt.quick);
  record(builder_criterion(1, "hop5 stretch <= 5 and |E'| <= 5.5n", SpannerKind::hop5, sweep, 60, opt.log));
  record(builder_criterion(2, "hop3 stretch <= 3 and |E'| <= 11n", SpannerKind::hop3, sweep, 60, opt.log));
  record(criterion_hop2(sweep, opt.quick, opt.log));
  record(criterion_nets(opt.quick));
  record(criterion_circle8());
  record(criterion_square());
  record(criterion_ngon());
  record(criterion_degree(opt.quick));
  record(criterion_triangle_free(opt.quick));
  record(criterion_determinism());
  return results;
}

}  // namespace hopspan::acceptance
