#include <cmath>
#include <map>
#include <set>

#include "doctest.h"
#include "hopspan/gen.hpp"
#include "hopspan/io.hpp"
#include "hopspan/spanners.hpp"
#include "hopspan/verify.hpp"
#include "oracles.hpp"

using namespace hopspan;

namespace {

std::vector<Edge> as_vector(std::span<const Edge> e) { return {e.begin(), e.end()}; }

int oracle_stretch(const UnitDiskGraph& g, const SpannerGraph& s) {
  return oracle::stretch(g.size(), as_vector(g.edges()), as_vector(s.edges()));
}

const SpannerKind kHexKinds[] = {SpannerKind::hop5, SpannerKind::hop3, SpannerKind::hop2};

}  // namespace

TEST_CASE("all points in one cell give a star") {
  const Instance inst = gen_unit_clique(40, 2);
  // Shrink into cell (0,0).
  std::vector<Point2D> pts;
  for (const Point2D& p : inst.points) pts.push_back(0.8 * p);
  const UnitDiskGraph g = udg_build(PointSet(pts));
  for (SpannerKind kind : kHexKinds) {
    CAPTURE(to_string(kind));
    const SpannerGraph s = build_spanner(g, kind);
    CHECK(s.edge_count() == 39);
    CHECK(hop_stretch(s).stretch <= 2);
  }
}

TEST_CASE("a unit-spaced row is its own spanner") {
  std::vector<Point2D> pts;
  for (int i = 0; i < 6; ++i) pts.push_back({double(i), 0.1});
  const UnitDiskGraph g = udg_build(PointSet(pts));
  const CellPartition cells(g.points());
  REQUIRE(cells.cells().size() == 6);
  for (SpannerKind kind : kHexKinds) {
    const SpannerGraph s = build_spanner(g, kind);
    CHECK(as_vector(s.edges()) == as_vector(g.edges()));
    CHECK(hop_stretch(s).stretch == 1);
  }
}

TEST_CASE("two points in neighboring cells") {
  const UnitDiskGraph g = udg_build(PointSet({{0.1, 0.0}, {0.9, 0.0}}));
  REQUIRE(cell_of({0.1, 0}) != cell_of({0.9, 0}));
  for (SpannerKind kind : kHexKinds) CHECK(as_vector(build_spanner(g, kind).edges()) == std::vector<Edge>{{0, 1}});
}

TEST_CASE("bridges") {
  const Instance inst = gen_uniform(800, 6, 21);
  const UnitDiskGraph g = udg_build(inst.points);
  const CellPartition cells(g.points());
  const BridgeMap bridges(g, cells);
  std::set<CellPair> expected;
  std::map<CellPair, Edge> smallest;
  for (const Edge& e : g.edges()) {
    HexCellId a = cells.cell_of(e.u), b = cells.cell_of(e.v);
    if (a == b) continue;
    const CellPair key = a < b ? CellPair{a, b} : CellPair{b, a};
    expected.insert(key);
    smallest.try_emplace(key, e);
  }
  CHECK(bridges.size() == expected.size());
  for (const auto& [pair, b] : bridges.bridges()) {
    CHECK(cells.cell_of(b.p) == pair.first);
    CHECK(cells.cell_of(b.q) == pair.second);
    CHECK(b.is_short == (hex_distance(pair.first, pair.second) == 1));
    CHECK(make_edge(b.p, b.q) == smallest.at(pair));
    const auto flipped = bridges.find(pair.second, pair.first);
    REQUIRE(flipped);
    CHECK(flipped->p == b.q);
  }
}

TEST_CASE("hop5 structure") {
  const Instance inst = gen_uniform(1000, 8, 1);
  const UnitDiskGraph g = udg_build(inst.points);
  const SpannerGraph s = build_hop5(g);
  const VerificationReport r = hop_stretch(s);
  CHECK(r.stretch <= 5);
  CHECK(s.edge_count() <= 5500);

  const CellPartition cells(g.points());
  const BridgeMap bridges(g, cells);
  std::map<HexCellId, int> incident;
  std::map<PointIndex, std::set<HexCellId>> far_partners;
  for (const auto& [pair, b] : bridges.bridges()) {
    ++incident[pair.first];
    ++incident[pair.second];
    if (hex_distance(pair.first, pair.second) == 2) {
      far_partners[b.p].insert(pair.second);
      far_partners[b.q].insert(pair.first);
    }
  }
  for (const auto& [cell, k] : incident) CHECK(k <= 18);
  for (const auto& [p, partners] : far_partners) CHECK(partners.size() <= 5);
  for (const auto& [cell, members] : cells.cells()) {
    if (members.size() == 1) CHECK(s.degree(members[0]) <= 11);
  }
}

TEST_CASE("hop3 witness paths") {
  const Instance inst = gen_uniform(1000, 8, 1);
  const UnitDiskGraph g = udg_build(inst.points);
  const SpannerGraph s = build_hop3(g);
  CHECK(hop_stretch(s).stretch <= 3);
  CHECK(s.edge_count() <= 11000);
  const CellPartition cells(g.points());
  const BridgeMap bridges(g, cells);
  for (const Edge& e : g.edges()) {
    const HexCellId a = cells.cell_of(e.u), b = cells.cell_of(e.v);
    if (a == b) continue;
    const Bridge br = *bridges.find(a, b);
    CHECK((e.u == br.p || s.has_edge(e.u, br.p)));
    CHECK(s.has_edge(br.p, br.q));
    CHECK((e.v == br.q || s.has_edge(e.v, br.q)));
  }
}

TEST_CASE("hop2 bounds") {
  const Instance inst = gen_uniform(500, 4, 9);
  const UnitDiskGraph g = udg_build(inst.points);
  std::vector<PairTrace> trace;
  const SpannerGraph s = build_hop2(g, &trace);
  CHECK(hop_stretch(s).stretch <= 2);
  CHECK(s.edge_count() <= 10 * 500 * 9);
  CHECK_FALSE(trace.empty());
  for (const PairTrace& t : trace) {
    for (const auto& [level, net] : t.nets) {
      CHECK(level >= 1);
      for (PointIndex v : net) CHECK(std::count(t.hull.begin(), t.hull.end(), v) == 1);
    }
  }
}

TEST_CASE("hop2 with points on shared cell sides") {
  // Points on the side shared by cells (0,0) and (1,0) and on a corner.
  const double x = std::sqrt(3.0) / 4;
  std::vector<Point2D> pts{{x, 0.0}, {x, 0.1}, {x, -0.2}, {x - 0.3, 0.05}, {x + 0.3, -0.1}, {x + 0.2, 0.2},
                           cell_vertices({0, 0})[0], {x - 0.1, -0.15}};
  const UnitDiskGraph g = udg_build(PointSet(pts));
  const SpannerGraph s = build_hop2(g);
  CHECK(hop_stretch(s).stretch <= 2);
  CHECK(oracle_stretch(g, s) <= 2);
}

TEST_CASE("stretch agrees with the all-pairs oracle") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const double box = 1.5 + static_cast<double>(seed);
    const Instance inst = seed % 2 ? gen_uniform(200, box, seed) : gen_cluster(200, box, 4, seed);
    const UnitDiskGraph g = udg_build(inst.points);
    for (SpannerKind kind : kHexKinds) {
      CAPTURE(seed);
      CAPTURE(to_string(kind));
      const SpannerGraph s = build_spanner(g, kind);
      const int expected = oracle_stretch(g, s);
      CHECK(static_cast<int>(hop_stretch(s).stretch) == expected);
      CHECK(expected <= stretch_bound(kind));
    }
  }
}

TEST_CASE("builders are deterministic") {
  const Instance inst = gen_uniform(600, 3, 77);
  for (SpannerKind kind : kHexKinds) {
    const UnitDiskGraph g1 = udg_build(inst.points);
    const UnitDiskGraph g2 = udg_build(gen_uniform(600, 3, 77).points);
    CHECK(io::edges_to_text(build_spanner(g1, kind).edges()) == io::edges_to_text(build_spanner(g2, kind).edges()));
  }
}

TEST_CASE("kind names") {
  for (SpannerKind kind : {SpannerKind::hop5, SpannerKind::hop3, SpannerKind::hop2, SpannerKind::circle4}) {
    CHECK(parse_spanner_kind(to_string(kind)) == kind);
  }
  CHECK_FALSE(parse_spanner_kind("hop7"));
}
