// hopspan: generate instances, build hop spanners, verify and audit them.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hopspan/acceptance.hpp"
#include "hopspan/error.hpp"
#include "hopspan/gen.hpp"
#include "hopspan/io.hpp"
#include "hopspan/spanners.hpp"
#include "hopspan/verify.hpp"

namespace {

using namespace hopspan;

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitBoundFailure = 2;

struct Flags {
  std::string kind;
  std::size_t n = 100;
  std::uint64_t seed = 0;
  double box = 5.0;
  std::size_t t = 1;
  std::size_t groups = 2;
  double eps = 0.02;
  double radius = 1.0;
  std::string algo;
  std::string in;
  std::string out;
  std::string svg;
  std::string report;
  std::string graph;
  std::string spanner;
  std::string nets_dump;
  bool triangle_free = false;
  bool certify = false;
  int k = 2;
  int delta = 3;
  bool quick = false;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    io::write_file(path, text);
  }
}

SpannerKind require_algo(const std::string& name) {
  auto kind = parse_spanner_kind(name);
  if (!kind) throw Error("unknown --algo '" + name + "' (expected hop5, hop3, hop2 or circle4)");
  return *kind;
}

int run_gen(const Flags& f) {
  auto kind = parse_gen_kind(f.kind);
  if (!kind) throw Error("unknown --kind '" + f.kind + "'");
  GenSpec spec;
  spec.kind = *kind;
  spec.n = f.n;
  spec.seed = f.seed;
  spec.box = f.box;
  spec.t = f.t;
  spec.groups = f.groups;
  spec.eps = f.eps;
  spec.radius = f.radius;
  emit(f.out, io::points_to_json(generate(spec), to_string(*kind)));
  return kExitPass;
}

void write_svg(const Flags& f, const SpannerGraph& s, SpannerKind kind) {
  if (f.svg.empty()) return;
  io::SvgOptions opt;
  opt.draw_cells = kind != SpannerKind::circle4;
  io::write_file(f.svg, io::render_svg(s.base().points(), s.edges(), opt));
}

int run_build(const Flags& f) {
  const SpannerKind kind = require_algo(f.algo);
  const UnitDiskGraph g = udg_build(io::read_points(f.in));
  std::vector<PairTrace> trace;
  const bool want_trace = !f.nets_dump.empty();
  if (want_trace && kind != SpannerKind::hop2) throw Error("--nets-dump applies to --algo hop2 only");
  const SpannerGraph s = kind == SpannerKind::hop2 ? build_hop2(g, want_trace ? &trace : nullptr)
                                                   : build_spanner(g, kind);
  emit(f.out, io::edges_to_text(s.edges()));
  write_svg(f, s, kind);
  if (want_trace) io::write_file(f.nets_dump, io::nets_to_json(trace));
  return kExitPass;
}

int finish_report(const Flags& f, VerificationReport& r) {
  emit(f.report, io::report_to_json(r));
  return r.checks_pass() && r.connected() ? kExitPass : kExitBoundFailure;
}

int run_verify(const Flags& f) {
  const UnitDiskGraph g = udg_build(io::read_points(f.graph));
  const SpannerGraph s(g, io::read_edges(f.spanner));
  VerificationReport r = hop_stretch(s);
  r.planarity = is_plane(s);
  if (!f.algo.empty()) r.checks = audit_bounds(s, require_algo(f.algo), r);
  return finish_report(f, r);
}

int run_certify(const Flags& f, const UnitDiskGraph& g) {
  const ImpossibilityCertificate c = certify_no_bounded_degree_spanner(g, f.k, f.delta);
  std::ostringstream out;
  out << "{\n \"k\": " << c.k << ",\n \"delta\": " << c.delta << ",\n \"n\": " << c.n << ",\n \"moore\": " << c.moore
      << ",\n \"shape\": \"" << (c.shape == CertificateShape::complete ? "complete" : "clique_chain")
      << "\",\n \"criterion\": \"" << (c.criterion == CertificateCriterion::moore_ball ? "moore_ball" : "path_encoding")
      << "\",\n \"t\": " << c.t << ",\n \"groups\": " << c.groups << ",\n \"encoding_threshold\": "
      << c.encoding_threshold << ",\n \"valid\": " << (c.valid ? "true" : "false") << "\n}\n";
  emit(f.report, out.str());
  return c.valid ? kExitPass : kExitBoundFailure;
}

int run_triangle_free(const Flags& f, const UnitDiskGraph& g) {
  const TriangleFreeAudit a = audit_triangle_free(g);
  VerificationReport r;
  r.edge_count = a.edges;
  r.checks = a.checks;
  if (!a.applicable) {
    const auto& t = *a.triangle;
    std::cerr << "hopspan: triangle-free audit inapplicable: triangle " << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
    r.checks.push_back({"triangle_free", 0, 1, false});
  }
  emit(f.report, io::report_to_json(r));
  return a.pass() ? kExitPass : kExitBoundFailure;
}

int run_audit(const Flags& f) {
  const UnitDiskGraph g = udg_build(io::read_points(f.in));
  if (f.certify) return run_certify(f, g);
  if (f.triangle_free) return run_triangle_free(f, g);
  const SpannerKind kind = require_algo(f.algo);
  const SpannerGraph s = build_spanner(g, kind);
  if (!f.out.empty()) io::write_edges(f.out, s.edges());
  write_svg(f, s, kind);
  VerificationReport r = hop_stretch(s);
  r.planarity = is_plane(s);
  r.checks = audit_bounds(s, kind, r);
  return finish_report(f, r);
}

int run_demo(const Flags& f) {
  acceptance::Options opt;
  opt.quick = f.quick;
  bool all = true;
  acceptance::run_all(opt, [&](const acceptance::CriterionResult& r) {
    std::cout << acceptance::format(r) << std::endl;
    all = all && r.pass;
  });
  return all ? kExitPass : kExitBoundFailure;
}

}  // namespace

int main(int argc, char** argv) {
  Flags f;
  CLI::App app{"Hop spanners of unit disk graphs"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate a point set");
  gen->add_option("--kind", f.kind, "uniform|cluster|unit_clique|circle8|ngon_lb|clique_chain|circle_uniform|"
                                    "two_cluster|triangle_free")
      ->required();
  gen->add_option("--n", f.n, "Number of points")->check(CLI::PositiveNumber);
  gen->add_option("--seed", f.seed, "Random seed");
  gen->add_option("--box", f.box, "Side of the sampling square")->check(CLI::PositiveNumber);
  gen->add_option("--t", f.t, "Clique chain: groups have 2t+1 points")->check(CLI::PositiveNumber);
  gen->add_option("--groups", f.groups, "Clusters or clique-chain groups")->check(CLI::PositiveNumber);
  gen->add_option("--eps", f.eps, "n-gon slack");
  gen->add_option("--radius", f.radius, "Circle radius for circle_uniform")->check(CLI::PositiveNumber);
  gen->add_option("--out", f.out, "Output point file (default stdout)");

  auto* build = app.add_subcommand("build", "Build a spanner");
  build->add_option("--algo", f.algo, "hop5|hop3|hop2|circle4")->required();
  build->add_option("--in", f.in, "Input point file")->required();
  build->add_option("--out", f.out, "Output edge list (default stdout)");
  build->add_option("--svg", f.svg, "Write an SVG drawing");
  build->add_option("--nets-dump", f.nets_dump, "hop2: write hull and net membership per cell pair as JSON");

  auto* verify = app.add_subcommand("verify", "Verify a spanner against its unit disk graph");
  verify->add_option("--graph", f.graph, "Point file")->required();
  verify->add_option("--spanner", f.spanner, "Edge list")->required();
  verify->add_option("--algo", f.algo, "Also check the bounds of this construction");
  verify->add_option("--report", f.report, "Report JSON (default stdout)");

  auto* audit = app.add_subcommand("audit", "Build, verify and check bounds in one pass");
  audit->add_option("--algo", f.algo, "hop5|hop3|hop2|circle4");
  audit->add_option("--in", f.in, "Input point file")->required();
  audit->add_option("--out", f.out, "Also write the edge list");
  audit->add_option("--svg", f.svg, "Write an SVG drawing");
  audit->add_option("--report", f.report, "Report JSON (default stdout)");
  audit->add_flag("--triangle-free", f.triangle_free, "Audit degree and size of a triangle-free UDG");
  audit->add_flag("--certify", f.certify, "Certify that no bounded-degree k-hop spanner exists");
  audit->add_option("--k", f.k, "Hop bound for --certify")->check(CLI::PositiveNumber);
  audit->add_option("--delta", f.delta, "Degree bound for --certify")->check(CLI::Range(2, 1 << 20));

  auto* demo = app.add_subcommand("demo", "Run the acceptance suite");
  demo->add_flag("--quick", f.quick, "Reduced instance sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*gen) return run_gen(f);
    if (*build) return run_build(f);
    if (*verify) return run_verify(f);
    if (*audit) {
      if (f.algo.empty() && !f.certify && !f.triangle_free) throw Error("audit needs --algo, --certify or --triangle-free");
      return run_audit(f);
    }
    if (*demo) return run_demo(f);
  } catch (const std::exception& e) {
    std::cerr << "hopspan: error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
