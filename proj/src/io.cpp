#include "hopspan/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "hopspan/error.hpp"
#include "json.hpp"

namespace hopspan::io {

using nlohmann::json;

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
  if (!out) throw Error("write failed: " + path.string());
}

std::string points_to_json(const Instance& inst, std::string_view kind) {
  json doc;
  json pts = json::array();
  for (const Point2D& p : inst.points) pts.push_back({p.x, p.y});
  doc["points"] = std::move(pts);
  if (!inst.meta.empty() || !kind.empty()) {
    json meta = json::object();
    if (!kind.empty()) meta["kind"] = std::string(kind);
    for (const auto& [key, value] : inst.meta) meta[key] = value;
    doc["meta"] = std::move(meta);
  }
  return doc.dump(1) + "\n";
}

void write_points(const std::filesystem::path& path, const Instance& inst, std::string_view kind) {
  write_file(path, points_to_json(inst, kind));
}

PointSet parse_points(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("malformed point file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array()) {
    throw Error("point file must be an object with a \"points\" array");
  }
  std::vector<Point2D> pts;
  for (std::size_t i = 0; i < doc["points"].size(); ++i) {
    const json& p = doc["points"][i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
      throw Error("point " + std::to_string(i) + " is not an [x, y] pair of numbers");
    }
    pts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return PointSet(std::move(pts));
}

PointSet read_points(const std::filesystem::path& path) { return parse_points(read_file(path)); }

std::string edges_to_text(std::span<const Edge> edges) {
  std::string out;
  for (const Edge& e : edges) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

void write_edges(const std::filesystem::path& path, std::span<const Edge> edges) {
  write_file(path, edges_to_text(edges));
}

std::vector<Edge> parse_edges(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty()) continue;

    PointIndex ids[2];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    bool ok = true;
    for (int k = 0; k < 2 && ok; ++k) {
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
      auto [next, ec] = std::from_chars(p, end, ids[k]);
      ok = ec == std::errc{} && next != p;
      p = next;
    }
    ok = ok && p == end;
    if (!ok) throw Error("edge list line " + std::to_string(line_no) + ": expected \"i j\"");
    if (ids[0] == ids[1]) throw Error("edge list line " + std::to_string(line_no) + ": self-loop");
    edges.push_back(make_edge(ids[0], ids[1]));
  }
  return edges;
}

std::vector<Edge> read_edges(const std::filesystem::path& path) { return parse_edges(read_file(path)); }

namespace {

json edge_json(const Edge& e) { return json::array({e.u, e.v}); }

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  json doc;
  doc["stretch"] = r.connected() ? json(r.stretch) : json(nullptr);
  doc["connected"] = r.connected();
  doc["worst_edge"] = r.worst_edge ? edge_json(*r.worst_edge) : json(nullptr);
  doc["edges"] = r.edge_count;
  if (r.planarity) {
    doc["planar"] = r.planarity->plane;
    doc["crossing"] = r.planarity->crossing
                          ? json::array({edge_json(r.planarity->crossing->first),
                                         edge_json(r.planarity->crossing->second)})
                          : json(nullptr);
  } else {
    doc["planar"] = nullptr;
  }
  json checks = json::array();
  for (const BoundCheck& c : r.checks) {
    checks.push_back({{"name", c.name}, {"bound", number_or_null(c.bound)},
                      {"observed", number_or_null(c.observed)}, {"pass", c.pass}});
  }
  doc["checks"] = std::move(checks);
  doc["pass"] = r.checks_pass();
  return doc.dump(1) + "\n";
}

std::string nets_to_json(const std::vector<PairTrace>& trace) {
  json pairs = json::array();
  for (const PairTrace& t : trace) {
    json nets = json::array();
    for (const auto& [level, members] : t.nets) nets.push_back({{"level", level}, {"N", members}});
    pairs.push_back({{"above_cell", {t.above_cell.q, t.above_cell.r}},
                     {"below_cell", {t.below_cell.q, t.below_cell.r}},
                     {"direct", t.direct},
                     {"M", t.hull},
                     {"nets", std::move(nets)}});
  }
  return json{{"pairs", std::move(pairs)}}.dump(1) + "\n";
}

std::string render_svg(const PointSet& points, std::span<const Edge> edges, const SvgOptions& opt) {
  double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
  if (!points.empty()) {
    x0 = x1 = points[0].x;
    y0 = y1 = points[0].y;
    for (const Point2D& p : points) {
      x0 = std::min(x0, p.x);
      x1 = std::max(x1, p.x);
      y0 = std::min(y0, p.y);
      y1 = std::max(y1, p.y);
    }
  }
  const double pad = 0.6;
  x0 -= pad, y0 -= pad, x1 += pad, y1 += pad;
  const double s = opt.scale;
  auto sx = [&](double x) { return (x - x0) * s; };
  auto sy = [&](double y) { return (y1 - y) * s; };

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << (x1 - x0) * s << "\" height=\"" << (y1 - y0) * s
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (opt.draw_cells) {
    std::set<HexCellId> cells;
    for (const Point2D& p : points) cells.insert(cell_of(p));
    out << "<g fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    for (const HexCellId& c : cells) {
      out << "<polygon points=\"";
      for (const Point2D& v : cell_vertices(c)) out << sx(v.x) << ',' << sy(v.y) << ' ';
      out << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "<g stroke=\"#1f4e79\" stroke-width=\"1\">\n";
  for (const Edge& e : edges) {
    out << "<line x1=\"" << sx(points[e.u].x) << "\" y1=\"" << sy(points[e.u].y) << "\" x2=\"" << sx(points[e.v].x)
        << "\" y2=\"" << sy(points[e.v].y) << "\"/>\n";
  }
  out << "</g>\n<g fill=\"#c00000\">\n";
  for (const Point2D& p : points) out << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y) << "\" r=\"2.5\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace hopspan::io
