#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hopspan/gen.hpp"
#include "hopspan/hexgrid.hpp"
#include "hopspan/spanners.hpp"
#include "hopspan/udg.hpp"
#include "hopspan/verify.hpp"

namespace hopspan::io {

/// Point file: {"points": [[x, y], ...], "meta": {...}}. Meta is optional
/// on input and written only when nonempty.
std::string points_to_json(const Instance& inst, std::string_view kind = {});
void write_points(const std::filesystem::path& path, const Instance& inst, std::string_view kind = {});
PointSet parse_points(std::string_view text);
PointSet read_points(const std::filesystem::path& path);

/// Edge list: one "i j" per line with i < j, sorted.
std::string edges_to_text(std::span<const Edge> edges);
void write_edges(const std::filesystem::path& path, std::span<const Edge> edges);
/// Accepts pairs in either order; rejects malformed lines and self-loops.
std::vector<Edge> parse_edges(std::string_view text);
std::vector<Edge> read_edges(const std::filesystem::path& path);

std::string report_to_json(const VerificationReport& report);

/// Per cell pair hull and net membership from build_hop2.
std::string nets_to_json(const std::vector<PairTrace>& trace);

struct SvgOptions {
  bool draw_cells = false;
  double scale = 80.0;  // pixels per unit
};

std::string render_svg(const PointSet& points, std::span<const Edge> edges, const SvgOptions& opt);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace hopspan::io
