#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hopspan/geometry.hpp"

namespace hopspan {

/// Seeded source of doubles: 64-bit Mersenne Twister (std::mt19937_64), each
/// draw mapped to [0,1) as (x >> 11) * 2^-53.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

 private:
  std::mt19937_64 engine_;
};

enum class GenKind {
  uniform,
  cluster,
  unit_clique,
  circle8,
  ngon_lb,
  clique_chain,
  circle_uniform,
  two_cluster,
  triangle_free,
};

const char* to_string(GenKind kind);
std::optional<GenKind> parse_gen_kind(std::string_view name);

struct GenSpec {
  GenKind kind = GenKind::uniform;
  std::size_t n = 100;
  std::uint64_t seed = 0;
  double box = 5.0;
  std::size_t t = 1;
  std::size_t groups = 2;
  double eps = 0.02;
  double radius = 1.0;
};

/// Generated points plus the parameters that define them.
struct Instance {
  PointSet points;
  std::vector<std::pair<std::string, double>> meta;
};

Instance generate(const GenSpec& spec);

Instance gen_uniform(std::size_t n, double box, std::uint64_t seed);
/// `groups` clusters of radius 1/2 with centers uniform in [0, box]^2.
Instance gen_cluster(std::size_t n, double box, std::size_t groups, std::uint64_t seed);
/// Points in a disk of unit diameter; the UDG is complete.
Instance gen_unit_clique(std::size_t n, std::uint64_t seed);
Instance gen_circle_uniform(std::size_t n, double r, std::uint64_t seed);
/// Two dense clusters at a random offset and orientation, straddling cells.
Instance gen_two_cluster(std::size_t n, std::uint64_t seed);
/// Sequential rejection sampling in [0, box]^2 keeping the UDG triangle-free.
Instance gen_triangle_free(std::size_t n, double box, std::uint64_t seed);

/// The 8 concyclic points p_1..p_8 (radius 1) on which every plane spanner
/// has hop stretch at least 3.
Instance gen_circle8();

/// Regular n-gon whose windows of m = floor((1/3 - eps) n) consecutive
/// vertices have diameter <= 1 while windows of m + 1 do not.
Instance gen_ngon_lb(std::size_t n, double eps);

/// `groups` cliques of 2t+1 points, consecutive cliques joined by exactly one
/// unit-length edge.
Instance gen_clique_chain(std::size_t t, std::size_t groups);

}  // namespace hopspan
