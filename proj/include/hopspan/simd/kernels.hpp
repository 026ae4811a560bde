#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hopspan/geometry.hpp"

namespace hopspan::simd {

/// Table of the data-parallel inner loops. Every variant must return results
/// identical to the scalar reference (no fused multiply-add anywhere).
struct Kernels {
  const char* name;
  // Number of j with (xs[j]-cx)^2 + (ys[j]-cy)^2 <= r2.
  std::size_t (*count_within)(double cx, double cy, const double* xs, const double* ys,
                              std::size_t n, double r2);
  // Writes the j satisfying the count_within predicate to out (ascending);
  // returns how many were written. out must hold n entries.
  std::size_t (*collect_within)(double cx, double cy, const double* xs, const double* ys,
                                std::size_t n, double r2, std::uint32_t* out);
  // True iff some j has squared distance strictly below r2.
  bool (*any_strictly_within)(double cx, double cy, const double* xs, const double* ys,
                              std::size_t n, double r2);
  bool (*bits_intersect)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  void (*bits_or)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
};

const Kernels& scalar_kernels();

/// AVX2 variant, or nullptr when it was not compiled in or the CPU lacks AVX2.
const Kernels* avx2_kernels();

/// Kernel table chosen once per process: the widest supported variant, unless
/// the environment variable HOPSPAN_SIMD=scalar forces the reference path.
const Kernels& active();

/// Structure-of-arrays copy of a point subset, the layout the kernels consume.
struct PointColumns {
  std::vector<double> xs;
  std::vector<double> ys;

  PointColumns() = default;
  explicit PointColumns(std::span<const Point2D> pts) {
    xs.reserve(pts.size());
    ys.reserve(pts.size());
    for (const Point2D& p : pts) push_back(p);
  }
  void push_back(Point2D p) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::size_t size() const { return xs.size(); }
  Point2D operator[](std::size_t i) const { return {xs[i], ys[i]}; }
};

inline std::size_t count_within(Point2D c, const PointColumns& pts, double r2) {
  return active().count_within(c.x, c.y, pts.xs.data(), pts.ys.data(), pts.size(), r2);
}

inline bool any_strictly_within(Point2D c, const PointColumns& pts, double r2) {
  return active().any_strictly_within(c.x, c.y, pts.xs.data(), pts.ys.data(), pts.size(), r2);
}

inline bool bits_intersect(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  assert(a.size() == b.size());
  return active().bits_intersect(a.data(), b.data(), a.size());
}

inline void bits_or(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  assert(dst.size() == src.size());
  active().bits_or(dst.data(), src.data(), dst.size());
}

}  // namespace hopspan::simd
