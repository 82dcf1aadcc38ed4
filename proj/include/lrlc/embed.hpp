#pragma once

// Full embedding pipeline: order-m layer-rainbow cube + target order n >= 2m
// -> order-n layer-rainbow cube with the input in the [0,m)^3 corner.
// Color i of the amalgam coloring becomes symbol i-1 of the output, so the
// corner colors kappa_1 = {1..m^2} are exactly the input's symbols.

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cube.hpp"
#include "detachment.hpp"

namespace lrlc {

struct EmbedReport {
  int input_order = 0;
  int output_order = 0;
  VerifyReport verify;
  bool corner_ok = false;
  std::vector<std::pair<std::string, std::chrono::microseconds>> timings;

  bool success() const { return verify.valid && corner_ok; }
};

/// m = 1 path: no amalgamation needed. Relabels base_cube(n) so that the
/// corner cell carries the requested symbol.
inline LayerRainbowCube embed_m1(Symbol corner_symbol, int n) {
  if (n < 2) throw InfeasibleOrder(1, n, "m = 1 embedding needs n >= 2");
  if (corner_symbol < 0 || corner_symbol >= n * n)
    throw MalformedInput("corner symbol out of range for order " + std::to_string(n));
  LayerRainbowCube cube = base_cube(n);
  if (corner_symbol != 0) {
    std::vector<Symbol> perm(n * n);
    for (int s = 0; s < n * n; ++s) perm[s] = s;
    std::swap(perm[0], perm[corner_symbol]);  // base_cube(n).cell(0,0,0) == 0
    cube = relabel(cube, perm);
  }
  return cube;
}

inline LayerRainbowCube embed_m1(const LayerRainbowCube& small, int n) {
  return embed_m1(small.cell(0, 0, 0), n);
}

inline std::pair<LayerRainbowCube, EmbedReport> embed(const LayerRainbowCube& small, int n,
                                                      std::uint64_t seed = 0) {
  using clock = std::chrono::steady_clock;
  auto micros = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::microseconds>(b - a);
  };
  EmbedReport report;
  const int m = small.order();
  report.input_order = m;
  report.output_order = n;

  auto t0 = clock::now();
  if (!verify(small).valid)
    throw MalformedInput("input of order " + std::to_string(m) + " is not layer-rainbow");
  if (n < 2 * m) {
    auto w = necessity_check(m, n);
    throw InfeasibleOrder(m, n, "embedding requires n >= 2m (got m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n) + "; " + w.text() + ")");
  }
  auto t1 = clock::now();
  report.timings.emplace_back("verify_input", micros(t0, t1));

  LayerRainbowCube out;
  if (m == 1) {
    out = embed_m1(small, n);
    auto t2 = clock::now();
    report.timings.emplace_back("construct", micros(t1, t2));
    t1 = t2;
  } else {
    auto table = build_color_table(m, n);
    auto t2 = clock::now();
    report.timings.emplace_back("coloring", micros(t1, t2));
    auto ext = realize(table, seed);
    auto t3 = clock::now();
    report.timings.emplace_back("detachment", micros(t2, t3));

    out = LayerRainbowCube(n);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          out.set_cell(x, y, z, ext.in_corner(x, y, z) ? small.cell(x, y, z)
                                                       : ext.at(x, y, z) - 1);
    t1 = clock::now();
    report.timings.emplace_back("assemble", micros(t3, t1));
  }

  report.verify = verify(out);
  report.corner_ok = contains_as_corner(out, small);
  report.timings.emplace_back("verify_output", micros(t1, clock::now()));
  if (!report.success())
    throw InternalInvariantError("embedding post-verification failed for m=" + std::to_string(m) +
                                 ", n=" + std::to_string(n));
  return {std::move(out), std::move(report)};
}

}  // namespace lrlc
