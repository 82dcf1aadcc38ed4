#pragma once

// Exhaustive backtracking search over layer-rainbow extensions at tiny
// orders. Independent of the embedding pipeline: plain lexicographic cell
// order, ascending symbol order, forward checking through per-layer unused
// symbol sets. Trustworthy rather than fast.

#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "cube.hpp"

namespace lrlc {

struct SearchLimits {
  long long max_nodes = 1'000'000'000;
  std::chrono::milliseconds time_budget{60'000};
};

enum class SearchOutcome { Found, ProvedImpossible, BudgetExhausted };

struct SearchResult {
  SearchOutcome outcome;
  std::optional<LayerRainbowCube> cube;  // set iff Found
  long long nodes = 0;
};

struct CountResult {
  bool exhausted = false;  // true when the budget ran out before finishing
  long long count = 0;
  long long nodes = 0;
};

namespace oracle_detail {

struct Searcher {
  int m, n;
  const LayerRainbowCube* small;
  SearchLimits limits;
  bool symmetry_reduction;
  bool count_all;

  std::vector<std::uint64_t> used_x, used_y, used_z;  // per layer, bit s = symbol s used
  std::uint64_t full_mask;
  std::vector<std::array<int, 3>> cells;  // lexicographic, corner excluded
  std::vector<Symbol> assignment;
  std::vector<int> symbol_count;  // global occurrences, for the symmetry flag
  std::chrono::steady_clock::time_point deadline;
  long long nodes = 0;
  long long solutions = 0;
  bool budget_hit = false;
  std::optional<LayerRainbowCube> found;

  explicit Searcher(const LayerRainbowCube& s, int n, SearchLimits lim, bool symmetry,
                    bool count)
      : m(s.order()), n(n), small(&s), limits(lim), symmetry_reduction(symmetry),
        count_all(count) {
    if (n * n > 64) throw MalformedInput("oracle supports orders with n^2 <= 64 only");
    used_x.assign(n, 0);
    used_y.assign(n, 0);
    used_z.assign(n, 0);
    full_mask = n * n == 64 ? ~0ULL : ((1ULL << (n * n)) - 1);
    symbol_count.assign(n * n, 0);
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        for (int z = 0; z < m; ++z) {
          const Symbol s = small->cell(x, y, z);
          used_x[x] |= 1ULL << s;
          used_y[y] |= 1ULL << s;
          used_z[z] |= 1ULL << s;
          ++symbol_count[s];
        }
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (!(x < m && y < m && z < m)) cells.push_back({x, y, z});
    assignment.assign(cells.size(), -1);
    deadline = std::chrono::steady_clock::now() + limits.time_budget;
  }

  bool over_budget() {
    if (nodes > limits.max_nodes) return budget_hit = true;
    if ((nodes & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline)
      return budget_hit = true;
    return false;
  }

  std::uint64_t candidates(std::size_t pos) const {
    const auto& [x, y, z] = cells[pos];
    return ~(used_x[x] | used_y[y] | used_z[z]) & full_mask;
  }

  // Any future cell with an empty candidate set kills this branch.
  bool wipeout(std::size_t from) const {
    for (std::size_t p = from; p < cells.size(); ++p)
      if (candidates(p) == 0) return true;
    return false;
  }

  void record_solution() {
    ++solutions;
    if (!found) {
      LayerRainbowCube cube(n);
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
          for (int z = 0; z < m; ++z) cube.set_cell(x, y, z, small->cell(x, y, z));
      for (std::size_t p = 0; p < cells.size(); ++p)
        cube.set_cell(cells[p][0], cells[p][1], cells[p][2], assignment[p]);
      found = cube;
    }
  }

  // Returns true when the search should stop (first solution found and not
  // counting, or budget hit).
  bool search(std::size_t pos) {
    ++nodes;
    if (over_budget()) return true;
    if (pos == cells.size()) {
      record_solution();
      return !count_all;
    }
    std::uint64_t cand = candidates(pos);
    const auto& [x, y, z] = cells[pos];
    // Symmetry flag: among never-used extension-only symbols, try only the
    // smallest (any other choice is a relabeling of it).
    bool fresh_tried = false;
    while (cand) {
      const Symbol s = std::countr_zero(cand);
      cand &= cand - 1;
      if (symmetry_reduction && s >= m * m && symbol_count[s] == 0) {
        if (fresh_tried) continue;
        fresh_tried = true;
      }
      const std::uint64_t bit = 1ULL << s;
      used_x[x] |= bit;
      used_y[y] |= bit;
      used_z[z] |= bit;
      ++symbol_count[s];
      assignment[pos] = s;
      if (!wipeout(pos + 1) && search(pos + 1)) return true;
      assignment[pos] = -1;
      --symbol_count[s];
      used_x[x] &= ~bit;
      used_y[y] &= ~bit;
      used_z[z] &= ~bit;
    }
    return false;
  }
};

}  // namespace oracle_detail

/// Searches for any order-n layer-rainbow cube containing `small` in the
/// corner. ProvedImpossible means the full tree was exhausted.
inline SearchResult brute_force_extend(const LayerRainbowCube& small, int n,
                                       SearchLimits limits = {}, bool symmetry_reduction = false) {
  if (n < small.order()) throw MalformedInput("target order below input order");
  if (!verify(small).valid) throw MalformedInput("oracle input is not layer-rainbow");
  oracle_detail::Searcher s(small, n, limits, symmetry_reduction, /*count_all=*/false);
  s.search(0);
  SearchResult r;
  r.nodes = s.nodes;
  if (s.found) {
    r.outcome = SearchOutcome::Found;
    r.cube = std::move(s.found);
  } else {
    r.outcome = s.budget_hit ? SearchOutcome::BudgetExhausted : SearchOutcome::ProvedImpossible;
  }
  return r;
}

/// Exact number of distinct valid extensions fixing the corner, raw (no
/// symmetry reduction unless requested).
inline CountResult count_extensions(const LayerRainbowCube& small, int n, SearchLimits limits = {},
                                    bool symmetry_reduction = false) {
  if (n < small.order()) throw MalformedInput("target order below input order");
  if (!verify(small).valid) throw MalformedInput("oracle input is not layer-rainbow");
  oracle_detail::Searcher s(small, n, limits, symmetry_reduction, /*count_all=*/true);
  s.search(0);
  return {s.budget_hit, s.solutions, s.nodes};
}

}  // namespace lrlc
