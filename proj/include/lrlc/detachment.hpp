#pragma once

// Detachment: turn a completed ColorMultTable into actual cells. Each old
// axis vertex splits into the m old indices and each new vertex into the n-m
// new indices; the result assigns one color to every cell of
// [0,n)^3 \ [0,m)^3 such that each color class realizes its per-kind
// multiplicities with no two cells sharing a coordinate.
//
// Strategy: split one subvertex at a time, z-indices first, then y, then x.
// Every edge starts with all three coordinates amalgamated (old-range or
// new-range, per its kind) and acquires concrete indices as the splits
// proceed. Splitting one index off an axis amalgam of remaining weight g' is
// a capacitated bipartite assignment: each color holding amalgamated edges on
// that axis sends exactly one of them (its remaining degree is always g', so
// the per-split share is 1), and each endpoint type - the pair formed by the
// other two coordinate slots - receives exactly its multiplicity divided by
// g'. A fractional solution (mult/g' per arc) always exists and the
// constraint matrix is an integral network, so the augmenting-path assignment
// never fails. The quotas keep every final cell multiplicity at exactly one
// and every per-color subvertex degree at one, which is the whole invariant
// list of ColoredExtension.
//
// Seeds only steer tie-breaking among the many valid realizations.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coloring.hpp"

namespace lrlc {

/// Color of every cell of [0,n)^3: 0 on the [0,m)^3 corner, 1..n^2 elsewhere.
struct ColoredExtension {
  int m = 0;
  int n = 0;
  std::vector<int> color;

  int at(int x, int y, int z) const {
    return color[(static_cast<std::size_t>(x) * n + y) * n + z];
  }
  int& at(int x, int y, int z) { return color[(static_cast<std::size_t>(x) * n + y) * n + z]; }
  bool in_corner(int x, int y, int z) const { return x < m && y < m && z < m; }
};

/// Classification of an extension cell by which coordinates are new (>= m).
inline EdgeKind cell_kind(int x, int y, int z, int m) {
  const bool a = x >= m, b = y >= m, g = z >= m;
  if (a && !b && !g) return EdgeKind::AYZ;
  if (!a && b && !g) return EdgeKind::BXZ;
  if (!a && !b && g) return EdgeKind::GXY;
  if (a && b && !g) return EdgeKind::ABZ;
  if (a && !b && g) return EdgeKind::AGY;
  if (!a && b && g) return EdgeKind::BGX;
  if (a && b && g) return EdgeKind::ABG;
  throw InternalInvariantError("cell_kind called on a corner cell");
}

class DetachmentError : public std::runtime_error {
 public:
  DetachmentError(const std::string& what, std::string partial)
      : std::runtime_error(what), partial_state(std::move(partial)) {}
  std::string partial_state;
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t v) {
  // splitmix64 finalizer
  v += 0x9e3779b97f4a7c15ULL;
  v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
  v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
  return v ^ (v >> 31);
}

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() { return state = mix64(state); }
  std::uint64_t bounded(std::uint64_t k) { return next() % k; }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[bounded(i)]);
  }
};

// Slot values during splitting: kOld / kNew mean still amalgamated; >= 0 is a
// concrete coordinate.
inline constexpr int kOld = -1;
inline constexpr int kNew = -2;

struct SplitEdge {
  std::array<int, 3> slot;  // x, y, z
};

inline std::array<int, 3> initial_slots(EdgeKind k) {
  switch (k) {
    case EdgeKind::AYZ: return {kNew, kOld, kOld};
    case EdgeKind::BXZ: return {kOld, kNew, kOld};
    case EdgeKind::GXY: return {kOld, kOld, kNew};
    case EdgeKind::ABZ: return {kNew, kNew, kOld};
    case EdgeKind::AGY: return {kNew, kOld, kNew};
    case EdgeKind::BGX: return {kOld, kNew, kNew};
    case EdgeKind::ABG: return {kNew, kNew, kNew};
  }
  throw InternalInvariantError("unknown edge kind");
}

// Assigns every active color exactly one endpoint type, hitting each type's
// quota exactly, via augmenting paths over the capacitated type side. The
// quotas come from an always-feasible transportation problem, so failure
// means a bug upstream.
inline std::vector<int> assign_one_each(const std::vector<std::vector<int>>& types_per_color,
                                        std::vector<int> quota, Rng& rng) {
  const int nc = static_cast<int>(types_per_color.size());
  const int nt = static_cast<int>(quota.size());
  std::vector<int> assign(nc, -1);
  std::vector<std::vector<int>> holders(nt);
  std::vector<char> visited(nt);

  auto place = [&](auto&& self, int c) -> bool {
    std::vector<int> order = types_per_color[c];
    rng.shuffle(order);
    for (int t : order) {
      if (visited[t]) continue;
      visited[t] = 1;
      if (quota[t] > 0) {
        --quota[t];
        assign[c] = t;
        holders[t].push_back(c);
        return true;
      }
      for (std::size_t h = 0; h < holders[t].size(); ++h) {
        if (self(self, holders[t][h])) {
          holders[t][h] = c;
          assign[c] = t;
          return true;
        }
      }
    }
    return false;
  };

  std::vector<int> color_order(nc);
  std::iota(color_order.begin(), color_order.end(), 0);
  rng.shuffle(color_order);
  for (int c : color_order) {
    if (types_per_color[c].empty()) continue;
    std::fill(visited.begin(), visited.end(), 0);
    if (!place(place, c))
      throw InternalInvariantError("detachment split assignment infeasible");
  }
  return assign;
}

// One split step: give the concrete index `target` to exactly one amalgamated
// edge of every active color on `axis`, respecting per-type quotas.
inline void split_step(std::vector<std::vector<SplitEdge>>& edges, int axis, int amalgam,
                       int target, int remaining_weight, Rng& rng) {
  const int nc = static_cast<int>(edges.size());
  const int o1 = axis == 0 ? 1 : 0;
  const int o2 = axis == 2 ? 1 : 2;

  std::map<std::pair<int, int>, int> type_id;
  std::vector<long long> type_count;
  std::vector<std::vector<int>> types_per_color(nc);
  std::vector<std::vector<std::vector<int>>> edge_ids(nc);  // [color][type] -> edge indices

  for (int c = 0; c < nc; ++c) {
    int active = 0;
    for (std::size_t e = 0; e < edges[c].size(); ++e) {
      const auto& s = edges[c][e].slot;
      if (s[axis] != amalgam) continue;
      ++active;
      auto key = std::make_pair(s[o1], s[o2]);
      auto [it, inserted] = type_id.try_emplace(key, static_cast<int>(type_count.size()));
      if (inserted) type_count.push_back(0);
      const int t = it->second;
      ++type_count[t];
      if (edge_ids[c].size() <= static_cast<std::size_t>(t)) edge_ids[c].resize(type_count.size());
      if (edge_ids[c][t].empty()) types_per_color[c].push_back(t);
      edge_ids[c][t].push_back(static_cast<int>(e));
    }
    if (active != 0 && active != remaining_weight)
      throw InternalInvariantError("split degree invariant broken: color has " +
                                   std::to_string(active) + " amalgamated edges, weight " +
                                   std::to_string(remaining_weight));
  }

  std::vector<int> quota(type_count.size());
  for (std::size_t t = 0; t < type_count.size(); ++t) {
    if (type_count[t] % remaining_weight != 0)
      throw InternalInvariantError("split multiplicity not divisible by remaining weight");
    quota[t] = static_cast<int>(type_count[t] / remaining_weight);
  }

  auto assign = assign_one_each(types_per_color, quota, rng);
  for (int c = 0; c < nc; ++c) {
    if (assign[c] < 0) continue;
    auto& candidates = edge_ids[c][assign[c]];
    // all candidate edges are identical; take one, seed-keyed
    const int e = candidates[rng.bounded(candidates.size())];
    edges[c][e].slot[axis] = target;
  }
}

}  // namespace detail

inline ColoredExtension realize(const ColorMultTable& table, std::uint64_t seed) {
  {
    auto check = validate_table(table);
    if (!check.valid)
      throw InternalInvariantError("realize called with an invalid table: " + check.violations[0]);
  }
  const int m = table.profile.m, n = table.profile.n;
  const int colors = n * n;

  std::vector<std::vector<detail::SplitEdge>> edges(colors);
  for (int i = 1; i <= colors; ++i)
    for (EdgeKind k : kAllEdgeKinds)
      for (int rep = 0; rep < table.get(i, k); ++rep)
        edges[i - 1].push_back({detail::initial_slots(k)});

  detail::Rng rng(detail::mix64(seed ^ 0x6c72'6c63ULL));
  for (int axis : {2, 1, 0}) {  // z, then y, then x
    for (int d = 0; d < m; ++d) detail::split_step(edges, axis, detail::kOld, d, m - d, rng);
    for (int e = 0; e < n - m; ++e)
      detail::split_step(edges, axis, detail::kNew, m + e, n - m - e, rng);
  }

  ColoredExtension ext{m, n, std::vector<int>(static_cast<std::size_t>(n) * n * n, 0)};
  for (int c = 0; c < colors; ++c)
    for (const auto& edge : edges[c]) {
      const auto& s = edge.slot;
      if (s[0] < 0 || s[1] < 0 || s[2] < 0)
        throw InternalInvariantError("edge left amalgamated after all splits");
      if (ext.in_corner(s[0], s[1], s[2]))
        throw InternalInvariantError("detachment produced a corner cell");
      if (ext.at(s[0], s[1], s[2]) != 0)
        throw DetachmentError("detachment produced a doubly used cell",
                              "cell (" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
                                  std::to_string(s[2]) + ") colors " +
                                  std::to_string(ext.at(s[0], s[1], s[2])) + " and " +
                                  std::to_string(c + 1));
      ext.at(s[0], s[1], s[2]) = c + 1;
    }
  return ext;
}

// Exhaustive per-layer backtracking search over realizations, independent of
// the splitting construction above. Only tractable at small orders; serves as
// a cross-checking oracle.
namespace detail {

struct ExhaustiveState {
  int m, n;
  std::vector<std::array<int, kEdgeKindCount>> quota;
  std::vector<std::vector<char>> used_x, used_y;
};

inline std::vector<int> active_colors(int m, int n, int d) {
  std::vector<int> out;
  const int k1 = m * m, total = n * n;
  if (d >= m)
    for (int i = 1; i <= k1; ++i) out.push_back(i);
  for (int i = k1 + 1; i <= total; ++i) out.push_back(i);
  return out;
}

inline bool exhaustive_layer(ExhaustiveState& st, ColoredExtension& ext, int d);

inline bool exhaustive_fill(ExhaustiveState& st, ColoredExtension& ext, int d,
                            const std::vector<int>& colors, std::size_t pos,
                            std::vector<char>& cell_taken) {
  const int m = st.m, n = st.n;
  if (pos == colors.size()) return exhaustive_layer(st, ext, d + 1);
  const int color = colors[pos];
  auto& q = st.quota[color - 1];
  auto& ux = st.used_x[color - 1];
  auto& uy = st.used_y[color - 1];
  for (int x = 0; x < n; ++x) {
    if (ux[x]) continue;
    for (int y = 0; y < n; ++y) {
      if (uy[y]) continue;
      if (x < m && y < m && d < m) continue;  // corner
      if (cell_taken[x * n + y]) continue;
      const int k = static_cast<int>(cell_kind(x, y, d, m));
      if (q[k] == 0) continue;
      cell_taken[x * n + y] = 1;
      ux[x] = uy[y] = 1;
      --q[k];
      ext.at(x, y, d) = color;
      if (exhaustive_fill(st, ext, d, colors, pos + 1, cell_taken)) return true;
      ext.at(x, y, d) = 0;
      ++q[k];
      ux[x] = uy[y] = 0;
      cell_taken[x * n + y] = 0;
    }
  }
  return false;
}

inline bool exhaustive_layer(ExhaustiveState& st, ColoredExtension& ext, int d) {
  if (d == st.n) return true;
  auto colors = active_colors(st.m, st.n, d);
  std::vector<char> cell_taken(st.n * st.n, 0);
  return exhaustive_fill(st, ext, d, colors, 0, cell_taken);
}

}  // namespace detail

inline ColoredExtension realize_exhaustive(const ColorMultTable& table) {
  const int m = table.profile.m, n = table.profile.n;
  ColoredExtension ext{m, n, std::vector<int>(static_cast<std::size_t>(n) * n * n, 0)};
  detail::ExhaustiveState st;
  st.m = m;
  st.n = n;
  st.quota = table.mult;
  st.used_x.assign(n * n, std::vector<char>(n, 0));
  st.used_y.assign(n * n, std::vector<char>(n, 0));
  for (int i = 1; i <= m * m; ++i) {
    // kappa_1 classes live entirely in the new range
    for (int v = 0; v < m; ++v) {
      st.used_x[i - 1][v] = 1;
      st.used_y[i - 1][v] = 1;
    }
  }
  if (!detail::exhaustive_layer(st, ext, 0))
    throw DetachmentError("exhaustive detachment search found no realization", "");
  return ext;
}

/// Checks every ColoredExtension invariant against the table: exact cell
/// coverage, per-color coordinate-disjointness, class sizes and axis coverage
/// (new indices only for kappa_1, all indices for kappa_2), and the per-color
/// edge-kind census.
inline TableReport verify_realization(const ColoredExtension& ext, const ColorMultTable& table) {
  TableReport report;
  const int m = table.profile.m, n = table.profile.n;
  if (ext.m != m || ext.n != n) {
    report.fail("extension dimensions do not match the table");
    return report;
  }
  const int colors = n * n;
  std::vector<std::array<int, kEdgeKindCount>> census(colors);
  for (auto& c : census) c.fill(0);
  std::vector<std::vector<int>> deg_x(colors, std::vector<int>(n, 0)), deg_y = deg_x, deg_z = deg_x;
  std::vector<int> size(colors, 0);

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int c = ext.at(x, y, z);
        if (ext.in_corner(x, y, z)) {
          if (c != 0)
            report.fail("corner cell (" + std::to_string(x) + "," + std::to_string(y) + "," +
                        std::to_string(z) + ") carries extension color " + std::to_string(c));
          continue;
        }
        if (c < 1 || c > colors) {
          report.fail("cell (" + std::to_string(x) + "," + std::to_string(y) + "," +
                      std::to_string(z) + ") has no valid color");
          continue;
        }
        ++census[c - 1][static_cast<int>(cell_kind(x, y, z, m))];
        ++deg_x[c - 1][x];
        ++deg_y[c - 1][y];
        ++deg_z[c - 1][z];
        ++size[c - 1];
      }

  for (int i = 1; i <= colors; ++i) {
    auto cname = "color " + std::to_string(i);
    for (int k = 0; k < kEdgeKindCount; ++k)
      if (census[i - 1][k] != table.mult[i - 1][k])
        report.fail(cname + ": " + edge_kind_name(kAllEdgeKinds[k]) + " census " +
                    std::to_string(census[i - 1][k]) + " != table " +
                    std::to_string(table.mult[i - 1][k]));
    const bool k1 = i <= m * m;
    const int expected_size = k1 ? n - m : n;
    if (size[i - 1] != expected_size)
      report.fail(cname + ": class size " + std::to_string(size[i - 1]) + " != " +
                  std::to_string(expected_size));
    for (int v = 0; v < n; ++v) {
      const int want = k1 ? (v >= m ? 1 : 0) : 1;
      if (deg_x[i - 1][v] != want)
        report.fail(cname + ": x index " + std::to_string(v) + " used " +
                    std::to_string(deg_x[i - 1][v]) + " times, expected " + std::to_string(want));
      if (deg_y[i - 1][v] != want)
        report.fail(cname + ": y index " + std::to_string(v) + " used " +
                    std::to_string(deg_y[i - 1][v]) + " times, expected " + std::to_string(want));
      if (deg_z[i - 1][v] != want)
        report.fail(cname + ": z index " + std::to_string(v) + " used " +
                    std::to_string(deg_z[i - 1][v]) + " times, expected " + std::to_string(want));
    }
  }
  report.valid = report.violations.empty();
  return report;
}

/// Debug dump: "x y z color" per extension cell, lexicographic.
inline std::string dump_extension(const ColoredExtension& ext) {
  std::ostringstream os;
  for (int x = 0; x < ext.n; ++x)
    for (int y = 0; y < ext.n; ++y)
      for (int z = 0; z < ext.n; ++z)
        if (!ext.in_corner(x, y, z)) os << x << ' ' << y << ' ' << z << ' ' << ext.at(x, y, z) << '\n';
  return os.str();
}

}  // namespace lrlc
