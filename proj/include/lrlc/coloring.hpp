#pragma once

// Amalgamated hypergraph of K^3_{n,n,n} \ K^3_{m,m,m} and its n^2-coloring.
//
// Collapsing the old index range [0,m) of each axis to a single vertex
// (x, y, z) and the new range [m,n) to (alpha, beta, gamma) leaves seven edge
// kinds, named here by which axes are new: AYZ = alpha-y-z (new x only), and
// so on through ABG = alpha-beta-gamma (all new). The table built below fixes,
// for every color, how many cells of each kind its class will contain; the
// detachment stage then turns those multiplicities into actual cells.

#include <array>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cube.hpp"

namespace lrlc {

enum class EdgeKind : int { AYZ = 0, BXZ, GXY, ABZ, AGY, BGX, ABG };

inline constexpr int kEdgeKindCount = 7;
inline constexpr std::array<EdgeKind, kEdgeKindCount> kAllEdgeKinds = {
    EdgeKind::AYZ, EdgeKind::BXZ, EdgeKind::GXY, EdgeKind::ABZ,
    EdgeKind::AGY, EdgeKind::BGX, EdgeKind::ABG};

inline const char* edge_kind_name(EdgeKind k) {
  static constexpr const char* names[] = {"AYZ", "BXZ", "GXY", "ABZ", "AGY", "BGX", "ABG"};
  return names[static_cast<int>(k)];
}

/// Thrown when n < 2m. Carries the counting witness (n-m)^3 vs m^2(n-m).
class InfeasibleOrder : public std::runtime_error {
 public:
  InfeasibleOrder(int m, int n, const std::string& what) : std::runtime_error(what), m(m), n(n) {}
  int m, n;
};

class InternalInvariantError : public std::runtime_error {
 public:
  explicit InternalInvariantError(const std::string& what) : std::runtime_error(what) {}
};

struct NecessityWitness {
  bool feasible;        // n >= 2m, the theorem's exact criterion
  long long lhs;        // (n-m)^3, extension cells available
  long long rhs;        // m^2 (n-m), extension cells the old colors demand
  std::string text() const {
    std::ostringstream os;
    os << "(n-m)^3 = " << lhs << (lhs >= rhs ? " >= " : " < ") << rhs << " = m^2(n-m)";
    return os.str();
  }
};

inline NecessityWitness necessity_check(int m, int n) {
  const long long d = n - m;
  return {n >= 2 * m, d * d * d, static_cast<long long>(m) * m * d};
}

struct AmalgamProfile {
  int m = 0;
  int n = 0;
  std::array<long long, kEdgeKindCount> total{};

  long long total_of(EdgeKind k) const { return total[static_cast<int>(k)]; }
  int kappa1_size() const { return m * m; }
  int kappa2_size() const { return n * n - m * m; }
  int color_count() const { return n * n; }
};

inline AmalgamProfile amalgam_profile(int m, int n) {
  if (m < 1) throw MalformedInput("m must be positive");
  if (n < 2 * m) {
    auto w = necessity_check(m, n);
    throw InfeasibleOrder(m, n, "embedding requires n >= 2m (got m=" + std::to_string(m) +
                                    ", n=" + std::to_string(n) + "; " + w.text() + ")");
  }
  AmalgamProfile p;
  p.m = m;
  p.n = n;
  const long long d = n - m;
  p.total[static_cast<int>(EdgeKind::AYZ)] = static_cast<long long>(m) * m * d;
  p.total[static_cast<int>(EdgeKind::BXZ)] = static_cast<long long>(m) * m * d;
  p.total[static_cast<int>(EdgeKind::GXY)] = static_cast<long long>(m) * m * d;
  p.total[static_cast<int>(EdgeKind::ABZ)] = m * d * d;
  p.total[static_cast<int>(EdgeKind::AGY)] = m * d * d;
  p.total[static_cast<int>(EdgeKind::BGX)] = m * d * d;
  p.total[static_cast<int>(EdgeKind::ABG)] = d * d * d;
  return p;
}

namespace detail {

inline long long ceil_div(long long p, long long q) {
  // q > 0
  return p >= 0 ? (p + q - 1) / q : -((-p) / q);
}

}  // namespace detail

struct ColoringParameters {
  int a;          // ceil(m - n/3), the target stage-one multiplicity
  int a_clamped;  // max(a, 0)
  int ell;        // n mod 3
  int j;          // n - 2m
  int half_m;     // floor(m/2), the stage-one cap

  ColoringParameters(int m, int n)
      : a(static_cast<int>(detail::ceil_div(3LL * m - n, 3))),
        a_clamped(a > 0 ? a : 0),
        ell(n % 3),
        j(n - 2 * m),
        half_m(m / 2) {}
};

/// Per-color multiplicity of each edge kind; colors are 1-based, kappa_1 =
/// {1..m^2} (the corner's own colors), kappa_2 = {m^2+1..n^2}.
struct ColorMultTable {
  AmalgamProfile profile;
  std::vector<std::array<int, kEdgeKindCount>> mult;  // [color-1][kind]

  int get(int color, EdgeKind k) const { return mult[color - 1][static_cast<int>(k)]; }
  int& at(int color, EdgeKind k) { return mult[color - 1][static_cast<int>(k)]; }
  bool is_kappa1(int color) const { return color <= profile.kappa1_size(); }
};

// --- stage one: the AYZ / BXZ / GXY columns --------------------------------
//
// Three regimes. In the main case every kappa_2 entry lands in
// [a_clamped, floor(m/2)]; the remainder above the uniform floor is spread
// round-robin. The two boundary cases (n = 1,2 mod 3 with n close to 2m) use
// the residue patterns with values in {a, a-1}, topped up until the column
// sums reach m^2(n-m).

inline ColorMultTable coloring_stage_one(const AmalgamProfile& profile) {
  const int m = profile.m, n = profile.n;
  if (m < 2)
    throw MalformedInput("stage-one coloring needs m >= 2; m = 1 uses the direct construction");
  const ColoringParameters par(m, n);
  ColorMultTable table{profile, std::vector<std::array<int, kEdgeKindCount>>(profile.color_count())};
  for (auto& row : table.mult) row.fill(0);

  const int k1 = profile.kappa1_size();
  const int k2 = profile.kappa2_size();
  const long long target = profile.total_of(EdgeKind::AYZ);  // m^2 (n-m), same for all three
  const std::array<EdgeKind, 3> kinds = {EdgeKind::AYZ, EdgeKind::BXZ, EdgeKind::GXY};

  const bool case1 = par.ell == 1 && (n == 2 * m || n == 2 * m + 1);
  const bool case2 = par.ell == 2 && (n == 2 * m || n == 2 * m + 1 || n == 2 * m + 2);

  if (!case1 && !case2) {
    // Main case: floor at a_clamped, cap at floor(m/2).
    if (static_cast<long long>(k2) * par.a_clamped > target ||
        target > static_cast<long long>(k2) * par.half_m)
      throw InternalInvariantError("stage-one feasibility bound violated in main case");
    for (EdgeKind e : kinds) {
      long long rem = target - static_cast<long long>(k2) * par.a_clamped;
      for (int i = k1 + 1; i <= profile.color_count(); ++i) table.at(i, e) = par.a_clamped;
      while (rem > 0) {
        bool progressed = false;
        for (int i = k1 + 1; i <= profile.color_count() && rem > 0; ++i) {
          if (table.at(i, e) >= par.half_m) continue;
          bool pair_ok = true;
          for (EdgeKind f : kinds)
            if (f != e && table.at(i, e) + 1 + table.at(i, f) > m) pair_ok = false;
          if (!pair_ok) continue;
          ++table.at(i, e);
          --rem;
          progressed = true;
        }
        if (!progressed) throw InternalInvariantError("stage-one distribution stuck");
      }
    }
  } else {
    // Residue patterns; which residues start at the larger value flips
    // between the two cases.
    const int hi = case1 ? par.a : par.a - 1;  // value taken by two of the three kinds
    const int lo = case1 ? par.a - 1 : par.a;
    for (int i = k1 + 1; i <= profile.color_count(); ++i) {
      const int r = i % 3;
      table.at(i, EdgeKind::AYZ) = (r == 1) ? lo : hi;
      table.at(i, EdgeKind::BXZ) = (r == 2) ? lo : hi;
      table.at(i, EdgeKind::GXY) = (r == 0) ? lo : hi;
    }
    // Top up: replace a-1 entries by a, lowest color first, per column, until
    // each column sum reaches m^2(n-m).
    for (EdgeKind e : kinds) {
      long long sum = 0;
      for (int i = k1 + 1; i <= profile.color_count(); ++i) sum += table.at(i, e);
      if (sum > target) throw InternalInvariantError("stage-one pattern overshoots column sum");
      for (int i = k1 + 1; i <= profile.color_count() && sum < target; ++i) {
        if (table.at(i, e) == par.a - 1) {
          table.at(i, e) = par.a;
          ++sum;
        }
      }
      if (sum != target) throw InternalInvariantError("stage-one top-up exhausted the column");
    }
  }
  return table;
}

namespace detail {

inline void require_condition_one(const ColorMultTable& table, const char* caller) {
  const auto& p = table.profile;
  const int m = p.m, n = p.n;
  for (int i = 1; i <= p.color_count(); ++i) {
    const int ayz = table.get(i, EdgeKind::AYZ);
    const int bxz = table.get(i, EdgeKind::BXZ);
    const int gxy = table.get(i, EdgeKind::GXY);
    if (table.is_kappa1(i)) {
      if (ayz || bxz || gxy)
        throw InternalInvariantError(std::string(caller) + ": nonzero stage-one entry in kappa_1");
    } else {
      if (ayz + bxz + gxy < 3 * m - n)
        throw InternalInvariantError(std::string(caller) + ": stage-one sum below 3m-n");
      if (ayz + bxz > m || ayz + gxy > m || bxz + gxy > m)
        throw InternalInvariantError(std::string(caller) + ": stage-one pairwise sum above m");
    }
  }
}

}  // namespace detail

/// Fills ABZ, AGY, BGX from the stage-one entries:
///   mult(ABZ) = m - mult(AYZ) - mult(BXZ) on kappa_2 (0 on kappa_1), etc.
inline ColorMultTable coloring_stage_two(ColorMultTable table) {
  detail::require_condition_one(table, "coloring_stage_two");
  const int m = table.profile.m;
  for (int i = 1; i <= table.profile.color_count(); ++i) {
    if (table.is_kappa1(i)) {
      table.at(i, EdgeKind::ABZ) = 0;
      table.at(i, EdgeKind::AGY) = 0;
      table.at(i, EdgeKind::BGX) = 0;
    } else {
      table.at(i, EdgeKind::ABZ) = m - table.get(i, EdgeKind::AYZ) - table.get(i, EdgeKind::BXZ);
      table.at(i, EdgeKind::AGY) = m - table.get(i, EdgeKind::AYZ) - table.get(i, EdgeKind::GXY);
      table.at(i, EdgeKind::BGX) = m - table.get(i, EdgeKind::BXZ) - table.get(i, EdgeKind::GXY);
    }
  }
  return table;
}

/// Fills ABG: n-m on kappa_1; n-3m plus the stage-one sum on kappa_2.
inline ColorMultTable coloring_stage_three(ColorMultTable table) {
  detail::require_condition_one(table, "coloring_stage_three");
  const int m = table.profile.m, n = table.profile.n;
  for (int i = 1; i <= table.profile.color_count(); ++i) {
    if (table.is_kappa1(i)) {
      table.at(i, EdgeKind::ABG) = n - m;
    } else {
      table.at(i, EdgeKind::ABG) = n - 3 * m + table.get(i, EdgeKind::AYZ) +
                                   table.get(i, EdgeKind::BXZ) + table.get(i, EdgeKind::GXY);
    }
  }
  return table;
}

/// Full pipeline for m >= 2.
inline ColorMultTable build_color_table(int m, int n) {
  return coloring_stage_three(coloring_stage_two(coloring_stage_one(amalgam_profile(m, n))));
}

struct TableReport {
  bool valid = false;
  std::vector<std::string> violations;

  void fail(std::string msg) { violations.push_back(std::move(msg)); }
};

/// Checks every identity the completed table must satisfy: column sums against
/// the profile, conditions (1) and (2), per-color degrees of the old vertices
/// (m on kappa_2, 0 on kappa_1) and of the new vertices (n-m everywhere), and
/// non-negativity.
inline TableReport validate_table(const ColorMultTable& table) {
  TableReport report;
  const auto& p = table.profile;
  const int m = p.m, n = p.n;
  auto colorstr = [](int i) { return "color " + std::to_string(i); };

  std::array<long long, kEdgeKindCount> sums{};
  for (int i = 1; i <= p.color_count(); ++i) {
    const auto& row = table.mult[i - 1];
    for (int k = 0; k < kEdgeKindCount; ++k) {
      if (row[k] < 0) report.fail(colorstr(i) + ": negative " + edge_kind_name(kAllEdgeKinds[k]));
      sums[k] += row[k];
    }
    const int ayz = table.get(i, EdgeKind::AYZ), bxz = table.get(i, EdgeKind::BXZ),
              gxy = table.get(i, EdgeKind::GXY), abz = table.get(i, EdgeKind::ABZ),
              agy = table.get(i, EdgeKind::AGY), bgx = table.get(i, EdgeKind::BGX),
              abg = table.get(i, EdgeKind::ABG);
    if (table.is_kappa1(i)) {
      if (ayz || bxz || gxy) report.fail(colorstr(i) + ": condition (1) kappa_1 row not zero");
      if (abz || agy || bgx) report.fail(colorstr(i) + ": condition (2) kappa_1 row not zero");
      if (abg != n - m) report.fail(colorstr(i) + ": ABG != n-m on kappa_1");
      if (bgx + bxz + gxy != 0) report.fail(colorstr(i) + ": deg(x) != 0 on kappa_1");
      if (agy + ayz + gxy != 0) report.fail(colorstr(i) + ": deg(y) != 0 on kappa_1");
      if (abz + ayz + bxz != 0) report.fail(colorstr(i) + ": deg(z) != 0 on kappa_1");
    } else {
      if (ayz + bxz + gxy < 3 * m - n)
        report.fail(colorstr(i) + ": condition (1) sum below 3m-n");
      if (ayz + bxz > m || ayz + gxy > m || bxz + gxy > m)
        report.fail(colorstr(i) + ": condition (1) pairwise sum above m");
      if (abz != m - ayz - bxz) report.fail(colorstr(i) + ": condition (2) ABZ identity");
      if (agy != m - ayz - gxy) report.fail(colorstr(i) + ": condition (2) AGY identity");
      if (bgx != m - bxz - gxy) report.fail(colorstr(i) + ": condition (2) BGX identity");
      if (abg != n - 3 * m + ayz + bxz + gxy) report.fail(colorstr(i) + ": ABG identity");
      if (bgx + bxz + gxy != m) report.fail(colorstr(i) + ": deg(x) != m");
      if (agy + ayz + gxy != m) report.fail(colorstr(i) + ": deg(y) != m");
      if (abz + ayz + bxz != m) report.fail(colorstr(i) + ": deg(z) != m");
    }
    if (ayz + abz + agy + abg != n - m) report.fail(colorstr(i) + ": deg(alpha) != n-m");
    if (bxz + abz + bgx + abg != n - m) report.fail(colorstr(i) + ": deg(beta) != n-m");
    if (gxy + agy + bgx + abg != n - m) report.fail(colorstr(i) + ": deg(gamma) != n-m");
  }
  for (int k = 0; k < kEdgeKindCount; ++k) {
    if (sums[k] != p.total[k])
      report.fail(std::string("column ") + edge_kind_name(kAllEdgeKinds[k]) +
                  " sums to " + std::to_string(sums[k]) + ", expected " +
                  std::to_string(p.total[k]));
  }
  report.valid = report.violations.empty();
  return report;
}

inline void table_to_csv(const ColorMultTable& table, std::ostream& os) {
  os << "color,AYZ,BXZ,GXY,ABZ,AGY,BGX,ABG\n";
  for (int i = 1; i <= table.profile.color_count(); ++i) {
    os << i;
    for (EdgeKind k : kAllEdgeKinds) os << ',' << table.get(i, k);
    os << '\n';
  }
}

inline std::string table_to_csv(const ColorMultTable& table) {
  std::ostringstream os;
  table_to_csv(table, os);
  return os.str();
}

}  // namespace lrlc
