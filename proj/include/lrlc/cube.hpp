#pragma once

// Layer-rainbow latin cubes: an n x n x n array over n^2 symbols in which
// every layer (slice obtained by fixing one coordinate) contains each symbol
// exactly once. Symbols are 0-based in memory and 1-based in the text format.

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lrlc {

using Symbol = int;

/// Thrown when input data is structurally broken (bad dimensions, symbols out
/// of range, unparsable text). Distinct from a cube that parses fine but fails
/// the rainbow property.
class MalformedInput : public std::runtime_error {
 public:
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

class LayerRainbowCube {
 public:
  LayerRainbowCube() = default;
  explicit LayerRainbowCube(int order)
      : order_(order), cells_(static_cast<std::size_t>(order) * order * order, 0) {
    if (order < 1) throw MalformedInput("cube order must be positive");
  }

  int order() const { return order_; }
  int symbol_count() const { return order_ * order_; }

  Symbol cell(int x, int y, int z) const { return cells_[index(x, y, z)]; }
  void set_cell(int x, int y, int z, Symbol s) { cells_[index(x, y, z)] = s; }

  const std::vector<Symbol>& raw() const { return cells_; }

  bool operator==(const LayerRainbowCube& o) const = default;

 private:
  std::size_t index(int x, int y, int z) const {
    return (static_cast<std::size_t>(x) * order_ + y) * order_ + z;
  }

  int order_ = 0;
  std::vector<Symbol> cells_;
};

struct LayerViolation {
  int axis;    // 0 = x, 1 = y, 2 = z
  int layer;   // fixed index along that axis
  Symbol symbol;
  int count;   // occurrences in the layer, != 1

  bool operator==(const LayerViolation&) const = default;
};

struct VerifyReport {
  bool valid = false;
  std::vector<LayerViolation> violations;
};

/// Checks the rainbow property on all 3n layers. Malformed cells (symbol out
/// of [0, n^2)) raise MalformedInput instead of being reported as violations.
inline VerifyReport verify(const LayerRainbowCube& cube) {
  const int n = cube.order();
  const int nsym = n * n;
  for (Symbol s : cube.raw()) {
    if (s < 0 || s >= nsym)
      throw MalformedInput("symbol " + std::to_string(s + 1) + " out of range for order " +
                           std::to_string(n));
  }
  VerifyReport report;
  std::vector<int> counts(nsym);
  for (int axis = 0; axis < 3; ++axis) {
    for (int layer = 0; layer < n; ++layer) {
      std::fill(counts.begin(), counts.end(), 0);
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          int x = axis == 0 ? layer : u;
          int y = axis == 1 ? layer : (axis == 0 ? u : v);
          int z = axis == 2 ? layer : v;
          ++counts[cube.cell(x, y, z)];
        }
      }
      for (Symbol s = 0; s < nsym; ++s)
        if (counts[s] != 1) report.violations.push_back({axis, layer, s, counts[s]});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

/// Deterministic layer-rainbow cube of any order:
///   cell(x,y,z) = n*((x+z) mod n) + ((y+z) mod n).
/// Every layer of this cube is rainbow, so it doubles as the from-scratch
/// construction for the m=1 embedding path.
inline LayerRainbowCube base_cube(int n) {
  LayerRainbowCube cube(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        cube.set_cell(x, y, z, n * ((x + z) % n) + ((y + z) % n));
  return cube;
}

/// Applies a symbol bijection. perm must be a permutation of [0, n^2).
inline LayerRainbowCube relabel(const LayerRainbowCube& cube, const std::vector<Symbol>& perm) {
  const int nsym = cube.symbol_count();
  if (static_cast<int>(perm.size()) != nsym)
    throw MalformedInput("relabel permutation has wrong size");
  std::vector<char> seen(nsym, 0);
  for (Symbol s : perm) {
    if (s < 0 || s >= nsym || seen[s]) throw MalformedInput("relabel map is not a bijection");
    seen[s] = 1;
  }
  LayerRainbowCube out(cube.order());
  const int n = cube.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        out.set_cell(x, y, z, perm[cube.cell(x, y, z)]);
  return out;
}

/// True iff small occupies the [0,m)^3 corner of big cell-for-cell.
inline bool contains_as_corner(const LayerRainbowCube& big, const LayerRainbowCube& small) {
  const int m = small.order();
  if (m > big.order()) return false;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (big.cell(x, y, z) != small.cell(x, y, z)) return false;
  return true;
}

// --- text format -----------------------------------------------------------
//
// line 1: n
// then n blocks (z = 0..n-1) separated by blank lines; block row r lists the
// n cells (x=r, y=0..n-1, z) as 1-based integers.

inline void serialize(const LayerRainbowCube& cube, std::ostream& os) {
  const int n = cube.order();
  os << n << '\n';
  for (int z = 0; z < n; ++z) {
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (y) os << ' ';
        os << cube.cell(x, y, z) + 1;
      }
      os << '\n';
    }
    if (z + 1 < n) os << '\n';
  }
}

inline std::string serialize(const LayerRainbowCube& cube) {
  std::ostringstream os;
  serialize(cube, os);
  return os.str();
}

namespace detail {

[[noreturn]] inline void parse_fail(int line, int col, const std::string& msg) {
  throw MalformedInput("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                       msg);
}

}  // namespace detail

inline LayerRainbowCube parse(std::istream& is) {
  std::string line;
  int lineno = 0;
  auto next_line = [&](bool required) {
    while (std::getline(is, line)) {
      ++lineno;
      return true;
    }
    if (required) detail::parse_fail(lineno + 1, 1, "unexpected end of input");
    return false;
  };

  if (!next_line(true)) {}
  int n = 0;
  {
    std::istringstream ls(line);
    std::string extra;
    if (!(ls >> n) || n < 1) detail::parse_fail(lineno, 1, "expected a positive order");
    if (ls >> extra) detail::parse_fail(lineno, 1, "trailing data after order");
  }

  LayerRainbowCube cube(n);
  const int nsym = n * n;
  for (int z = 0; z < n; ++z) {
    if (z > 0) {
      next_line(true);
      if (!line.empty()) detail::parse_fail(lineno, 1, "expected blank line between blocks");
    }
    for (int x = 0; x < n; ++x) {
      next_line(true);
      std::istringstream ls(line);
      for (int y = 0; y < n; ++y) {
        long long v;
        if (!(ls >> v)) detail::parse_fail(lineno, y + 1, "expected " + std::to_string(n) +
                                                              " symbols in row");
        if (v < 1 || v > nsym)
          detail::parse_fail(lineno, y + 1, "symbol " + std::to_string(v) +
                                                " out of range [1, " + std::to_string(nsym) + "]");
        cube.set_cell(x, y, z, static_cast<Symbol>(v - 1));
      }
      std::string extra;
      if (ls >> extra) detail::parse_fail(lineno, n + 1, "too many symbols in row");
    }
  }
  while (next_line(false)) {
    if (!line.empty()) detail::parse_fail(lineno, 1, "trailing data after final block");
  }
  return cube;
}

inline LayerRainbowCube parse(const std::string& text) {
  std::istringstream is(text);
  return parse(is);
}

}  // namespace lrlc
