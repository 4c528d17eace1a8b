#pragma once

// The block universe Y: the unit block delta x omega, plus for every block
// index (alpha in LTilde, 0 < zeta < lambda) an omega-row of points at level
// gamma_alpha and a single top point one level above tagged lambda+zeta.

#include <cstdint>
#include <string>
#include <vector>

#include "lcslab/decompose.hpp"
#include "lcslab/ordinal.hpp"

namespace lcslab {

enum class PointKind : std::uint8_t { Unit, BlockRow, BlockTop };

struct Point {
  PointKind kind = PointKind::Unit;
  Ordinal pi;          // level
  Ordinal block_alpha; // meaningful for block points
  std::uint32_t zeta = 0;
  std::uint64_t n = 0;  // eta for Unit; row index for BlockRow; unused for BlockTop

  static Point unit(Ordinal level, std::uint64_t eta) {
    Point p;
    p.kind = PointKind::Unit;
    p.pi = std::move(level);
    p.n = eta;
    return p;
  }
  static Point row(const SplitResult& s, Ordinal alpha, std::uint32_t zeta, std::uint64_t idx) {
    Point p;
    p.kind = PointKind::BlockRow;
    p.pi = s.gamma(alpha);
    p.block_alpha = std::move(alpha);
    p.zeta = zeta;
    p.n = idx;
    return p;
  }
  static Point top(const SplitResult& s, Ordinal alpha, std::uint32_t zeta) {
    Point p;
    p.kind = PointKind::BlockTop;
    p.pi = s.gamma(alpha).succ();
    p.block_alpha = std::move(alpha);
    p.zeta = zeta;
    return p;
  }

  bool in_unit() const { return kind == PointKind::Unit; }
  bool in_u() const { return kind != PointKind::Unit; }
  bool in_u1() const { return kind == PointKind::BlockRow; }  // pi == pi_minus
  bool in_u2() const { return kind == PointKind::BlockTop; }

  const Ordinal& level() const { return pi; }
  Ordinal pi_minus() const {
    if (kind == PointKind::BlockTop) return pi.pred();
    return pi;
  }
  // block identity: equal iff same block of Y
  bool same_block(const Point& o) const {
    if (kind == PointKind::Unit || o.kind == PointKind::Unit)
      return kind == PointKind::Unit && o.kind == PointKind::Unit;
    return block_alpha == o.block_alpha && zeta == o.zeta;
  }
  // the block's big point (defined for block points only)
  const Ordinal& origin() const { return block_alpha; }

  bool operator==(const Point& o) const {
    if (kind != o.kind || !(pi == o.pi) || n != o.n || zeta != o.zeta) return false;
    if (kind != PointKind::Unit && !(block_alpha == o.block_alpha)) return false;
    return true;
  }
  bool operator!=(const Point& o) const { return !(*this == o); }
  bool operator<(const Point& o) const {
    if (pi != o.pi) return pi < o.pi;
    if (kind != o.kind) return static_cast<int>(kind) < static_cast<int>(o.kind);
    if (kind != PointKind::Unit && block_alpha != o.block_alpha)
      return block_alpha < o.block_alpha;
    if (zeta != o.zeta) return zeta < o.zeta;
    return n < o.n;
  }

  std::string str() const {
    switch (kind) {
      case PointKind::Unit:
        return "u(" + pi.str() + ", " + std::to_string(n) + ")";
      case PointKind::BlockRow:
        return "c(" + block_alpha.str() + ", " + std::to_string(zeta) + ", " + std::to_string(n) +
               ")";
      case PointKind::BlockTop:
        return "t(" + block_alpha.str() + ", " + std::to_string(zeta) + ")";
    }
    return "?";
  }
};

// membership of a point in Y over the given universe/split
inline bool point_in_universe(const Point& p, const UniverseSpec& u, const SplitResult& s) {
  switch (p.kind) {
    case PointKind::Unit:
      return p.pi < u.delta;
    case PointKind::BlockRow:
    case PointKind::BlockTop: {
      if (!s.in_ltilde(p.block_alpha)) return false;
      if (p.zeta == 0 || p.zeta >= u.lambda) return false;
      Ordinal g = s.gamma(p.block_alpha);
      return p.kind == PointKind::BlockRow ? p.pi == g : p.pi == g.succ();
    }
  }
  return false;
}

struct PointHash {
  std::size_t operator()(const Point& p) const {
    std::size_t h = p.pi.hash();
    h ^= static_cast<std::size_t>(p.kind) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h ^= p.zeta + (h << 6) + (h >> 2);
    h ^= p.n + (h << 6) + (h >> 2);
    return h;
  }
};

}  // namespace lcslab
