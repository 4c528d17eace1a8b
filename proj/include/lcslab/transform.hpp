#pragma once

// Block replacement: each met block of a condition-as-poset is replaced by a
// canonical tower spanning the closed level block [gamma_alpha, alpha], with
// the old block top replaced by a single new top at level alpha. The infimum
// table follows the four-case rule keyed by the old tops.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lcslab/forcing.hpp"
#include "lcslab/lcs_poset.hpp"

namespace lcslab {

struct TransformResult {
  LcsPoset poset;
  // indices of each block's materialized pieces
  struct BlockPieces {
    Ordinal alpha;
    std::uint32_t zeta = 0;
    std::vector<std::size_t> base;  // the surviving row points
    std::vector<std::size_t> spine; // tower interior samples
    std::size_t top = 0;            // the single new top, at level alpha
  };
  std::vector<BlockPieces> blocks;
  std::map<std::size_t, std::size_t> from_condition;  // condition index -> poset index
};

inline TransformResult transform_blocks(IntervalTree& t, const SplitResult& s,
                                        const Condition& cond) {
  ValidationReport pre = validate_condition(t, s, cond);
  if (!pre.ok()) throw MalformedBlockStructure("input fails validation:\n" + pre.str());

  TransformResult out;
  LcsPoset& P = out.poset;

  // surviving original points: units and rows (old tops are replaced)
  for (std::size_t i = 0; i < cond.size(); ++i) {
    const Point& p = cond.pt(i);
    if (p.in_u2()) continue;
    std::string stratum =
        p.in_u1() ? "B(" + p.block_alpha.str() + "," + std::to_string(p.zeta) + ")" : "";
    out.from_condition[i] =
        P.add(p.pi, p.str(), p.in_u1() ? Supply::inf() : Supply::fin(1), false, stratum);
  }

  // original order among survivors
  std::vector<std::pair<std::size_t, std::size_t>> rels;
  for (std::size_t i = 0; i < cond.size(); ++i)
    for (std::size_t j = 0; j < cond.size(); ++j)
      if (cond.less(i, j) && out.from_condition.count(i) && out.from_condition.count(j))
        rels.emplace_back(out.from_condition.at(i), out.from_condition.at(j));

  // towers per met block
  std::map<std::pair<Ordinal, std::uint32_t>, TransformResult::BlockPieces> pieces;
  for (std::size_t i = 0; i < cond.size(); ++i) {
    const Point& p = cond.pt(i);
    if (!p.in_u()) continue;
    auto key = std::make_pair(p.block_alpha, p.zeta);
    auto& bp = pieces[key];
    bp.alpha = p.block_alpha;
    bp.zeta = p.zeta;
    if (p.in_u1()) bp.base.push_back(out.from_condition.at(i));
  }
  for (auto& [key, bp] : pieces) {
    const Ordinal& alpha = key.first;
    Ordinal gamma = s.gamma(alpha);
    Ordinal height = ot_diff(gamma, alpha);  // number of omega-wide tower levels
    std::string stratum = "B(" + alpha.str() + "," + std::to_string(key.second) + ")";

    std::vector<Ordinal> spine_levels{Ordinal(1)};
    if (height.is_successor() && height.pred() > Ordinal(1)) spine_levels.push_back(height.pred());
    for (const auto& lv : spine_levels) {
      if (!(lv < height)) continue;
      bp.spine.push_back(
          P.add(gamma + lv, stratum + "/w^" + lv.str(), Supply::inf(), true, stratum));
    }
    bp.top = P.add(alpha, "t'(" + alpha.str() + "," + std::to_string(key.second) + ")",
                   Supply::fin(1), true, stratum);
    for (auto b : bp.base) {
      for (auto sp : bp.spine) rels.emplace_back(b, sp);
      rels.emplace_back(b, bp.top);
    }
    for (std::size_t i = 0; i + 1 < bp.spine.size(); ++i)
      rels.emplace_back(bp.spine[i], bp.spine[i + 1]);
    if (!bp.spine.empty()) rels.emplace_back(bp.spine.back(), bp.top);

    // crossing rule: a unit point under some base row sits under the tower
    for (std::size_t i = 0; i < cond.size(); ++i) {
      const Point& q = cond.pt(i);
      if (!q.in_unit()) continue;
      bool under = false;
      for (std::size_t j = 0; j < cond.size(); ++j)
        if (cond.pt(j).in_u1() && cond.pt(j).block_alpha == alpha &&
            cond.pt(j).zeta == key.second && cond.less(i, j))
          under = true;
      if (under) {
        for (auto sp : bp.spine) rels.emplace_back(out.from_condition.at(i), sp);
        rels.emplace_back(out.from_condition.at(i), bp.top);
      }
    }
    P.declare_plan(ClosedSpan{gamma, alpha}, stratum, true);
    out.blocks.push_back(bp);
  }
  P.relate_bulk(rels);

  // infima: survivors inherit the condition's table
  for (std::size_t i = 0; i < cond.size(); ++i)
    for (std::size_t j = i + 1; j < cond.size(); ++j) {
      if (!out.from_condition.count(i) || !out.from_condition.count(j)) continue;
      std::vector<std::size_t> v;
      bool ok = true;
      for (auto k : cond.inf_of(i, j)) {
        if (!out.from_condition.count(k)) ok = false;
        else v.push_back(out.from_condition.at(k));
      }
      if (ok) P.set_inf(out.from_condition.at(i), out.from_condition.at(j), v);
    }

  // cross-tower infima through the old tops
  auto old_top_index = [&](const TransformResult::BlockPieces& bp) -> std::size_t {
    Point top = Point::top(s, bp.alpha, bp.zeta);
    return *cond.find(top);
  };
  auto new_respects = [&](std::size_t v_cond, std::size_t poset_target) -> bool {
    if (!out.from_condition.count(v_cond)) return false;
    std::size_t v = out.from_condition.at(v_cond);
    return P.less(v, poset_target);
  };
  for (std::size_t a = 0; a < out.blocks.size(); ++a)
    for (std::size_t b2 = a + 1; b2 < out.blocks.size(); ++b2) {
      const auto& A = out.blocks[a];
      const auto& B = out.blocks[b2];
      std::size_t sa = old_top_index(A), sb = old_top_index(B);
      std::vector<std::size_t> star = cond.inf_of(std::min(sa, sb), std::max(sa, sb));
      auto sva = A.spine;
      sva.push_back(A.top);
      auto svb = B.spine;
      svb.push_back(B.top);
      for (auto x : sva)
        for (auto y : svb) {
          std::vector<std::size_t> v;
          for (auto k : star)
            if (new_respects(k, x) && new_respects(k, y)) v.push_back(out.from_condition.at(k));
          P.set_inf(x, y, v);
        }
    }

  // infima between an old point and a tower interior: through the old top
  for (const auto& bp : out.blocks) {
    std::size_t st = old_top_index(bp);
    auto tower_pts = bp.spine;
    tower_pts.push_back(bp.top);
    for (std::size_t i = 0; i < cond.size(); ++i) {
      if (!out.from_condition.count(i)) continue;
      std::size_t pi = out.from_condition.at(i);
      const Point& q = cond.pt(i);
      bool in_c = q.in_u1() && q.block_alpha == bp.alpha && q.zeta == bp.zeta;
      if (in_c) continue;  // same-block pairs follow the tower's own rule
      for (auto x : tower_pts) {
        if (P.comparable(pi, x)) continue;
        if (cond.less(i, st)) {
          P.set_inf(pi, x, {});
          continue;
        }
        std::vector<std::size_t> v;
        for (auto k : cond.inf_of(std::min(i, st), std::max(i, st)))
          if (out.from_condition.count(k) && P.less(out.from_condition.at(k), x))
            v.push_back(out.from_condition.at(k));
        P.set_inf(pi, x, v);
      }
    }
  }
  return out;
}

// ------------------------------ level report ---------------------------------

struct CsReport {
  struct LevelCount {
    Ordinal level;
    std::size_t count;
  };
  struct BigMark {
    Ordinal lo, hi;                      // the closed block of Big levels
    std::size_t blocks_materialized;     // block indices met by the condition
  };
  std::vector<LevelCount> finite_counts;
  std::vector<BigMark> big;

  bool big_matches(const SplitResult& s) const {
    if (big.size() != s.f1_big.size()) return false;
    for (std::size_t i = 0; i < big.size(); ++i)
      if (!(big[i].lo == s.f1_big[i].lo) || !(big[i].hi == s.f1_big[i].hi)) return false;
    return true;
  }
};

inline CsReport cs_report(const Condition& cond, const SplitResult& s) {
  CsReport rep;
  std::map<Ordinal, std::size_t> counts;
  for (const auto& p : cond.points()) ++counts[p.pi];
  for (const auto& [lv, c] : counts) rep.finite_counts.push_back({lv, c});
  for (const auto& b : s.LTilde) {
    std::set<std::uint32_t> zetas;
    for (const auto& p : cond.points())
      if (p.in_u() && p.block_alpha == b) zetas.insert(p.zeta);
    rep.big.push_back(CsReport::BigMark{s.gamma(b), b, zetas.size()});
  }
  return rep;
}

}  // namespace lcslab
