#pragma once

// Leveled partial orders with an infimum function, their symbolic
// Cantor-Bendixson analysis, and the canonical tower construction.
//
// A materialized poset is finite; points standing for an omega-fan of
// pairwise-incomparable siblings carry an Omega supply mark, and points
// produced by a generator whose full object guarantees infinite predecessor
// sets at every lower level carry a witness mark. Those two marks are what
// the symbolic reading of the infinite-predecessor rule consumes.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcslab/ordinal.hpp"
#include "lcslab/universe.hpp"

namespace lcslab {

struct Supply {
  bool omega = false;
  std::uint32_t count = 1;  // materialized copies stood for when finite
  static Supply fin(std::uint32_t n) { return Supply{false, n}; }
  static Supply inf() { return Supply{true, 0}; }
  std::string str() const { return omega ? "w" : std::to_string(count); }
};

struct ExclNotBelow : OrdinalError {
  ExclNotBelow() : OrdinalError("basic_open: an excluded point is not below the centre") {}
};
struct NotInfimumClosed : OrdinalError {
  explicit NotInfimumClosed(const std::string& m)
      : OrdinalError("restrict: infimum escapes the subset: " + m) {}
};
struct HeightOutOfRange : OrdinalError {
  HeightOutOfRange() : OrdinalError("make_tower: height must be positive") {}
};
struct MalformedBlockStructure : OrdinalError {
  explicit MalformedBlockStructure(const std::string& m)
      : OrdinalError("transform_blocks: " + m) {}
};

class LcsPoset {
 public:
  struct Node {
    Ordinal level;
    std::string name;
    Supply supply;
    bool deep_witness = false;  // generator guarantees the predecessor rule
    std::string stratum;        // which declared plan the point belongs to
  };

  std::size_t add(Ordinal level, std::string name, Supply supply = Supply::fin(1),
                  bool deep_witness = false, std::string stratum = "") {
    nodes_.push_back(Node{std::move(level), std::move(name), supply, deep_witness,
                          std::move(stratum)});
    for (auto& row : lt_) row.push_back(0);
    lt_.emplace_back(nodes_.size(), 0);
    return nodes_.size() - 1;
  }

  std::size_t size() const { return nodes_.size(); }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  void set_supply(std::size_t i, Supply s) { nodes_[i].supply = s; }
  std::optional<std::size_t> by_name(const std::string& n) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (nodes_[i].name == n) return i;
    return std::nullopt;
  }

  void relate(std::size_t lo, std::size_t hi) {
    lt_[lo][hi] = 1;
    close();
  }
  void relate_bulk(const std::vector<std::pair<std::size_t, std::size_t>>& rels) {
    for (const auto& [a, b] : rels) lt_[a][b] = 1;
    close();
  }
  bool less(std::size_t i, std::size_t j) const { return lt_[i][j]; }
  bool leq(std::size_t i, std::size_t j) const { return i == j || lt_[i][j]; }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  void set_inf(std::size_t i, std::size_t j, std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    inf_[key(i, j)] = std::move(v);
  }
  std::vector<std::size_t> inf_of(std::size_t i, std::size_t j) const {
    auto it = inf_.find(key(i, j));
    if (it != inf_.end()) return it->second;
    if (less(i, j)) return {i};
    if (less(j, i)) return {j};
    return {};
  }

  std::vector<Ordinal> levels() const {
    std::vector<Ordinal> l;
    for (const auto& n : nodes_) l.push_back(n.level);
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    return l;
  }

  // level plans: declared widths of the represented (possibly infinite)
  // object, used by the symbolic checks and the level report
  struct LevelPlan {
    ClosedSpan span;
    bool omega_wide = true;
    std::string stratum;
  };
  void declare_plan(ClosedSpan span, std::string stratum, bool omega_wide = true) {
    plans_.push_back(LevelPlan{std::move(span), omega_wide, std::move(stratum)});
  }
  const std::vector<LevelPlan>& plans() const { return plans_; }

  std::string point_str(std::size_t i) const {
    return nodes_[i].name + "@" + nodes_[i].level.str();
  }

 private:
  std::pair<std::size_t, std::size_t> key(std::size_t i, std::size_t j) const {
    return {std::min(i, j), std::max(i, j)};
  }
  void close() {
    std::size_t n = size();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (lt_[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (lt_[k][j]) lt_[i][j] = 1;
  }

  std::vector<Node> nodes_;
  std::vector<std::vector<char>> lt_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> inf_;
  std::vector<LevelPlan> plans_;
};

// level monotonicity, infimum soundness/completeness on materialized points,
// and the predecessor rule read symbolically through supplies and witnesses
inline ValidationReport validate_poset(const LcsPoset& P) {
  ValidationReport r;
  std::size_t n = P.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (P.less(i, j) && !(P.node(i).level < P.node(j).level))
        r.add("level-monotone", P.point_str(i) + " < " + P.point_str(j));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      auto inf = P.inf_of(i, j);
      std::string pair = "{" + P.point_str(i) + ", " + P.point_str(j) + "}";
      for (auto v : inf)
        if (!(P.leq(v, i) && P.leq(v, j)))
          r.add("inf-lower-bound", pair + " contains " + P.point_str(v));
      for (std::size_t u = 0; u < n; ++u) {
        if (!(P.leq(u, i) && P.leq(u, j))) continue;
        bool dom = false;
        for (auto v : inf)
          if (P.leq(u, v)) dom = true;
        if (!dom) r.add("inf-dominates", pair + ": " + P.point_str(u) + " undominated");
      }
    }
  // predecessor rule: on declared-infinite levels below a point's level, the
  // point needs an omega-supplied predecessor or a generator witness
  for (std::size_t i = 0; i < n; ++i) {
    if (P.node(i).deep_witness) continue;
    for (const auto& plan : P.plans()) {
      if (!plan.omega_wide) continue;
      if (P.node(i).stratum != plan.stratum) continue;
      for (const Ordinal& lv : P.levels()) {
        if (!plan.span.contains(lv) || !(lv < P.node(i).level)) continue;
        bool witnessed = false;
        for (std::size_t u = 0; u < n; ++u)
          if (P.node(u).level == lv && P.less(u, i) && P.node(u).supply.omega) witnessed = true;
        if (!witnessed)
          r.add("predecessor-rule", P.point_str(i) + " lacks infinite predecessors at level " +
                                        lv.str());
      }
    }
  }
  return r;
}

// the displayed neighbourhood: everything below x, minus the cones of the
// excluded points
inline std::vector<std::size_t> basic_open(const LcsPoset& P, std::size_t x,
                                           const std::vector<std::size_t>& excl) {
  for (auto e : excl)
    if (!P.less(e, x)) throw ExclNotBelow();
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < P.size(); ++y) {
    if (!P.leq(y, x)) continue;
    bool removed = false;
    for (auto e : excl)
      if (P.leq(y, e)) removed = true;
    if (!removed) out.push_back(y);
  }
  return out;
}

inline LcsPoset restrict_poset(const LcsPoset& P, const std::vector<std::size_t>& keep) {
  std::set<std::size_t> s(keep.begin(), keep.end());
  for (std::size_t i : keep)
    for (std::size_t j : keep) {
      if (i >= j) continue;
      for (auto v : P.inf_of(i, j))
        if (!s.count(v))
          throw NotInfimumClosed("{" + P.point_str(i) + ", " + P.point_str(j) + "} needs " +
                                 P.point_str(v));
    }
  LcsPoset out;
  std::map<std::size_t, std::size_t> remap;
  for (std::size_t i : keep)
    remap[i] = out.add(P.node(i).level, P.node(i).name, P.node(i).supply, P.node(i).deep_witness);
  std::vector<std::pair<std::size_t, std::size_t>> rels;
  for (std::size_t i : keep)
    for (std::size_t j : keep)
      if (P.less(i, j)) rels.emplace_back(remap[i], remap[j]);
  out.relate_bulk(rels);
  for (std::size_t i : keep)
    for (std::size_t j : keep) {
      if (i >= j) continue;
      std::vector<std::size_t> v;
      for (auto k : P.inf_of(i, j)) v.push_back(remap[k]);
      out.set_inf(remap[i], remap[j], v);
    }
  return out;
}

// ----------------------- replicated posets and ranks -------------------------

struct ReplicatedPoset {
  struct Class {
    Ordinal level;
    Supply supply;
    std::string name;
  };
  std::vector<Class> classes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (lower, upper)

  std::vector<std::vector<char>> closure() const {
    std::size_t n = classes.size();
    std::vector<std::vector<char>> lt(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : edges) lt[a][b] = 1;
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (lt[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (lt[k][j]) lt[i][j] = 1;
    return lt;
  }
};

struct CBReport {
  std::vector<std::size_t> rank;  // per class
  std::size_t height = 0;
  bool scattered = true;
};

// iterative removal: a class goes at the first stage where its remaining
// strictly-lower point supply is finite
inline CBReport symbolic_cb(const ReplicatedPoset& P) {
  CBReport rep;
  std::size_t n = P.classes.size();
  rep.rank.assign(n, 0);
  auto lt = P.closure();
  std::vector<char> alive(n, 1);
  std::size_t stage = 0;
  std::size_t remaining = n;
  while (remaining) {
    std::vector<std::size_t> doomed;
    for (std::size_t c = 0; c < n; ++c) {
      if (!alive[c]) continue;
      bool infinite_below = false;
      for (std::size_t d = 0; d < n; ++d)
        if (alive[d] && lt[d][c] && P.classes[d].supply.omega) infinite_below = true;
      if (!infinite_below) doomed.push_back(c);
    }
    if (doomed.empty()) {  // cannot happen for genuine finite DAGs
      rep.scattered = false;
      break;
    }
    for (auto c : doomed) {
      alive[c] = 0;
      rep.rank[c] = stage;
      --remaining;
    }
    ++stage;
  }
  rep.height = stage;
  return rep;
}

// -------------------- finite-topology brute-force ranks ----------------------

struct FiniteTopology {
  std::size_t points = 0;
  std::vector<std::uint64_t> opens;  // bitmask sets; must include 0 and the whole space

  bool well_formed() const {
    std::uint64_t full = points == 64 ? ~0ULL : ((1ULL << points) - 1);
    bool has_empty = false, has_full = false;
    for (auto o : opens) {
      if (o == 0) has_empty = true;
      if (o == full) has_full = true;
    }
    if (!has_empty || !has_full) return false;
    for (auto a : opens)
      for (auto b : opens) {
        bool iok = false, uok = false;
        for (auto c : opens) {
          if (c == (a & b)) iok = true;
          if (c == (a | b)) uok = true;
        }
        if (!iok || !uok) return false;
      }
    return true;
  }
};

struct FiniteCBResult {
  std::vector<int> rank;  // -1 when never isolated (non-scattered core)
  std::size_t height = 0;
  bool scattered = true;
};

inline FiniteCBResult cb_finite(const FiniteTopology& T) {
  FiniteCBResult res;
  res.rank.assign(T.points, -1);
  std::uint64_t S = T.points == 64 ? ~0ULL : ((1ULL << T.points) - 1);
  std::size_t stage = 0;
  while (S) {
    std::uint64_t isolated = 0;
    for (std::size_t x = 0; x < T.points; ++x) {
      if (!(S & (1ULL << x))) continue;
      for (auto o : T.opens)
        if ((o & S) == (1ULL << x)) {
          isolated |= 1ULL << x;
          break;
        }
    }
    if (!isolated) {
      res.scattered = false;
      break;
    }
    for (std::size_t x = 0; x < T.points; ++x)
      if (isolated & (1ULL << x)) res.rank[x] = static_cast<int>(stage);
    S &= ~isolated;
    ++stage;
  }
  res.height = stage;
  return res;
}

// --------------------------- canonical towers --------------------------------

// Tower points are CNF ordinals in (0, w^h]; the level of xi is its trailing
// exponent, the cone of xi is the interval (xi minus one unit of its last
// term, xi], and two cones are nested or disjoint. Level 0 carries the given
// base points (an omega fan), level h the single top.
struct TowerSpec {
  Ordinal height;          // number of omega-wide levels
  Ordinal level_offset;    // global level of tower level i is offset + i
  std::vector<std::string> base_names;
  std::string stratum;
};

inline Ordinal tower_level(const Ordinal& point) {
  return point.is_zero() ? Ordinal(0) : point.exp_at(point.term_count() - 1);
}
inline Ordinal tower_cone_start(const Ordinal& point) {
  // the point minus one unit of its last CNF term
  Ordinal head;
  for (std::size_t i = 0; i + 1 < point.term_count(); ++i)
    head = head + Ordinal::pow_times(point.exp_at(i), point.coeff_at(i));
  std::uint64_t c = point.coeff_at(point.term_count() - 1);
  if (c > 1) head = head + Ordinal::pow_times(point.exp_at(point.term_count() - 1), c - 1);
  return head;
}
inline bool tower_less(const Ordinal& a, const Ordinal& b) {
  return tower_cone_start(b) < a && a < b;
}

// materialize the canonical fragment: base points, a spine of one point per
// sampled level, and the top
inline LcsPoset make_tower(const TowerSpec& spec) {
  if (spec.height.is_zero()) throw HeightOutOfRange();
  LcsPoset P;
  // sampled tower levels: 1, a middle level when it exists, and the top
  std::vector<Ordinal> spine_levels;
  spine_levels.push_back(Ordinal(1));
  if (spec.height.is_successor() && spec.height.pred() > Ordinal(1))
    spine_levels.push_back(spec.height.pred());
  spine_levels.push_back(spec.height);
  std::sort(spine_levels.begin(), spine_levels.end());
  spine_levels.erase(std::unique(spine_levels.begin(), spine_levels.end()), spine_levels.end());

  std::vector<std::size_t> base;
  for (std::size_t i = 0; i < spec.base_names.size(); ++i)
    base.push_back(P.add(spec.level_offset, spec.base_names[i], Supply::inf(), false,
                         spec.stratum));
  std::vector<std::size_t> spine;
  for (const auto& lv : spine_levels) {
    bool is_top = lv == spec.height;
    spine.push_back(P.add(spec.level_offset + lv, spec.stratum + "/w^" + lv.str(),
                          is_top ? Supply::fin(1) : Supply::inf(), true, spec.stratum));
  }
  std::vector<std::pair<std::size_t, std::size_t>> rels;
  for (auto b : base)
    for (auto s : spine) rels.emplace_back(b, s);
  for (std::size_t i = 0; i + 1 < spine.size(); ++i) rels.emplace_back(spine[i], spine[i + 1]);
  P.relate_bulk(rels);
  // base points are pairwise incomparable with empty infima (disjoint cones)
  for (std::size_t i = 0; i < base.size(); ++i)
    for (std::size_t j = i + 1; j < base.size(); ++j) P.set_inf(base[i], base[j], {});
  P.declare_plan(ClosedSpan{spec.level_offset, spec.level_offset + spec.height}, spec.stratum,
                 true);
  return P;
}

}  // namespace lcslab
