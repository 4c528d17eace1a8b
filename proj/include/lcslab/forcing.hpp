#pragma once

// Finite conditions over the block universe: a finite point set, a strict
// order stored transitively closed, and an infimum table. The validator
// checks the full rule set; the two density operations extend a condition
// by a requested point, scaffolding walks as needed.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lcslab/delta.hpp"
#include "lcslab/points.hpp"
#include "lcslab/walks.hpp"

namespace lcslab {

struct TargetMissing : OrdinalError {
  TargetMissing() : OrdinalError("extend_below: target point not in the condition") {}
};
struct AlphaNotBelow : OrdinalError {
  explicit AlphaNotBelow(const std::string& m) : OrdinalError("extend_below: " + m) {}
};
struct UnreachableTarget : OrdinalError {
  explicit UnreachableTarget(const Ordinal& a, const Ordinal& b)
      : OrdinalError("no finite walk scaffold from " + a.str() + " up to " + b.str()) {}
};
struct ScaffoldInvalid : OrdinalError {
  explicit ScaffoldInvalid(const std::string& m)
      : OrdinalError("density extension failed validation:\n" + m) {}
};

class Condition {
 public:
  Condition() = default;

  static Condition make(std::vector<Point> pts,
                        const std::vector<std::pair<Point, Point>>& strict,
                        const std::vector<std::pair<std::pair<Point, Point>, std::vector<Point>>>&
                            infima = {}) {
    Condition c;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    c.pts_ = std::move(pts);
    std::size_t n = c.pts_.size();
    c.lt_.assign(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : strict) {
      auto i = c.find(a), j = c.find(b);
      if (!i || !j) throw OrdinalError("condition: order references a missing point");
      if (*i != *j) c.lt_[*i][*j] = 1;
    }
    c.close();
    for (const auto& [key, val] : infima) {
      auto i = c.find(key.first), j = c.find(key.second);
      if (!i || !j) throw OrdinalError("condition: infimum references a missing point");
      std::vector<std::size_t> ids;
      for (const auto& v : val) {
        auto k = c.find(v);
        if (!k) throw OrdinalError("condition: infimum value is a missing point");
        ids.push_back(*k);
      }
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      c.inf_[c.key(*i, *j)] = std::move(ids);
    }
    return c;
  }

  std::size_t size() const { return pts_.size(); }
  const Point& pt(std::size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }

  std::optional<std::size_t> find(const Point& p) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), p);
    if (it != pts_.end() && *it == p) return static_cast<std::size_t>(it - pts_.begin());
    return std::nullopt;
  }
  bool contains(const Point& p) const { return find(p).has_value(); }

  bool less(std::size_t i, std::size_t j) const { return lt_[i][j]; }
  bool leq(std::size_t i, std::size_t j) const { return i == j || lt_[i][j]; }
  bool comparable(std::size_t i, std::size_t j) const { return leq(i, j) || leq(j, i); }

  // infimum table entry; comparable pairs default to the lower point
  std::vector<std::size_t> inf_of(std::size_t i, std::size_t j) const {
    auto it = inf_.find(key(i, j));
    if (it != inf_.end()) return it->second;
    if (less(i, j)) return {i};
    if (less(j, i)) return {j};
    return {};
  }
  bool inf_explicit(std::size_t i, std::size_t j) const { return inf_.count(key(i, j)) > 0; }

  std::vector<std::size_t> lower_bounds(std::size_t i, std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < size(); ++u)
      if (leq(u, i) && leq(u, j)) out.push_back(u);
    return out;
  }

  // q extends p: superset of points, order and infima restrict back
  friend bool extends(const Condition& q, const Condition& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!q.contains(p.pt(i))) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) {
        std::size_t qi = *q.find(p.pt(i)), qj = *q.find(p.pt(j));
        if (p.less(i, j) != q.less(qi, qj)) return false;
      }
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        std::size_t qi = *q.find(p.pt(i)), qj = *q.find(p.pt(j));
        auto pv = p.inf_of(i, j);
        auto qv = q.inf_of(std::min(qi, qj), std::max(qi, qj));
        if (pv.size() != qv.size()) return false;
        for (std::size_t k = 0; k < pv.size(); ++k)
          if (!(p.pt(pv[k]) == q.pt(qv[k]))) return false;
      }
    return true;
  }

  // order-only extension check (infima disregarded)
  friend bool extends_order_only(const Condition& q, const Condition& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
      if (!q.contains(p.pt(i))) return false;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < p.size(); ++j) {
        std::size_t qi = *q.find(p.pt(i)), qj = *q.find(p.pt(j));
        if (p.less(i, j) != q.less(qi, qj)) return false;
      }
    return true;
  }

  // rebuild with extra points/relations/infima (old infima carried over)
  Condition extended(const std::vector<Point>& new_pts,
                     const std::vector<std::pair<Point, Point>>& new_strict,
                     const std::vector<std::pair<std::pair<Point, Point>, std::vector<Point>>>&
                         new_infima = {}) const {
    std::vector<Point> pts = pts_;
    pts.insert(pts.end(), new_pts.begin(), new_pts.end());
    std::vector<std::pair<Point, Point>> strict;
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < size(); ++j)
        if (lt_[i][j]) strict.emplace_back(pts_[i], pts_[j]);
    strict.insert(strict.end(), new_strict.begin(), new_strict.end());
    std::vector<std::pair<std::pair<Point, Point>, std::vector<Point>>> infima;
    for (const auto& [k, v] : inf_) {
      std::vector<Point> val;
      for (auto id : v) val.push_back(pts_[id]);
      infima.push_back({{pts_[k.first], pts_[k.second]}, std::move(val)});
    }
    infima.insert(infima.end(), new_infima.begin(), new_infima.end());
    return make(std::move(pts), strict, infima);
  }

  std::uint64_t max_unit_eta() const {
    std::uint64_t m = 0;
    for (const auto& p : pts_)
      if (p.in_unit()) m = std::max(m, p.n);
    return m;
  }
  std::uint64_t max_row_index(const Ordinal& alpha, std::uint32_t zeta) const {
    std::uint64_t m = 0;
    for (const auto& p : pts_)
      if (p.in_u1() && p.block_alpha == alpha && p.zeta == zeta) m = std::max(m, p.n + 1);
    return m;
  }

 private:
  std::pair<std::size_t, std::size_t> key(std::size_t i, std::size_t j) const {
    return {std::min(i, j), std::max(i, j)};
  }
  void close() {
    std::size_t n = pts_.size();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (lt_[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (lt_[k][j]) lt_[i][j] = 1;
  }

  std::vector<Point> pts_;
  std::vector<std::vector<char>> lt_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> inf_;
};

// ----------------------------- validation ----------------------------------

// match the collapsed walk interior by a chain s < u_1 <= ... <= u_q <= t
inline bool walk_witnessed(IntervalTree& t, const Condition& c, std::size_t si, std::size_t ti) {
  Walk w = walk(t, c.pt(si).pi, c.pt(ti).pi);
  std::vector<Ordinal> v = w.collapsed_interior();
  if (v.empty()) return true;
  std::vector<std::size_t> prev;
  for (std::size_t layer = 0; layer < v.size(); ++layer) {
    std::vector<std::size_t> cur;
    for (std::size_t cand = 0; cand < c.size(); ++cand) {
      if (!(c.pt(cand).pi == v[layer])) continue;
      bool ok = layer == 0 ? c.less(si, cand)
                           : [&] {
                               for (auto p : prev)
                                 if (c.leq(p, cand)) return true;
                               return false;
                             }();
      if (ok) cur.push_back(cand);
    }
    if (cur.empty()) return false;
    prev = std::move(cur);
  }
  for (auto p : prev)
    if (c.leq(p, ti)) return true;
  return false;
}

inline ValidationReport validate_condition(IntervalTree& t, const SplitResult& s,
                                           const Condition& c) {
  ValidationReport r;
  const UniverseSpec& u = t.universe();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!point_in_universe(c.pt(i), u, s))
      r.add("point-universe", c.pt(i).str() + " is not a point of the block universe");

  // order rules
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!c.less(i, j)) continue;
      const Point &a = c.pt(i), &b = c.pt(j);
      if (!(a.pi < b.pi))
        r.add("pi-monotone", a.str() + " < " + b.str() + " but levels do not increase");
      if (a.in_u() && !a.same_block(b))
        r.add("block-upward", a.str() + " < " + b.str() + " leaves its block");
      if (a.in_unit() && b.in_u2()) {
        bool witnessed = false;
        for (std::size_t k = 0; k < n; ++k)
          if (c.pt(k).in_u1() && c.pt(k).same_block(b) && c.less(i, k) && c.less(k, j))
            witnessed = true;
        if (!witnessed)
          r.add("top-interpolation",
                a.str() + " < " + b.str() + " lacks an intermediate row point");
      }
    }

  // block closure: a met block carries its top, above all of its members
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = c.pt(i);
    if (!a.in_u1()) continue;
    bool found = false;
    for (std::size_t j = 0; j < n; ++j)
      if (c.pt(j).in_u2() && c.pt(j).same_block(a)) {
        found = true;
        if (!c.leq(i, j))
          r.add("block-top-closure", a.str() + " is not below its block top");
      }
    if (!found) r.add("block-top-closure", "top point of " + a.str() + "'s block is absent");
  }

  // infimum rules
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point &a = c.pt(i), &b = c.pt(j);
      auto inf = c.inf_of(i, j);
      std::string pair = "{" + a.str() + ", " + b.str() + "}";
      if (c.less(i, j) && !(inf == std::vector<std::size_t>{i}))
        r.add("comparable-inf", pair + " must have infimum {lower}");
      if (c.less(j, i) && !(inf == std::vector<std::size_t>{j}))
        r.add("comparable-inf", pair + " must have infimum {lower}");
      if (a.in_unit() && b.in_unit() && a.pi == b.pi && !inf.empty())
        r.add("same-level-empty-inf", pair);
      if (a.in_u1() && b.in_u1() && a.same_block(b) && !inf.empty())
        r.add("same-block-empty-inf", pair);
      for (auto v : inf)
        if (!(c.leq(v, i) && c.leq(v, j)))
          r.add("inf-lower-bound", pair + " contains non-lower-bound " + c.pt(v).str());
      if (!c.comparable(i, j)) {
        bool compatible = false;
        for (std::size_t w = 0; w < n; ++w)
          if (c.leq(w, i) && c.leq(w, j)) compatible = true;
        if (compatible) {
          LazySet h = h_pair(t, a, b);
          for (auto v : inf)
            if (!h.contains(c.pt(v).pi))
              r.add("inf-level-bound",
                    pair + ": level of " + c.pt(v).str() + " escapes " + h.label);
        }
      }
      for (std::size_t w = 0; w < n; ++w) {
        if (!(c.leq(w, i) && c.leq(w, j))) continue;
        bool dominated = false;
        for (auto v : inf)
          if (c.leq(w, v)) dominated = true;
        if (!dominated)
          r.add("inf-dominates", pair + ": lower bound " + c.pt(w).str() + " undominated");
      }
    }

  // walk witnesses (skipping pairs already flagged as level-inverted)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!c.less(i, j) || !c.pt(i).in_unit()) continue;
      if (!(c.pt(i).pi < c.pt(j).pi)) continue;
      if (!walk_witnessed(t, c, i, j))
        r.add("walk-witness", c.pt(i).str() + " < " + c.pt(j).str() + " has no walk chain");
    }
  return r;
}

// ------------------------------ densities ----------------------------------

struct AddPointResult {
  Condition cond;
  bool added = false;  // false: the point was already present
};

inline AddPointResult add_point(IntervalTree& t, const SplitResult& s, const Condition& p,
                                const Point& y) {
  if (p.contains(y)) return {p, false};
  (void)t;
  if (y.in_u1()) {
    Point top = Point::top(s, y.block_alpha, y.zeta);
    std::vector<Point> add{y};
    if (!p.contains(top)) add.push_back(top);
    return {p.extended(add, {{y, top}}), true};
  }
  return {p.extended({y}, {}), true};
}

// iterated walk-interior closure between two ordinals; the finite scaffold of
// intermediate levels, or UnreachableTarget when the closure diverges
inline std::vector<Ordinal> walk_closure(IntervalTree& t, const Ordinal& a, const Ordinal& b,
                                         std::size_t cap = 48) {
  std::set<Ordinal> S{a, b};
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Ordinal> snapshot(S.begin(), S.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i)
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        for (const auto& v : walk(t, snapshot[i], snapshot[j]).collapsed_interior())
          if (S.insert(v).second) changed = true;
        if (S.size() > cap) throw UnreachableTarget(a, b);
      }
  }
  std::vector<Ordinal> out;
  for (const auto& v : S)
    if (v < b) out.push_back(v);
  return out;  // ascending; contains a, excludes b
}

inline bool reachable_below(IntervalTree& t, const Ordinal& a, const Ordinal& b,
                            std::size_t cap = 48) {
  try {
    (void)walk_closure(t, a, b, cap);
    return true;
  } catch (const UnreachableTarget&) {
    return false;
  }
}

inline Condition extend_below(IntervalTree& t, const SplitResult& s, const Condition& p0,
                              const Point& tgt, const Ordinal& alpha, std::uint64_t j) {
  if (!p0.contains(tgt)) throw TargetMissing();
  Condition p = p0;
  Point base = tgt;
  if (tgt.in_u2()) {
    Ordinal g = tgt.pi_minus();
    if (!(alpha < g))
      throw AlphaNotBelow("level " + alpha.str() + " cannot sit below a block top directly");
    std::optional<Point> row;
    for (const auto& q : p.points())
      if (q.in_u1() && q.same_block(tgt)) row = q;
    if (!row) {
      row = Point::row(s, tgt.block_alpha, tgt.zeta, p.max_row_index(tgt.block_alpha, tgt.zeta));
      p = add_point(t, s, p, *row).cond;
    }
    base = *row;
  } else if (!(alpha < tgt.pi)) {
    throw AlphaNotBelow(alpha.str() + " is not below the target level " + tgt.pi.str());
  }

  const Ordinal& beta = base.pi;
  std::vector<Ordinal> chain = walk_closure(t, alpha, beta);
  std::uint64_t n = std::max(j, p.max_unit_eta()) + 1;

  std::vector<Point> fresh;
  for (const auto& v : chain) fresh.push_back(Point::unit(v, n));
  std::vector<std::pair<Point, Point>> strict;
  for (std::size_t i = 0; i + 1 < fresh.size(); ++i) strict.emplace_back(fresh[i], fresh[i + 1]);
  strict.emplace_back(fresh.back(), base);
  Condition q = p.extended(fresh, strict);

  ValidationReport rep = validate_condition(t, s, q);
  if (!rep.ok()) throw ScaffoldInvalid(rep.str());
  return q;
}

}  // namespace lcslab
