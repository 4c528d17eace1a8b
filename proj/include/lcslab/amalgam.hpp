#pragma once

// Pairwise compatibility machinery: the structural profile two conditions
// must share (kernel, block bookkeeping, point-map isomorphism, index
// classes), the admissibility check over big-interval traces, the canonical
// amalgam, and an independent bounded search for a common extension.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "lcslab/forcing.hpp"

namespace lcslab {

struct ProfileInvalid : OrdinalError {
  explicit ProfileInvalid(const std::string& m) : OrdinalError("amalgamate: " + m) {}
};

enum class IndexClass { Kernel, UnitMoved, BlockTurned, BlockMoved };

struct ThinningProfile {
  std::vector<Point> kernel;                    // common points, fixed by g
  std::vector<std::pair<Point, Point>> map;     // g as pairs (a in A) -> (b in B)
  std::vector<IndexClass> classes;              // per non-top index of A \ kernel ... per map entry
  std::vector<Ordinal> trace_a, trace_b;        // levels of non-kernel unit/row points
  Point g(const Point& p) const {
    for (const auto& [a, b] : map)
      if (a == p) return b;
    return p;
  }
  Point g_inv(const Point& p) const {
    for (const auto& [a, b] : map)
      if (b == p) return a;
    return p;
  }
};

using ThinningOutcome = std::variant<ThinningProfile, ValidationReport>;

inline ThinningOutcome thinning_check(IntervalTree& t, const SplitResult& s, const Condition& pa,
                                      const Condition& pb,
                                      const std::vector<std::pair<Point, Point>>& gmap) {
  ValidationReport r;
  ThinningProfile prof;
  prof.map = gmap;
  (void)s;

  // the map must be a bijection from A onto B
  if (gmap.size() != pa.size() || pa.size() != pb.size())
    r.add("iso-size", "map does not cover both conditions");
  std::set<Point> dom, ran;
  for (const auto& [a, b] : gmap) {
    if (!pa.contains(a)) r.add("iso-domain", a.str() + " not in the first condition");
    if (!pb.contains(b)) r.add("iso-range", b.str() + " not in the second condition");
    dom.insert(a);
    ran.insert(b);
  }
  if (dom.size() != gmap.size() || ran.size() != gmap.size())
    r.add("iso-bijection", "map is not injective");
  if (!r.ok()) return r;

  // kernel: the common points; g must fix them pointwise
  for (const auto& p : pa.points())
    if (pb.contains(p)) prof.kernel.push_back(p);
  for (const auto& p : prof.kernel)
    if (!(prof.g(p) == p)) r.add("kernel-fixed", p.str() + " moves under the map");

  // unit levels: shared levels live entirely in the kernel
  auto unit_levels = [](const Condition& c) {
    std::set<Ordinal> l;
    for (const auto& p : c.points())
      if (p.in_unit()) l.insert(p.pi);
    return l;
  };
  auto in_kernel = [&prof](const Point& p) {
    return std::find(prof.kernel.begin(), prof.kernel.end(), p) != prof.kernel.end();
  };
  for (const auto& lv : unit_levels(pa)) {
    if (!unit_levels(pb).count(lv)) continue;
    for (const auto& c : {&pa, &pb})
      for (const auto& p : c->points())
        if (p.in_unit() && p.pi == lv && !in_kernel(p))
          r.add("level-kernel", "shared unit level " + lv.str() + " holds non-kernel " + p.str());
  }

  // block bookkeeping
  auto blocks_met = [](const Condition& c) {
    std::set<std::pair<Ordinal, std::uint32_t>> bs;
    for (const auto& p : c.points())
      if (p.in_u()) bs.insert({p.block_alpha, p.zeta});
    return bs;
  };
  auto ba = blocks_met(pa), bb = blocks_met(pb);
  if (ba.size() != bb.size()) r.add("block-count", "conditions meet different block counts");
  for (const auto& blk : ba) {
    if (!bb.count(blk)) continue;
    // a shared block must agree pointwise across the pair
    for (const auto& c : {&pa, &pb})
      for (const auto& p : c->points())
        if (p.in_u() && p.block_alpha == blk.first && p.zeta == blk.second && !in_kernel(p))
          r.add("block-kernel", "shared block holds non-kernel " + p.str());
  }
  // matching presence of the unit level just above a met block's base
  for (const auto& blk : ba) {
    Ordinal lvl = s.gamma(blk.first).succ();
    auto meets = [&lvl](const Condition& c) {
      for (const auto& p : c.points())
        if (p.in_unit() && p.pi == lvl) return true;
      return false;
    };
    if (!meets(pa) && meets(pb))
      r.add("block-top-level", "only one side holds unit points at level " + lvl.str());
  }
  for (const auto& blk : bb) {
    Ordinal lvl = s.gamma(blk.first).succ();
    auto meets = [&lvl](const Condition& c) {
      for (const auto& p : c.points())
        if (p.in_unit() && p.pi == lvl) return true;
      return false;
    };
    if (!meets(pb) && meets(pa))
      r.add("block-top-level", "only one side holds unit points at level " + lvl.str());
  }

  // structural isomorphism
  for (const auto& [a1, b1] : gmap)
    for (const auto& [a2, b2] : gmap) {
      std::size_t ia1 = *pa.find(a1), ia2 = *pa.find(a2);
      std::size_t ib1 = *pb.find(b1), ib2 = *pb.find(b2);
      if (pa.less(ia1, ia2) != pb.less(ib1, ib2))
        r.add("iso-order", a1.str() + " vs " + a2.str() + ": order disagrees under the map");
      if (a1 == a2) continue;
      auto va = pa.inf_of(std::min(ia1, ia2), std::max(ia1, ia2));
      auto vb = pb.inf_of(std::min(ib1, ib2), std::max(ib1, ib2));
      std::set<Point> imga, imgb;
      for (auto v : va) imga.insert(prof.g(pa.pt(v)));
      for (auto v : vb) imgb.insert(pb.pt(v));
      if (imga != imgb)
        r.add("iso-infimum", "{" + a1.str() + ", " + a2.str() + "}: infima disagree");
    }
  for (const auto& [a, b] : gmap) {
    if (a.in_unit() != b.in_unit())
      r.add("iso-unit", a.str() + " -> " + b.str() + " changes unit membership");
    if (a.in_u1() != b.in_u1() || a.in_u2() != b.in_u2())
      r.add("iso-shape", a.str() + " -> " + b.str() + " changes row/top shape");
    if (t.first_level(a.pi) != t.first_level(b.pi))
      r.add("iso-first-level", a.str() + " -> " + b.str() + " changes the start level");
  }
  for (const auto& [a1, b1] : gmap)
    for (const auto& [a2, b2] : gmap) {
      if (a1.same_block(a2) != b1.same_block(b2))
        r.add("iso-block-pattern", a1.str() + "," + a2.str() + ": block pattern disagrees");
      if ((a1.pi_minus() == a2.pi_minus()) != (b1.pi_minus() == b2.pi_minus()))
        r.add("iso-base-pattern", a1.str() + "," + a2.str() + ": base-level pattern disagrees");
    }

  // index classes for the non-top points
  for (const auto& [a, b] : gmap) {
    if (a.in_u2()) continue;
    IndexClass cls;
    if (in_kernel(a))
      cls = IndexClass::Kernel;
    else if (a.in_unit() && b.in_unit() && a.pi != b.pi)
      cls = IndexClass::UnitMoved;
    else if (a.in_u1() && b.in_u1() && !a.same_block(b) && a.pi == b.pi)
      cls = IndexClass::BlockTurned;
    else if (a.in_u1() && b.in_u1() && a.pi != b.pi)
      cls = IndexClass::BlockMoved;
    else {
      r.add("class-partition", a.str() + " -> " + b.str() + " fits no index class");
      continue;
    }
    prof.classes.push_back(cls);
  }

  for (const auto& p : pa.points())
    if (!p.in_u2() && !in_kernel(p)) prof.trace_a.push_back(p.pi);
  for (const auto& p : pb.points())
    if (!p.in_u2() && !in_kernel(p)) prof.trace_b.push_back(p.pi);

  if (!r.ok()) return r;
  return prof;
}

// adequacy of the traces on every big-endpoint interval they touch
inline AdequacyReport admissible_check(IntervalTree& t,
                                       const std::vector<std::vector<Ordinal>>& traces) {
  AdequacyReport out;
  for (const Ordinal& b : t.universe().big_set) {
    Interval I = t.j_interval(b);
    std::vector<std::vector<Ordinal>> family;
    for (const auto& c : traces) {
      std::vector<Ordinal> cut;
      for (const auto& x : c)
        if (I.contains(x) && t.e_member(I, x)) cut.push_back(x);
      if (!cut.empty()) family.push_back(std::move(cut));
    }
    if (family.size() < 2) continue;
    AdequacyReport rep = adequacy_check(family, intersection_rule(t, I));
    out.pairs_checked += rep.pairs_checked;
    out.violations.insert(out.violations.end(), rep.violations.begin(), rep.violations.end());
    if (rep.domain_error) {
      out.domain_error = true;
      out.domain_detail = rep.domain_detail;
    }
  }
  return out;
}

inline Condition amalgamate(IntervalTree& t, const SplitResult& s, const Condition& pa,
                            const Condition& pb, const ThinningProfile& prof) {
  if (!admissible_check(t, {prof.trace_a, prof.trace_b}).pass())
    throw ProfileInvalid("traces are not admissible");

  std::vector<Point> pts = pa.points();
  for (const auto& p : pb.points()) pts.push_back(p);

  auto in_kernel = [&prof](const Point& p) {
    return std::find(prof.kernel.begin(), prof.kernel.end(), p) != prof.kernel.end();
  };

  // order: both orders plus composition through the kernel
  std::vector<std::pair<Point, Point>> strict;
  auto emit = [&strict](const Condition& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j)
        if (c.less(i, j)) strict.emplace_back(c.pt(i), c.pt(j));
  };
  emit(pa);
  emit(pb);

  // infima: keep both tables; cross pairs get the level-filtered lower bounds
  std::vector<std::pair<std::pair<Point, Point>, std::vector<Point>>> infima;
  auto emit_inf = [&infima](const Condition& c) {
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j)
        infima.push_back({{c.pt(i), c.pt(j)}, [&] {
                            std::vector<Point> v;
                            for (auto k : c.inf_of(i, j)) v.push_back(c.pt(k));
                            return v;
                          }()});
  };
  emit_inf(pa);
  emit_inf(pb);

  Condition base = Condition::make(pts, strict, infima);

  // cross infima need the closed order, so rebuild with them afterwards
  std::vector<std::pair<std::pair<Point, Point>, std::vector<Point>>> cross;
  for (const auto& a : pa.points()) {
    if (in_kernel(a)) continue;
    for (const auto& b : pb.points()) {
      if (in_kernel(b)) continue;
      std::size_t ia = *base.find(a), ib = *base.find(b);
      if (base.comparable(ia, ib)) continue;
      LazySet h = h_pair(t, a, b);
      std::vector<Point> val;
      for (std::size_t w = 0; w < base.size(); ++w)
        if (base.leq(w, ia) && base.leq(w, ib) && h.contains(base.pt(w).pi))
          val.push_back(base.pt(w));
      cross.push_back({{a, b}, std::move(val)});
    }
  }
  Condition out = base.extended({}, {}, cross);
  ValidationReport rep = validate_condition(t, s, out);
  if (!rep.ok()) throw ProfileInvalid("amalgam failed validation:\n" + rep.str());
  return out;
}

// -------------------- independent bounded common extension ------------------

struct Exhausted {
  std::string reason;
};

using OracleOutcome = std::variant<Condition, Exhausted>;

// complete a shape whose input infima are fixed: unset incomparable pairs get
// their maximal common lower bounds, then the whole thing must validate
inline std::optional<Condition> canonical_infima(IntervalTree& t, const SplitResult& s,
                                                 const Condition& shape) {
  std::vector<std::pair<std::pair<Point, Point>, std::vector<Point>>> infima;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (std::size_t j = i + 1; j < shape.size(); ++j) {
      if (shape.comparable(i, j) || shape.inf_explicit(i, j)) continue;
      auto clb = shape.lower_bounds(i, j);
      std::vector<Point> maximal;
      for (auto u : clb) {
        bool dominated = false;
        for (auto v : clb)
          if (v != u && shape.leq(u, v)) dominated = true;
        if (!dominated) maximal.push_back(shape.pt(u));
      }
      infima.push_back({{shape.pt(i), shape.pt(j)}, std::move(maximal)});
    }
  Condition cand = shape.extended({}, {}, infima);
  ValidationReport rep = validate_condition(t, s, cand);
  if (!rep.ok()) return std::nullopt;
  return cand;
}

inline OracleOutcome brute_force_common_extension(IntervalTree& t, const SplitResult& s,
                                                  const Condition& pa, const Condition& pb,
                                                  std::size_t max_points) {
  // shared pairs must carry identical infima in both inputs
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = i + 1; j < pa.size(); ++j) {
      auto bi = pb.find(pa.pt(i)), bj = pb.find(pa.pt(j));
      if (!bi || !bj) continue;
      auto va = pa.inf_of(i, j);
      auto vb = pb.inf_of(std::min(*bi, *bj), std::max(*bi, *bj));
      std::vector<Point> wa, wb;
      for (auto v : va) wa.push_back(pa.pt(v));
      for (auto v : vb) wb.push_back(pb.pt(v));
      if (wa != wb) return Exhausted{"inputs disagree on a shared infimum"};
    }

  std::vector<Point> pts = pa.points();
  for (const auto& p : pb.points()) pts.push_back(p);
  std::vector<std::pair<Point, Point>> strict;
  std::vector<std::pair<std::pair<Point, Point>, std::vector<Point>>> fixed;
  for (const auto* c : {&pa, &pb}) {
    for (std::size_t i = 0; i < c->size(); ++i)
      for (std::size_t j = 0; j < c->size(); ++j)
        if (c->less(i, j)) strict.emplace_back(c->pt(i), c->pt(j));
    for (std::size_t i = 0; i < c->size(); ++i)
      for (std::size_t j = i + 1; j < c->size(); ++j) {
        std::vector<Point> v;
        for (auto k : c->inf_of(i, j)) v.push_back(c->pt(k));
        fixed.push_back({{c->pt(i), c->pt(j)}, std::move(v)});
      }
  }
  Condition shape = Condition::make(pts, strict, fixed);
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (std::size_t j = 0; j < shape.size(); ++j)
      if (shape.less(i, j) && !(shape.pt(i).pi < shape.pt(j).pi))
        return Exhausted{"the union of the orders is cyclic"};
  if (shape.size() > max_points) return Exhausted{"merged point set exceeds the bound"};

  auto attempt = [&](const std::vector<std::pair<Point, Point>>& extra_rel,
                     const std::vector<Point>& extra_pts) -> std::optional<Condition> {
    std::vector<Point> ps = pts;
    ps.insert(ps.end(), extra_pts.begin(), extra_pts.end());
    std::vector<std::pair<Point, Point>> st = strict;
    st.insert(st.end(), extra_rel.begin(), extra_rel.end());
    Condition sh = Condition::make(ps, st, fixed);
    if (!extends_order_only(sh, pa) || !extends_order_only(sh, pb)) return std::nullopt;
    auto cond = canonical_infima(t, s, sh);
    if (!cond) return std::nullopt;
    if (!extends(*cond, pa) || !extends(*cond, pb)) return std::nullopt;
    return cond;
  };

  if (auto c = attempt({}, {})) return *c;

  // orient one unrelated pair, with a fresh walk scaffold when the plain
  // relation lacks witnesses
  std::vector<std::pair<std::size_t, std::size_t>> cand;
  for (std::size_t i = 0; i < shape.size(); ++i)
    for (std::size_t j = 0; j < shape.size(); ++j)
      if (!shape.comparable(i, j) && shape.pt(i).pi < shape.pt(j).pi) cand.emplace_back(i, j);
  for (const auto& [i, j] : cand)
    if (auto c = attempt({{shape.pt(i), shape.pt(j)}}, {})) return *c;
  for (const auto& [i, j] : cand) {
    if (shape.size() + 1 > max_points) break;
    std::vector<Ordinal> chain;
    try {
      chain = walk_closure(t, shape.pt(i).pi, shape.pt(j).pi, 16);
    } catch (const UnreachableTarget&) {
      continue;
    }
    std::uint64_t eta = std::max(pa.max_unit_eta(), pb.max_unit_eta()) + 2;
    if (shape.size() + chain.size() - 1 > max_points) continue;
    std::vector<Point> fresh_pts;
    std::vector<std::pair<Point, Point>> rel;
    Point prev = shape.pt(i);
    for (std::size_t k = 1; k < chain.size(); ++k) {
      Point np = Point::unit(chain[k], eta);
      fresh_pts.push_back(np);
      rel.emplace_back(prev, np);
      prev = np;
    }
    rel.emplace_back(prev, shape.pt(j));
    if (auto c = attempt(rel, fresh_pts)) return *c;
  }
  std::size_t budget = 4000;
  for (std::size_t i = 0; i < cand.size(); ++i)
    for (std::size_t j = i + 1; j < cand.size(); ++j) {
      if (budget-- == 0) return Exhausted{"relation search budget exhausted"};
      if (auto c = attempt({{shape.pt(cand[i].first), shape.pt(cand[i].second)},
                            {shape.pt(cand[j].first), shape.pt(cand[j].second)}},
                           {}))
        return *c;
    }
  return Exhausted{"no common extension within the bound"};
}

// Claim-style transfer property: an interval seeing a related pair's level
// and the image of the lower point also sees the image of the upper point.
inline SuiteReport check_interval_transfer(IntervalTree& t, const Condition& pa,
                                           const Condition& pb, const ThinningProfile& prof) {
  SuiteReport rep;
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = 0; j < pa.size(); ++j) {
      if (!pa.less(i, j)) continue;
      const Point &u = pa.pt(i), &v = pa.pt(j);
      if (u.in_u2() || v.in_u2()) continue;
      Point gu = prof.g(u), gv = prof.g(v);
      std::size_t depth = std::max(t.first_level(u.pi), t.first_level(v.pi)) + 2;
      for (std::size_t n = 0; n <= depth; ++n) {
        Interval I = t.locate(u.pi, n);
        ++rep.checked;
        if (I.contains(gu.pi) && I.contains(v.pi) && !I.contains(gv.pi))
          rep.violations.push_back(I.str() + " sees " + u.str() + "," + gu.str() + "," + v.str() +
                                   " but not " + gv.str());
        if (I.contains(v.pi) && I.contains(gv.pi) && !I.contains(gu.pi))
          rep.violations.push_back(I.str() + " sees " + u.str() + "," + v.str() + "," + gv.str() +
                                   " but not " + gu.str());
      }
    }
  return rep;
}

// Claim-style origin property: inside the separation interval of a cross
// pair, a strictly interior common lower bound forces the interval to
// strictly contain the distinguished interval of each block origin involved.
inline SuiteReport check_origin_containment(IntervalTree& t, const Condition& amalgam,
                                            const Condition& pa, const Condition& pb) {
  SuiteReport rep;
  for (const auto& sp : pa.points()) {
    if (pb.contains(sp)) continue;
    for (const auto& tp : pb.points()) {
      if (pa.contains(tp)) continue;
      std::size_t is = *amalgam.find(sp), it = *amalgam.find(tp);
      if (amalgam.comparable(is, it)) continue;
      Point lo = sp, hi = tp;
      if (hi.pi_minus() < lo.pi_minus()) std::swap(lo, hi);
      if (!(lo.pi_minus() < hi.pi_minus())) continue;
      Separation sep = separation(t, lo.pi_minus(), hi.pi_minus());
      for (std::size_t w = 0; w < amalgam.size(); ++w) {
        if (!(amalgam.less(w, is) && amalgam.less(w, it))) continue;
        const Ordinal& wl = amalgam.pt(w).pi;
        if (!sep.I.contains(wl) || !(wl > sep.I.lo)) continue;
        ++rep.checked;
        for (const Point* end : {&lo, &hi}) {
          if (!end->in_u()) continue;
          Interval jo = t.j_interval(end->origin());
          if (!(jo.subset_of(sep.I) && jo != sep.I))
            rep.violations.push_back("separation " + sep.I.str() +
                                     " does not strictly contain " + jo.str() + " for " +
                                     end->str());
        }
      }
    }
  }
  return rep;
}

}  // namespace lcslab
