#pragma once

// Pair functions over the interval anchors: the per-interval intersection
// rule, the global pair function assembled through separation data, the
// point-pair helper h, and the adequacy checker for finite families.

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "lcslab/interval_tree.hpp"
#include "lcslab/points.hpp"
#include "lcslab/walks.hpp"

namespace lcslab {

// countable set of ordinals given by membership plus bounded enumeration
struct LazySet {
  std::function<bool(const Ordinal&)> contains;
  std::function<std::vector<Ordinal>(const Ordinal&)> below;  // strictly below bound
  std::string label;

  static LazySet of_values(std::vector<Ordinal> vals, std::string label) {
    std::sort(vals.begin(), vals.end());
    LazySet s;
    s.label = std::move(label);
    s.contains = [vals](const Ordinal& x) {
      return std::binary_search(vals.begin(), vals.end(), x);
    };
    s.below = [vals](const Ordinal& bound) {
      std::vector<Ordinal> out;
      for (const auto& v : vals)
        if (v < bound) out.push_back(v);
      return out;
    };
    return s;
  }
  static LazySet empty() { return of_values({}, "{}"); }
};

// anchors of I strictly below both arguments (the intersection rule)
inline std::vector<Ordinal> anchors_below(IntervalTree& t, const Interval& I, const Ordinal& a,
                                          const Ordinal& b) {
  const Ordinal& m = a < b ? a : b;
  std::vector<Ordinal> out;
  std::size_t k = 8;
  while (true) {
    auto e = t.e_prefix(I, k);
    out.clear();
    for (const auto& x : e)
      if (x < m) out.push_back(x);
    if (out.size() < e.size() || (t.e_is_finite(I) && e.size() < k)) return out;
    k *= 2;
  }
}

// global pair function: separate, apply the interval's rule, adjoin the start
inline std::vector<Ordinal> g_pair_values(IntervalTree& t, const Ordinal& a, const Ordinal& b) {
  Separation s = separation(t, a, b);
  std::vector<Ordinal> out = anchors_below(t, s.I, s.J.lo, s.K.lo);
  if (std::find(out.begin(), out.end(), s.I.lo) == out.end()) out.push_back(s.I.lo);
  std::sort(out.begin(), out.end());
  return out;
}

inline LazySet g_pair(IntervalTree& t, const Ordinal& a, const Ordinal& b) {
  return LazySet::of_values(g_pair_values(t, a, b),
                            "G{" + a.str() + ", " + b.str() + "}");
}

// point-pair helper: global pair function of the base levels, the anchor set
// of the shared base's distinguished interval, or nothing
inline LazySet h_pair(IntervalTree& t, const Point& s1, const Point& s2) {
  Point lo = s1, hi = s2;
  if (hi.pi_minus() < lo.pi_minus()) std::swap(lo, hi);
  Ordinal a = lo.pi_minus(), b = hi.pi_minus();
  if (a < b) return g_pair(t, a, b);
  if (lo.same_block(hi)) return LazySet::empty();
  Interval j = t.j_interval(a);
  LazySet s;
  s.label = "E(" + j.str() + ")";
  IntervalTree* tp = &t;
  s.contains = [tp, j](const Ordinal& x) { return tp->e_member(j, x); };
  s.below = [tp, j](const Ordinal& bound) {
    std::vector<Ordinal> out;
    std::size_t k = 8;
    while (true) {
      auto e = tp->e_prefix(j, k);
      out.clear();
      for (const auto& x : e)
        if (x < bound) out.push_back(x);
      if (out.size() < e.size() || (tp->e_is_finite(j) && e.size() < k)) return out;
      k *= 2;
    }
  };
  return s;
}

// ---------------------------- adequacy -------------------------------------

struct AdequacyViolation {
  std::size_t set_a, set_b;  // indices into the family
  int clause;                // 1, 2 or 3
  Ordinal alpha, beta, tau;
};

struct AdequacyReport {
  bool domain_error = false;
  std::string domain_detail;
  std::vector<AdequacyViolation> violations;
  std::size_t pairs_checked = 0;
  bool pass() const { return !domain_error && violations.empty(); }
};

// F is a pair function on ordinals returning finite value sets
using PairFn = std::function<std::vector<Ordinal>(const Ordinal&, const Ordinal&)>;

inline PairFn intersection_rule(IntervalTree& t, const Interval& I) {
  IntervalTree* tp = &t;
  return [tp, I](const Ordinal& a, const Ordinal& b) { return anchors_below(*tp, I, a, b); };
}

inline AdequacyReport adequacy_check(const std::vector<std::vector<Ordinal>>& family,
                                     const PairFn& F) {
  AdequacyReport rep;
  auto value = [&](const Ordinal& x, const Ordinal& y) { return F(x, y); };
  auto contains = [](const std::vector<Ordinal>& v, const Ordinal& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  auto subset = [&](const std::vector<Ordinal>& v, const std::vector<Ordinal>& w) {
    for (const auto& x : v)
      if (!contains(w, x)) return false;
    return true;
  };
  // domain: values sit strictly below both arguments
  auto domain_ok = [&](const Ordinal& x, const Ordinal& y) {
    auto v = value(x, y);
    const Ordinal& m = x < y ? x : y;
    for (const auto& e : v)
      if (!(e < m)) {
        rep.domain_error = true;
        rep.domain_detail = "F{" + x.str() + "," + y.str() + "} reaches " + e.str();
        return false;
      }
    return true;
  };
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      ++rep.pairs_checked;
      const auto& A = family[i];
      const auto& B = family[j];
      std::vector<Ordinal> only_a, only_b, both;
      for (const auto& x : A)
        (contains(B, x) ? both : only_a).push_back(x);
      for (const auto& x : B)
        if (!contains(A, x)) only_b.push_back(x);
      for (const auto& al : only_a)
        for (const auto& be : only_b) {
          if (!domain_ok(al, be)) return rep;
          for (const auto& ta : both) {
            if (ta < al && ta < be && !contains(value(al, be), ta))
              rep.violations.push_back(AdequacyViolation{i, j, 1, al, be, ta});
            if (ta < be && ta != al && !subset(value(al, ta), value(al, be)))
              rep.violations.push_back(AdequacyViolation{i, j, 2, al, be, ta});
            if (ta < al && ta != be && !subset(value(be, ta), value(al, be)))
              rep.violations.push_back(AdequacyViolation{i, j, 3, al, be, ta});
          }
        }
    }
  return rep;
}

}  // namespace lcslab
