#pragma once

// Splitting the weight function: f agrees with f0 away from the designated
// big points, and f1 concentrates the Big weight on the closed blocks
// [gamma_b, b] attached to the weighted big points with gamma_b < b.

#include <string>
#include <unordered_map>
#include <vector>

#include "lcslab/interval_tree.hpp"
#include "lcslab/ordinal.hpp"
#include "lcslab/universe.hpp"

namespace lcslab {

struct SplitResult {
  std::vector<Ordinal> L;       // weighted big points
  std::vector<Ordinal> LTilde;  // those with gamma_b strictly below b
  std::unordered_map<Ordinal, Ordinal, OrdinalHash> gamma_of;  // b -> gamma_b, b in L
  std::vector<ClosedSpan> f1_big;                              // [gamma_b, b] for b in LTilde
  const UniverseSpec* u = nullptr;

  bool f0_is_big(const Ordinal& a) const { return u->f_is_big(a) && !u->in_big_set(a); }
  bool f1_is_big(const Ordinal& a) const {
    for (const auto& s : f1_big)
      if (s.contains(a)) return true;
    return false;
  }
  Ordinal gamma(const Ordinal& b) const { return gamma_of.at(b); }
  bool in_ltilde(const Ordinal& b) const {
    for (const auto& x : LTilde)
      if (x == b) return true;
    return false;
  }
};

inline SplitResult split_f(const UniverseSpec& u, IntervalTree& t) {
  if (!(t.universe().delta == u.delta) || t.universe().big_set != u.big_set)
    throw OrdinalError("split_f: tree was built from a different universe");
  SplitResult s;
  s.u = &t.universe();
  s.L = u.big_weighted();
  for (const Ordinal& b : s.L) {
    Ordinal gb = t.gamma(t.j_interval(b));
    s.gamma_of.emplace(b, gb);
    if (gb < b) {
      s.LTilde.push_back(b);
      s.f1_big.push_back(ClosedSpan{gb, b});
    }
  }
  return s;
}

// The eight structural facts tying gamma_b, the distinguished intervals and
// the level bookkeeping together; evaluated for every b in LTilde.
inline ValidationReport check_star(IntervalTree& t, const SplitResult& s) {
  ValidationReport r;
  const UniverseSpec& u = t.universe();

  // fact 1: unshadowed big points sit inside some block (gamma_b', b')
  for (const Ordinal& b : s.L) {
    if (s.in_ltilde(b)) continue;
    bool covered = false;
    for (const Ordinal& bp : s.LTilde)
      if (s.gamma(bp) < b && b < bp) covered = true;
    if (!covered) r.add("fact1", "no block strictly covers " + b.str());
  }

  for (const Ordinal& b : s.LTilde) {
    Ordinal gb = s.gamma(b);
    std::size_t lb = t.first_level(b);
    std::string tag = " at b = " + b.str();

    // fact 2: level bookkeeping of gamma_b
    if (t.first_level(gb) != lb + 1)
      r.add("fact2", "first_level(gamma) != first_level(b)+1" + tag);
    if (t.locate(b, lb) != Interval{b, b.succ()})
      r.add("fact2", "level-l(b) interval of b is not the singleton" + tag);
    if (t.locate(gb, lb + 1) != Interval{gb, gb + Ordinal(2)})
      r.add("fact2", "level-(l(b)+1) interval of gamma_b is not the pair" + tag);

    // fact 3: blocks are pairwise disjoint
    for (const Ordinal& b2 : s.LTilde) {
      if (b2 == b) continue;
      bool disjoint = s.gamma(b2) > b || gb > b2;
      if (!disjoint) r.add("fact3", "blocks of " + b.str() + " and " + b2.str() + " meet");
    }

    Interval jb = t.j_interval(b);
    Interval pair{gb, gb + Ordinal(2)};

    // fact 4: J(b) is gamma_b's interval at J(b)'s own level, and the next
    // level holds both J(gamma_b) and the pair block
    std::size_t n = 0;
    bool found = false;
    for (std::size_t i = 0; i <= lb + 2 && !found; ++i)
      if (t.locate(gb, i) == jb) {
        n = i;
        found = true;
      }
    if (!found)
      r.add("fact4", "J(b) is not along gamma_b's chain" + tag);
    else {
      if (!t.in_level(t.j_interval(gb), n + 1))
        r.add("fact4", "J(gamma_b) not one level below J(b)" + tag);
      if (t.locate(gb, n + 1) != pair)
        r.add("fact4", "pair block not one level below J(b)" + tag);
    }

    // fact 5: J(b) spans from its parent's start
    Interval above = t.locate(b, lb - 1);
    if (jb != Interval{above.lo, b}) r.add("fact5", "J(b) != [parent start, b)" + tag);

    // fact 6: gamma_b and b share the level-(l(b)-1) interval; J(gamma_b) spans to gamma_b
    if (t.locate(gb, lb - 1) != above)
      r.add("fact6", "gamma_b leaves b's chain early" + tag);
    if (t.j_interval(gb) != Interval{above.lo, gb})
      r.add("fact6", "J(gamma_b) != [parent start, gamma_b)" + tag);

    // fact 7: a strict superset of J(b) on gamma_b's chain strictly contains
    // the pair block one level further down
    for (std::size_t i = 0; i <= lb + 1; ++i) {
      Interval K = t.locate(gb, i);
      if (jb.subset_of(K) && K != jb) {
        Interval nxt = t.locate(gb, i + 1);
        if (!(pair.subset_of(nxt) && nxt != pair))
          r.add("fact7", "level-" + std::to_string(i + 1) + " interval fails containment" + tag);
      }
    }

    // fact 8: strict ancestors of the pair block start strictly below gamma_b
    for (const Interval& K : t.ancestors(pair))
      if (!(gb > K.lo)) r.add("fact8", "ancestor " + K.str() + " starts at gamma_b" + tag);
    (void)u;
  }
  return r;
}

}  // namespace lcslab
