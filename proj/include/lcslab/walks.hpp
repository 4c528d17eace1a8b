#pragma once

// Separation levels and walks between ordinals along the interval hierarchy,
// plus the two membership statements about walks into a block's drop-down
// ordinal, packaged as checkable suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lcslab/decompose.hpp"
#include "lcslab/interval_tree.hpp"

namespace lcslab {

struct EqualArguments : OrdinalError {
  EqualArguments() : OrdinalError("separation: arguments must differ") {}
};

struct Separation {
  std::size_t k = 0;
  Interval I, J, K;  // I = common level-k interval, J/K = the level-(k+1) split
};

inline Separation separation(IntervalTree& t, const Ordinal& a, const Ordinal& b) {
  if (a == b) throw EqualArguments();
  if (!(a < t.universe().delta) || !(b < t.universe().delta)) throw OutOfUniverse();
  Separation s;
  Interval ia = t.root(), ib = t.root();
  std::size_t n = 0;
  while (true) {
    Interval na = t.child_containing(ia, a);
    Interval nb = t.child_containing(ib, b);
    if (na != nb) {
      s.k = n;
      s.I = ia;
      s.J = na;
      s.K = nb;
      return s;
    }
    ia = na;
    ib = nb;
    ++n;
  }
}

struct Walk {
  std::vector<Ordinal> seq;  // first = a, last = b
  bool contains(const Ordinal& x) const {
    for (const auto& v : seq)
      if (v == x) return true;
    return false;
  }
  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < seq.size(); ++i) s += (i ? ", " : "") + seq[i].str();
    return s + ">";
  }
  // interior entries with adjacent duplicates collapsed (strictly increasing)
  std::vector<Ordinal> collapsed_interior() const {
    std::vector<Ordinal> v;
    for (std::size_t i = 1; i + 1 < seq.size(); ++i)
      if (v.empty() || v.back() != seq[i]) v.push_back(seq[i]);
    return v;
  }
};

// the canonical path from a up to b: climb a's chain to the separation level,
// then descend b's chain
inline Walk walk(IntervalTree& t, const Ordinal& a, const Ordinal& b) {
  if (!(a < b)) throw OrdinalError("walk: need a < b");
  Separation s = separation(t, a, b);
  std::size_t la = t.first_level(a);
  std::size_t lb = t.first_level(b);
  Walk w;
  w.seq.push_back(a);
  if (la > s.k + 1)
    for (std::size_t n = la; n >= s.k + 1; --n) w.seq.push_back(t.locate(a, n).hi);
  else
    w.seq.push_back(t.locate(a, s.k + 1).hi);
  for (std::size_t n = s.k + 1; n < lb; ++n) w.seq.push_back(t.locate(b, n).lo);
  w.seq.push_back(b);
  return w;
}

// ------------------------- proposition suites ------------------------------

struct SuiteReport {
  std::size_t checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// sample ordinals strictly below bound, biased toward tree landmarks
class OrdinalSampler {
 public:
  OrdinalSampler(IntervalTree& t, std::uint64_t seed) : t_(t), rng_(seed) {}

  Ordinal below(const Ordinal& bound) {
    for (int tries = 0; tries < 64; ++tries) {
      Ordinal cand = candidate(bound);
      if (cand < bound) return cand;
    }
    return Ordinal(rng_() % 4);
  }

 private:
  Ordinal candidate(const Ordinal& bound) {
    // walk down the tree a random number of steps, then pick a point in the
    // reached interval
    Interval I = t_.root();
    std::size_t depth = rng_() % 6;
    Ordinal probe = pick_in(I, bound);
    for (std::size_t i = 0; i < depth; ++i) {
      if (!I.contains(probe)) break;
      I = t_.child_containing(I, probe);
      probe = pick_in(I, bound);
    }
    return probe;
  }
  Ordinal pick_in(const Interval& I, const Ordinal& bound) {
    Ordinal base = I.lo;
    std::uint64_t jitter = rng_() % 5;
    Ordinal cand = base + Ordinal(jitter);
    if (cand < I.hi && cand < bound) return cand;
    return base;
  }

  IntervalTree& t_;
  std::mt19937_64 rng_;
};

// membership of gamma_b in the walk from below into gamma_b + 1
inline SuiteReport check_prop_gamma_in_walk(IntervalTree& t, const SplitResult& s,
                                            std::uint64_t seed, std::size_t samples) {
  SuiteReport r;
  OrdinalSampler sampler(t, seed);
  if (s.LTilde.empty()) return r;
  for (std::size_t i = 0; i < samples; ++i) {
    const Ordinal& b = s.LTilde[i % s.LTilde.size()];
    Ordinal gb = s.gamma(b);
    Ordinal a = sampler.below(gb);
    Walk w = walk(t, a, gb.succ());
    ++r.checked;
    if (!w.contains(gb))
      r.violations.push_back("gamma " + gb.str() + " missing from " + w.str());
  }
  return r;
}

// membership of the next anchor of J(gamma_b) in walks to gamma_b and gamma_b+1
inline SuiteReport check_prop_anchor_in_walk(IntervalTree& t, const SplitResult& s,
                                             std::uint64_t seed, std::size_t samples) {
  SuiteReport r;
  OrdinalSampler sampler(t, seed);
  if (s.LTilde.empty()) return r;
  std::mt19937_64 rng(seed ^ 0x9e37);
  for (std::size_t i = 0; i < samples; ++i) {
    const Ordinal& b = s.LTilde[i % s.LTilde.size()];
    Ordinal gb = s.gamma(b);
    Interval jg = t.j_interval(gb);
    // the left endpoint is excluded: from there the walk jumps straight to
    // gamma_b and the next anchor genuinely does not appear
    Ordinal a = jg.lo + Ordinal(1 + rng() % 7);
    if (!jg.contains(a)) a = jg.lo + Ordinal(1);
    // least anchor strictly above a; E(J(gamma_b)) is cofinal in it
    Ordinal em;
    for (std::size_t k = 4;; k += 4) {
      auto e = t.e_prefix(jg, k);
      bool found = false;
      for (const auto& x : e)
        if (x > a) {
          em = x;
          found = true;
          break;
        }
      if (found) break;
    }
    ++r.checked;
    Walk wa = walk(t, a, gb);
    Walk wb = walk(t, a, gb.succ());
    if (!wa.contains(em))
      r.violations.push_back("anchor " + em.str() + " missing from " + wa.str());
    if (!wb.contains(em))
      r.violations.push_back("anchor " + em.str() + " missing from " + wb.str());
  }
  return r;
}

// negative remark: from strictly below J(b), the walk to b skips gamma_b
inline SuiteReport check_prop_gamma_skipped(IntervalTree& t, const SplitResult& s,
                                            std::uint64_t seed, std::size_t samples) {
  SuiteReport r;
  OrdinalSampler sampler(t, seed);
  for (std::size_t i = 0; i < samples && !s.LTilde.empty(); ++i) {
    const Ordinal& b = s.LTilde[i % s.LTilde.size()];
    Interval jb = t.j_interval(b);
    if (jb.lo.is_zero()) continue;  // nothing strictly below
    Ordinal a = sampler.below(jb.lo);
    ++r.checked;
    Walk w = walk(t, a, b);
    if (w.contains(s.gamma(b)))
      r.violations.push_back("gamma " + s.gamma(b).str() + " appears in " + w.str());
  }
  return r;
}

}  // namespace lcslab
