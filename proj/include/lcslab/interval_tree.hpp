#pragma once

// The refinement hierarchy of ordinal intervals over [0, delta): level 0 is
// the whole line, and each interval splits along its distinguished closed
// cofinal subset E(I). Intervals ending at a weighted big point carry the
// drop-down ordinal gamma(I). Levels are materialized lazily and memoized.

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lcslab/ordinal.hpp"
#include "lcslab/universe.hpp"

namespace lcslab {

struct Interval {
  Ordinal lo, hi;  // [lo, hi)
  bool contains(const Ordinal& x) const { return lo <= x && x < hi; }
  bool subset_of(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
  bool operator!=(const Interval& o) const { return !(*this == o); }
  bool operator<(const Interval& o) const {
    if (lo != o.lo) return lo < o.lo;
    return hi < o.hi;
  }
  std::string str() const { return "[" + lo.str() + ", " + hi.str() + ")"; }
};

struct NotInTree : OrdinalError {
  explicit NotInTree(const Interval& I) : OrdinalError("interval not in tree: " + I.str()) {}
};
struct NotApplicable : OrdinalError {
  NotApplicable() : OrdinalError("gamma: interval endpoint is not a weighted big point") {}
};
struct NoWitness : OrdinalError {
  explicit NoWitness(const Interval& I)
      : OrdinalError("gamma: no qualifying drop-down ordinal inside " + I.str()) {}
};
struct ZeroArgument : OrdinalError {
  ZeroArgument() : OrdinalError("j_interval: argument must be positive") {}
};

class IntervalTree {
 public:
  explicit IntervalTree(UniverseSpec u) : u_(std::move(u)) {
    u_.normalize();
    if (!validate_spec(u_).ok())
      throw OrdinalError("IntervalTree: universe spec fails validation:\n" +
                         validate_spec(u_).str());
  }

  const UniverseSpec& universe() const { return u_; }
  Interval root() const { return Interval{Ordinal(0), u_.delta}; }

  // E(I): strictly increasing, starts at I.lo, cofinal in I when I.hi is a
  // limit; complete when the split is finite. Returns at least min(k, |E|)
  // entries; repeated calls only ever extend.
  std::vector<Ordinal> e_prefix(const Interval& I, std::size_t k) {
    std::lock_guard<std::recursive_mutex> g(mu_);
    Node& n = node(I);
    extend(I, n, k);
    std::vector<Ordinal> out(n.e.begin(),
                             n.e.begin() + static_cast<long>(std::min(k, n.e.size())));
    return out;
  }
  bool e_is_finite(const Interval& I) {
    std::lock_guard<std::recursive_mutex> g(mu_);
    return node(I).finite_e;
  }
  // decide membership in E(I) for x in [I.lo, I.hi)
  bool e_member(const Interval& I, const Ordinal& x) {
    std::lock_guard<std::recursive_mutex> g(mu_);
    if (!I.contains(x)) return false;
    Node& n = node(I);
    while (!n.finite_e && n.e.back() < x) extend(I, n, n.e.size() + 8);
    for (const auto& e : n.e)
      if (e == x) return true;
    return false;
  }

  // drop-down ordinal of an interval ending at a weighted big point
  Ordinal gamma(const Interval& I) {
    std::lock_guard<std::recursive_mutex> g(mu_);
    if (!is_weighted_big(I.hi)) throw NotApplicable();
    Node& n = node(I);
    return n.gamma;
  }

  // consecutive pieces of I along E(I); lazily enumerable when infinite
  std::vector<Interval> children_prefix(const Interval& I, std::size_t k) {
    std::lock_guard<std::recursive_mutex> g(mu_);
    Node& n = node(I);
    extend(I, n, k + 1);
    std::vector<Interval> out;
    for (std::size_t i = 0; i + 1 < n.e.size() && out.size() < k; ++i)
      out.push_back(Interval{n.e[i], n.e[i + 1]});
    if (n.finite_e && out.size() < k) out.push_back(Interval{n.e.back(), I.hi});
    return out;
  }

  Interval child_containing(const Interval& I, const Ordinal& a) {
    std::lock_guard<std::recursive_mutex> g(mu_);
    if (!I.contains(a)) throw OrdinalError("child_containing: " + a.str() + " not in " + I.str());
    Node& n = node(I);
    while (!n.finite_e && n.e.back() <= a) extend(I, n, n.e.size() + 8);
    std::size_t lo = 0;
    for (std::size_t i = 0; i < n.e.size(); ++i)
      if (n.e[i] <= a) lo = i;
    if (lo + 1 < n.e.size()) return Interval{n.e[lo], n.e[lo + 1]};
    return Interval{n.e[lo], I.hi};  // final piece of a finite split
  }

  // the level-n interval containing a
  Interval locate(const Ordinal& a, std::size_t n) {
    if (!(a < u_.delta)) throw OutOfUniverse();
    Interval I = root();
    for (std::size_t i = 0; i < n; ++i) I = child_containing(I, a);
    return I;
  }

  // least level at which some interval starts at a
  std::size_t first_level(const Ordinal& a) {
    if (!(a < u_.delta)) throw OutOfUniverse();
    Interval I = root();
    std::size_t n = 0;
    while (I.lo != a) {
      I = child_containing(I, a);
      ++n;
    }
    return n;
  }

  bool in_level(const Interval& I, std::size_t n) {
    if (!(I.lo < u_.delta)) return false;
    return locate(I.lo, n) == I;
  }

  // the distinguished interval ending at z: the left neighbour at level
  // first_level(z), which at desk scale always exists; the containing
  // interval one level up is the fallback for a limit of E that never
  // materializes here.
  Interval j_interval(const Ordinal& z) {
    std::lock_guard<std::recursive_mutex> g(mu_);
    if (z.is_zero()) throw ZeroArgument();
    if (!(z < u_.delta)) throw OutOfUniverse();
    std::size_t l = first_level(z);
    Interval P = locate(z, l - 1);
    Node& n = node(P);
    while (!n.finite_e && n.e.back() < z) extend(P, n, n.e.size() + 8);
    for (std::size_t i = 0; i < n.e.size(); ++i)
      if (n.e[i] == z && i > 0) return Interval{n.e[i - 1], z};
    return P;
  }

  // proper ancestors of I, outermost first (root included)
  std::vector<Interval> ancestors(const Interval& I) {
    std::lock_guard<std::recursive_mutex> g(mu_);
    std::vector<Interval> chain;
    Interval K = root();
    while (K != I) {
      chain.push_back(K);
      if (!K.contains(I.lo)) throw NotInTree(I);
      Interval next = child_containing(K, I.lo);
      if (next == K) throw NotInTree(I);
      K = next;
      if (!(I.subset_of(K))) throw NotInTree(I);
    }
    return chain;
  }

  bool is_weighted_big(const Ordinal& x) const { return u_.in_big_set(x) && u_.f_is_big(x); }

 private:
  enum class Kind { BigMain, LimitPlain, SuccInfinite, SuccFinite };

  struct Node {
    Kind kind;
    Ordinal gamma;  // meaningful iff hi is a weighted big point
    std::vector<Ordinal> e;
    bool finite_e = false;
    std::uint64_t fs_index = 0;  // tail generator state
  };

  Node& node(const Interval& I) {
    auto it = memo_.find(I);
    if (it != memo_.end()) return it->second;
    if (I == root()) return memo_.emplace(I, build(I)).first->second;
    // force materialization through the ancestry so the interval is genuine
    (void)ancestors(I);
    it = memo_.find(I);
    if (it == memo_.end()) return memo_.emplace(I, build(I)).first->second;
    return it->second;
  }

  Node build(const Interval& I) {
    Node n;
    const Ordinal& lo = I.lo;
    const Ordinal& hi = I.hi;
    if (is_weighted_big(hi)) {
      n.gamma = compute_gamma(I);
      if (n.gamma < hi) {
        n.kind = Kind::BigMain;
        n.finite_e = false;
        n.e = {lo, n.gamma, n.gamma + Ordinal(2)};
        return n;
      }
      // shadowed: treated as a plain limit endpoint below
    }
    if (hi.is_limit()) {
      n.kind = Kind::LimitPlain;
      n.finite_e = false;
      n.e = {lo};
      return n;
    }
    // successor endpoint hi = b' + 1
    Ordinal bprime = hi.pred();
    std::optional<Ordinal> gp;  // greatest limit <= b'
    if (Ordinal lp = bprime.limit_part(); lp.is_limit()) gp = lp;
    if (gp && *gp > lo) {
      n.kind = Kind::SuccInfinite;
      n.finite_e = true;
      n.e.push_back(lo);
      for (Ordinal x = *gp; x <= bprime; x = x.succ()) n.e.push_back(x);
      return n;
    }
    n.kind = Kind::SuccFinite;
    n.finite_e = true;
    for (Ordinal x = lo; x <= bprime; x = x.succ()) n.e.push_back(x);
    return n;
  }

  // least limit ordinal in (I.lo, I.hi) outside the big set with f Big on
  // [gamma, I.hi]; the endpoint itself when a strictly older weighted-big
  // interval shadows I.
  Ordinal compute_gamma(const Interval& I) {
    for (const Interval& K : ancestors(I)) {
      if (K == root()) continue;
      if (!is_weighted_big(K.hi)) continue;
      Ordinal gk = node(K).gamma;
      if (gk < K.hi && I.lo > gk && I.hi <= K.hi) return I.hi;
    }
    const ClosedSpan* piece = u_.big_piece(I.hi);
    if (!piece) throw NoWitness(I);
    Ordinal cand = std::max(piece->lo, I.lo.succ(),
                            [](const Ordinal& a, const Ordinal& b) { return a < b; });
    cand = cand.round_up_to_limit();
    while (u_.in_big_set(cand)) cand = cand + Ordinal::omega();
    if (!(cand < I.hi)) throw NoWitness(I);
    return cand;
  }

  // grow E(I) to at least k entries (infinite kinds only)
  void extend(const Interval& I, Node& n, std::size_t k) {
    if (n.finite_e) return;
    while (n.e.size() < k) {
      Ordinal cand = fundamental_seq(I.hi, n.fs_index++) + Ordinal(1);
      if (cand > n.e.back()) n.e.push_back(cand);
    }
  }

  UniverseSpec u_;
  std::map<Interval, Node> memo_;
  mutable std::recursive_mutex mu_;
};

}  // namespace lcslab
