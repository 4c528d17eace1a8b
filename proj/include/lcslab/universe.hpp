#pragma once

// The input data of the construction at desk scale: a limit ordinal delta,
// a two-valued weight function f coded as disjoint closed intervals, the
// designated big-cofinality points, and the block-index bound Lambda.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "lcslab/ordinal.hpp"

namespace lcslab {

enum class CofClass { Zero, Successor, LimOmega, DesignatedBig };

inline const char* to_string(CofClass c) {
  switch (c) {
    case CofClass::Zero: return "Zero";
    case CofClass::Successor: return "Successor";
    case CofClass::LimOmega: return "LimOmega";
    case CofClass::DesignatedBig: return "DesignatedBig";
  }
  return "?";
}

struct OutOfUniverse : OrdinalError {
  OutOfUniverse() : OrdinalError("ordinal outside [0, delta]") {}
};

struct Violation {
  std::string rule;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> items;
  bool ok() const { return items.empty(); }
  void add(std::string rule, std::string detail) {
    items.push_back(Violation{std::move(rule), std::move(detail)});
  }
  std::string str() const {
    std::string s;
    for (const auto& v : items) s += v.rule + ": " + v.detail + "\n";
    return s;
  }
};

// closed interval [lo, hi] of ordinals
struct ClosedSpan {
  Ordinal lo, hi;
  bool contains(const Ordinal& x) const { return lo <= x && x <= hi; }
};

struct UniverseSpec {
  Ordinal delta;                  // limit ordinal; the ambient order type
  std::uint32_t lambda = 2;      // block-index bound: indices run in (0, lambda)
  std::vector<Ordinal> big_set;  // designated big-cofinality points, sorted
  std::vector<ClosedSpan> f_big; // where f is Big; disjoint, sorted, normalized

  bool in_big_set(const Ordinal& a) const {
    return std::binary_search(big_set.begin(), big_set.end(), a);
  }
  bool f_is_big(const Ordinal& a) const {
    for (const auto& s : f_big)
      if (s.contains(a)) return true;
    return false;
  }
  // the Big piece containing a, if any
  const ClosedSpan* big_piece(const Ordinal& a) const {
    for (const auto& s : f_big)
      if (s.contains(a)) return &s;
    return nullptr;
  }
  // big-cofinality points carrying weight Big (the set everything revolves around)
  std::vector<Ordinal> big_weighted() const {
    std::vector<Ordinal> r;
    for (const auto& b : big_set)
      if (f_is_big(b)) r.push_back(b);
    return r;
  }

  void normalize() {
    std::sort(big_set.begin(), big_set.end());
    big_set.erase(std::unique(big_set.begin(), big_set.end()), big_set.end());
    std::sort(f_big.begin(), f_big.end(),
              [](const ClosedSpan& a, const ClosedSpan& b) { return a.lo < b.lo; });
    std::vector<ClosedSpan> merged;
    for (const auto& s : f_big) {
      if (!merged.empty() && s.lo <= merged.back().hi.succ())
        merged.back().hi = std::max(merged.back().hi, s.hi,
                                    [](const Ordinal& x, const Ordinal& y) { return x < y; });
      else
        merged.push_back(s);
    }
    f_big = std::move(merged);
  }
};

inline CofClass classify(const Ordinal& a, const UniverseSpec& u) {
  if (a > u.delta) throw OutOfUniverse();
  if (a.is_zero()) return CofClass::Zero;
  if (a.is_successor()) return CofClass::Successor;
  if (u.in_big_set(a)) return CofClass::DesignatedBig;
  return CofClass::LimOmega;
}

// Every failure becomes a report entry; an empty report means the spec is usable.
inline ValidationReport validate_spec(const UniverseSpec& u) {
  ValidationReport r;
  if (!u.delta.is_limit()) r.add("delta-limit", "delta = " + u.delta.str() + " is not a limit");
  if (u.lambda < 2) r.add("lambda-range", "lambda must be at least 2");
  for (const auto& b : u.big_set) {
    if (!b.is_limit())
      r.add("big-point-limit", b.str() + " is not a limit ordinal");
    if (!(b < u.delta)) r.add("big-point-range", b.str() + " is not below delta");
  }
  for (std::size_t i = 0; i < u.f_big.size(); ++i) {
    const auto& s = u.f_big[i];
    if (s.hi < s.lo) r.add("f-interval-order", "[" + s.lo.str() + ", " + s.hi.str() + "]");
    if (!(s.hi < u.delta))
      r.add("f-interval-range", "interval reaches " + s.hi.str() + " >= delta");
    if (i && !(u.f_big[i - 1].hi < s.lo))
      r.add("f-interval-disjoint", "pieces " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                       " overlap or touch");
  }
  // closure consequence: each big point of weight Big has a uniform Big tail below it
  for (const auto& b : u.big_set) {
    if (!u.f_is_big(b)) continue;
    const ClosedSpan* piece = u.big_piece(b);
    if (!piece || !(piece->lo < b))
      r.add("big-tail", "no alpha' < " + b.str() + " with f Big on [alpha', " + b.str() + ")");
  }
  return r;
}

// the standard small example: delta = w^2*2, one big point at w^2, Big weight on [w, w^2]
inline UniverseSpec ustar() {
  UniverseSpec u;
  u.delta = Ordinal::parse("w^2*2");
  u.lambda = 3;
  u.big_set = {Ordinal::parse("w^2")};
  u.f_big = {ClosedSpan{Ordinal::omega(), Ordinal::parse("w^2")}};
  return u;
}

}  // namespace lcslab
