#pragma once

// Brute-force model of the ordinals below w^3: triples (a,b,c) standing for
// w^2*a + w*b + c, ordered lexicographically. Independent of lcslab::Ordinal;
// used as the oracle for comparison, addition and left difference.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcslab/ordinal.hpp"

namespace model {

struct Tri {
  std::uint64_t a = 0, b = 0, c = 0;
  friend bool operator==(const Tri&, const Tri&) = default;
  friend bool operator<(const Tri& x, const Tri& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    return x.c < y.c;
  }
};

inline Tri add(const Tri& x, const Tri& y) {
  if (y.a > 0) return Tri{x.a + y.a, y.b, y.c};
  if (y.b > 0) return Tri{x.a, x.b + y.b, y.c};
  return Tri{x.a, x.b, x.c + y.c};
}

// unique d with x + d == y, if x <= y
inline std::optional<Tri> diff(const Tri& x, const Tri& y) {
  if (y < x) return std::nullopt;
  if (x.a < y.a) return Tri{y.a - x.a, y.b, y.c};
  if (x.b < y.b) return Tri{0, y.b - x.b, y.c};
  if (x.b == y.b && x.c <= y.c) return Tri{0, 0, y.c - x.c};
  if (x.b > y.b) return std::nullopt;  // unreachable given y >= x
  return std::nullopt;
}

inline lcslab::Ordinal to_ordinal(const Tri& t) {
  using lcslab::Ordinal;
  return Ordinal::pow_times(2, t.a) + Ordinal::pow_times(1, t.b) + Ordinal(t.c);
}

inline std::vector<Tri> universe(std::uint64_t max_coeff) {
  std::vector<Tri> v;
  for (std::uint64_t a = 0; a <= max_coeff; ++a)
    for (std::uint64_t b = 0; b <= max_coeff; ++b)
      for (std::uint64_t c = 0; c <= max_coeff; ++c) v.push_back(Tri{a, b, c});
  return v;
}

}  // namespace model
