// A short tour: build the standard universe, print the first tree levels,
// a few walks, and the pair-function values they induce.

#include <iostream>

#include "lcslab/delta.hpp"
#include "lcslab/io.hpp"

using namespace lcslab;

int main() {
  UniverseSpec u = ustar();
  std::cout << io::print_universe(u);

  IntervalTree t(u);
  SplitResult s = split_f(u, t);
  std::cout << "\nblocks:";
  for (const auto& b : s.LTilde)
    std::cout << " [" << s.gamma(b).str() << ", " << b.str() << "]";
  std::cout << "\n\n";

  std::vector<Interval> level{t.root()};
  for (int d = 0; d <= 3; ++d) {
    std::cout << "level " << d << ":";
    for (const auto& I : level) std::cout << " " << I.str();
    std::cout << (t.e_is_finite(level.back()) ? "\n" : " ...\n");
    if (d == 3) break;
    std::vector<Interval> next;
    for (const auto& I : level)
      for (const auto& c : t.children_prefix(I, 4)) next.push_back(c);
    level = next;
  }

  std::cout << "\n";
  for (auto [a, b] : {std::pair{Ordinal(0), Ordinal::parse("w+1")},
                      std::pair{Ordinal(5), Ordinal::parse("w")},
                      std::pair{Ordinal::parse("w"), Ordinal::parse("w*2+1")}}) {
    Walk w = walk(t, a, b);
    std::cout << "w(" << a.str() << ", " << b.str() << ") = " << w.str() << "\n";
  }

  std::cout << "\nG{w+2, w*2+1} = {";
  auto g = g_pair_values(t, Ordinal::parse("w+2"), Ordinal::parse("w*2+1"));
  for (std::size_t i = 0; i < g.size(); ++i) std::cout << (i ? ", " : "") << g[i].str();
  std::cout << "}\n";
  return 0;
}
