// Grow a condition by density steps, amalgamate a sibling pair, and replace
// the met block by its tower.

#include <iostream>

#include "lcslab/amalgam.hpp"
#include "lcslab/io.hpp"
#include "lcslab/transform.hpp"

using namespace lcslab;

int main() {
  UniverseSpec u = ustar();
  IntervalTree t(u);
  SplitResult s = split_f(u, t);

  // a target point gains predecessors at level 0 step by step
  Point tgt = Point::unit(Ordinal::parse("w+1"), 0);
  Condition p = add_point(t, s, Condition(), tgt).cond;
  p = extend_below(t, s, p, tgt, Ordinal(0), 0);
  p = extend_below(t, s, p, tgt, Ordinal(0), p.max_unit_eta());
  std::cout << "after two density steps:\n" << io::print_condition(p) << "\n";

  // sibling block conditions over the kernel {u(0,0)}
  Point zero = Point::unit(Ordinal(0), 0);
  auto mk = [&](std::uint32_t z) {
    Point r = Point::row(s, Ordinal::parse("w^2"), z, 0);
    Point top = Point::top(s, Ordinal::parse("w^2"), z);
    return Condition::make({zero, r, top}, {{zero, r}, {r, top}});
  };
  Condition pa = mk(1), pb = mk(2);
  std::vector<std::pair<Point, Point>> g = {
      {zero, zero},
      {Point::row(s, Ordinal::parse("w^2"), 1, 0), Point::row(s, Ordinal::parse("w^2"), 2, 0)},
      {Point::top(s, Ordinal::parse("w^2"), 1), Point::top(s, Ordinal::parse("w^2"), 2)}};
  auto prof = std::get<ThinningProfile>(thinning_check(t, s, pa, pb, g));
  Condition amal = amalgamate(t, s, pa, pb, prof);
  std::cout << "amalgam of the sibling pair:\n" << io::print_condition(amal) << "\n";

  TransformResult tr = transform_blocks(t, s, amal);
  std::cout << "after block replacement:\n" << io::print_poset(tr.poset);
  std::cout << "\nvalidation: " << (validate_poset(tr.poset).ok() ? "clean" : "violations")
            << "\n";
  return 0;
}
