#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lcslab/amalgam.hpp"
#include "lcslab/transform.hpp"

using namespace lcslab;

static Ordinal O(const char* s) { return Ordinal::parse(s); }

namespace {
struct Fixture {
  UniverseSpec u = ustar();
  IntervalTree t{u};
  SplitResult s = split_f(u, t);
};
}  // namespace

TEST_CASE("transform of a block-free condition keeps the points") {
  Fixture f;
  Point a = Point::unit(Ordinal(0), 0), m = Point::unit(O("w"), 1), b = Point::unit(O("w+1"), 0);
  Condition c = Condition::make({a, m, b}, {{a, m}, {m, b}});
  TransformResult tr = transform_blocks(f.t, f.s, c);
  CHECK(tr.poset.size() == 3);
  CHECK(tr.blocks.empty());
  CHECK(validate_poset(tr.poset).ok());
}

TEST_CASE("transform replaces a met block by a tower") {
  Fixture f;
  Point zero = Point::unit(Ordinal(0), 0);
  Point r = Point::row(f.s, O("w^2"), 1, 0), top = Point::top(f.s, O("w^2"), 1);
  Condition c = Condition::make({zero, r, top}, {{zero, r}, {r, top}});
  REQUIRE(validate_condition(f.t, f.s, c).ok());
  TransformResult tr = transform_blocks(f.t, f.s, c);
  INFO(validate_poset(tr.poset).str());
  CHECK(validate_poset(tr.poset).ok());
  REQUIRE(tr.blocks.size() == 1);
  const auto& bp = tr.blocks[0];
  // single top at the block's big point level
  CHECK(tr.poset.node(bp.top).level == O("w^2"));
  std::size_t at_alpha = 0;
  for (std::size_t i = 0; i < tr.poset.size(); ++i)
    if (tr.poset.node(i).level == O("w^2")) ++at_alpha;
  CHECK(at_alpha == 1);
  // the old top is gone (its name no longer appears)
  for (std::size_t i = 0; i < tr.poset.size(); ++i)
    CHECK(tr.poset.node(i).name != top.str());
  // the declared plan covers the closed block of Big levels
  REQUIRE(tr.poset.plans().size() == 1);
  CHECK(tr.poset.plans()[0].span.lo == O("w"));
  CHECK(tr.poset.plans()[0].span.hi == O("w^2"));
  // the unit point under the row sits under the whole tower
  std::size_t zi = tr.from_condition.at(*c.find(zero));
  CHECK(tr.poset.less(zi, bp.top));
  for (auto sp : bp.spine) CHECK(tr.poset.less(zi, sp));
}

TEST_CASE("transform: cross-block infima run through the old tops") {
  Fixture f;
  Point zero = Point::unit(Ordinal(0), 0);
  Point r1 = Point::row(f.s, O("w^2"), 1, 0), t1 = Point::top(f.s, O("w^2"), 1);
  Point r2 = Point::row(f.s, O("w^2"), 2, 0), t2 = Point::top(f.s, O("w^2"), 2);
  Condition c = Condition::make(
      {zero, r1, t1, r2, t2},
      {{zero, r1}, {r1, t1}, {zero, r2}, {r2, t2}},
      {{{t1, t2}, {zero}}, {{r1, r2}, {zero}}, {{r1, t2}, {zero}}, {{r2, t1}, {zero}}});
  REQUIRE(validate_condition(f.t, f.s, c).ok());
  TransformResult tr = transform_blocks(f.t, f.s, c);
  INFO(validate_poset(tr.poset).str());
  CHECK(validate_poset(tr.poset).ok());
  REQUIRE(tr.blocks.size() == 2);
  const auto& A = tr.blocks[0];
  const auto& B = tr.blocks[1];
  // the two new tops are incomparable with the kernel point as infimum
  std::size_t zi = tr.from_condition.at(*c.find(zero));
  CHECK_FALSE(tr.poset.comparable(A.top, B.top));
  auto inf = tr.poset.inf_of(A.top, B.top);
  REQUIRE(inf.size() == 1);
  CHECK(inf[0] == zi);
  // towers of level-sharing blocks stay disjoint above the kernel
  for (auto x : A.spine)
    for (auto y : B.spine) CHECK_FALSE(tr.poset.comparable(x, y));
}

TEST_CASE("transform: the Case-4 empty branch") {
  Fixture f;
  // a unit point below the old top but not below any row of the block: its
  // infimum with tower interior points is empty, and no common lower bound
  // may exist in the fragment
  Point zero = Point::unit(Ordinal(0), 0);
  Point other = Point::unit(Ordinal(1), 3);
  Point r = Point::row(f.s, O("w^2"), 1, 0), top = Point::top(f.s, O("w^2"), 1);
  Condition c = Condition::make({zero, other, r, top}, {{zero, r}, {r, top}});
  REQUIRE(validate_condition(f.t, f.s, c).ok());
  TransformResult tr = transform_blocks(f.t, f.s, c);
  CHECK(validate_poset(tr.poset).ok());
  const auto& bp = tr.blocks[0];
  std::size_t oi = tr.from_condition.at(*c.find(other));
  for (auto x : bp.spine) {
    CHECK_FALSE(tr.poset.comparable(oi, x));
    CHECK(tr.poset.inf_of(oi, x).empty());
    // the asserted emptiness: no materialized common lower bound
    for (std::size_t w = 0; w < tr.poset.size(); ++w)
      CHECK_FALSE((tr.poset.leq(w, oi) && tr.poset.leq(w, x)));
  }
}

TEST_CASE("level report against the weight split") {
  Fixture f;
  Point zero = Point::unit(Ordinal(0), 0);
  Point r1 = Point::row(f.s, O("w^2"), 1, 0), t1 = Point::top(f.s, O("w^2"), 1);
  Point r2 = Point::row(f.s, O("w^2"), 2, 0), t2 = Point::top(f.s, O("w^2"), 2);
  Condition c = Condition::make({zero, r1, t1, r2, t2},
                                {{zero, r1}, {r1, t1}, {zero, r2}, {r2, t2}},
                                {{{t1, t2}, {zero}}, {{r1, r2}, {zero}},
                                 {{r1, t2}, {zero}}, {{r2, t1}, {zero}}});
  CsReport rep = cs_report(c, f.s);
  REQUIRE(rep.big.size() == 1);
  CHECK(rep.big[0].lo == O("w"));
  CHECK(rep.big[0].hi == O("w^2"));
  CHECK(rep.big[0].blocks_materialized == 2);
  CHECK(rep.big_matches(f.s));

  // the empty condition still reports the notional Big levels
  CsReport rep0 = cs_report(Condition(), f.s);
  REQUIRE(rep0.big.size() == 1);
  CHECK(rep0.big[0].blocks_materialized == 0);
  CHECK(rep0.finite_counts.empty());
}
