#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "lcslab/delta.hpp"

using namespace lcslab;

static Ordinal O(const char* s) { return Ordinal::parse(s); }

TEST_CASE("global pair function on the standard example") {
  IntervalTree t(ustar());
  CHECK(g_pair_values(t, Ordinal(0), O("w")) == std::vector<Ordinal>{Ordinal(0)});
  CHECK(g_pair_values(t, O("w+2"), O("w*2+1")) ==
        std::vector<Ordinal>({Ordinal(0), O("w")}));
  CHECK(g_pair_values(t, O("w^2"), O("w^2+1")) == std::vector<Ordinal>{Ordinal(0)});
  // value sets live strictly below the smaller argument, apart from the
  // separating interval's start
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Ordinal a = Ordinal::pow_times(1, rng() % 6) + Ordinal(rng() % 6);
    Ordinal b = Ordinal::pow_times(1, rng() % 6) + Ordinal(rng() % 6);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    Separation s = separation(t, a, b);
    for (const auto& v : g_pair_values(t, a, b)) {
      bool small = v < a;
      bool is_start = v == s.I.lo;
      CHECK((small || is_start));
      if (!is_start) CHECK(t.e_member(s.I, v));
    }
  }
}

TEST_CASE("point-pair helper") {
  UniverseSpec u = ustar();
  IntervalTree t(u);
  SplitResult s = split_f(u, t);
  Point r1 = Point::row(s, O("w^2"), 1, 1);
  Point r2 = Point::row(s, O("w^2"), 2, 2);
  Point r1b = Point::row(s, O("w^2"), 1, 5);
  Point z = Point::unit(Ordinal(0), 0);
  Point topp = Point::top(s, O("w^2"), 1);

  // shared base level, different blocks: the distinguished interval's anchors
  LazySet h12 = h_pair(t, r1, r2);
  CHECK(h12.contains(Ordinal(0)));
  CHECK(h12.contains(Ordinal(17)));
  CHECK_FALSE(h12.contains(O("w")));
  CHECK(h12.below(Ordinal(3)) == std::vector<Ordinal>({Ordinal(0), Ordinal(1), Ordinal(2)}));

  // same block: empty
  LazySet h11 = h_pair(t, r1, r1b);
  CHECK_FALSE(h11.contains(Ordinal(0)));
  CHECK(h11.below(O("w")).empty());

  // distinct base levels: global pair function
  LazySet hz = h_pair(t, z, r1);
  CHECK(hz.contains(Ordinal(0)));
  CHECK_FALSE(hz.contains(Ordinal(1)));

  // symmetry
  LazySet ha = h_pair(t, r1, z);
  CHECK(ha.contains(Ordinal(0)));
  CHECK_FALSE(ha.contains(Ordinal(1)));

  // top vs row of another block share the base level
  LazySet htop = h_pair(t, topp, r2);
  CHECK(htop.contains(Ordinal(5)));
}

TEST_CASE("adequacy: intersection rule passes, empty rule fails") {
  IntervalTree t(ustar());
  Interval I{Ordinal(0), O("w^2")};
  PairFn F = intersection_rule(t, I);

  std::vector<std::vector<Ordinal>> fam = {{Ordinal(0), O("w")}, {Ordinal(0), O("w+2")}};
  AdequacyReport rep = adequacy_check(fam, F);
  CHECK(rep.pass());
  CHECK(rep.pairs_checked == 1);

  // a singleton family has no pairs
  CHECK(adequacy_check({{Ordinal(0)}}, F).pass());

  PairFn empty_rule = [](const Ordinal&, const Ordinal&) { return std::vector<Ordinal>{}; };
  AdequacyReport bad = adequacy_check(fam, empty_rule);
  REQUIRE_FALSE(bad.pass());
  CHECK(bad.violations[0].clause == 1);
  CHECK(bad.violations[0].tau == Ordinal(0));
}

TEST_CASE("adequacy: exhaustive over small families of anchors") {
  IntervalTree t(ustar());
  for (Interval I : {Interval{Ordinal(0), O("w^2")}, Interval{Ordinal(0), O("w")},
                     Interval{Ordinal(0), O("w^2*2")}}) {
    auto prefix = t.e_prefix(I, 6);
    PairFn F = intersection_rule(t, I);
    // all families of up to 3 subsets of size <= 3 drawn from the prefix
    std::vector<std::vector<Ordinal>> sets;
    std::size_t m = prefix.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << m); ++mask) {
      if (__builtin_popcountll(mask) > 3) continue;
      std::vector<Ordinal> s;
      for (std::size_t i = 0; i < m; ++i)
        if (mask & (std::size_t(1) << i)) s.push_back(prefix[i]);
      sets.push_back(std::move(s));
    }
    std::size_t count = 0;
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        AdequacyReport rep = adequacy_check({sets[i], sets[j]}, F);
        REQUIRE(rep.pass());
        ++count;
      }
    CHECK(count > 100);
  }
}

TEST_CASE("adequacy: domain violation is reported") {
  PairFn bogus = [](const Ordinal& a, const Ordinal& b) {
    return std::vector<Ordinal>{a < b ? b : a};  // not below the minimum
  };
  auto rep = adequacy_check({{Ordinal(1), Ordinal(2)}, {Ordinal(1), Ordinal(3)}}, bogus);
  CHECK(rep.domain_error);
  CHECK_FALSE(rep.pass());
}
