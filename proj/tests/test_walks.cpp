#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lcslab/walks.hpp"

using namespace lcslab;

static Ordinal O(const char* s) { return Ordinal::parse(s); }
static Interval I(const char* lo, const char* hi) { return Interval{O(lo), O(hi)}; }

static std::vector<Ordinal> seq(std::initializer_list<const char*> xs) {
  std::vector<Ordinal> v;
  for (const char* x : xs) v.push_back(O(x));
  return v;
}

TEST_CASE("separation on the standard example") {
  IntervalTree t(ustar());
  Separation s = separation(t, Ordinal(0), O("w+1"));
  CHECK(s.k == 2);
  CHECK(s.I == I("0", "w^2"));
  CHECK(s.J == I("0", "w"));
  CHECK(s.K == I("w", "w+2"));

  Separation s2 = separation(t, O("w^2"), O("w^2+1"));
  CHECK(s2.k == 0);
  CHECK(s2.I == t.root());
  CHECK(s2.J == I("0", "w^2+1"));
  CHECK(s2.K == I("w^2+1", "w^2+w+1"));

  Separation s3 = separation(t, Ordinal(0), Ordinal(1));
  CHECK(s3.k == 3);
  CHECK(s3.I == I("0", "w"));
  CHECK(s3.J == I("0", "1"));
  CHECK(s3.K == I("1", "2"));

  CHECK_THROWS_AS((void)separation(t, O("w"), O("w")), EqualArguments);
}

TEST_CASE("walks on the standard example") {
  IntervalTree t(ustar());
  CHECK(walk(t, Ordinal(0), O("w+1")).seq == seq({"0", "w", "w", "w+1"}));
  CHECK(walk(t, Ordinal(5), O("w")).seq == seq({"5", "6", "w", "w"}));
  CHECK(walk(t, O("w^2"), O("w^2+1")).seq == seq({"w^2", "w^2+1", "w^2+1", "w^2+1"}));
  CHECK(walk(t, Ordinal(0), Ordinal(1)).seq == seq({"0", "1", "1"}));
  CHECK(walk(t, Ordinal(6), O("w")).seq == seq({"6", "7", "w", "w"}));
  CHECK(walk(t, Ordinal(5), O("w+1")).seq == seq({"5", "6", "w", "w", "w+1"}));
  CHECK(walk(t, Ordinal(0), O("w")).seq == seq({"0", "w", "w"}));
  CHECK(walk(t, O("w"), O("w*2+1")).seq == seq({"w", "w+2", "w*2+1"}));
}

TEST_CASE("walk shape: endpoints, range, weak monotonicity") {
  IntervalTree t(ustar());
  std::vector<Ordinal> grid;
  for (std::uint64_t a = 0; a < 6; ++a)
    for (std::uint64_t b = 0; b < 6; ++b)
      grid.push_back(Ordinal::pow_times(1, a) + Ordinal(b));
  for (const auto& a : grid)
    for (const auto& b : grid) {
      if (!(a < b)) continue;
      Walk w = walk(t, a, b);
      REQUIRE(w.seq.size() >= 2);
      CHECK(w.seq.front() == a);
      CHECK(w.seq.back() == b);
      for (std::size_t i = 1; i < w.seq.size(); ++i) {
        CHECK(w.seq[i] >= a);
        CHECK(w.seq[i] <= b);
        if (i >= 2) CHECK(w.seq[i - 1] <= w.seq[i]);
      }
    }
}

TEST_CASE("every interior walk entry is an interval endpoint on a chain") {
  IntervalTree t(ustar());
  for (const char* pa : {"0", "3", "w+1", "w*2+1"})
    for (const char* pb : {"w", "w+2", "w*3+1", "w^2", "w^2+w+1"}) {
      Ordinal a = O(pa), b = O(pb);
      if (!(a < b)) continue;
      Walk w = walk(t, a, b);
      std::size_t la = t.first_level(a), lb = t.first_level(b);
      std::size_t bound = std::max(la, lb) + 1;
      for (std::size_t i = 1; i + 1 < w.seq.size(); ++i) {
        bool hit = false;
        for (std::size_t n = 0; n <= bound && !hit; ++n) {
          if (t.locate(a, n).hi == w.seq[i]) hit = true;
          if (t.locate(b, n).lo == w.seq[i]) hit = true;
        }
        CHECK(hit);
      }
    }
}

TEST_CASE("gamma membership suite on the standard example") {
  UniverseSpec u = ustar();
  IntervalTree t(u);
  SplitResult s = split_f(u, t);
  SuiteReport r = check_prop_gamma_in_walk(t, s, 42, 100);
  CHECK(r.checked == 100);
  CHECK(r.ok());
  SuiteReport r2 = check_prop_anchor_in_walk(t, s, 43, 100);
  CHECK(r2.checked == 100);
  CHECK(r2.ok());
}

TEST_CASE("negative remark: gamma skipped from strictly below J(b)") {
  UniverseSpec u;
  u.delta = O("w^3+w*2");
  u.lambda = 2;
  u.big_set = {O("w^2*2")};
  u.f_big = {ClosedSpan{O("w^2+w"), O("w^2*2")}};
  IntervalTree t(u);
  SplitResult s = split_f(u, t);
  REQUIRE(s.LTilde.size() == 1);
  REQUIRE(t.j_interval(s.LTilde[0]).lo > Ordinal(0));
  SuiteReport r = check_prop_gamma_skipped(t, s, 7, 120);
  CHECK(r.checked == 120);
  INFO((r.violations.empty() ? std::string() : r.violations[0]));
  CHECK(r.ok());
  // the positive suites hold here too
  CHECK(check_prop_gamma_in_walk(t, s, 8, 120).ok());
  CHECK(check_prop_anchor_in_walk(t, s, 9, 120).ok());
}
