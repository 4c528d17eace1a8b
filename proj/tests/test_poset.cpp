#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lcslab/lcs_poset.hpp"

using namespace lcslab;

static Ordinal O(const char* s) { return Ordinal::parse(s); }

TEST_CASE("validate: single omega level is clean") {
  LcsPoset P;
  P.add(Ordinal(0), "a", Supply::inf());
  CHECK(validate_poset(P).ok());
}

TEST_CASE("validate: same-level order violates monotonicity") {
  LcsPoset P;
  auto a = P.add(Ordinal(0), "a");
  auto b = P.add(Ordinal(0), "b");
  P.relate(a, b);
  auto r = validate_poset(P);
  REQUIRE_FALSE(r.ok());
  CHECK(r.items[0].rule == "level-monotone");
}

TEST_CASE("validate: infimum soundness and completeness") {
  LcsPoset P;
  auto a = P.add(Ordinal(0), "a", Supply::inf());
  auto t = P.add(Ordinal(1), "t");
  P.relate(a, t);
  CHECK(validate_poset(P).ok());

  // two tops over a common fan: each lower bound must be dominated
  auto t2 = P.add(Ordinal(1), "t2");
  P.relate(a, t2);
  P.set_inf(t, t2, {});
  auto r = validate_poset(P);
  REQUIRE_FALSE(r.ok());
  CHECK(r.items[0].rule == "inf-dominates");
  P.set_inf(t, t2, {a});
  CHECK(validate_poset(P).ok());
}

TEST_CASE("basic_open") {
  LcsPoset P;
  auto a0 = P.add(Ordinal(0), "a0", Supply::inf());
  auto a1 = P.add(Ordinal(0), "a1", Supply::inf());
  auto t = P.add(Ordinal(1), "t");
  P.relate(a0, t);
  P.relate(a1, t);
  auto full = basic_open(P, t, {});
  CHECK(full.size() == 3);
  auto cut = basic_open(P, t, {a0});
  CHECK(cut.size() == 2);
  CHECK_THROWS_AS((void)basic_open(P, a0, {t}), ExclNotBelow);
  // a minimal point's neighbourhood is itself
  CHECK(basic_open(P, a0, {}).size() == 1);
}

TEST_CASE("restrict") {
  LcsPoset P;
  auto a = P.add(Ordinal(0), "a", Supply::inf());
  auto b = P.add(Ordinal(0), "b", Supply::inf());
  auto t = P.add(Ordinal(1), "t");
  auto t2 = P.add(Ordinal(1), "t2");
  P.relate(a, t);
  P.relate(b, t);
  P.relate(a, t2);
  P.relate(b, t2);
  P.set_inf(t, t2, {a, b});
  // identity restriction
  LcsPoset Q = restrict_poset(P, {a, b, t, t2});
  CHECK(Q.size() == 4);
  // one level only: a discrete poset
  LcsPoset D = restrict_poset(P, {a, b});
  CHECK(validate_poset(D).ok());
  // dropping an infimum witness is rejected
  CHECK_THROWS_AS((void)restrict_poset(P, {a, t, t2}), NotInfimumClosed);
}

TEST_CASE("symbolic ranks: the three worked shapes") {
  ReplicatedPoset P;
  P.classes.push_back({Ordinal(0), Supply::inf(), "a"});
  auto r = symbolic_cb(P);
  CHECK(r.rank[0] == 0);
  CHECK(r.height == 1);

  ReplicatedPoset Q;
  Q.classes.push_back({Ordinal(0), Supply::inf(), "a"});
  Q.classes.push_back({Ordinal(1), Supply::fin(1), "b"});
  Q.edges = {{0, 1}};
  auto rq = symbolic_cb(Q);
  CHECK(rq.rank[0] == 0);
  CHECK(rq.rank[1] == 1);
  CHECK(rq.height == 2);

  ReplicatedPoset F;
  F.classes.push_back({Ordinal(0), Supply::fin(3), "a"});
  F.classes.push_back({Ordinal(1), Supply::fin(1), "b"});
  F.edges = {{0, 1}};
  auto rf = symbolic_cb(F);
  CHECK(rf.rank[0] == 0);
  CHECK(rf.rank[1] == 0);
  CHECK(rf.height == 1);
}

TEST_CASE("symbolic ranks: full omega supply gives rank = level index") {
  // a 4-level chain of omega classes with all downward edges
  ReplicatedPoset P;
  for (int i = 0; i < 4; ++i)
    P.classes.push_back({Ordinal(static_cast<std::uint64_t>(i)), Supply::inf(),
                         "c" + std::to_string(i)});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) P.edges.emplace_back(i, j);
  auto r = symbolic_cb(P);
  for (int i = 0; i < 4; ++i) CHECK(r.rank[i] == static_cast<std::size_t>(i));
  CHECK(r.height == 4);
}

TEST_CASE("symbolic ranks: monotone under supply growth") {
  ReplicatedPoset P;
  P.classes.push_back({Ordinal(0), Supply::fin(1), "a"});
  P.classes.push_back({Ordinal(1), Supply::fin(1), "b"});
  P.classes.push_back({Ordinal(2), Supply::fin(1), "c"});
  P.edges = {{0, 1}, {1, 2}, {0, 2}};
  auto r0 = symbolic_cb(P);
  P.classes[0].supply = Supply::inf();
  auto r1 = symbolic_cb(P);
  P.classes[1].supply = Supply::inf();
  auto r2 = symbolic_cb(P);
  for (int i = 0; i < 3; ++i) {
    CHECK(r0.rank[i] <= r1.rank[i]);
    CHECK(r1.rank[i] <= r2.rank[i]);
  }
}

TEST_CASE("finite-topology ranks on hand-computed fixtures") {
  // discrete three points
  FiniteTopology D{3, {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111}};
  REQUIRE(D.well_formed());
  auto rd = cb_finite(D);
  CHECK(rd.scattered);
  CHECK(rd.height == 1);
  for (int x = 0; x < 3; ++x) CHECK(rd.rank[x] == 0);

  // convergent sequence: three isolated points and their limit
  FiniteTopology C{4, {0b0000, 0b0001, 0b0010, 0b0100, 0b0011, 0b0101, 0b0110, 0b0111, 0b1111}};
  REQUIRE(C.well_formed());
  auto rc = cb_finite(C);
  CHECK(rc.scattered);
  CHECK(rc.height == 2);
  CHECK(rc.rank[3] == 1);

  // two stages of two points each
  FiniteTopology T{4, {0b0000, 0b0001, 0b0010, 0b0011, 0b0111, 0b1011, 0b1111}};
  REQUIRE(T.well_formed());
  auto rt = cb_finite(T);
  CHECK(rt.scattered);
  CHECK(rt.height == 2);
  CHECK(rt.rank[0] == 0);
  CHECK(rt.rank[1] == 0);
  CHECK(rt.rank[2] == 1);
  CHECK(rt.rank[3] == 1);

  // nested chain of opens: ranks follow the nesting depth
  FiniteTopology N{5, {0b00000, 0b00001, 0b00011, 0b00111, 0b01111, 0b11111}};
  REQUIRE(N.well_formed());
  auto rn = cb_finite(N);
  CHECK(rn.scattered);
  CHECK(rn.height == 5);
  for (int x = 0; x < 5; ++x) CHECK(rn.rank[x] == x);

  // indiscrete pair: not scattered
  FiniteTopology I{2, {0b00, 0b11}};
  REQUIRE(I.well_formed());
  auto ri = cb_finite(I);
  CHECK_FALSE(ri.scattered);
  CHECK(ri.rank[0] == -1);
}

TEST_CASE("finite instantiation of replicated posets collapses to height 1") {
  // instantiating an omega class by k concrete copies makes the finite space
  // discrete; the symbolic rule, not finite instantiation, carries the level
  // structure
  for (std::uint64_t k = 1; k <= 4; ++k) {
    std::vector<std::uint64_t> opens;
    std::uint64_t n = k + 1;  // k copies below one point
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) opens.push_back(m);  // discrete
    FiniteTopology F{static_cast<std::size_t>(n), opens};
    auto r = cb_finite(F);
    CHECK(r.height == 1);
  }
}

TEST_CASE("canonical tower") {
  TowerSpec spec;
  spec.height = Ordinal(1);
  spec.level_offset = Ordinal(0);
  spec.base_names = {"b0", "b1", "b2"};
  spec.stratum = "T";
  LcsPoset P = make_tower(spec);
  CHECK(validate_poset(P).ok());
  // base plus single top
  std::size_t tops = 0;
  for (std::size_t i = 0; i < P.size(); ++i)
    if (P.node(i).level == Ordinal(1)) ++tops;
  CHECK(tops == 1);

  TowerSpec two = spec;
  two.height = Ordinal(2);
  LcsPoset P2 = make_tower(two);
  CHECK(validate_poset(P2).ok());
  CHECK(P2.levels().size() == 3);

  // transfinite height with an offset: levels live in [w, w^2]
  TowerSpec big;
  big.height = O("w^2");
  big.level_offset = O("w");
  big.base_names = {"r0", "r1"};
  big.stratum = "B";
  LcsPoset P3 = make_tower(big);
  CHECK(validate_poset(P3).ok());
  auto lv = P3.levels();
  CHECK(lv.front() == O("w"));
  CHECK(lv.back() == O("w^2"));
  std::size_t top_count = 0;
  for (std::size_t i = 0; i < P3.size(); ++i)
    if (P3.node(i).level == O("w^2")) ++top_count;
  CHECK(top_count == 1);

  CHECK_THROWS_AS((void)make_tower(TowerSpec{}), HeightOutOfRange);
}

TEST_CASE("tower cone order is laminar") {
  // sampled points of a height-3 tower: cones are nested or disjoint
  std::vector<Ordinal> pts;
  for (std::uint64_t a = 0; a <= 2; ++a)
    for (std::uint64_t b = 0; b <= 2; ++b)
      for (std::uint64_t c = 1; c <= 2; ++c)
        pts.push_back(Ordinal::pow_times(2, a) + Ordinal::pow_times(1, b) + Ordinal(c));
  for (const auto& x : pts)
    for (const auto& y : pts) {
      if (x == y) continue;
      bool xy = tower_less(x, y), yx = tower_less(y, x);
      CHECK_FALSE((xy && yx));
      if (xy) CHECK(tower_level(x) < tower_level(y));
      // laminarity: cones nested or disjoint
      Ordinal lx = tower_cone_start(x), ly = tower_cone_start(y);
      bool nested = (ly <= lx && y >= x) || (lx <= ly && x >= y);
      bool disjoint = x <= ly || y <= lx;
      CHECK((nested || disjoint));
    }
}
