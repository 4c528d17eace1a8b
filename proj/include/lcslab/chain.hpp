#pragma once

// Growing countable approximations: a schedule of point-addition and
// extend-below requests is folded over a condition, validating at every step
// and recording level counts and predecessor growth at checkpoints.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lcslab/forcing.hpp"
#include "lcslab/transform.hpp"

namespace lcslab {

struct ScheduleStep {
  enum class Kind { Add, Extend } kind = Kind::Add;
  Point point;    // Add: the point; Extend: the target
  Ordinal alpha;  // Extend only
  std::uint64_t j = 0;

  static ScheduleStep add(Point p) {
    ScheduleStep s;
    s.kind = Kind::Add;
    s.point = std::move(p);
    return s;
  }
  static ScheduleStep extend(Point tgt, Ordinal alpha, std::uint64_t j) {
    ScheduleStep s;
    s.kind = Kind::Extend;
    s.point = std::move(tgt);
    s.alpha = std::move(alpha);
    s.j = j;
    return s;
  }
};

struct Schedule {
  std::vector<ScheduleStep> steps;
  std::uint64_t seed = 0;
};

struct ChainError : OrdinalError {
  ChainError(std::size_t step, const std::string& m)
      : OrdinalError("chain step " + std::to_string(step) + ": " + m) {}
};

struct ChainReport {
  struct Checkpoint {
    std::size_t step = 0;
    std::size_t points = 0;
    std::vector<std::pair<Ordinal, std::size_t>> level_counts;
    // per tracked (target, level): materialized predecessors at that level
    std::vector<std::pair<std::string, std::size_t>> predecessor_counts;
  };
  std::vector<Checkpoint> checkpoints;
  Condition final;
  bool valid_throughout = true;
};

inline ChainReport run_chain(IntervalTree& t, const SplitResult& s, const Schedule& sched,
                             std::size_t checkpoint_every = 1) {
  ChainReport rep;
  Condition cur;
  std::vector<std::pair<Point, Ordinal>> tracked;
  auto note_checkpoint = [&](std::size_t step) {
    ChainReport::Checkpoint cp;
    cp.step = step;
    cp.points = cur.size();
    std::map<Ordinal, std::size_t> counts;
    for (const auto& p : cur.points()) ++counts[p.pi];
    for (const auto& [lv, c] : counts) cp.level_counts.emplace_back(lv, c);
    for (const auto& [tgt, al] : tracked) {
      std::size_t c = 0;
      auto ti = cur.find(tgt);
      if (ti)
        for (std::size_t i = 0; i < cur.size(); ++i)
          if (cur.pt(i).pi == al && cur.less(i, *ti)) ++c;
      cp.predecessor_counts.emplace_back(tgt.str() + " @ " + al.str(), c);
    }
    rep.checkpoints.push_back(std::move(cp));
  };

  for (std::size_t i = 0; i < sched.steps.size(); ++i) {
    const ScheduleStep& st = sched.steps[i];
    try {
      if (st.kind == ScheduleStep::Kind::Add) {
        cur = add_point(t, s, cur, st.point).cond;
      } else {
        bool seen = false;
        for (const auto& [tgt, al] : tracked)
          if (tgt == st.point && al == st.alpha) seen = true;
        if (!seen) tracked.emplace_back(st.point, st.alpha);
        cur = extend_below(t, s, cur, st.point, st.alpha, st.j);
      }
    } catch (const OrdinalError& e) {
      throw ChainError(i, e.what());
    }
    ValidationReport r = validate_condition(t, s, cur);
    if (!r.ok()) {
      rep.valid_throughout = false;
      throw ChainError(i, "intermediate condition invalid:\n" + r.str());
    }
    if ((i + 1) % checkpoint_every == 0 || i + 1 == sched.steps.size()) note_checkpoint(i + 1);
  }
  rep.final = cur;
  return rep;
}

// The canonical saturation schedule: after seeding a handful of targets, it
// round-robins extend-below requests over all tracked (target, level) pairs
// with tree-reachable levels, interleaved with fresh point additions. With T
// tracked pairs, a schedule of length N yields at least N / (2 T) extensions
// per pair: the growth constant of the chain suite is c = 2 T.
inline Schedule saturation_schedule(IntervalTree& t, const SplitResult& s, std::size_t length,
                                    std::uint64_t seed) {
  Schedule sched;
  sched.seed = seed;
  std::mt19937_64 rng(seed);
  const UniverseSpec& u = t.universe();

  // seed targets: a few unit points plus one block row per materializable block
  std::vector<Point> targets;
  std::vector<Ordinal> target_levels;
  {
    std::vector<Ordinal> lvls;
    lvls.push_back(t.e_prefix(t.root(), 2).back());
    Interval first = t.children_prefix(t.root(), 1)[0];
    std::vector<Ordinal> e = t.e_prefix(first, 3);
    if (e.size() > 1) lvls.push_back(e[1]);
    for (const auto& lv : lvls)
      if (lv < u.delta) targets.push_back(Point::unit(lv, 0));
    std::size_t zi = 1;
    for (const auto& b : s.LTilde) {
      targets.push_back(Point::row(s, b, static_cast<std::uint32_t>(zi % (u.lambda - 1) + 1), 0));
      if (++zi > 2) break;
    }
  }
  for (const auto& p : targets) sched.steps.push_back(ScheduleStep::add(p));

  // tracked pairs: each target with one or two reachable levels below it
  std::vector<std::pair<Point, Ordinal>> pairs;
  for (const auto& p : targets) {
    Ordinal beta = p.in_u2() ? p.pi_minus() : p.pi;
    std::vector<Ordinal> cands;
    try {
      for (const auto& v : walk_closure(t, Ordinal(0), beta))
        if (v < beta) cands.push_back(v);
    } catch (const UnreachableTarget&) {
      continue;
    }
    if (cands.empty()) continue;
    pairs.emplace_back(p, cands[0]);
    if (cands.size() > 1 && pairs.size() < 6) pairs.emplace_back(p, cands[cands.size() - 1]);
  }

  std::uint64_t fresh_eta = 100;
  while (sched.steps.size() < length && !pairs.empty()) {
    for (const auto& [tgt, al] : pairs) {
      if (sched.steps.size() >= length) break;
      sched.steps.push_back(ScheduleStep::extend(tgt, al, 0));
      // interleave an unrelated point addition now and then
      if (sched.steps.size() < length && rng() % 3 == 0)
        sched.steps.push_back(
            ScheduleStep::add(Point::unit(Ordinal(rng() % 3), fresh_eta++)));
    }
  }
  sched.steps.resize(std::min(sched.steps.size(), length));
  return sched;
}

}  // namespace lcslab
