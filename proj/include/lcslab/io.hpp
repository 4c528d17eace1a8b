#pragma once

// Text formats: universe specs, points, conditions, poset exchange files,
// schedules, adequacy families; DOT exports; JSON report serialization.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lcslab/chain.hpp"
#include "lcslab/forcing.hpp"
#include "lcslab/lcs_poset.hpp"
#include "lcslab/transform.hpp"

namespace lcslab::io {

struct FileError : OrdinalError {
  explicit FileError(const std::string& m) : OrdinalError("file: " + m) {}
};

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split_top_commas(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

// --------------------------- universe files ---------------------------------

// keyed text:
//   delta  = w^2*2
//   lambda = 3
//   big    = { w^2 }
//   f_big  = [w, w^2]
inline UniverseSpec parse_universe(std::istream& in) {
  UniverseSpec u;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string::npos) throw FileError("expected key = value: " + t);
    std::string key = trim(t.substr(0, eq));
    std::string val = trim(t.substr(eq + 1));
    if (key == "delta") {
      u.delta = Ordinal::parse(val);
    } else if (key == "lambda") {
      u.lambda = static_cast<std::uint32_t>(std::stoul(val));
    } else if (key == "big") {
      if (val.front() != '{' || val.back() != '}') throw FileError("big wants { ... }");
      for (const auto& part : split_top_commas(val.substr(1, val.size() - 2)))
        u.big_set.push_back(Ordinal::parse(part));
    } else if (key == "f_big") {
      // one or more closed intervals [lo, hi]
      std::size_t pos = 0;
      while ((pos = val.find('[', pos)) != std::string::npos) {
        std::size_t end = val.find(']', pos);
        if (end == std::string::npos) throw FileError("unterminated interval in f_big");
        auto parts = split_top_commas(val.substr(pos + 1, end - pos - 1));
        if (parts.size() != 2) throw FileError("interval wants two endpoints");
        u.f_big.push_back(ClosedSpan{Ordinal::parse(parts[0]), Ordinal::parse(parts[1])});
        pos = end + 1;
      }
    } else {
      throw FileError("unknown key: " + key);
    }
  }
  u.normalize();
  return u;
}

inline std::string print_universe(const UniverseSpec& u) {
  std::ostringstream os;
  os << "delta  = " << u.delta.str() << "\n";
  os << "lambda = " << u.lambda << "\n";
  os << "big    = { ";
  for (std::size_t i = 0; i < u.big_set.size(); ++i)
    os << (i ? ", " : "") << u.big_set[i].str();
  os << " }\n";
  os << "f_big  =";
  for (const auto& s : u.f_big) os << " [" << s.lo.str() << ", " << s.hi.str() << "]";
  os << "\n";
  return os.str();
}

inline UniverseSpec load_universe(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  return parse_universe(in);
}

// ------------------------------- points -------------------------------------

// u(pi, n) | c(alpha, zeta, idx) | t(alpha, zeta)
inline Point parse_point(const std::string& text, const SplitResult& s) {
  std::string t = trim(text);
  if (t.size() < 4 || t[1] != '(' || t.back() != ')')
    throw FileError("expected u(...), c(...) or t(...): " + t);
  char kind = t[0];
  auto parts = split_top_commas(t.substr(2, t.size() - 3));
  if (kind == 'u') {
    if (parts.size() != 2) throw FileError("u wants (level, eta): " + t);
    return Point::unit(Ordinal::parse(parts[0]), std::stoull(parts[1]));
  }
  if (kind == 'c') {
    if (parts.size() != 3) throw FileError("c wants (alpha, zeta, idx): " + t);
    return Point::row(s, Ordinal::parse(parts[0]),
                      static_cast<std::uint32_t>(std::stoul(parts[1])), std::stoull(parts[2]));
  }
  if (kind == 't') {
    if (parts.size() != 2) throw FileError("t wants (alpha, zeta): " + t);
    return Point::top(s, Ordinal::parse(parts[0]),
                      static_cast<std::uint32_t>(std::stoul(parts[1])));
  }
  throw FileError("unknown point kind: " + t);
}

// ----------------------------- condition files ------------------------------

// sections:
//   points:
//     u(0, 0)
//   order:
//     u(0,0) < u(w+1,0)
//   inf:
//     {u(0,0), u(w+1,0)} = {u(0,0)}
inline Condition parse_condition(std::istream& in, const SplitResult& s) {
  std::vector<Point> pts;
  std::vector<std::pair<Point, Point>> strict;
  std::vector<std::pair<std::pair<Point, Point>, std::vector<Point>>> infima;
  enum class Sec { None, Points, Order, Inf } sec = Sec::None;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t == "points:") {
      sec = Sec::Points;
      continue;
    }
    if (t == "order:") {
      sec = Sec::Order;
      continue;
    }
    if (t == "inf:") {
      sec = Sec::Inf;
      continue;
    }
    switch (sec) {
      case Sec::Points:
        pts.push_back(parse_point(t, s));
        break;
      case Sec::Order: {
        auto lt = t.find('<');
        if (lt == std::string::npos) throw FileError("order line wants a < b: " + t);
        strict.emplace_back(parse_point(t.substr(0, lt), s), parse_point(t.substr(lt + 1), s));
        break;
      }
      case Sec::Inf: {
        auto eq = t.find('=');
        if (eq == std::string::npos || t[0] != '{') throw FileError("inf line: {a, b} = {...}");
        std::string keypart = trim(t.substr(0, eq));
        std::string valpart = trim(t.substr(eq + 1));
        auto keys = split_top_commas(keypart.substr(1, keypart.size() - 2));
        if (keys.size() != 2) throw FileError("inf key wants two points: " + t);
        std::vector<Point> vals;
        if (valpart.size() < 2 || valpart.front() != '{' || valpart.back() != '}')
          throw FileError("inf value wants { ... }: " + t);
        for (const auto& v : split_top_commas(valpart.substr(1, valpart.size() - 2)))
          vals.push_back(parse_point(v, s));
        infima.push_back({{parse_point(keys[0], s), parse_point(keys[1], s)}, std::move(vals)});
        break;
      }
      default:
        throw FileError("line outside any section: " + t);
    }
  }
  return Condition::make(std::move(pts), strict, infima);
}

inline std::string print_condition(const Condition& c) {
  std::ostringstream os;
  os << "points:\n";
  for (const auto& p : c.points()) os << "  " << p.str() << "\n";
  os << "order:\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c.less(i, j)) os << "  " << c.pt(i).str() << " < " << c.pt(j).str() << "\n";
  os << "inf:\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      auto v = c.inf_of(i, j);
      if (c.less(i, j) || c.less(j, i)) continue;  // comparable pairs are implied
      if (v.empty()) continue;
      os << "  {" << c.pt(i).str() << ", " << c.pt(j).str() << "} = {";
      for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << c.pt(v[k]).str();
      os << "}\n";
    }
  return os.str();
}

inline Condition load_condition(const std::string& path, const SplitResult& s) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  return parse_condition(in, s);
}

// point map files for the pair machinery: lines `a -> b`
inline std::vector<std::pair<Point, Point>> parse_point_map(std::istream& in,
                                                            const SplitResult& s) {
  std::vector<std::pair<Point, Point>> m;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto arrow = t.find("->");
    if (arrow == std::string::npos) throw FileError("map line wants a -> b: " + t);
    m.emplace_back(parse_point(t.substr(0, arrow), s), parse_point(t.substr(arrow + 2), s));
  }
  return m;
}

// ---------------------------- poset exchange --------------------------------

// lines:
//   <level>/<name>
//   supply <name> = w | <n>
//   order <a> < <b>
//   inf {a, b} = {c, ...}
inline LcsPoset parse_poset(std::istream& in) {
  LcsPoset P;
  std::vector<std::pair<std::size_t, std::size_t>> rels;
  std::vector<std::string> inf_lines;
  std::string line;
  auto need = [&P](const std::string& n) {
    auto i = P.by_name(n);
    if (!i) throw FileError("unknown poset point: " + n);
    return *i;
  };
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("supply ", 0) == 0) {
      auto eq = t.find('=');
      if (eq == std::string::npos) throw FileError("supply line wants =");
      std::string name = trim(t.substr(7, eq - 7));
      std::string val = trim(t.substr(eq + 1));
      // rebuild node with the new supply
      auto idx = need(name);
      P.set_supply(idx, val == "w" ? Supply::inf()
                                   : Supply::fin(static_cast<std::uint32_t>(std::stoul(val))));
    } else if (t.rfind("order ", 0) == 0) {
      std::string body = t.substr(6);
      auto lt = body.find('<');
      if (lt == std::string::npos) throw FileError("order line wants a < b");
      rels.emplace_back(need(trim(body.substr(0, lt))), need(trim(body.substr(lt + 1))));
    } else if (t.rfind("inf ", 0) == 0) {
      inf_lines.push_back(t.substr(4));
    } else {
      auto slash = t.find('/');
      if (slash == std::string::npos) throw FileError("expected level/name: " + t);
      P.add(Ordinal::parse(trim(t.substr(0, slash))), trim(t.substr(slash + 1)));
    }
  }
  P.relate_bulk(rels);
  for (const auto& t : inf_lines) {
    auto eq = t.find('=');
    if (eq == std::string::npos || trim(t)[0] != '{') throw FileError("inf {a,b} = {...}");
    std::string keypart = trim(t.substr(0, eq));
    std::string valpart = trim(t.substr(eq + 1));
    auto keys = split_top_commas(keypart.substr(1, keypart.size() - 2));
    if (keys.size() != 2) throw FileError("inf key wants two names");
    std::vector<std::size_t> vals;
    for (const auto& v : split_top_commas(valpart.substr(1, valpart.size() - 2)))
      if (!trim(v).empty()) vals.push_back(need(trim(v)));
    P.set_inf(need(keys[0]), need(keys[1]), vals);
  }
  return P;
}

inline std::string print_poset(const LcsPoset& P) {
  std::ostringstream os;
  for (std::size_t i = 0; i < P.size(); ++i)
    os << P.node(i).level.str() << "/" << P.node(i).name << "\n";
  for (std::size_t i = 0; i < P.size(); ++i)
    if (P.node(i).supply.omega) os << "supply " << P.node(i).name << " = w\n";
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = 0; j < P.size(); ++j)
      if (P.less(i, j)) os << "order " << P.node(i).name << " < " << P.node(j).name << "\n";
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = i + 1; j < P.size(); ++j) {
      if (P.comparable(i, j)) continue;
      auto v = P.inf_of(i, j);
      if (v.empty()) continue;
      os << "inf {" << P.node(i).name << ", " << P.node(j).name << "} = {";
      for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << P.node(v[k]).name;
      os << "}\n";
    }
  return os.str();
}

inline LcsPoset load_poset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path);
  return parse_poset(in);
}

inline ReplicatedPoset to_replicated(const LcsPoset& P) {
  ReplicatedPoset R;
  for (std::size_t i = 0; i < P.size(); ++i)
    R.classes.push_back({P.node(i).level, P.node(i).supply, P.node(i).name});
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = 0; j < P.size(); ++j)
      if (P.less(i, j)) R.edges.emplace_back(i, j);
  return R;
}

// ------------------------------ schedules -----------------------------------

// lines: `add <point>` or `extend <point> alpha=<ordinal> j=<n>`
inline Schedule parse_schedule(std::istream& in, const SplitResult& s) {
  Schedule sched;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("seed ", 0) == 0) {
      sched.seed = std::stoull(t.substr(5));
    } else if (t.rfind("add ", 0) == 0) {
      sched.steps.push_back(ScheduleStep::add(parse_point(t.substr(4), s)));
    } else if (t.rfind("extend ", 0) == 0) {
      std::string body = t.substr(7);
      auto ap = body.find("alpha=");
      auto jp = body.find("j=");
      if (ap == std::string::npos || jp == std::string::npos)
        throw FileError("extend wants: extend <point> alpha=<ord> j=<n>");
      Point tgt = parse_point(trim(body.substr(0, ap)), s);
      Ordinal alpha = Ordinal::parse(trim(body.substr(ap + 6, jp - ap - 6)));
      std::uint64_t j = std::stoull(trim(body.substr(jp + 2)));
      sched.steps.push_back(ScheduleStep::extend(tgt, alpha, j));
    } else {
      throw FileError("unknown schedule line: " + t);
    }
  }
  return sched;
}

// --------------------------- adequacy families ------------------------------

// interval [lo, hi)
// set {a, b, c}
struct FamilyFile {
  Interval interval;
  std::vector<std::vector<Ordinal>> sets;
};

inline FamilyFile parse_family(std::istream& in) {
  FamilyFile f;
  bool have_interval = false;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.rfind("interval ", 0) == 0) {
      std::string body = trim(t.substr(9));
      if (body.front() != '[' || body.back() != ')')
        throw FileError("interval wants [lo, hi): " + t);
      auto parts = split_top_commas(body.substr(1, body.size() - 2));
      if (parts.size() != 2) throw FileError("interval wants two endpoints");
      f.interval = Interval{Ordinal::parse(parts[0]), Ordinal::parse(parts[1])};
      have_interval = true;
    } else if (t.rfind("set ", 0) == 0) {
      std::string body = trim(t.substr(4));
      if (body.front() != '{' || body.back() != '}') throw FileError("set wants { ... }: " + t);
      std::vector<Ordinal> s;
      for (const auto& v : split_top_commas(body.substr(1, body.size() - 2)))
        s.push_back(Ordinal::parse(v));
      f.sets.push_back(std::move(s));
    } else {
      throw FileError("unknown family line: " + t);
    }
  }
  if (!have_interval) throw FileError("family file lacks an interval line");
  return f;
}

// --------------------------------- DOT --------------------------------------

inline std::string dot_tree(IntervalTree& t, const std::vector<Ordinal>& marks,
                            std::size_t depth, std::size_t width) {
  std::ostringstream os;
  os << "digraph intervals {\n  rankdir=TB;\n  node [shape=box];\n";
  std::vector<Interval> frontier{t.root()};
  auto relevant = [&marks](const Interval& I) {
    if (marks.empty()) return true;
    for (const auto& m : marks)
      if (I.contains(m)) return true;
    return false;
  };
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<Interval> next;
    for (const auto& I : frontier) {
      for (const auto& c : t.children_prefix(I, width)) {
        if (!relevant(c)) continue;
        os << "  \"" << I.str() << "\" -> \"" << c.str() << "\";\n";
        next.push_back(c);
      }
    }
    frontier = std::move(next);
  }
  os << "}\n";
  return os.str();
}

// Hasse diagram: only covering edges
inline std::string dot_poset(const LcsPoset& P) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < P.size(); ++i)
    os << "  \"" << P.node(i).name << "\" [label=\"" << P.node(i).name << "\\n@"
       << P.node(i).level.str() << (P.node(i).supply.omega ? " (w)" : "") << "\"];\n";
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = 0; j < P.size(); ++j) {
      if (!P.less(i, j)) continue;
      bool covering = true;
      for (std::size_t k = 0; k < P.size(); ++k)
        if (P.less(i, k) && P.less(k, j)) covering = false;
      if (covering) os << "  \"" << P.node(i).name << "\" -> \"" << P.node(j).name << "\";\n";
    }
  os << "}\n";
  return os.str();
}

inline std::string dot_condition(const Condition& c) {
  std::ostringstream os;
  os << "digraph condition {\n  rankdir=BT;\n";
  for (const auto& p : c.points()) os << "  \"" << p.str() << "\";\n";
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (!c.less(i, j)) continue;
      bool covering = true;
      for (std::size_t k = 0; k < c.size(); ++k)
        if (c.less(i, k) && c.less(k, j)) covering = false;
      if (covering) os << "  \"" << c.pt(i).str() << "\" -> \"" << c.pt(j).str() << "\";\n";
    }
  os << "}\n";
  return os.str();
}

// --------------------------------- JSON -------------------------------------

inline nlohmann::json json_chain_report(const ChainReport& rep) {
  nlohmann::json j;
  j["valid_throughout"] = rep.valid_throughout;
  j["final_points"] = rep.final.size();
  j["checkpoints"] = nlohmann::json::array();
  for (const auto& cp : rep.checkpoints) {
    nlohmann::json c;
    c["step"] = cp.step;
    c["points"] = cp.points;
    c["levels"] = nlohmann::json::array();
    for (const auto& [lv, n] : cp.level_counts)
      c["levels"].push_back({{"level", lv.str()}, {"count", n}});
    c["predecessors"] = nlohmann::json::array();
    for (const auto& [k, n] : cp.predecessor_counts)
      c["predecessors"].push_back({{"pair", k}, {"count", n}});
    j["checkpoints"].push_back(std::move(c));
  }
  return j;
}

inline nlohmann::json json_cs_report(const CsReport& rep) {
  nlohmann::json j;
  j["levels"] = nlohmann::json::array();
  for (const auto& lc : rep.finite_counts)
    j["levels"].push_back({{"level", lc.level.str()}, {"count", lc.count}});
  j["big"] = nlohmann::json::array();
  for (const auto& b : rep.big)
    j["big"].push_back({{"lo", b.lo.str()}, {"hi", b.hi.str()},
                        {"blocks", b.blocks_materialized}});
  return j;
}

inline nlohmann::json json_validation(const ValidationReport& rep) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& v : rep.items) j.push_back({{"rule", v.rule}, {"detail", v.detail}});
  return j;
}

}  // namespace lcslab::io
