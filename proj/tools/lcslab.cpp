// lcslab: build interval hierarchies over a universe file, compute walks and
// pair functions, validate/extend/amalgamate conditions, replace blocks by
// towers, run chains of density steps, and drive the property suites.
//
// Exit codes: 0 success / all-pass, 1 a report contains violations,
// 2 usage or I/O errors.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "lcslab/io.hpp"
#include "lcslab/suites.hpp"

using namespace lcslab;

namespace {

struct UniverseArgs {
  std::string path;
  std::unique_ptr<IntervalTree> tree;
  SplitResult split;

  void load() {
    UniverseSpec u = io::load_universe(path);
    ValidationReport rep = validate_spec(u);
    if (!rep.ok()) throw io::FileError("universe invalid:\n" + rep.str());
    tree = std::make_unique<IntervalTree>(u);
    split = split_f(tree->universe(), *tree);
  }
};

int report_exit(const ValidationReport& rep, const std::string& okmsg,
                const std::string& format) {
  if (format == "json") {
    std::cout << io::json_validation(rep).dump(2) << "\n";
  } else if (rep.ok()) {
    std::cout << okmsg << "\n";
  } else {
    std::cout << rep.str();
  }
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"desk-scale interval hierarchies, walks and block forcing"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "dot", "json"}));

  UniverseArgs ua;

  // ---- tree ----
  auto* c_tree = app.add_subcommand("tree", "print levels of the interval hierarchy");
  std::size_t tree_depth = 4, tree_width = 6;
  std::vector<std::string> tree_points;
  c_tree->add_option("--universe", ua.path, "universe file")->required();
  c_tree->add_option("--depth", tree_depth, "levels to materialize");
  c_tree->add_option("--width", tree_width, "children per interval");
  c_tree->add_option("--points", tree_points, "only intervals meeting these ordinals");

  // ---- walk ----
  auto* c_walk = app.add_subcommand("walk", "walk between two ordinals");
  std::string walk_a, walk_b, walk_check;
  std::size_t walk_samples = 500;
  std::uint64_t walk_seed = 1;
  c_walk->add_option("a", walk_a, "lower ordinal");
  c_walk->add_option("b", walk_b, "upper ordinal");
  c_walk->add_option("--universe", ua.path, "universe file")->required();
  c_walk->add_option("--check", walk_check, "run a membership suite: gamma | anchor | skip");
  c_walk->add_option("--samples", walk_samples, "suite sample count");
  c_walk->add_option("--seed", walk_seed, "suite seed");

  // ---- gfun ----
  auto* c_gfun = app.add_subcommand("gfun", "global pair function of two ordinals");
  std::string gf_a, gf_b;
  c_gfun->add_option("a", gf_a)->required();
  c_gfun->add_option("b", gf_b)->required();
  c_gfun->add_option("--universe", ua.path, "universe file")->required();

  // ---- adequacy ----
  auto* c_adq = app.add_subcommand("adequacy", "check a family file against the anchor rule");
  std::string adq_family;
  c_adq->add_option("family", adq_family, "family file")->required();
  c_adq->add_option("--universe", ua.path, "universe file")->required();

  // ---- validate-poset ----
  auto* c_vp = app.add_subcommand("validate-poset", "validate a poset exchange file");
  std::string vp_file;
  c_vp->add_option("file", vp_file)->required();

  // ---- cb ----
  auto* c_cb = app.add_subcommand("cb", "symbolic ranks of a poset exchange file");
  std::string cb_file;
  c_cb->add_option("file", cb_file)->required();

  // ---- check-cond ----
  auto* c_cc = app.add_subcommand("check-cond", "validate a condition file");
  std::string cc_file;
  c_cc->add_option("file", cc_file)->required();
  c_cc->add_option("--universe", ua.path, "universe file")->required();

  // ---- extend ----
  auto* c_ext = app.add_subcommand("extend", "density extension below a target point");
  std::string ext_file, ext_target, ext_alpha, ext_out;
  std::uint64_t ext_j = 0;
  c_ext->add_option("file", ext_file)->required();
  c_ext->add_option("--universe", ua.path, "universe file")->required();
  c_ext->add_option("--target", ext_target, "target point")->required();
  c_ext->add_option("--alpha", ext_alpha, "level of the new point")->required();
  c_ext->add_option("--j", ext_j, "column index floor");
  c_ext->add_option("--out", ext_out, "write the extension here");

  // ---- amalgamate ----
  auto* c_am = app.add_subcommand("amalgamate", "amalgamate two conditions through a point map");
  std::string am_a, am_b, am_map, am_out;
  c_am->add_option("a", am_a)->required();
  c_am->add_option("b", am_b)->required();
  c_am->add_option("--map", am_map, "point map file (lines: a -> b)")->required();
  c_am->add_option("--universe", ua.path, "universe file")->required();
  c_am->add_option("--out", am_out, "write the amalgam here");

  // ---- oracle-extend ----
  auto* c_or = app.add_subcommand("oracle-extend", "bounded search for a common extension");
  std::string or_a, or_b;
  std::size_t or_bound = 12;
  c_or->add_option("a", or_a)->required();
  c_or->add_option("b", or_b)->required();
  c_or->add_option("--bound", or_bound, "maximum point count");
  c_or->add_option("--universe", ua.path, "universe file")->required();

  // ---- transform ----
  auto* c_tr = app.add_subcommand("transform", "replace met blocks by towers");
  std::string tr_cond;
  c_tr->add_option("cond", tr_cond, "condition file")->required();
  c_tr->add_option("--universe", ua.path, "universe file")->required();

  // ---- chain ----
  auto* c_ch = app.add_subcommand("chain", "fold a schedule of density steps");
  std::string ch_schedule, ch_out;
  std::uint64_t ch_seed = 0;
  std::size_t ch_checkpoints = 5, ch_length = 40;
  bool ch_saturate = false;
  c_ch->add_option("--universe", ua.path, "universe file")->required();
  c_ch->add_option("--schedule", ch_schedule, "schedule file (omit with --saturate)");
  c_ch->add_flag("--saturate", ch_saturate, "generate the canonical saturation schedule");
  c_ch->add_option("--length", ch_length, "saturation schedule length");
  c_ch->add_option("--seed", ch_seed, "schedule seed");
  c_ch->add_option("--checkpoints", ch_checkpoints, "checkpoint every N steps");
  c_ch->add_option("--out", ch_out, "write the JSON report here");

  // ---- suite ----
  auto* c_su = app.add_subcommand("suite", "run a property suite");
  std::string su_name;
  std::uint64_t su_seed = 42;
  c_su->add_option("name", su_name,
                   "ordinal | tree | star | split | walks | adequacy | forcing | amalgam | "
                   "poset | chain")
      ->required();
  c_su->add_option("--seed", su_seed, "suite seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*c_tree) {
      ua.load();
      std::vector<Ordinal> marks;
      for (const auto& p : tree_points) marks.push_back(Ordinal::parse(p));
      if (format == "dot") {
        std::cout << io::dot_tree(*ua.tree, marks, tree_depth, tree_width);
        return 0;
      }
      std::vector<Interval> frontier{ua.tree->root()};
      for (std::size_t d = 0; d <= tree_depth; ++d) {
        std::cout << "level " << d << ":";
        std::size_t shown = 0;
        for (const auto& I : frontier) {
          bool rel = marks.empty();
          for (const auto& m : marks) rel = rel || I.contains(m);
          if (rel && shown < 12) {
            std::cout << " " << I.str();
            ++shown;
          }
        }
        if (!ua.tree->e_is_finite(frontier.back())) std::cout << " ...";
        std::cout << "\n";
        if (d == tree_depth) break;
        std::vector<Interval> next;
        for (const auto& I : frontier)
          for (const auto& c : ua.tree->children_prefix(I, tree_width)) next.push_back(c);
        frontier = std::move(next);
      }
      return 0;
    }

    if (*c_walk) {
      ua.load();
      if (!walk_check.empty()) {
        SuiteReport rep;
        if (walk_check == "gamma")
          rep = check_prop_gamma_in_walk(*ua.tree, ua.split, walk_seed, walk_samples);
        else if (walk_check == "anchor")
          rep = check_prop_anchor_in_walk(*ua.tree, ua.split, walk_seed, walk_samples);
        else if (walk_check == "skip")
          rep = check_prop_gamma_skipped(*ua.tree, ua.split, walk_seed, walk_samples);
        else
          throw io::FileError("unknown --check: " + walk_check);
        std::cout << "checked " << rep.checked << ", violations " << rep.violations.size()
                  << "\n";
        for (const auto& v : rep.violations) std::cout << "  " << v << "\n";
        return rep.ok() ? 0 : 1;
      }
      if (walk_a.empty() || walk_b.empty()) throw io::FileError("walk wants two ordinals");
      Ordinal a = Ordinal::parse(walk_a), b = Ordinal::parse(walk_b);
      Separation sep = separation(*ua.tree, a, b);
      Walk w = walk(*ua.tree, a, b);
      if (format == "json") {
        nlohmann::json j;
        j["walk"] = nlohmann::json::array();
        for (const auto& x : w.seq) j["walk"].push_back(x.str());
        j["separation"] = {{"level", sep.k},
                           {"interval", sep.I.str()},
                           {"lower", sep.J.str()},
                           {"upper", sep.K.str()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << w.str() << "\n";
        std::cout << "separate at " << sep.I.str() << " (level " << sep.k << "), " << sep.J.str()
                  << " vs " << sep.K.str() << "\n";
      }
      return 0;
    }

    if (*c_gfun) {
      ua.load();
      Ordinal a = Ordinal::parse(gf_a), b = Ordinal::parse(gf_b);
      auto v = g_pair_values(*ua.tree, a, b);
      std::cout << "{";
      for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : "") << v[i].str();
      std::cout << "}\n";
      return 0;
    }

    if (*c_adq) {
      ua.load();
      std::ifstream in(adq_family);
      if (!in) throw io::FileError("cannot open " + adq_family);
      io::FamilyFile fam = io::parse_family(in);
      auto rep = adequacy_check(fam.sets, intersection_rule(*ua.tree, fam.interval));
      if (rep.pass()) {
        std::cout << "adequate (" << rep.pairs_checked << " pairs)\n";
        return 0;
      }
      if (rep.domain_error) std::cout << "domain error: " << rep.domain_detail << "\n";
      for (const auto& v : rep.violations)
        std::cout << "clause " << v.clause << " fails at sets " << v.set_a << "," << v.set_b
                  << " with alpha=" << v.alpha.str() << " beta=" << v.beta.str()
                  << " tau=" << v.tau.str() << "\n";
      return 1;
    }

    if (*c_vp) {
      LcsPoset P = io::load_poset(vp_file);
      if (format == "dot") {
        std::cout << io::dot_poset(P);
        return 0;
      }
      return report_exit(validate_poset(P), "valid", format);
    }

    if (*c_cb) {
      LcsPoset P = io::load_poset(cb_file);
      auto rep = symbolic_cb(io::to_replicated(P));
      if (format == "json") {
        nlohmann::json j;
        j["height"] = rep.height;
        j["scattered"] = rep.scattered;
        j["ranks"] = nlohmann::json::array();
        for (std::size_t i = 0; i < P.size(); ++i)
          j["ranks"].push_back({{"point", P.node(i).name}, {"rank", rep.rank[i]}});
        std::cout << j.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < P.size(); ++i)
          std::cout << P.node(i).name << ": rank " << rep.rank[i] << "\n";
        std::cout << "height " << rep.height << (rep.scattered ? "" : " (not scattered)")
                  << "\n";
      }
      return 0;
    }

    if (*c_cc) {
      ua.load();
      Condition c = io::load_condition(cc_file, ua.split);
      if (format == "dot") {
        std::cout << io::dot_condition(c);
        return 0;
      }
      return report_exit(validate_condition(*ua.tree, ua.split, c), "valid", format);
    }

    if (*c_ext) {
      ua.load();
      Condition p = io::load_condition(ext_file, ua.split);
      Point tgt = io::parse_point(ext_target, ua.split);
      Condition q = extend_below(*ua.tree, ua.split, p, tgt, Ordinal::parse(ext_alpha), ext_j);
      std::string text = io::print_condition(q);
      if (!ext_out.empty()) {
        std::ofstream out(ext_out);
        out << text;
      } else {
        std::cout << text;
      }
      return 0;
    }

    if (*c_am) {
      ua.load();
      Condition pa = io::load_condition(am_a, ua.split);
      Condition pb = io::load_condition(am_b, ua.split);
      std::ifstream min(am_map);
      if (!min) throw io::FileError("cannot open " + am_map);
      auto gmap = io::parse_point_map(min, ua.split);
      auto outcome = thinning_check(*ua.tree, ua.split, pa, pb, gmap);
      if (std::holds_alternative<ValidationReport>(outcome)) {
        std::cout << "pair profile fails:\n" << std::get<ValidationReport>(outcome).str();
        return 1;
      }
      Condition amal =
          amalgamate(*ua.tree, ua.split, pa, pb, std::get<ThinningProfile>(outcome));
      std::string text = io::print_condition(amal);
      if (!am_out.empty()) {
        std::ofstream out(am_out);
        out << text;
      } else {
        std::cout << text;
      }
      return 0;
    }

    if (*c_or) {
      ua.load();
      Condition pa = io::load_condition(or_a, ua.split);
      Condition pb = io::load_condition(or_b, ua.split);
      auto out = brute_force_common_extension(*ua.tree, ua.split, pa, pb, or_bound);
      if (std::holds_alternative<Exhausted>(out)) {
        std::cout << "exhausted: " << std::get<Exhausted>(out).reason << "\n";
        return 1;
      }
      std::cout << io::print_condition(std::get<Condition>(out));
      return 0;
    }

    if (*c_tr) {
      ua.load();
      Condition c = io::load_condition(tr_cond, ua.split);
      TransformResult tr = transform_blocks(*ua.tree, ua.split, c);
      if (format == "dot") {
        std::cout << io::dot_poset(tr.poset);
        return 0;
      }
      if (format == "json") {
        nlohmann::json j;
        j["poset"] = io::print_poset(tr.poset);
        j["validation"] = io::json_validation(validate_poset(tr.poset));
        j["levels"] = io::json_cs_report(cs_report(c, ua.split));
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << io::print_poset(tr.poset);
      }
      return validate_poset(tr.poset).ok() ? 0 : 1;
    }

    if (*c_ch) {
      ua.load();
      Schedule sched;
      if (ch_saturate) {
        sched = saturation_schedule(*ua.tree, ua.split, ch_length, ch_seed);
      } else if (!ch_schedule.empty()) {
        std::ifstream in(ch_schedule);
        if (!in) throw io::FileError("cannot open " + ch_schedule);
        sched = io::parse_schedule(in, ua.split);
      } else {
        throw io::FileError("chain wants --schedule FILE or --saturate");
      }
      ChainReport rep = run_chain(*ua.tree, ua.split, sched, ch_checkpoints);
      nlohmann::json j = io::json_chain_report(rep);
      j["final_levels"] = io::json_cs_report(cs_report(rep.final, ua.split));
      if (!ch_out.empty()) {
        std::ofstream out(ch_out);
        out << j.dump(2) << "\n";
        std::cout << "report written to " << ch_out << "\n";
      } else {
        std::cout << j.dump(2) << "\n";
      }
      return rep.valid_throughout ? 0 : 1;
    }

    if (*c_su) {
      auto r = suites::run_suite(su_name, su_seed);
      std::cout << "suite " << r.name << ": " << (r.pass ? "pass" : "FAIL") << "\n";
      for (const auto& l : r.lines) std::cout << "  " << l << "\n";
      return r.pass ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const io::FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const OrdinalError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
