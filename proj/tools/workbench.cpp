// Command-line front end: run machines and automata from data files,
// cosimulate layers against each other, verify against the bundled
// fixtures, lint rule tables, render traces.
//
// Exit codes: 0 clean, 1 parse/usage errors, 2 fidelity or missing-rule
// failures, 3 budget exhaustion.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "strongca/encoding.hpp"
#include "strongca/hyper/halting.hpp"
#include "strongca/hyper/scenario.hpp"
#include "strongca/instances.hpp"
#include "strongca/line_tables.hpp"
#include "strongca/spacetime.hpp"
#include "strongca/svg.hpp"
#include "strongca/tag.hpp"
#include "strongca/verify.hpp"

using namespace strongca;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spill(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write '" + path + "'");
  out << text;
}

hyp::GridKind parse_kind(const std::string& s) {
  if (s == "pentagrid") return hyp::GridKind::pentagrid;
  if (s == "heptagrid") return hyp::GridKind::heptagrid;
  if (s == "dodecagrid") return hyp::GridKind::dodecagrid;
  throw parse_error("unknown grid '" + s + "'");
}

const RuleTable1D& builtin_1d(const std::string& name) {
  if (name == "ln7") return ln7_table();
  if (name == "ln9") return ln9_table();
  if (name == "ln9halt") return ln9_halting_table();
  if (name == "ln11") return ln11_table();
  throw parse_error("unknown built-in table '" + name + "'");
}

RuleTable1D load_1d_rules(const std::string& spec) {
  if (spec.rfind("builtin:", 0) == 0) return builtin_1d(spec.substr(8));
  return parse_rules_1d(slurp(spec), spec);
}

TmConfiguration make_tm_config(const std::string& tape, long head, int state) {
  TmConfiguration c;
  if (!tape.empty()) {
    if (head < 0 || head >= static_cast<long>(tape.size()))
      throw parse_error("head position outside the tape");
    c.scanned = tape[head];
    for (long i = head - 1; i >= 0; --i) c.left += tape[i];
    for (long i = head + 1; i < static_cast<long>(tape.size()); ++i)
      c.right += tape[i];
  }
  c.state = state;
  c.normalize('0');
  return c;
}

int report_exit(const Report& rep, bool budget_hit = false) {
  std::cout << rep.to_text();
  std::cout << (rep.all_ok() ? "all checks passed" : "FAILURES: " +
                std::to_string(rep.failures()))
            << " (" << rep.findings.size() << " checks)\n";
  if (!rep.all_ok()) return 2;
  return budget_hit ? 3 : 0;
}

}  // namespace

// ------------------------------------------------------------------ run

int cmd_run(const std::string& layer, const std::string& rules_spec,
            const std::string& machine_path, const std::string& config_path,
            const std::string& tape, long head, int state, char incoming,
            long budget, const std::string& trace_out,
            const std::string& render) {
  if (layer == "tm") {
    TuringMachine m =
        machine_path.empty() ? minsky_utm() : parse_machine(slurp(machine_path));
    TmConfiguration c0 = make_tm_config(tape, head, state);
    TmTrace tr = tm_run(m, c0, static_cast<int>(budget));
    std::cout << "steps: " << tr.configs.size() - 1 << "\n";
    std::cout << "status: "
              << (tr.status == TmStatus::halted ? "halted" : "budget-exhausted")
              << "\n";
    auto& f = tr.configs.back();
    std::string rl(f.left.rbegin(), f.left.rend());
    std::cout << "final: " << rl << "[" << f.scanned << "]" << f.right
              << " state " << f.state << "\n";
    return tr.status == TmStatus::halted ? 0 : 3;
  }
  if (layer == "tag" || layer == "extended-tag") {
    ExtendedTagSystem E = parse_tag_system(slurp(machine_path));
    TagTrace tr = tag_run(E.base, tape, static_cast<int>(budget));
    std::cout << "steps: " << tr.words.size() - 1 << "\n";
    std::cout << "status: "
              << (tr.status == TagStatus::halted ? "halted"
                  : tr.status == TagStatus::budget_exhausted
                      ? "budget-exhausted"
                      : "empty-word-violation")
              << "\n";
    std::cout << "final: " << tr.words.back() << "\n";
    if (!trace_out.empty()) {
      std::string t;
      for (auto& w : tr.words) t += w + "\n";
      spill(trace_out, t);
    }
    return tr.status == TagStatus::halted
               ? 0
               : (tr.status == TagStatus::budget_exhausted ? 3 : 2);
  }
  if (layer == "ca1d") {
    RuleTable1D t = load_1d_rules(rules_spec);
    LineConfiguration c0 = parse_config_1d(slurp(config_path), t.quiescent);
    RunResult res = ca_run_until_halt(t, c0, budget);
    std::cout << "steps: " << res.trace.size() - 1 << "\n";
    std::cout << "status: "
              << (res.status == RunStatus::halted ? "halted"
                  : res.status == RunStatus::budget_exhausted
                      ? "budget-exhausted"
                      : "missing-rule")
              << "\n";
    if (res.error) std::cout << "error: " << res.error->describe() << "\n";
    std::set<char> used;
    for (auto& c : res.trace)
      for (auto& [p, s] : c.support) used.insert(s);
    used.insert(t.quiescent);
    std::cout << "states-used: " << used.size() << "\n";
    auto& f = res.trace.back();
    std::cout << "support: [" << f.lo() << ", " << f.hi() << "]\n";
    if (!trace_out.empty()) spill(trace_out, render_spacetime(res.trace));
    if (render == "text") std::cout << render_spacetime(res.trace);
    if (res.status == RunStatus::missing_rule) return 2;
    return res.status == RunStatus::halted ? 0 : 3;
  }
  if (layer == "hyp-p" || layer == "hyp-q") {
    hyp::GridKind kind = parse_kind(rules_spec);
    long extent = 8 + budget / 2;
    hyp::TilingPatch patch = hyp::build_patch(kind, -2, extent);
    hyp::RotationGroup g = hyp::rotation_group(kind);
    hyp::GridState s0;
    hyp::RotRuleTable table;
    hyp::QLayout lay;
    if (layer == "hyp-p") {
      table = hyp::p_table(kind);
      table.build(g, true);
      s0 = hyp::p_initial(patch);
    } else {
      auto q = hyp::compile_q(kind, ln9_table());
      table = std::move(q.table);
      TmConfiguration c0 = make_tm_config(tape, head, state);
      LineConfiguration line =
          encode_tm(c0, minsky_catalog(), incoming, {.with_zone = false});
      LineConfiguration shifted;
      if (!line.empty()) {
        long lo = line.lo();
        for (auto& [p, s] : line.support) shifted.support[p - lo] = s;
      }
      s0 = hyp::q_initial(patch, shifted, lay);
    }
    hyp::GridRunResult res = hyp::hyp_run(patch, table, g, s0, budget);
    std::cout << "steps: " << res.trace.size() - 1 << "\n";
    const char* st = res.status == hyp::GridRunStatus::halted ? "halted"
                     : res.status == hyp::GridRunStatus::budget_exhausted
                         ? "budget-exhausted"
                         : res.status == hyp::GridRunStatus::missing_rule
                             ? "missing-rule"
                             : "collar-violation";
    std::cout << "status: " << st << "\n";
    if (res.error) std::cout << "error: " << res.error->describe() << "\n";
    if (!res.collar_detail.empty())
      std::cout << "error: " << res.collar_detail << "\n";
    std::set<char> used;
    for (auto& tr : res.trace)
      for (auto& [id, s] : tr.cells) used.insert(s);
    used.insert('W');
    std::cout << "states-used: " << used.size() << "\n";
    if (!trace_out.empty()) {
      std::string t;
      for (size_t i = 0; i < res.trace.size(); ++i) {
        t += "step " + std::to_string(i) + "\n";
        t += hyp::dump_state(patch, res.trace[i]);
      }
      spill(trace_out, t);
    }
    if (render == "text" && layer == "hyp-q") {
      for (auto& tr : res.trace) {
        LineConfiguration proj = hyp::project_yellow(patch, tr, lay);
        std::cout << serialize_config_1d(proj);
      }
    }
    if (res.status == hyp::GridRunStatus::halted) return 0;
    return res.status == hyp::GridRunStatus::budget_exhausted ? 3 : 2;
  }
  std::cerr << "unknown layer '" << layer << "'\n";
  return 1;
}

// ------------------------------------------------------------------ verify

namespace {

ExtendedTagSystem random_extended(std::mt19937& rng) {
  ExtendedTagSystem E;
  E.base.alphabet = {'a', 'b', 'c', 'h', 't', 'u'};
  E.terminal = {'t', 'u'};
  E.base.halting = {'h'};
  std::uniform_int_distribution<int> len(0, 3);
  std::string pool = "abcthu";
  auto word = [&](bool terminal_only) {
    std::string w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      char c;
      do {
        c = pool[std::uniform_int_distribution<int>(0, 5)(rng)];
      } while (terminal_only && !E.terminal.count(c));
      w += c;
    }
    return w;
  };
  for (char a : {'a', 'b', 'c'}) E.base.productions[a] = word(false);
  E.base.productions['h'] = word(true);  // the halting production is terminal
  return E;
}

int run_lemma_suite(int trials, unsigned seed, Report& rep) {
  std::mt19937 rng(seed);
  int conclusive = 0;
  for (int i = 0; i < trials; ++i) {
    ExtendedTagSystem E = random_extended(rng);
    std::uniform_int_distribution<int> len(2, 6);
    std::string w;
    std::string pool = "abc";
    int n = len(rng);
    for (int k = 0; k < n; ++k)
      w += pool[std::uniform_int_distribution<int>(0, 2)(rng)];
    LemmaReport lr = verify_lemma(E, w, 160, 't');
    if (lr.conclusive) {
      ++conclusive;
      rep.add("lemma trial " + std::to_string(i), lr.agree, lr.detail);
    }
  }
  rep.add("lemma conclusive trials >= half",
          conclusive * 2 >= trials,
          std::to_string(conclusive) + "/" + std::to_string(trials));
  return 0;
}

void run_cosim_suite(int trials, long budget, Report& rep) {
  auto insts = find_halting_instances(3, 4, false, static_cast<size_t>(trials),
                                      /*check_cosim=*/false);
  const auto& m = minsky_utm();
  const auto& cat = minsky_catalog();
  for (auto& inst : insts) {
    auto res = cosimulate(m, ln11_table(), inst.config(), inst.incoming,
                          inst.tm_steps + 4, cat, budget);
    rep.add("cosim " + inst.tape + "@" + std::to_string(inst.head) + " s" +
                std::to_string(inst.state) + inst.incoming,
            res.ok, res.detail);
  }
  if (insts.empty()) rep.add("cosim instance search", false, "no instances");
}

void run_hyp_equivalence(hyp::GridKind kind, long budget, Report& rep) {
  auto insts = find_halting_instances(3, 5, true, 2);
  const auto& m = minsky_utm();
  const auto& cat = minsky_catalog();
  for (auto& inst : insts) {
    // reference: decoded trace from the 1D run (= the machine trace when
    // cosimulation succeeds)
    auto res1d = cosimulate(m, ln11_table(), inst.config(), inst.incoming,
                            inst.tm_steps + 4, cat);
    hyp::QInstance qi{inst.config(), inst.incoming};
    auto hrep = hyp::verify_halting(kind, qi, budget);
    bool ok = res1d.ok && hrep.tm_trace_matched;
    rep.add("equivalence " + std::string(hyp::kind_name(kind)) + " " + inst.tape,
            ok, res1d.ok ? hrep.detail : res1d.detail);
  }
}

void run_halting_suite(hyp::GridKind kind, long budget, Report& rep) {
  auto insts = find_halting_instances(3, 5, true, 2);
  for (auto& inst : insts) {
    hyp::QInstance qi{inst.config(), inst.incoming};
    auto hrep = hyp::verify_halting(kind, qi, budget);
    rep.add("halting " + std::string(hyp::kind_name(kind)) + " " + inst.tape +
                "@" + std::to_string(inst.head),
            hrep.ok, hrep.detail);
  }
  if (auto loop = find_looping_instance()) {
    hyp::QInstance qi{loop->config(), loop->incoming};
    auto hrep = hyp::verify_halting(kind, qi, budget);
    rep.add("non-halting " + std::string(hyp::kind_name(kind)), hrep.ok,
            hrep.detail);
  }
}

}  // namespace

int cmd_verify(const std::string& suite, int trials, unsigned seed,
               const std::string& grid, long budget) {
  Report rep;
  if (suite == "collisions") {
    rep = verify_collisions();
  } else if (suite == "stopping") {
    rep = verify_stopping_fixtures();
  } else if (suite == "lemma") {
    run_lemma_suite(trials, seed, rep);
  } else if (suite == "cosim") {
    run_cosim_suite(trials, budget, rep);
  } else if (suite == "hyp-equivalence") {
    run_hyp_equivalence(parse_kind(grid), budget, rep);
  } else if (suite == "halting") {
    run_halting_suite(parse_kind(grid), budget, rep);
  } else {
    std::cerr << "unknown suite '" << suite << "'\n";
    return 1;
  }
  return report_exit(rep);
}

// ------------------------------------------------------------------ lint

int cmd_lint(const std::string& rules_path, const std::string& grid) {
  Report rep;
  if (grid == "1d") {
    RuleTable1D t = load_1d_rules(rules_path);
    // determinism and quiescence hold by construction/validation
    rep.add("parse + determinism + quiescence", true);
    // unexercised rules against the reference runs: the collision fixtures
    // plus a small cosimulation set
    for (auto& b : parse_golden(data::golden_collisions)) (void)verify_block(t, b, "x");
    for (auto& b : parse_golden(data::golden_uzone)) (void)verify_block(t, b, "x");
    auto insts = find_halting_instances(2, 3, false, 6, false);
    for (auto& inst : insts)
      (void)cosimulate(minsky_utm(), t, inst.config(), inst.incoming,
                       inst.tm_steps + 4, minsky_catalog());
    std::vector<std::string> unused;
    for (auto& [ctx, n] : t.rules)
      if (!t.exercised.count(ctx))
        unused.push_back(std::string(1, ctx[0]) + ctx[1] + ctx[2]);
    std::string list;
    for (auto& u : unused) list += u + " ";
    rep.add("unexercised rules: " + std::to_string(unused.size()), true, list);
  } else {
    hyp::GridKind kind = parse_kind(grid);
    hyp::RotRuleTable t = rules_path.rfind("builtin:", 0) == 0
                              ? (rules_path == "builtin:p" ? hyp::p_table(kind)
                                                           : hyp::q_table(kind))
                              : hyp::parse_grid_rules(slurp(rules_path), kind);
    hyp::RotationGroup g = hyp::rotation_group(kind);
    auto findings = hyp::check_rotation_invariance(t, g);
    for (auto& f : findings) rep.add("rotation invariance", false, f.what);
    if (findings.empty()) rep.add("rotation invariance", true);
    rep.add("group order " + std::to_string(g.order()), true);
  }
  std::cout << rep.to_text();
  return rep.all_ok() ? 0 : 2;
}

// ------------------------------------------------------------------ main

int main(int argc, char** argv) {
  CLI::App app{"simulation and verification workbench for small universal "
               "cellular automata"};
  app.require_subcommand(1);

  // ---- run
  auto* run = app.add_subcommand("run", "run one layer from data files");
  std::string layer, rules_spec = "builtin:ln11", machine_path, config_path;
  std::string tape, trace_out, render = "none";
  long head = 0, budget = 1000;
  int state = 1;
  std::string incoming = "L";
  run->add_option("--layer", layer,
                  "tag | extended-tag | tm | ca1d | hyp-p | hyp-q")
      ->required();
  run->add_option("--rules", rules_spec,
                  "rule file, builtin:ln7/ln9/ln9halt/ln11, or grid name");
  run->add_option("--machine", machine_path, "machine or tag-system file");
  run->add_option("--config", config_path, "line configuration file");
  run->add_option("--tape", tape, "tape / initial word");
  run->add_option("--head", head, "head position in --tape");
  run->add_option("--state", state, "initial state");
  run->add_option("--incoming", incoming, "head arrival direction L|R");
  run->add_option("--budget", budget, "max steps");
  run->add_option("--trace", trace_out, "write the trace to this file");
  run->add_option("--render", render, "none | text");

  // ---- verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite, vgrid = "pentagrid";
  int trials = 50;
  unsigned vseed = 12345;
  long vbudget = 4000;
  verify->add_option("suite", suite,
                     "collisions | stopping | lemma | cosim | hyp-equivalence | halting")
      ->required();
  verify->add_option("--trials", trials, "randomized trials");
  verify->add_option("--seed", vseed, "random seed");
  verify->add_option("--grid", vgrid, "grid for the hyperbolic suites");
  verify->add_option("--budget", vbudget, "step budget");

  // ---- lint
  auto* lint = app.add_subcommand("lint", "check a rule table");
  std::string lrules, lgrid = "1d";
  lint->add_option("rules", lrules, "rule file or builtin:<name>")->required();
  lint->add_option("--grid", lgrid, "1d | pentagrid | heptagrid | dodecagrid");

  // ---- render
  auto* rnd = app.add_subcommand("render", "render a saved 1D trace");
  std::string rtrace, rformat = "text", rout;
  rnd->add_option("trace", rtrace, "config file (one line per step)")->required();
  rnd->add_option("--format", rformat, "text | svg");
  rnd->add_option("--out", rout, "output file (default stdout)");

  // ---- ca1d aliases
  auto* ca1d = app.add_subcommand("ca1d", "one-dimensional layer shortcuts");
  ca1d->require_subcommand(1);
  auto* ca_run = ca1d->add_subcommand("run", "run a 1D automaton");
  std::string c_rules = "builtin:ln11", c_config;
  long c_budget = 1000;
  ca_run->add_option("--rules", c_rules)->required();
  ca_run->add_option("--config", c_config)->required();
  ca_run->add_option("--budget", c_budget);
  auto* ca_cosim = ca1d->add_subcommand("cosim", "cosimulate machine vs line");
  std::string s_tape;
  long s_head = 0;
  int s_state = 1;
  std::string s_inc = "L", s_rules = "builtin:ln11";
  int s_steps = 50;
  ca_cosim->add_option("--tape", s_tape)->required();
  ca_cosim->add_option("--head", s_head);
  ca_cosim->add_option("--state", s_state);
  ca_cosim->add_option("--incoming", s_inc);
  ca_cosim->add_option("--rules", s_rules);
  ca_cosim->add_option("--steps", s_steps);
  auto* ca_vc = ca1d->add_subcommand("verify-collisions",
                                     "collision fixtures against the tables");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run)
      return cmd_run(layer, rules_spec, machine_path, config_path, tape, head,
                     state, incoming.empty() ? 'L' : incoming[0], budget,
                     trace_out, render);
    if (*verify) return cmd_verify(suite, trials, vseed, vgrid, vbudget);
    if (*lint) return cmd_lint(lrules, lgrid);
    if (*rnd) {
      std::string text = slurp(rtrace);
      std::vector<LineConfiguration> trace;
      detail::for_data_lines(text, [&](int, std::string_view line) {
        if (line[0] == '@') return;
        trace.push_back(parse_config_1d(line));
      });
      std::string out = rformat == "svg" ? render_svg(trace)
                                         : render_spacetime(trace);
      if (rformat != "svg" && rformat != "text") {
        std::cerr << "unknown format '" << rformat << "'\n";
        return 1;
      }
      if (rout.empty())
        std::cout << out;
      else
        spill(rout, out);
      return 0;
    }
    if (*ca1d) {
      if (*ca_run)
        return cmd_run("ca1d", c_rules, "", c_config, "", 0, 1, 'L', c_budget,
                       "", "none");
      if (*ca_cosim) {
        TmConfiguration c0 = make_tm_config(s_tape, s_head, s_state);
        auto res = cosimulate(minsky_utm(), load_1d_rules(s_rules), c0,
                              s_inc.empty() ? 'L' : s_inc[0], s_steps,
                              minsky_catalog());
        std::cout << (res.ok ? "equivalent" : "DIVERGED") << ": "
                  << res.tm_steps_matched << " machine steps over "
                  << res.ca_steps << " automaton steps\n";
        if (!res.detail.empty()) std::cout << res.detail << "\n";
        return res.ok ? 0 : 2;
      }
      if (*ca_vc) {
        Report rep = verify_collisions();
        return report_exit(rep);
      }
    }
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
