// Command-line front end: catalog, play, check, refute, rank, trace-replay.
//
// Exit codes: 0 success or Pass, 1 Fail or counterexample, 2 usage or parse
// error, 3 budget exceeded.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wadge/catalog.hpp"
#include "wadge/json.hpp"

namespace {

using namespace wadge;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

int exit_code_for(const Error& e) { return e.kind() == ErrorKind::ResourceLimit ? kBudget : kUsage; }

int cmd_catalog(bool problems, bool witnesses, bool strategies, bool spaces) {
  bool all = !problems && !witnesses && !strategies && !spaces;
  if (all || problems) {
    std::cout << "problems:\n";
    for (auto& [name, desc] : problem_descriptions()) std::cout << "  " << name << "  " << desc << '\n';
  }
  if (all || witnesses) {
    std::cout << "witnesses:\n";
    for (const auto& e : witness_catalog()) {
      std::string sig = e.f.empty() ? "f <= f" : e.f + " <= " + e.g;
      std::cout << "  " << e.name << "  [" << sig << (e.suite.empty() ? "" : ", suite " + e.suite) << "]  "
                << e.description << '\n';
    }
    std::cout << "candidates (refute):\n";
    for (const auto& c : candidate_catalog())
      std::cout << "  " << c.name << "  [" << c.f << " <= " << c.g << "]  " << c.description << '\n';
  }
  if (all || strategies) {
    std::cout << "strategies:\n";
    for (const auto& s : strategy_catalog()) std::cout << "  " << s.name << "  " << s.description << '\n';
  }
  if (all || spaces) {
    std::cout << "spaces:\n";
    for (const auto& s : space_examples()) {
      std::cout << "  " << s;
      try {
        std::cout << "  rank " << cb_rank(parse_space(s)).value();
      } catch (const Error& e) {
        std::cout << "  " << to_string(e.kind());
      }
      std::cout << '\n';
    }
    std::cout << "  grammar: X*Y (product), X/Y (layered, right associative), Compl(X), Fin(k), (X)\n";
  }
  return kOk;
}

int cmd_play(const std::string& kind, const std::string& problem, const std::string& sI_name,
             const std::string& sII_name, std::size_t depth, bool as_json) {
  GameConfig cfg(parse_game_kind(kind), problem_by_name(problem));
  auto sIs = player_I_strategies(sI_name, cfg.problem);
  auto sII = player_II_strategy(sII_name, cfg.problem);
  json out = json::array();
  for (const auto& sI : sIs) {
    PlayTrace t = play(cfg, sI, sII, depth);
    Adjudication a = adjudicate(cfg, t);
    if (as_json) {
      out.push_back(io::trace_to_json(t, a));
    } else {
      std::cout << sI.label << " vs " << sII.label << '\n';
      std::cout << "  I:  " << format_prefix(truncate(t.moves_I, 32)) << (t.moves_I.size() > 32 ? "..." : "") << '\n';
      std::cout << "  II: " << format_prefix(truncate(t.output(), 32)) << " (effective, " << t.erases
                << " erases)\n";
      std::cout << "  truth: " << to_string(t.truth) << '\n';
      std::cout << "  " << format_adjudication(a) << '\n';
    }
  }
  if (as_json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << '\n';
  return kOk;
}

int cmd_check(const std::string& f_name, const std::string& g_name, const std::string& witness,
              const std::string& suite, std::size_t depth, bool strict, bool as_json) {
  Problem f = problem_by_name(f_name);
  Problem g = problem_by_name(g_name);
  WitnessPair w = witness_for(witness, f, g);
  CheckReport r = check_witness(f, g, w, suite_by_name(suite), depth, {strict});
  std::sort(r.records.begin(), r.records.end(), [](auto& a, auto& b) { return a.label < b.label; });
  if (as_json) {
    std::cout << io::check_report_to_json(r).dump(2) << '\n';
  } else {
    for (const auto& rec : r.records) {
      std::size_t verified = std::count_if(rec.outer.begin(), rec.outer.end(), [](auto& v) { return v.is_verified(); });
      std::cout << rec.label << "  inner " << to_string(rec.inner_domain) << "  outer " << verified << "/"
                << rec.outer.size() << " Verified\n";
    }
    std::cout << (r.pass ? "Pass" : "Fail") << " (" << r.records.size() << " instances, depth " << depth << ", "
              << r.undetermined << " with Undetermined verdicts)\n";
    if (!r.pass) std::cout << "first counterexample: " << r.first_counterexample << '\n';
  }
  return r.pass ? kOk : kFail;
}

int cmd_refute(const std::string& f_name, const std::string& g_name, const std::string& candidate, RefuteBounds b,
               bool as_json) {
  Problem f = problem_by_name(f_name);
  Problem g = problem_by_name(g_name);
  WitnessPair w = witness_for(candidate, f, g);
  RefuteResult r = refute_witness(f, g, w, family_for(f, g), b);
  if (as_json) {
    std::cout << io::refute_result_to_json(r).dump(2) << '\n';
  } else {
    std::cout << to_string(r.status) << " after " << r.schedules << " schedules\n";
    if (r.counterexample) {
      const auto& c = *r.counterexample;
      std::cout << "  family:   " << c.family << '\n'
                << "  instance: " << c.label << '\n'
                << "  depth:    " << c.depth << '\n'
                << "  input:    " << format_prefix(c.input) << '\n'
                << "  inner:    " << format_prefix(c.inner_out) << '\n'
                << "  solution: " << format_prefix(c.solution) << '\n'
                << "  outer:    " << format_prefix(c.outer_out) << '\n'
                << "  violated: " << c.contract << " (" << c.note << ")\n";
    }
  }
  switch (r.status) {
    case RefuteResult::Status::Found: return kFail;
    case RefuteResult::Status::NotFound: return kOk;
    case RefuteResult::Status::BudgetExceeded: return kBudget;
  }
  return kOk;
}

int cmd_rank(const std::string& expr) {
  Space s = parse_space(expr);
  try {
    RankExpr r = cb_rank(s);
    std::cout << r.value() << '\n';
    if (r.terms.size() > 1) std::cerr << to_string(s) << ": " << r.to_string() << '\n';
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotScattered) throw;
    std::cout << "NotScattered\n";
    std::cerr << e.what() << '\n';
  }
  return kOk;
}

int cmd_trace_replay(const std::string& path, bool as_json) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot read " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("invalid JSON: ") + e.what());
  }
  auto stored = io::trace_from_json(j);
  GameConfig cfg(stored.trace.kind, problem_by_name(stored.trace.problem));
  Adjudication a = adjudicate(cfg, stored.trace);
  bool same = !stored.adjudication || *stored.adjudication == a;
  if (as_json)
    std::cout << io::trace_to_json(stored.trace, a).dump(2) << '\n';
  else
    std::cout << format_adjudication(a) << '\n' << (same ? "matches the stored adjudication" : "DIFFERS from the stored adjudication") << '\n';
  return same ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weihrauch reductions, represented spaces and Wadge-style games at finite depth"};
  app.require_subcommand(1);

  bool as_json = false;
  std::size_t depth = 64;
  unsigned long seed = 0;

  auto* catalog = app.add_subcommand("catalog", "list problems, witnesses, strategies and spaces");
  bool c_problems = false, c_witnesses = false, c_strategies = false, c_spaces = false;
  catalog->add_flag("--problems", c_problems);
  catalog->add_flag("--witnesses", c_witnesses);
  catalog->add_flag("--strategies", c_strategies);
  catalog->add_flag("--spaces", c_spaces);

  auto* play_cmd = app.add_subcommand("play", "play a game and adjudicate it");
  std::string kind, problem, sI, sII;
  play_cmd->add_option("kind", kind, "wadge | backtrack | commit")->required();
  play_cmd->add_option("problem", problem)->required();
  play_cmd->add_option("player-I", sI)->required();
  play_cmd->add_option("player-II", sII)->required();
  play_cmd->add_option("--depth", depth, "rounds")->capture_default_str();
  play_cmd->add_option("--seed", seed, "accepted for reproducibility; play is deterministic")->capture_default_str();
  play_cmd->add_flag("--json", as_json);

  auto* check = app.add_subcommand("check", "check a library witness on a fixture suite");
  std::string f, g, witness, suite;
  bool strict = false;
  std::size_t check_depth = 128;
  check->add_option("f", f)->required();
  check->add_option("g", g)->required();
  check->add_option("witness", witness)->required();
  check->add_option("suite", suite)->required();
  check->add_option("--depth", check_depth)->capture_default_str();
  check->add_flag("--strict", strict, "Undetermined counts as Fail");
  check->add_option("--seed", seed)->capture_default_str();
  check->add_flag("--json", as_json);

  auto* refute = app.add_subcommand("refute", "search adversarial schedules against a candidate");
  std::string rf, rg, candidate;
  RefuteBounds bounds;
  refute->add_option("f", rf)->required();
  refute->add_option("g", rg)->required();
  refute->add_option("candidate", candidate)->required();
  refute->add_option("--depth", bounds.depth)->capture_default_str();
  refute->add_option("--alphabet-bound", bounds.alphabet)->capture_default_str();
  refute->add_option("--budget", bounds.budget, "schedules evaluated")->capture_default_str();
  refute->add_option("--decisions", bounds.max_decisions)->capture_default_str();
  refute->add_option("--seed", seed)->capture_default_str();
  refute->add_flag("--json", as_json);

  auto* rank = app.add_subcommand("rank", "Cantor-Bendixson rank of a space expression");
  std::string expr;
  rank->add_option("expr", expr)->required();

  auto* replay = app.add_subcommand("trace-replay", "re-adjudicate a saved JSON trace");
  std::string path;
  replay->add_option("file", path)->required();
  replay->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*catalog) return cmd_catalog(c_problems, c_witnesses, c_strategies, c_spaces);
    if (*play_cmd) return cmd_play(kind, problem, sI, sII, depth, as_json);
    if (*check) return cmd_check(f, g, witness, suite, check_depth, strict, as_json);
    if (*refute) return cmd_refute(rf, rg, candidate, bounds, as_json);
    if (*rank) return cmd_rank(expr);
    if (*replay) return cmd_trace_replay(path, as_json);
  } catch (const Error& e) {
    std::cerr << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kUsage;
}
