#include "bfgame/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bfgame/adjudicator.hpp"
#include "bfgame/errors.hpp"
#include "bfgame/scenario.hpp"
#include "bfgame/transcript.hpp"

namespace bfgame {

namespace {

std::string braces(const IdSet& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + ids[i];
  return out + "}";
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  out << text;
  if (out_path.empty()) return;
  std::ofstream file(out_path);
  if (!file) throw ValidationError("cannot write " + out_path);
  file << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

struct Options {
  std::string scenario;
  std::string transcript;
  std::string override_scenario;
  std::string busted;
  std::string candidate;
  std::string out_path;
  std::uint64_t seed = 0;
  std::size_t max_total_edges = 0;
  std::size_t max_vertices = 3;
  std::size_t naive_cap = 5;
  std::size_t threads = 1;
  bool no_bridge_prune = false;
  bool naive = false;
  bool symmetry = false;
};

SearchCaps caps_from(const Options& o) {
  SearchCaps caps;
  if (o.max_total_edges != 0) caps.max_total_edges = o.max_total_edges;
  caps.naive_max_total_edges = o.naive_cap;
  caps.bridge_prune = !o.no_bridge_prune;
  return caps;
}

int run_simulate(const Options& o, bool seeded, std::ostream& out) {
  const ScenarioFile scenario = load_scenario(o.scenario);
  const Position initial = scenario.initial_position();
  GreedyFixer fixer;
  Series series;
  std::string buster_name;
  if (seeded) {
    RandomBuster buster(o.seed);
    series = play_series(initial, buster, fixer);
    buster_name = buster.name();
  } else {
    if (scenario.script.empty()) throw ValidationError("scenario has no buster script; pass --seed for a random Buster");
    ScriptedBuster buster(scenario.script);
    series = play_series(initial, buster, fixer);
    buster_name = buster.name();
  }
  emit(render_transcript_file(series, o.scenario, buster_name, fixer.name(),
                              seeded ? std::optional<std::uint64_t>(o.seed) : std::nullopt),
       o.out_path, out);
  return kExitOk;
}

int run_verify(const Options& o, std::ostream& out) {
  const Position p = load_scenario(o.scenario).initial_position();
  const IdSet busted = parse_id_list(o.busted);
  const IdSet candidate = parse_id_list(o.candidate);
  const SearchCaps caps = caps_from(o);
  const OptimalityVerdict verdict = verify_optimal(p, busted, candidate, caps);
  std::ostringstream text;
  text << (verdict.optimal ? "OPTIMAL" : "NOT-OPTIMAL") << "\n";
  text << "witness: " << verdict.witness << "\n";
  if (o.naive) {
    const bool literal = verify_optimal_naive(p, busted, candidate, caps);
    text << "naive oracle: " << (literal ? "OPTIMAL" : "NOT-OPTIMAL")
         << (literal == verdict.optimal ? " (agrees)" : " (DISAGREES)") << "\n";
    if (literal != verdict.optimal) {
      emit(text.str(), o.out_path, out);
      return kExitFailed;
    }
  }
  emit(text.str(), o.out_path, out);
  return verdict.optimal ? kExitOk : kExitFailed;
}

int run_sweep(const Options& o, std::ostream& out) {
  SweepConfig config;
  config.max_vertices = o.max_vertices;
  config.max_total_edges = o.max_total_edges != 0 ? o.max_total_edges : 5;
  config.caps = caps_from(o);
  config.caps.max_total_edges = std::max(config.caps.max_total_edges, config.max_total_edges);
  config.check_naive = o.naive;
  config.symmetry_reduction = o.symmetry;
  config.threads = o.threads;
  const SweepReport report = theorem_sweep(config);
  emit(render_report(report), o.out_path, out);
  return report.clean() ? kExitOk : kExitFailed;
}

int run_msts(const Options& o, std::ostream& out) {
  const Position p = load_scenario(o.scenario).initial_position();
  const IdSet busted = parse_id_list(o.busted);
  const std::vector<IdSet> moves = all_greedy_fixer_moves(p, busted);
  std::ostringstream text;
  text << moves.size() << " minimum spanning tree" << (moves.size() == 1 ? "" : "s") << "\n";
  for (const IdSet& m : moves) text << braces(m) << " weight " << format_weight(total_weight(select(p.reserve, m))) << "\n";
  emit(text.str(), o.out_path, out);
  return kExitOk;
}

int run_replay(const Options& o, std::ostream& out) {
  const Transcript t = parse_transcript(read_file(o.transcript));
  std::string scenario_path = o.override_scenario.empty() ? t.scenario : o.override_scenario;
  if (!o.override_scenario.empty() || std::filesystem::exists(scenario_path)) {
    // as given
  } else {
    const auto beside = std::filesystem::path(o.transcript).parent_path() / std::filesystem::path(t.scenario).filename();
    if (std::filesystem::exists(beside)) scenario_path = beside.string();
  }
  const Position initial = load_scenario(scenario_path).initial_position();
  try {
    const Series s = replay_transcript(t, initial);
    const OutcomeTriple totals = series_totals(s);
    emit("replay OK: " + std::to_string(s.length()) + " rounds, totals " + to_string(totals) + "\n", o.out_path, out);
    return kExitOk;
  } catch (const ValidationError& e) {
    emit(std::string("replay FAILED: ") + e.what() + "\n", o.out_path, out);
    return kExitFailed;
  } catch (const IdentityViolation& e) {
    emit(std::string("replay FAILED: ") + e.what() + "\n", o.out_path, out);
    return kExitFailed;
  }
}

/// Reads Buster moves from `in`, one per line, and answers greedily.
class InteractiveBuster final : public BusterPolicy {
 public:
  InteractiveBuster(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  BusterAction next(const Position& p, const std::vector<RoundRecord>& history) override {
    out_ << "round " << history.size() + 1 << ": G=" << braces(ids_of(p.graph.edges()))
         << " R=" << braces(ids_of(p.reserve)) << "\n";
    for (;;) {
      out_ << "buster> " << std::flush;
      std::string line;
      if (!std::getline(in_, line)) {
        out_ << "\n";
        return BusterAction::stop();
      }
      std::istringstream words(line);
      std::string word;
      words >> word;
      if (word.empty()) continue;
      if (word == "quit") {
        if (history.empty()) {
          out_ << "Buster may only quit after a round Fixer survived\n";
          continue;
        }
        return BusterAction::stop();
      }
      IdSet busted;
      try {
        busted = parse_id_list(word);
      } catch (const std::invalid_argument& e) {
        out_ << "illegal move: " << e.what() << "\n";
        continue;
      }
      if (busted.empty() || !is_subset(busted, p.graph.edges())) {
        out_ << "illegal move: choose a nonempty set of edges from G\n";
        continue;
      }
      return BusterAction::remove(std::move(busted));
    }
  }
  std::string name() const override { return "interactive"; }

 private:
  std::istream& in_;
  std::ostream& out_;
};

class AnnouncingFixer final : public FixerPolicy {
 public:
  explicit AnnouncingFixer(std::ostream& out) : out_(out) {}
  IdSet respond(const Position& p, const IdSet& busted, const std::vector<RoundRecord>& history) override {
    IdSet fix = greedy_.respond(p, busted, history);
    out_ << "fixer: " << braces(fix) << " weight " << format_weight(total_weight(select(p.reserve, fix))) << "\n";
    return fix;
  }
  std::string name() const override { return greedy_.name(); }

 private:
  GreedyFixer greedy_;
  std::ostream& out_;
};

int run_play(const Options& o, std::istream& in, std::ostream& out) {
  const Position initial = load_scenario(o.scenario).initial_position();
  InteractiveBuster buster(in, out);
  AnnouncingFixer fixer(out);
  Series series;
  try {
    series = play_series(initial, buster, fixer);
  } catch (const PolicyError&) {
    // Only reachable when input ends before the first move.
    out << "no rounds played\n";
    return kExitOk;
  }
  emit(render_transcript_file(series, o.scenario, buster.name(), fixer.name()), o.out_path, out);
  return kExitOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Buster/Fixer graph reconnection simulator and optimality verifier", "bfgame"};
  app.require_subcommand(1);
  Options o;

  auto* simulate = app.add_subcommand("simulate", "Play a scenario's script (or a seeded random Buster) against greedy Fixer");
  simulate->add_option("scenario", o.scenario, "Scenario file")->required();
  auto* seed_opt = simulate->add_option("--seed", o.seed, "Random Buster seed");
  simulate->add_option("--out", o.out_path, "Also write the transcript here");

  auto* verify = app.add_subcommand("verify", "Decide whether a Fixer response is optimal");
  verify->add_option("scenario", o.scenario, "Scenario file")->required();
  verify->add_option("--busted", o.busted, "Buster's move, comma-separated ids")->required();
  verify->add_option("--candidate", o.candidate, "Fixer's response, comma-separated ids (empty allowed)")->required();
  verify->add_option("--max-total-edges", o.max_total_edges, "Cap on |G| + |R| for the search");
  verify->add_option("--naive-cap", o.naive_cap, "Cap on |G| + |R| for the literal oracle");
  verify->add_flag("--naive", o.naive, "Cross-check with the literal oracle");
  verify->add_flag("--no-bridge-prune", o.no_bridge_prune, "Compare against every alternative, not just bridge-only ones");
  verify->add_option("--out", o.out_path, "Also write the verdict here");

  auto* sweep = app.add_subcommand("theorem-sweep", "Exhaustively check that greedy responses are optimal");
  sweep->add_option("--max-total-edges", o.max_total_edges, "Largest |G| + |R| generated (default 5)");
  sweep->add_option("--max-vertices", o.max_vertices, "Largest vertex count generated (default 3)");
  sweep->add_option("--naive-cap", o.naive_cap, "Cap on |G| + |R| for the literal oracle");
  sweep->add_flag("--naive", o.naive, "Cross-check every verdict with the literal oracle");
  sweep->add_flag("--no-bridge-prune", o.no_bridge_prune, "Search without the bridge-only restriction");
  sweep->add_flag("--symmetry", o.symmetry, "Skip vertex relabelings of instances already checked");
  sweep->add_option("--threads", o.threads, "Worker threads");
  sweep->add_option("--out", o.out_path, "Also write the report here");

  auto* msts = app.add_subcommand("msts", "List every minimum spanning tree of the contracted graph");
  msts->add_option("scenario", o.scenario, "Scenario file")->required();
  msts->add_option("--busted", o.busted, "Buster's move, comma-separated ids")->required();
  msts->add_option("--out", o.out_path, "Also write the list here");

  auto* replay = app.add_subcommand("replay", "Re-execute a saved transcript and re-check its invariants");
  replay->add_option("transcript", o.transcript, "Transcript file")->required();
  replay->add_option("--scenario", o.override_scenario, "Scenario file (default: the one the transcript names)");
  replay->add_option("--out", o.out_path, "Also write the result here");

  auto* play = app.add_subcommand("play", "Enter Buster moves interactively; Fixer answers greedily");
  play->add_option("scenario", o.scenario, "Scenario file")->required();
  play->add_option("--out", o.out_path, "Also write the final transcript here");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) return run_simulate(o, seed_opt->count() > 0, out);
    if (*verify) return run_verify(o, out);
    if (*sweep) return run_sweep(o, out);
    if (*msts) return run_msts(o, out);
    if (*replay) return run_replay(o, out);
    if (*play) return run_play(o, in, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}

}  // namespace bfgame
