// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only if
// every criterion passes inside its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bfgame/adjudicator.hpp"
#include "bfgame/engine.hpp"
#include "bfgame/reconnect.hpp"
#include "oracles.hpp"
#include "policies.hpp"
#include "worked_example.hpp"

using namespace bfgame;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

bool run_criterion(int number, const std::string& title, double budget_seconds, const std::function<Result()>& body) {
  const auto start = Clock::now();
  Result r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const bool in_budget = seconds < budget_seconds;
  const bool pass = r.ok && in_budget;
  std::printf("[%s] %d %s: %s; %.3f s (budget %.0f s)%s\n", pass ? "PASS" : "FAIL", number, title.c_str(),
              r.detail.c_str(), seconds, budget_seconds, in_budget ? "" : " OVER BUDGET");
  std::fflush(stdout);
  return pass;
}

// 1 ------------------------------------------------------------------------

Result scripted_lines() {
  std::size_t matched = 0;
  std::string first_bad;
  const auto lines = worked::lines();
  for (const auto& line : lines) {
    const Series s = worked::play(line);
    const OutcomeTriple t = series_totals(s);
    if (t.total_busted == line.busted_sum && t.fix_cost == Weight(line.cost_sum) && s.outcome == line.winner &&
        t.fixer_win == (line.winner == Winner::Fixer)) {
      ++matched;
    } else if (first_bad.empty()) {
      first_bad = line.name + " gave " + to_string(t);
    }
  }
  std::ostringstream d;
  d << matched << "/" << lines.size() << " series match (sum|B|, sum w(F), winner)";
  if (!first_bad.empty()) d << "; first mismatch " << first_bad;
  return {matched == lines.size() && lines.size() == 37, d.str()};
}

// 2 ------------------------------------------------------------------------

Result triangle_verdicts() {
  const Position p = worked::initial();
  const IdSet busted{"e1", "e2"};
  const std::vector<std::pair<IdSet, bool>> expected{{{"e4"}, true}, {{"e5"}, false}, {{"e4", "e5"}, false}};
  bool ok = true;
  std::ostringstream d;
  for (const auto& [candidate, want] : expected) {
    const bool search = verify_optimal(p, busted, candidate).optimal;
    const bool naive = verify_optimal_naive(p, busted, candidate);
    ok = ok && search == want && naive == want;
    d << (candidate.size() == 1 ? "{" + candidate[0] + "}" : std::string("{e4,e5}")) << " search="
      << (search ? "optimal" : "not") << " naive=" << (naive ? "optimal" : "not") << " ";
  }
  std::string s = d.str();
  s.pop_back();
  return {ok, s};
}

// 3 and 7 share one sweep.

SweepReport g_sweep;
bool g_sweep_done = false;

Result greedy_sweep() {
  SweepConfig config;
  config.max_vertices = 3;
  config.max_total_edges = 5;
  config.weights = {Weight(0), Weight(1), Weight(2)};
  config.symmetry_reduction = false;  // conservative key: every labeling is checked
  config.check_prune = true;
  g_sweep = theorem_sweep(config);
  g_sweep_done = true;
  std::ostringstream d;
  const std::uint64_t greedy_failures = g_sweep.greedy_checked - g_sweep.greedy_optimal;
  d << g_sweep.instances << " instances, " << g_sweep.responses << " responses, " << g_sweep.greedy_checked
    << " greedy moves, " << greedy_failures << " greedy failures, " << g_sweep.optimal_not_min_weight
    << " non-minimum optimal responses";
  const bool ok = g_sweep.instances > 0 && g_sweep.greedy_checked > 0 && greedy_failures == 0 &&
                  g_sweep.optimal_not_min_weight == 0 && g_sweep.counterexamples.empty();
  if (!g_sweep.counterexamples.empty()) d << "; first counterexample: " << g_sweep.counterexamples.front();
  return {ok, d.str()};
}

Result prune_soundness() {
  if (!g_sweep_done) return {false, "sweep did not run"};
  std::ostringstream d;
  d << g_sweep.prune_checked << " verdicts compared, " << g_sweep.prune_disagreements << " disagreements";
  return {g_sweep.prune_checked == g_sweep.responses && g_sweep.prune_checked > 0 && g_sweep.prune_disagreements == 0,
          d.str()};
}

// 4 ------------------------------------------------------------------------

// Replays a trace independently: every step must take a cheapest edge
// leaving the grown set, and the result must be exactly `tree`.
bool trace_is_prim_run(std::size_t c, const std::vector<Edge>& edges, const PrimTrace& trace,
                       const std::vector<std::string>& tree) {
  std::vector<bool> grown(c, false);
  if (trace.start_vertex >= c) return false;
  grown[trace.start_vertex] = true;
  std::vector<std::string> taken;
  for (const EdgeId& id : trace.addition_order) {
    std::optional<Weight> cheapest;
    const Edge* chosen = nullptr;
    for (const Edge& e : edges) {
      if (grown[e.u] == grown[e.v]) continue;
      if (!cheapest || e.weight < *cheapest) cheapest = e.weight;
      if (e.id == id) chosen = &e;
    }
    if (chosen == nullptr || chosen->weight != *cheapest) return false;
    grown[chosen->u] = grown[chosen->v] = true;
    taken.push_back(id);
  }
  std::sort(taken.begin(), taken.end());
  return taken == tree;
}

Result prim_equivalence() {
  const std::vector<Weight> weights{Weight(1), Weight(2), Weight(3)};
  std::uint64_t graphs = 0, trees = 0, msts = 0, mismatches = 0;
  std::string first_bad;
  for (std::size_t c = 1; c <= 4; ++c) {
    struct Kind {
      std::size_t u, v;
      Weight w;
    };
    std::vector<Kind> kinds;
    for (std::size_t u = 0; u < c; ++u) {
      for (std::size_t v = u; v < c; ++v) {
        for (const Weight& w : weights) kinds.push_back({u, v, w});
      }
    }
    // Multisets of kinds with up to six members, as nondecreasing index lists.
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> grow = [&](std::size_t from) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pick.size(); ++i) {
        const Kind& k = kinds[pick[i]];
        edges.push_back(Edge{"m" + std::to_string(i + 1), k.u, k.v, k.w});
      }
      if (oracle::count_components(c, edges) == 1) {
        ++graphs;
        const ContractedGraph m = make_contracted(c, edges);
        const auto all = oracle::spanning_trees(c, edges);
        const auto minimum = oracle::minimum_spanning_trees(c, edges);
        std::set<std::vector<std::string>> min_ids;
        for (const auto& t : minimum) min_ids.insert(t.ids);
        std::set<std::vector<std::string>> lib_ids;
        for (const auto& t : all_msts(m)) lib_ids.insert(t.edge_ids);
        bool ok = lib_ids == min_ids;
        for (const auto& t : all) {
          ++trees;
          const auto trace = prim_reachable(m, SpanningTree{t.ids, t.weight}, 4);
          const bool reachable = trace.has_value() && trace_is_prim_run(c, edges, *trace, t.ids);
          const bool is_min = min_ids.contains(t.ids);
          msts += is_min;
          ok = ok && reachable == is_min;
        }
        if (!ok) {
          ++mismatches;
          if (first_bad.empty()) {
            std::ostringstream d;
            d << "c=" << c;
            for (const Edge& e : edges) d << " " << e.id << "(" << e.u << "-" << e.v << ":" << e.weight << ")";
            first_bad = d.str();
          }
        }
      }
      if (pick.size() == 6) return;
      for (std::size_t k = from; k < kinds.size(); ++k) {
        pick.push_back(k);
        grow(k);
        pick.pop_back();
      }
    };
    grow(0);
  }
  std::ostringstream d;
  d << graphs << " connected multigraphs (loops included), " << trees << " spanning trees, " << msts
    << " minimum; " << mismatches << " mismatches";
  if (!first_bad.empty()) d << "; first: " << first_bad;
  return {mismatches == 0 && graphs > 0, d.str()};
}

// 5 and 6 share one corpus: ten random series on each of 1,000 instances.
// Superiority only compares series of the same instance.

std::vector<std::vector<Series>> g_corpus;

Result totals_identities() {
  std::mt19937_64 rng(20261018);
  std::uint64_t count = 0, violations = 0, too_long = 0, buster_wins = 0;
  g_corpus.clear();
  for (int inst = 0; inst < 1000; ++inst) {
    const Position p = oracle::random_instance(rng, 10);
    std::vector<Series> group;
    for (int k = 0; k < 10; ++k) {
      RandomBuster buster(rng(), 0.15);
      oracle::RandomLegalFixer random_fixer(rng());
      GreedyFixer greedy;
      FixerPolicy& fixer = k % 2 ? static_cast<FixerPolicy&>(greedy) : random_fixer;
      Series s = play_series(p, buster, fixer);

      // Literal sums over the rounds.
      std::int64_t busted = 0;
      Weight cost{0};
      for (const auto& r : s.rounds) {
        busted += static_cast<std::int64_t>(r.busted.size());
        for (const auto& id : r.fixed) cost += p.find_reserve(id)->weight;
      }
      const Position end = s.positions().back();
      const auto start_size = static_cast<std::int64_t>(p.total_edges());
      const auto end_size = static_cast<std::int64_t>(end.total_edges());
      if (busted != start_size - end_size || cost != p.reserve_weight() - end.reserve_weight()) ++violations;
      if (s.length() > p.total_edges()) ++too_long;
      buster_wins += s.outcome == Winner::Buster;
      ++count;
      group.push_back(std::move(s));
    }
    g_corpus.push_back(std::move(group));
  }
  std::ostringstream d;
  d << count << " series on " << g_corpus.size() << " instances (" << buster_wins << " Buster wins), " << violations
    << " identity violations, " << too_long << " over-long";
  return {count == 10000 && violations == 0 && too_long == 0, d.str()};
}

Result superiority_algebra() {
  if (g_corpus.empty()) return {false, "no series"};
  // Triples from literal round sums, independent of series_totals.
  auto raw = [](const Series& s) {
    OutcomeTriple t;
    t.fixer_win = s.outcome == Winner::Fixer;
    for (const auto& r : s.rounds) {
      t.total_busted += static_cast<std::int64_t>(r.busted.size());
      for (const auto& id : r.fixed) t.fix_cost += s.initial.find_reserve(id)->weight;
    }
    return t;
  };
  auto dominates = [](const OutcomeTriple& a, const OutcomeTriple& b) {
    return (a.fixer_win || !b.fixer_win) && a.total_busted >= b.total_busted && a.fix_cost <= b.fix_cost;
  };

  std::uint64_t series = 0, reflexive_bad = 0, pairs = 0, holds = 0, reduction_bad = 0;
  for (const auto& group : g_corpus) {
    for (const auto& a : group) {
      ++series;
      reflexive_bad += !series_superior(a, a);
      for (const auto& b : group) {
        ++pairs;
        const bool lib = series_superior(a, b);
        holds += lib;
        reduction_bad += lib != dominates(raw(a), raw(b)) || lib != fixer_superior(series_totals(a), series_totals(b));
      }
    }
  }

  // 10,000 random triples within an instance, then 10,000 chosen so the
  // premise holds, since random triples seldom chain.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> pick_group(0, g_corpus.size() - 1);
  std::uniform_int_distribution<std::size_t> pick(0, 9);
  std::uint64_t triples = 0, premise = 0, transitive_bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto& g = g_corpus[pick_group(rng)];
    const Series &a = g[pick(rng)], &b = g[pick(rng)], &c = g[pick(rng)];
    ++triples;
    if (series_superior(a, b) && series_superior(b, c)) {
      ++premise;
      transitive_bad += !series_superior(a, c);
    }
  }
  std::uint64_t chained = 0;
  while (chained < 10000) {
    const auto& g = g_corpus[pick_group(rng)];
    const Series& a = g[pick(rng)];
    std::vector<const Series*> below_a, below_b;
    for (const auto& b : g) {
      if (series_superior(a, b)) below_a.push_back(&b);
    }
    const Series& b = *below_a[std::uniform_int_distribution<std::size_t>(0, below_a.size() - 1)(rng)];
    for (const auto& c : g) {
      if (series_superior(b, c)) below_b.push_back(&c);
    }
    const Series& c = *below_b[std::uniform_int_distribution<std::size_t>(0, below_b.size() - 1)(rng)];
    ++triples;
    ++premise;
    ++chained;
    transitive_bad += !series_superior(a, c);
  }
  std::ostringstream d;
  d << series << " reflexive checks (" << reflexive_bad << " bad), " << pairs << " pairs (" << holds << " superior, "
    << reduction_bad << " reduction mismatches), " << triples << " triples (" << premise << " with premise, "
    << transitive_bad << " intransitive)";
  return {reflexive_bad == 0 && reduction_bad == 0 && transitive_bad == 0 && premise >= 10000, d.str()};
}

}  // namespace

int main() {
  bool all = true;
  all &= run_criterion(1, "scripted lines reproduce the expected totals", 1.0, scripted_lines);
  all &= run_criterion(2, "optimality verdicts on the triangle instance", 10.0, triangle_verdicts);
  all &= run_criterion(3, "exhaustive greedy-optimality sweep", 600.0, greedy_sweep);
  all &= run_criterion(4, "Prim-reachable trees equal minimum spanning trees", 60.0, prim_equivalence);
  all &= run_criterion(5, "totals identities on random series", 60.0, totals_identities);
  all &= run_criterion(6, "superiority algebra", 60.0, superiority_algebra);
  all &= run_criterion(7, "bridge-only pruning agrees with the full search", 600.0, prune_soundness);
  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILED");
  return all ? 0 : 1;
}
