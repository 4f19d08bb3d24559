#include "bfgame/adjudicator.hpp"

#include <algorithm>

#include "bfgame/detail/arena.hpp"
#include "bfgame/detail/solver.hpp"
#include "bfgame/errors.hpp"

namespace bfgame {

using detail::Arena;
using detail::GameSolver;
using detail::Mask;

bool fixer_superior(const OutcomeTriple& a, const OutcomeTriple& b) {
  return (a.fixer_win || !b.fixer_win) && a.total_busted >= b.total_busted && a.fix_cost <= b.fix_cost;
}

bool series_superior(const Series& s, const Series& t) {
  if (s.initial != t.initial) throw ValidationError("series must share the same initial position");

  // Condition by condition on the raw per-round sums.
  auto raw = [](const Series& x) {
    std::int64_t busted = 0;
    Weight cost{0};
    Position p = x.initial;
    for (const RoundRecord& r : x.rounds) {
      busted += static_cast<std::int64_t>(r.busted.size());
      for (const EdgeId& id : r.fixed) cost += p.find_reserve(id)->weight;
      p = apply_round(p, r.busted, r.fixed);
    }
    return std::pair{busted, cost};
  };
  const auto [s_busted, s_cost] = raw(s);
  const auto [t_busted, t_cost] = raw(t);
  const bool direct = (s.outcome == Winner::Fixer || t.outcome == Winner::Buster) && s_busted >= t_busted &&
                      s_cost <= t_cost;

  const bool reduced = fixer_superior(series_totals(s), series_totals(t));
  if (direct != reduced) throw IdentityViolation("raw-sum and triple superiority disagree");
  return reduced;
}

namespace {

void require_within(const Position& p, std::size_t cap, const char* what) {
  if (p.total_edges() > cap) {
    throw CapExceeded(std::string(what) + ": |G| + |R| = " + std::to_string(p.total_edges()) + " exceeds cap " +
                      std::to_string(cap));
  }
}

Mask checked_busted(const Arena& arena, const IdSet& busted) {
  const Mask b = arena.mask_of(make_id_set(busted));
  if (b == 0) throw IllegalMove("Buster must remove a nonempty set of edges");
  if ((b & ~arena.root_graph()) != 0) throw IllegalMove("busted edges must come from the graph");
  if (!arena.connected((arena.root_graph() & ~b) | arena.root_reserve())) {
    throw BusterWins("the remaining graph plus the whole reserve is disconnected");
  }
  return b;
}

Mask checked_candidate(const Arena& arena, Mask busted, const IdSet& candidate) {
  const Mask f = arena.mask_of(make_id_set(candidate));
  if ((f & ~arena.root_reserve()) != 0) throw IllegalMove("candidate edges must come from the reserve");
  if (!arena.connected((arena.root_graph() & ~busted) | f)) {
    throw IllegalMove("candidate does not reconnect the graph");
  }
  return f;
}

}  // namespace

std::vector<IdSet> enumerate_fixer_responses(const Position& p, const IdSet& busted, bool bridge_only,
                                             std::size_t cap) {
  if (p.reserve.size() > cap) {
    throw CapExceeded("reserve has " + std::to_string(p.reserve.size()) + " edges; enumeration cap is " +
                      std::to_string(cap));
  }
  const Arena arena(p);
  const Mask b = checked_busted(arena, busted);
  std::vector<IdSet> out;
  for (Mask f : arena.responses(arena.root_graph() & ~b, arena.root_reserve(), bridge_only)) {
    out.push_back(arena.ids_of(f));
  }
  return out;
}

bool dominates_all_strategies(const DominanceQuery& q, const SearchCaps& caps) {
  require_within(q.position, caps.max_total_edges, "dominance search");
  if (!is_connected(q.position.graph)) throw ValidationError("alternative position must be connected");
  const Arena arena(q.position);
  GameSolver solver(arena);

  // Express the target relative to the query position in scaled units.
  // Reachable costs are integers k/scale, and x <= k iff ceil(x) <= k.
  const Weight cost_gap = (q.target.fix_cost - q.accumulated.fix_cost) * Weight(arena.scale());
  std::int64_t scaled = cost_gap.numerator() / cost_gap.denominator();
  if (scaled * cost_gap.denominator() < cost_gap.numerator()) ++scaled;
  const detail::Outcome target{q.target.fixer_win, q.target.total_busted - q.accumulated.total_busted, scaled};
  return solver.buster_can_dominate(target, arena.root_graph(), arena.root_reserve());
}

OptimalityVerdict verify_optimal(const Position& p, const IdSet& busted, const IdSet& candidate,
                                 const SearchCaps& caps) {
  require_within(p, caps.max_total_edges, "verify_optimal");
  if (p.graph.size() > caps.max_subset_edges || p.reserve.size() > caps.max_subset_edges) {
    throw CapExceeded("verify_optimal: subset enumeration cap exceeded");
  }
  const Arena arena(p);
  const Mask b = arena.mask_of(make_id_set(busted));
  if (b == 0 || (b & ~arena.root_graph()) != 0) throw IllegalMove("busted edges must be a nonempty part of the graph");
  if (!arena.connected((arena.root_graph() & ~b) | arena.root_reserve())) {
    // Buster wins this round; the empty response is the only one and it is
    // optimal against itself.
    if (!candidate.empty()) throw IllegalMove("Buster wins this round; the only response is the empty set");
    return OptimalityVerdict{true, "Buster wins this round; the empty response is forced"};
  }
  const Mask f = checked_candidate(arena, b, candidate);
  GameSolver solver(arena);
  OptimalityVerdict verdict;
  verdict.optimal = solver.optimal(b, f, caps.bridge_prune);
  verdict.witness = solver.explain(b, f, caps.bridge_prune);
  return verdict;
}

}  // namespace bfgame
