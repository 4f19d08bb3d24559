#include "bfgame/engine.hpp"

#include <algorithm>

#include "bfgame/errors.hpp"

namespace bfgame {

std::string to_string(Winner w) { return w == Winner::Fixer ? "Fixer" : "Buster"; }

std::string to_string(const OutcomeTriple& t) {
  return "(" + std::string(t.fixer_win ? "Fixer" : "Buster") + ", " + std::to_string(t.total_busted) +
         ", " + format_weight(t.fix_cost) + ")";
}

namespace {

void require_legal(const Position& p, const IdSet& busted, const IdSet& fixed) {
  if (busted.empty()) throw IllegalMove("Buster must remove a nonempty set of edges");
  for (const EdgeId& id : busted) {
    if (!p.graph.contains(id)) throw IllegalMove("busted edge " + id + " is not in the graph");
  }
  for (const EdgeId& id : fixed) {
    if (p.find_reserve(id) == nullptr) throw IllegalMove("fixed edge " + id + " is not in the reserve");
  }
}

Multigraph union_graph(std::size_t n, std::vector<Edge> a, const std::vector<Edge>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return Multigraph(n, std::move(a));
}

}  // namespace

Position apply_round(const Position& p, const IdSet& busted, const IdSet& fixed) {
  const IdSet b = make_id_set(busted);
  const IdSet f = make_id_set(fixed);
  require_legal(p, b, f);
  Position next;
  next.graph = union_graph(p.vertex_count(), without(p.graph.edges(), b), select(p.reserve, f));
  next.reserve = without(p.reserve, f);
  return next;
}

bool buster_wins(const Position& p, const IdSet& busted) {
  const IdSet b = make_id_set(busted);
  require_legal(p, b, {});
  return !is_connected(union_graph(p.vertex_count(), without(p.graph.edges(), b), p.reserve));
}

std::vector<Position> Series::positions() const {
  std::vector<Position> out{initial};
  out.reserve(rounds.size() + 1);
  for (const RoundRecord& r : rounds) out.push_back(apply_round(out.back(), r.busted, r.fixed));
  return out;
}

OutcomeTriple series_totals(const Series& s) {
  const std::vector<Position> states = s.positions();

  OutcomeTriple summed;
  summed.fixer_win = s.outcome == Winner::Fixer;
  for (std::size_t j = 0; j < s.rounds.size(); ++j) {
    summed.total_busted += static_cast<std::int64_t>(s.rounds[j].busted.size());
    summed.fix_cost += total_weight(select(states[j].reserve, s.rounds[j].fixed));
  }

  const Position& first = states.front();
  const Position& last = states.back();
  OutcomeTriple from_ends;
  from_ends.fixer_win = summed.fixer_win;
  from_ends.total_busted =
      static_cast<std::int64_t>(first.total_edges()) - static_cast<std::int64_t>(last.total_edges());
  from_ends.fix_cost = first.reserve_weight() - last.reserve_weight();

  if (summed != from_ends) {
    throw IdentityViolation("totals identity broken: summed " + to_string(summed) + " vs end-state " +
                            to_string(from_ends));
  }
  return summed;
}

void validate_series(const Series& s) {
  s.initial.validate();
  if (!is_connected(s.initial.graph)) throw ValidationError("initial graph is disconnected");
  Position p = s.initial;
  for (std::size_t j = 0; j < s.rounds.size(); ++j) {
    const RoundRecord& r = s.rounds[j];
    const std::string where = "round " + std::to_string(j + 1) + ": ";
    const bool last = j + 1 == s.rounds.size();
    const bool won = buster_wins(p, r.busted);
    if (won) {
      if (!last || s.outcome != Winner::Buster) throw ValidationError(where + "Buster won but play continued");
      if (!r.fixed.empty()) throw ValidationError(where + "Fixer spent in a round Buster won");
    } else if (last && s.outcome == Winner::Buster) {
      throw ValidationError(where + "series marked as a Buster win but Fixer could reconnect");
    }
    Position next = apply_round(p, r.busted, r.fixed);
    if (!won && !is_connected(next.graph)) throw ValidationError(where + "Fixer left the graph disconnected");
    if (next.total_edges() + r.busted.size() != p.total_edges() ||
        next.reserve_weight() != p.reserve_weight() - total_weight(select(p.reserve, r.fixed))) {
      throw IdentityViolation(where + "conservation broken");
    }
    p = std::move(next);
  }
  if (s.rounds.empty() && s.outcome == Winner::Buster) {
    throw ValidationError("a zero-round series cannot be a Buster win");
  }
}

std::vector<IdSet> enumerate_buster_moves(const Position& p, std::size_t cap) {
  const IdSet ids = ids_of(p.graph.edges());
  if (ids.size() > cap || ids.size() >= 63) {
    throw CapExceeded("graph has " + std::to_string(ids.size()) + " edges; enumeration cap is " +
                      std::to_string(cap));
  }
  std::vector<IdSet> out;
  const std::uint64_t limit = std::uint64_t{1} << ids.size();
  out.reserve(limit - 1);
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    IdSet move;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if ((mask >> i) & 1U) move.push_back(ids[i]);
    }
    out.push_back(std::move(move));
  }
  std::stable_sort(out.begin(), out.end(), [](const IdSet& a, const IdSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

BusterAction ScriptedBuster::next(const Position&, const std::vector<RoundRecord>& history) {
  if (history.size() < script_.size()) return script_[history.size()];
  return BusterAction::stop();
}

BusterAction RandomBuster::next(const Position& p, const std::vector<RoundRecord>& history) {
  if (!history.empty() && std::bernoulli_distribution(quit_chance_)(rng_)) return BusterAction::stop();
  const auto& edges = p.graph.edges();
  if (edges.empty()) return BusterAction::stop();
  IdSet busted;
  while (busted.empty()) {
    for (const Edge& e : edges) {
      if (std::bernoulli_distribution(0.5)(rng_)) busted.push_back(e.id);
    }
  }
  return BusterAction::remove(std::move(busted));
}

IdSet GreedyFixer::respond(const Position& p, const IdSet& busted, const std::vector<RoundRecord>&) {
  return greedy_fixer_move(p, busted, tie_break_);
}

IdSet ScriptedFixer::respond(const Position& p, const IdSet& busted, const std::vector<RoundRecord>& history) {
  if (history.size() < script_.size()) return make_id_set(script_[history.size()]);
  return fallback_.respond(p, busted, history);
}

Series play_series(const Position& initial, BusterPolicy& buster, FixerPolicy& fixer) {
  initial.validate();
  if (!is_connected(initial.graph)) throw ValidationError("initial graph must be connected");

  Series series;
  series.initial = initial;
  Position p = initial;
  // Each round removes at least one edge from G + R, so this bounds the loop.
  const std::size_t max_rounds = initial.total_edges();
  for (std::size_t round = 1;; ++round) {
    BusterAction action = buster.next(p, series.rounds);
    if (action.quit) {
      if (round == 1) throw PolicyError(round, "Buster may only quit after a round Fixer survived");
      series.outcome = Winner::Fixer;
      return series;
    }
    if (round > max_rounds) throw PolicyError(round, "series exceeded |G| + |R| rounds");

    const IdSet busted = make_id_set(std::move(action.busted));
    bool won = false;
    try {
      won = buster_wins(p, busted);
    } catch (const IllegalMove& e) {
      throw PolicyError(round, std::string("Buster: ") + e.what());
    }
    if (won) {
      series.rounds.push_back({busted, {}});
      series.outcome = Winner::Buster;
      return series;
    }

    IdSet fixed;
    try {
      fixed = make_id_set(fixer.respond(p, busted, series.rounds));
    } catch (const BusterWins& e) {
      throw PolicyError(round, std::string("Fixer: ") + e.what());
    }
    Position next;
    try {
      next = apply_round(p, busted, fixed);
    } catch (const IllegalMove& e) {
      throw PolicyError(round, std::string("Fixer: ") + e.what());
    }
    if (!is_connected(next.graph)) throw PolicyError(round, "Fixer: response leaves the graph disconnected");
    if (next.total_edges() + busted.size() != p.total_edges() ||
        next.reserve_weight() != p.reserve_weight() - total_weight(select(p.reserve, fixed))) {
      throw IdentityViolation("round " + std::to_string(round) + ": conservation broken");
    }
    series.rounds.push_back({busted, fixed});
    p = std::move(next);
  }
}

}  // namespace bfgame
