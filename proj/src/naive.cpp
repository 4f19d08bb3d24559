#include <cstdint>
#include <vector>

#include "bfgame/adjudicator.hpp"
#include "bfgame/detail/arena.hpp"
#include "bfgame/errors.hpp"

namespace bfgame {

namespace {

using detail::Arena;
using detail::Mask;

/// One series of a strategy, as the rounds played after the fixed prefix.
struct Line {
  std::vector<std::pair<Mask, Mask>> rounds;  // (busted, fixed)
  bool fixer_win = true;
  OutcomeTriple totals;  // filled in by literal summation
};

using Strategy = std::vector<Line>;

class Materializer {
 public:
  Materializer(const Arena& arena, std::size_t max_series) : arena_(arena), budget_(max_series) {}

  /// Every continuation strategy from a node Fixer has just survived.
  /// A strategy is the set of series it allows: the prefix itself (Buster
  /// quits here) plus, for each Buster move, the series through the one
  /// response the strategy assigns to it.
  std::vector<Strategy> strategies(Mask graph, Mask reserve) {
    std::vector<Strategy> partial{Strategy{Line{}}};
    charge(1);
    for (Mask move = 1; move <= graph; ++move) {
      if ((move & ~graph) != 0) continue;
      const Mask remaining = graph & ~move;
      std::vector<Strategy> branch_options;
      if (!arena_.connected(remaining | reserve)) {
        branch_options.push_back(Strategy{Line{{{move, 0}}, false, {}}});
      } else {
        for (Mask fix = reserve;; fix = (fix - 1) & reserve) {
          if (arena_.connected(remaining | fix)) {
            for (Strategy& sub : strategies(remaining | fix, reserve & ~fix)) {
              for (Line& line : sub) line.rounds.insert(line.rounds.begin(), {move, fix});
              branch_options.push_back(std::move(sub));
            }
          }
          if (fix == 0) break;
        }
      }
      std::vector<Strategy> next;
      for (const Strategy& base : partial) {
        for (const Strategy& option : branch_options) {
          Strategy combined = base;
          combined.insert(combined.end(), option.begin(), option.end());
          charge(combined.size());
          next.push_back(std::move(combined));
        }
      }
      partial = std::move(next);
    }
    return partial;
  }

 private:
  void charge(std::size_t series) {
    if (series > budget_) throw CapExceeded("naive oracle: strategy materialization exceeds the series cap");
    budget_ -= series;
  }

  const Arena& arena_;
  std::size_t budget_;
};

void sum_lines(const Arena& arena, Mask busted, Mask fixed, std::vector<Strategy>& strategies) {
  for (Strategy& s : strategies) {
    for (Line& line : s) {
      std::int64_t b = detail::popcount(busted);
      Weight w = arena.weight(fixed);
      for (auto [rb, rf] : line.rounds) {
        b += detail::popcount(rb);
        w += arena.weight(rf);
      }
      line.totals = OutcomeTriple{line.fixer_win, b, w};
    }
  }
}

}  // namespace

bool verify_optimal_naive(const Position& p, const IdSet& busted, const IdSet& candidate, const SearchCaps& caps) {
  if (p.total_edges() > caps.naive_max_total_edges) {
    throw CapExceeded("naive oracle: |G| + |R| = " + std::to_string(p.total_edges()) + " exceeds cap " +
                      std::to_string(caps.naive_max_total_edges));
  }
  const Arena arena(p);
  const Mask b = arena.mask_of(make_id_set(busted));
  const Mask f = arena.mask_of(make_id_set(candidate));
  if (b == 0 || (b & ~arena.root_graph()) != 0) throw IllegalMove("busted edges must be a nonempty part of the graph");
  if ((f & ~arena.root_reserve()) != 0) throw IllegalMove("candidate edges must come from the reserve");
  const Mask remaining = arena.root_graph() & ~b;
  if (!arena.connected(remaining | arena.root_reserve())) {
    // Buster wins: both strategies are the single series ending here with
    // F empty, and a series is superior to itself.
    if (f != 0) throw IllegalMove("Buster wins this round; the only response is the empty set");
    const OutcomeTriple end{false, detail::popcount(b), Weight(0)};
    return fixer_superior(end, end);
  }
  if (!arena.connected(remaining | f)) throw IllegalMove("candidate does not reconnect the graph");

  Materializer materializer(arena, caps.naive_max_series);
  std::vector<Strategy> mine = materializer.strategies(remaining | f, arena.root_reserve() & ~f);
  sum_lines(arena, b, f, mine);

  // Every alternative response, with no bridge-only reduction.
  std::vector<std::vector<Strategy>> theirs;
  for (Mask alt = arena.root_reserve();; alt = (alt - 1) & arena.root_reserve()) {
    if (arena.connected(remaining | alt)) {
      theirs.push_back(materializer.strategies(remaining | alt, arena.root_reserve() & ~alt));
      sum_lines(arena, b, alt, theirs.back());
    }
    if (alt == 0) break;
  }

  for (const Strategy& phi : mine) {
    bool holds = true;
    for (const auto& alternatives : theirs) {
      for (const Strategy& phi_alt : alternatives) {
        for (const Line& t : phi) {
          bool dominated = false;
          for (const Line& t_alt : phi_alt) {
            if (fixer_superior(t.totals, t_alt.totals)) {
              dominated = true;
              break;
            }
          }
          if (!dominated) {
            holds = false;
            break;
          }
        }
        if (!holds) break;
      }
      if (!holds) break;
    }
    if (holds) return true;
  }
  return false;
}

}  // namespace bfgame
