#include "bfgame/detail/solver.hpp"

#include "bfgame/errors.hpp"

namespace bfgame::detail {

namespace {

std::string describe(const Arena& arena, Mask m) {
  std::string out = "{";
  bool first = true;
  for (const EdgeId& id : arena.ids_of(m)) {
    out += (first ? "" : ",") + id;
    first = false;
  }
  return out + "}";
}

std::string describe(const Arena& arena, const Outcome& o) {
  return "(" + std::string(o.fixer_win ? "Fixer" : "Buster") + ", " + std::to_string(o.busted) + ", " +
         format_weight(Weight(o.cost, arena.scale())) + ")";
}

}  // namespace

Outcome GameSolver::outcome_at(bool fixer_win, Mask graph, Mask reserve) const {
  const Mask root_all = arena_.root_graph() | arena_.root_reserve();
  return Outcome{fixer_win, popcount(root_all) - popcount(graph) - popcount(reserve),
                 arena_.scaled_weight(arena_.root_reserve()) - arena_.scaled_weight(reserve)};
}

std::uint32_t GameSolver::target_index(const Outcome& target) {
  auto [it, inserted] = targets_.try_emplace(target, static_cast<std::uint32_t>(targets_.size()));
  return it->second;
}

bool GameSolver::buster_can_dominate(const Outcome& target, Mask graph, Mask reserve) {
  const Outcome here = outcome_at(true, graph, reserve);
  // Quitting now realizes `here`.
  if (superior(target, here)) return true;
  // Busted counts only grow from here on.
  if (target.busted <= here.busted) return false;

  const std::uint64_t memo_key =
      (std::uint64_t{target_index(target)} << (2 * arena_.edge_count())) |
      (std::uint64_t{graph} << arena_.edge_count()) | reserve;
  if (auto it = dominance_memo_.find(memo_key); it != dominance_memo_.end()) return it->second;

  bool result = false;
  for (Mask move = graph; move != 0 && !result; move = (move - 1) & graph) {
    const Mask remaining = graph & ~move;
    if (!arena_.connected(remaining | reserve)) {
      result = superior(target, outcome_at(false, remaining, reserve));
      continue;
    }
    bool every_response = true;
    for (Mask fix : arena_.responses(remaining, reserve, false)) {
      if (!buster_can_dominate(target, remaining | fix, reserve & ~fix)) {
        every_response = false;
        break;
      }
    }
    result = every_response;
  }
  dominance_memo_.emplace(memo_key, result);
  return result;
}

GameSolver::MoveContext& GameSolver::context(Mask busted, bool bridge_prune) {
  auto [it, inserted] = contexts_.try_emplace({busted, bridge_prune});
  if (inserted) {
    MoveContext& ctx = it->second;
    ctx.remaining = arena_.root_graph() & ~busted;
    ctx.alternatives = arena_.responses(ctx.remaining, arena_.root_reserve(), bridge_prune);
  }
  return it->second;
}

bool GameSolver::covered(MoveContext& ctx, const Outcome& target) {
  if (auto it = ctx.covered.find(target); it != ctx.covered.end()) return it->second;
  bool result = true;
  for (Mask alt : ctx.alternatives) {
    if (!buster_can_dominate(target, ctx.remaining | alt, arena_.root_reserve() & ~alt)) {
      result = false;
      break;
    }
  }
  ctx.covered.emplace(target, result);
  return result;
}

bool GameSolver::safe(MoveContext& ctx, Mask graph, Mask reserve) {
  const std::uint64_t k = key(graph, reserve);
  if (auto it = ctx.safe.find(k); it != ctx.safe.end()) return it->second;

  // The prefix ending here is itself a Fixer-won series of the strategy.
  bool result = covered(ctx, outcome_at(true, graph, reserve));
  for (Mask move = graph; move != 0 && result; move = (move - 1) & graph) {
    const Mask remaining = graph & ~move;
    if (!arena_.connected(remaining | reserve)) {
      result = covered(ctx, outcome_at(false, remaining, reserve));
      continue;
    }
    bool some_response = false;
    for (Mask fix : arena_.responses(remaining, reserve, false)) {
      if (safe(ctx, remaining | fix, reserve & ~fix)) {
        some_response = true;
        break;
      }
    }
    result = some_response;
  }
  ctx.safe.emplace(k, result);
  return result;
}

bool GameSolver::optimal(Mask busted, Mask candidate, bool bridge_prune) {
  MoveContext& ctx = context(busted, bridge_prune);
  if (!arena_.connected(ctx.remaining | candidate)) {
    throw IllegalMove("candidate does not reconnect the graph");
  }
  return safe(ctx, ctx.remaining | candidate, arena_.root_reserve() & ~candidate);
}

std::string GameSolver::explain(Mask busted, Mask candidate, bool bridge_prune) {
  MoveContext& ctx = context(busted, bridge_prune);
  Mask graph = ctx.remaining | candidate;
  Mask reserve = arena_.root_reserve() & ~candidate;
  if (safe(ctx, graph, reserve)) {
    return "continuation strategy found; " + std::to_string(ctx.alternatives.size()) +
           " alternative response(s) checked, " + std::to_string(ctx.safe.size()) + " positions searched";
  }

  auto uncovered = [&](const Outcome& target) {
    for (Mask alt : ctx.alternatives) {
      if (!buster_can_dominate(target, ctx.remaining | alt, arena_.root_reserve() & ~alt)) {
        return "outcome " + describe(arena_, target) + " is not Fixer-superior to anything Buster can force after " +
               "alternative " + describe(arena_, alt);
      }
    }
    return std::string("outcome ") + describe(arena_, target) + " is uncovered";
  };

  // Walk down the failing strategy tree: follow the Buster move that beats
  // every Fixer response, using the first response at each step.
  std::string path;
  for (;;) {
    const Outcome here = outcome_at(true, graph, reserve);
    if (!covered(ctx, here)) return path + "Buster quits: " + uncovered(here);
    for (Mask move = graph; move != 0; move = (move - 1) & graph) {
      const Mask remaining = graph & ~move;
      if (!arena_.connected(remaining | reserve)) {
        const Outcome won = outcome_at(false, remaining, reserve);
        if (!covered(ctx, won)) return path + "Buster plays " + describe(arena_, move) + " and wins: " + uncovered(won);
        continue;
      }
      const auto responses = arena_.responses(remaining, reserve, false);
      bool some = false;
      for (Mask fix : responses) some = some || safe(ctx, remaining | fix, reserve & ~fix);
      if (!some) {
        path += "Buster plays " + describe(arena_, move) + ", Fixer answers " + describe(arena_, responses.front()) + "; ";
        graph = remaining | responses.front();
        reserve &= ~responses.front();
        break;
      }
    }
  }
}

}  // namespace bfgame::detail
