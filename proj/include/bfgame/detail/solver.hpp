#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "bfgame/detail/arena.hpp"

namespace bfgame::detail {

/// Outcome triple in arena units, measured from the arena's root position.
struct Outcome {
  bool fixer_win = true;
  std::int64_t busted = 0;
  std::int64_t cost = 0;
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

inline bool superior(const Outcome& a, const Outcome& b) {
  return (a.fixer_win || !b.fixer_win) && a.busted >= b.busted && a.cost <= b.cost;
}

struct OutcomeHash {
  std::size_t operator()(const Outcome& o) const {
    std::uint64_t h = static_cast<std::uint64_t>(o.cost) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(o.busted) * 0xC2B2AE3D27D4EB4FULL + (o.fixer_win ? 1 : 0);
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

/// Memoized backward induction over one arena. Positions are keyed on
/// their raw (graph, reserve) masks; no vertex relabeling is applied.
/// Outcomes depend only on the end state, so the dominance table is shared
/// across every Buster move and candidate asked of the same solver.
class GameSolver {
 public:
  explicit GameSolver(const Arena& arena) : arena_(arena) {}

  Outcome outcome_at(bool fixer_win, Mask graph, Mask reserve) const;

  /// Buster, moving at the surviving node (graph, reserve), can force a
  /// series that `target` is superior to, whatever Fixer does.
  bool buster_can_dominate(const Outcome& target, Mask graph, Mask reserve);

  /// Some continuation strategy after (busted, candidate) has every series
  /// dominating some series of every strategy after every alternative.
  bool optimal(Mask busted, Mask candidate, bool bridge_prune);

  /// Human-readable reason for the last `optimal` verdict on these inputs.
  std::string explain(Mask busted, Mask candidate, bool bridge_prune);

  std::size_t dominance_states() const { return dominance_memo_.size(); }

 private:
  struct MoveContext {
    std::vector<Mask> alternatives;  // alternative responses to the fixed Buster move
    Mask remaining = 0;              // root graph minus the fixed Buster move
    std::unordered_map<Outcome, bool, OutcomeHash> covered;
    std::unordered_map<std::uint64_t, bool> safe;
  };

  MoveContext& context(Mask busted, bool bridge_prune);
  bool covered(MoveContext& ctx, const Outcome& target);
  bool safe(MoveContext& ctx, Mask graph, Mask reserve);
  std::uint64_t key(Mask graph, Mask reserve) const {
    return (std::uint64_t{graph} << 32) | reserve;
  }
  std::uint32_t target_index(const Outcome& target);

  const Arena& arena_;
  std::unordered_map<Outcome, std::uint32_t, OutcomeHash> targets_;
  std::unordered_map<std::uint64_t, bool> dominance_memo_;
  std::map<std::pair<Mask, bool>, MoveContext> contexts_;
};

}  // namespace bfgame::detail
