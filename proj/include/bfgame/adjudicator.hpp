#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "bfgame/engine.hpp"

namespace bfgame {

/// S is Fixer-superior to S' when Fixer wins S or Buster wins S', Buster
/// deleted at least as much in S, and Fixer spent no more in S.
bool fixer_superior(const OutcomeTriple& a, const OutcomeTriple& b);

/// Superiority over whole series. Compares the raw round sums and the
/// identity-derived triples; throws IdentityViolation if the two disagree.
bool series_superior(const Series& s, const Series& t);

/// Legal Fixer responses to `busted`: every F inside R with (G - B) + F
/// connected, cheapest first then by id tuple. With bridge_only, only those
/// whose edges are all bridges of (G - B) + F. Throws BusterWins.
std::vector<IdSet> enumerate_fixer_responses(const Position& p, const IdSet& busted, bool bridge_only,
                                             std::size_t cap = 12);

struct SearchCaps {
  std::size_t max_total_edges = 7;        // |G| + |R| for the game-tree search
  std::size_t naive_max_total_edges = 5;  // |G| + |R| for the literal oracle
  std::size_t max_subset_edges = 12;      // subset enumeration, 2^12
  std::size_t naive_max_series = 4'000'000;
  bool bridge_prune = true;
};

/// Alternative line of play: its current position and the totals it has
/// accumulated so far, against the target outcome it must be dominated by.
struct DominanceQuery {
  OutcomeTriple target;
  Position position;
  OutcomeTriple accumulated;
};

/// True iff against every Fixer continuation from q.position Buster can
/// steer (moves or quitting) to a series the target is Fixer-superior to.
bool dominates_all_strategies(const DominanceQuery& q, const SearchCaps& caps = {});

struct OptimalityVerdict {
  bool optimal = false;
  std::string witness;
};

/// Decides whether `candidate` is an optimal response to `busted` at p by
/// exists/forall backward induction over Fixer strategies (exists) and
/// Buster continuations and alternative responses (forall).
/// Throws CapExceeded, BusterWins, IllegalMove.
OptimalityVerdict verify_optimal(const Position& p, const IdSet& busted, const IdSet& candidate,
                                 const SearchCaps& caps = {});

/// Literal oracle: materializes every continuation strategy and every
/// series of each, then evaluates the quantifier chain directly.
bool verify_optimal_naive(const Position& p, const IdSet& busted, const IdSet& candidate,
                          const SearchCaps& caps = {});

struct SweepConfig {
  std::size_t max_vertices = 3;
  std::size_t max_total_edges = 5;
  std::vector<Weight> weights{Weight(0), Weight(1), Weight(2)};
  bool allow_loops = true;
  /// Skip instances that are a vertex relabeling of one already checked.
  bool symmetry_reduction = false;
  /// Also run the search without bridge-only alternatives and compare.
  bool check_prune = true;
  /// Also cross-check every verdict against the literal oracle when the
  /// instance is within caps.naive_max_total_edges.
  bool check_naive = false;
  SearchCaps caps;
  std::size_t threads = 1;
};

struct SweepReport {
  std::uint64_t instances = 0;
  std::uint64_t buster_moves = 0;
  std::uint64_t responses = 0;
  std::uint64_t greedy_checked = 0;
  std::uint64_t greedy_optimal = 0;
  std::uint64_t optimal_responses = 0;
  std::uint64_t optimal_not_min_weight = 0;
  std::uint64_t min_weight_non_tree = 0;
  std::uint64_t min_weight_non_tree_optimal = 0;
  std::uint64_t prune_checked = 0;
  std::uint64_t prune_disagreements = 0;
  std::uint64_t naive_checked = 0;
  std::uint64_t naive_disagreements = 0;
  std::uint64_t naive_over_cap = 0;  // oracle hit its materialization cap
  std::vector<std::string> counterexamples;
  double seconds = 0;

  bool clean() const { return counterexamples.empty(); }
};

/// Source of root positions for a sweep.
using InstanceVisitor = std::function<void(const Position&)>;

/// Every connected multigraph instance within the config's bounds.
void enumerate_instances(const SweepConfig& config, const InstanceVisitor& visit);

/// Checks every greedy response (every MST) at every instance and Buster
/// move, plus the converse: anything verified optimal must be min-weight.
SweepReport theorem_sweep(const SweepConfig& config);

/// Same checks over caller-supplied instances.
SweepReport theorem_sweep(const std::vector<Position>& instances, const SweepConfig& config);

std::string render_report(const SweepReport& r);

}  // namespace bfgame
