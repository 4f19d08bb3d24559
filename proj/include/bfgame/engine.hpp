#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "bfgame/position.hpp"
#include "bfgame/reconnect.hpp"

namespace bfgame {

struct RoundRecord {
  IdSet busted;
  IdSet fixed;
  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

enum class Winner { Fixer, Buster };

std::string to_string(Winner w);

/// One complete play. A Fixer win of length k is a k-round prefix after
/// which Buster quit; zero rounds is the degenerate root prefix.
struct Series {
  Position initial;
  std::vector<RoundRecord> rounds;
  Winner outcome = Winner::Fixer;

  std::size_t length() const { return rounds.size(); }

  /// G_1 .. G_{|S|+1} with matching reserves, by replaying the rounds.
  std::vector<Position> positions() const;

  friend bool operator==(const Series&, const Series&) = default;
};

/// (fixer_win, sum |B_j|, sum w(F_j)): everything superiority looks at.
struct OutcomeTriple {
  bool fixer_win = true;
  std::int64_t total_busted = 0;
  Weight fix_cost{0};
  friend bool operator==(const OutcomeTriple&, const OutcomeTriple&) = default;
};

std::string to_string(const OutcomeTriple& t);

/// ((G - B) + F, R - F). Does not check connectivity of the result.
/// Throws IllegalMove if B is empty, B is not inside G or F is not inside R.
Position apply_round(const Position& p, const IdSet& busted, const IdSet& fixed);

/// True iff (G - B) + R is disconnected. Throws IllegalMove.
bool buster_wins(const Position& p, const IdSet& busted);

/// Throws IdentityViolation when the summed totals and the end-state
/// identities disagree.
OutcomeTriple series_totals(const Series& s);

/// Checks every Series invariant by replay. Throws IllegalMove or
/// ValidationError describing the first violation.
void validate_series(const Series& s);

/// All nonempty subsets of G, ordered by size then by sorted id tuple.
/// Throws CapExceeded when |G| > cap.
std::vector<IdSet> enumerate_buster_moves(const Position& p, std::size_t cap = 12);

struct BusterAction {
  bool quit = false;
  IdSet busted;

  static BusterAction stop() { return {true, {}}; }
  static BusterAction remove(IdSet ids) { return {false, make_id_set(std::move(ids))}; }
};

class BusterPolicy {
 public:
  virtual ~BusterPolicy() = default;
  virtual BusterAction next(const Position& p, const std::vector<RoundRecord>& history) = 0;
  virtual std::string name() const = 0;
};

class FixerPolicy {
 public:
  virtual ~FixerPolicy() = default;
  virtual IdSet respond(const Position& p, const IdSet& busted, const std::vector<RoundRecord>& history) = 0;
  virtual std::string name() const = 0;
};

/// Plays the listed actions in order and quits once the script runs out.
class ScriptedBuster final : public BusterPolicy {
 public:
  explicit ScriptedBuster(std::vector<BusterAction> script) : script_(std::move(script)) {}
  BusterAction next(const Position& p, const std::vector<RoundRecord>& history) override;
  std::string name() const override { return "script"; }

 private:
  std::vector<BusterAction> script_;
};

/// Seeded Buster: quits with probability `quit_chance` after surviving
/// rounds, otherwise removes a uniformly random nonempty subset of G.
class RandomBuster final : public BusterPolicy {
 public:
  explicit RandomBuster(std::uint64_t seed, double quit_chance = 0.2)
      : seed_(seed), quit_chance_(quit_chance), rng_(seed) {}
  BusterAction next(const Position& p, const std::vector<RoundRecord>& history) override;
  std::string name() const override { return "random(seed=" + std::to_string(seed_) + ")"; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  double quit_chance_;
  std::mt19937_64 rng_;
};

class GreedyFixer final : public FixerPolicy {
 public:
  explicit GreedyFixer(TieBreak tie_break = lexicographic_tie_break()) : tie_break_(std::move(tie_break)) {}
  IdSet respond(const Position& p, const IdSet& busted, const std::vector<RoundRecord>& history) override;
  std::string name() const override { return "greedy"; }

 private:
  TieBreak tie_break_;
};

/// Uses scripted responses for the first rounds, greedy afterwards.
class ScriptedFixer final : public FixerPolicy {
 public:
  explicit ScriptedFixer(std::vector<IdSet> script) : script_(std::move(script)) {}
  IdSet respond(const Position& p, const IdSet& busted, const std::vector<RoundRecord>& history) override;
  std::string name() const override { return "script+greedy"; }

 private:
  std::vector<IdSet> script_;
  GreedyFixer fallback_;
};

/// Alternates Buster moves and Fixer responses until Buster wins or quits.
/// Illegal policy output (including a quit before round 1) raises
/// PolicyError carrying the round index.
Series play_series(const Position& initial, BusterPolicy& buster, FixerPolicy& fixer);

}  // namespace bfgame
