#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bfgame/engine.hpp"

namespace bfgame {

/// One round of a rendered series, in table order.
struct TranscriptRow {
  std::size_t round = 0;
  IdSet graph;
  IdSet reserve;
  IdSet busted;
  IdSet fixed;
  std::int64_t busted_sum = 0;
  Weight cost_sum{0};
  Winner winner = Winner::Fixer;  // winner if the series stopped after this round
  friend bool operator==(const TranscriptRow&, const TranscriptRow&) = default;
};

struct Transcript {
  std::string scenario;
  std::string buster_policy;
  std::string fixer_policy;
  std::optional<std::uint64_t> seed;
  std::vector<TranscriptRow> rows;
  Winner winner = Winner::Fixer;
  std::size_t rounds = 0;
};

/// The round table alone: header, one row per round, and a winner line.
/// Sets are printed in id order, e.g.
///   2 | {e3,e4} | {e5} | {e3} | {e5} | 3 | 3 | Fixer
std::string render_transcript(const Series& s);

std::vector<TranscriptRow> transcript_rows(const Series& s);

/// Full transcript file: metadata lines followed by the round table.
std::string render_transcript_file(const Series& s, const std::string& scenario_ref,
                                   const std::string& buster_policy, const std::string& fixer_policy,
                                   std::optional<std::uint64_t> seed = std::nullopt);

/// Reads what render_transcript_file writes. Throws ParseError.
Transcript parse_transcript(std::string_view text);

/// Re-plays the transcript's moves from `initial` and checks every column
/// and the winner against the replay. Throws ValidationError on mismatch.
Series replay_transcript(const Transcript& t, const Position& initial);

}  // namespace bfgame
