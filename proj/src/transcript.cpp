#include "bfgame/transcript.hpp"

#include <sstream>

#include "bfgame/errors.hpp"
#include "bfgame/scenario.hpp"

namespace bfgame {

namespace {

constexpr std::string_view kHeader = "j | G_j | R_j | B_j | F_j | sum_B | sum_wF | Winner";

std::string braces(const IdSet& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + ids[i];
  return out + "}";
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_columns(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto bar = line.find(" | ", start);
    out.push_back(trim(line.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 3;
  }
  return out;
}

Winner parse_winner(const std::string& s, std::size_t line_no) {
  if (s == "Fixer") return Winner::Fixer;
  if (s == "Buster") return Winner::Buster;
  throw ParseError(line_no, "winner must be Fixer or Buster, got '" + s + "'");
}

}  // namespace

std::vector<TranscriptRow> transcript_rows(const Series& s) {
  const std::vector<Position> states = s.positions();
  std::vector<TranscriptRow> rows;
  std::int64_t busted = 0;
  Weight cost{0};
  for (std::size_t j = 0; j < s.rounds.size(); ++j) {
    const RoundRecord& r = s.rounds[j];
    busted += static_cast<std::int64_t>(r.busted.size());
    cost += total_weight(select(states[j].reserve, r.fixed));
    const bool last = j + 1 == s.rounds.size();
    rows.push_back(TranscriptRow{j + 1, ids_of(states[j].graph.edges()), ids_of(states[j].reserve), r.busted, r.fixed,
                                 busted, cost, last ? s.outcome : Winner::Fixer});
  }
  return rows;
}

std::string render_transcript(const Series& s) {
  std::ostringstream out;
  out << kHeader << "\n";
  for (const TranscriptRow& row : transcript_rows(s)) {
    out << row.round << " | " << braces(row.graph) << " | " << braces(row.reserve) << " | " << braces(row.busted)
        << " | " << braces(row.fixed) << " | " << row.busted_sum << " | " << format_weight(row.cost_sum) << " | "
        << to_string(row.winner) << "\n";
  }
  out << "winner: " << to_string(s.outcome) << " after " << s.rounds.size() << " round"
      << (s.rounds.size() == 1 ? "" : "s") << "\n";
  return out.str();
}

std::string render_transcript_file(const Series& s, const std::string& scenario_ref, const std::string& buster_policy,
                                   const std::string& fixer_policy, std::optional<std::uint64_t> seed) {
  std::ostringstream out;
  out << "# bfgame transcript\n";
  out << "scenario: " << scenario_ref << "\n";
  out << "buster: " << buster_policy << "\n";
  out << "fixer: " << fixer_policy << "\n";
  if (seed) out << "seed: " << *seed << "\n";
  out << render_transcript(s);
  return out.str();
}

Transcript parse_transcript(std::string_view text) {
  Transcript t;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  bool in_table = false;
  bool finished = false;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (finished) throw ParseError(line_no, "content after the winner line");
    if (line == kHeader) {
      in_table = true;
      continue;
    }
    if (line.starts_with("winner: ")) {
      std::istringstream w(line.substr(8));
      std::string who, after, word;
      std::size_t rounds = 0;
      if (!(w >> who >> after >> rounds >> word) || after != "after") {
        throw ParseError(line_no, "expected: winner: <Fixer|Buster> after <k> rounds");
      }
      t.winner = parse_winner(who, line_no);
      t.rounds = rounds;
      finished = true;
      continue;
    }
    if (!in_table) {
      const auto colon = line.find(": ");
      if (colon == std::string::npos) throw ParseError(line_no, "expected a 'key: value' line");
      const std::string key = line.substr(0, colon);
      const std::string value = line.substr(colon + 2);
      if (key == "scenario") {
        t.scenario = value;
      } else if (key == "buster") {
        t.buster_policy = value;
      } else if (key == "fixer") {
        t.fixer_policy = value;
      } else if (key == "seed") {
        try {
          t.seed = std::stoull(value);
        } catch (const std::exception&) {
          throw ParseError(line_no, "bad seed '" + value + "'");
        }
      } else {
        throw ParseError(line_no, "unknown transcript key '" + key + "'");
      }
      continue;
    }
    const std::vector<std::string> cols = split_columns(line);
    if (cols.size() != 8) throw ParseError(line_no, "expected 8 columns, got " + std::to_string(cols.size()));
    try {
      TranscriptRow row;
      row.round = std::stoul(cols[0]);
      row.graph = parse_id_list(cols[1]);
      row.reserve = parse_id_list(cols[2]);
      row.busted = parse_id_list(cols[3]);
      row.fixed = parse_id_list(cols[4]);
      row.busted_sum = std::stoll(cols[5]);
      row.cost_sum = cols[6].find('/') == std::string::npos
                         ? parse_weight(cols[6])
                         : Weight(std::stoll(cols[6].substr(0, cols[6].find('/'))),
                                  std::stoll(cols[6].substr(cols[6].find('/') + 1)));
      row.winner = parse_winner(cols[7], line_no);
      t.rows.push_back(std::move(row));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_no, std::string("bad row: ") + e.what());
    }
  }
  if (!finished) throw ParseError(line_no, "missing winner line");
  if (t.rows.size() != t.rounds) throw ParseError(line_no, "winner line round count does not match the rows");
  return t;
}

Series replay_transcript(const Transcript& t, const Position& initial) {
  Series s;
  s.initial = initial;
  s.outcome = t.winner;
  for (const TranscriptRow& row : t.rows) s.rounds.push_back({row.busted, row.fixed});
  try {
    validate_series(s);
  } catch (const IllegalMove& e) {
    throw ValidationError(std::string("replay: ") + e.what());
  }
  const std::vector<TranscriptRow> expected = transcript_rows(s);
  for (std::size_t j = 0; j < expected.size(); ++j) {
    if (expected[j] != t.rows[j]) {
      throw ValidationError("replay: round " + std::to_string(j + 1) + " does not match the recorded row");
    }
  }
  const OutcomeTriple totals = series_totals(s);
  if (!t.rows.empty() &&
      (totals.total_busted != t.rows.back().busted_sum || totals.fix_cost != t.rows.back().cost_sum)) {
    throw ValidationError("replay: totals do not match the final row");
  }
  return s;
}

}  // namespace bfgame
