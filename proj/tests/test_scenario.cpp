#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "bfgame/errors.hpp"
#include "bfgame/scenario.hpp"
#include "bfgame/transcript.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "worked_example.hpp"

using namespace bfgame;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename E>
std::size_t parse_error_line(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const E& e) {
    if constexpr (std::is_same_v<E, ParseError>) return e.line();
    return 1;
  }
  return 0;
}

}  // namespace

TEST_CASE("bundled scenario parses to the triangle instance") {
  const ScenarioFile s = load_scenario(std::filesystem::path(BFGAME_SCENARIO_DIR) / "triangle_two_reserves.scn");
  CHECK(s.name == "triangle_two_reserves");
  CHECK(s.vertices == std::vector<std::string>{"a", "b", "c"});
  const Position p = s.initial_position();
  const Position expected = worked::initial();
  CHECK(ids_of(p.graph.edges()) == ids_of(expected.graph.edges()));
  CHECK(ids_of(p.reserve) == ids_of(expected.reserve));
  CHECK(p.reserve_weight() == Weight(3));
  REQUIRE(s.script.size() == 3);
  CHECK(s.script[0].busted == IdSet{"e1", "e2"});
  CHECK(s.script[2].busted == IdSet{"e4"});
}

TEST_CASE("scenario parser accepts loops, fractions, comments and quit") {
  const ScenarioFile s = parse_scenario(
      "# header\n\nvertex x\nvertex y\nedge g x y 1 G\nedge r x x 0.25 R   # loop reserve\n"
      "edge h y x 7/3 R\nbuster g\nbuster quit\n");
  const Position p = s.initial_position();
  CHECK(p.reserve.size() == 2);
  CHECK(p.find_reserve("r")->is_loop());
  CHECK(p.find_reserve("r")->weight == Weight(1, 4));
  CHECK(p.find_reserve("h")->weight == Weight(7, 3));
  REQUIRE(s.script.size() == 2);
  CHECK(s.script[1].quit);
}

TEST_CASE("scenario parse errors carry line numbers") {
  CHECK(parse_error_line<ParseError>("vertex a\nvertex\n") == 2);
  CHECK(parse_error_line<ParseError>("vertex a\nvertex b\nedge e a b 1 X\n") == 3);
  CHECK(parse_error_line<ParseError>("vertex a\nedge e a a one G\n") == 2);
  CHECK(parse_error_line<ParseError>("frobnicate\n") == 1);
  CHECK(parse_error_line<ParseError>("vertex a\nedge e a a 1 G\nbuster e,,f\n") == 3);
}

TEST_CASE("scenario validation errors") {
  CHECK_THROWS_AS(parse_scenario("vertex a\nvertex b\nvertex c\nedge e a b 1 G\n"), ValidationError);
  CHECK_THROWS_AS(parse_scenario("vertex a\nvertex a\n"), ValidationError);
  CHECK_THROWS_AS(parse_scenario("vertex a\nedge e a a 1 G\nedge e a a 1 R\n"), ValidationError);
  CHECK_THROWS_AS(parse_scenario("vertex a\nedge e a a -1 R\n"), ValidationError);
  CHECK_THROWS_AS(parse_scenario("vertex a\nedge e a z 1 G\n"), ValidationError);
  CHECK_THROWS_AS(parse_scenario("vertex a\nedge e a a 1 G\nbuster q\n"), ValidationError);
  CHECK_THROWS_AS(parse_scenario("# nothing\n"), ValidationError);
  CHECK_THROWS_AS(load_scenario("/nonexistent/x.scn"), ValidationError);
}

TEST_CASE("parse_id_list") {
  CHECK(parse_id_list("e2,e1") == IdSet{"e1", "e2"});
  CHECK(parse_id_list("{e4}") == IdSet{"e4"});
  CHECK(parse_id_list("") == IdSet{});
  CHECK(parse_id_list("{}") == IdSet{});
  CHECK_THROWS_AS(parse_id_list("e1,"), std::invalid_argument);
}

TEST_CASE("render_scenario round-trips random scenarios") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Position p = oracle::random_instance(rng, 9);
    ScenarioFile s;
    s.name = "random";
    for (std::size_t v = 0; v < p.vertex_count(); ++v) s.vertices.push_back("v" + std::to_string(v));
    for (const auto& e : p.graph.edges()) s.edges.push_back({e.id, s.vertices[e.u], s.vertices[e.v], e.weight, Pool::Graph});
    for (const auto& e : p.reserve) s.edges.push_back({e.id, s.vertices[e.u], s.vertices[e.v], e.weight, Pool::Reserve});
    s.script.push_back(BusterAction::remove({p.graph.edges().front().id}));
    if (trial % 2) s.script.push_back(BusterAction::stop());
    const ScenarioFile back = parse_scenario(render_scenario(s), "random");
    CHECK(back == s);
  }
}

TEST_CASE("transcript rows of the scripted line") {
  const Series s = worked::play(worked::lines().front());
  const auto rows = transcript_rows(s);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].busted == IdSet{"e1", "e2"});
  CHECK(rows[0].fixed == IdSet{"e4"});
  CHECK(rows[0].busted_sum == 2);
  CHECK(rows[0].cost_sum == Weight(1));
  const std::string text = render_transcript(worked::play(worked::lines()[1]));
  CHECK(text.find("2 | {e3,e4} | {e5} | {e3} | {e5} | 3 | 3 | Fixer") != std::string::npos);
  CHECK(text.find("winner: Fixer after 2 rounds") != std::string::npos);
}

TEST_CASE("transcript files parse and replay; tampering is caught") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Position p = oracle::random_instance(rng, 9);
    const std::uint64_t seed = rng();
    RandomBuster buster(seed);
    GreedyFixer fixer;
    const Series s = play_series(p, buster, fixer);
    const std::string file = render_transcript_file(s, "inline", buster.name(), fixer.name(), seed);
    const Transcript t = parse_transcript(file);
    CHECK(t.seed == seed);
    CHECK(t.rounds == s.length());
    CHECK(t.rows == transcript_rows(s));
    const Series again = replay_transcript(t, p);
    CHECK(again.outcome == s.outcome);

    Transcript bad = t;
    bad.rows.back().busted_sum += 1;
    CHECK_THROWS_AS(replay_transcript(bad, p), ValidationError);
  }
  CHECK_THROWS_AS(parse_transcript("not a transcript\n"), ParseError);
}

TEST_CASE("all 37 scripted lines match their golden transcripts") {
  const bool update = std::getenv("BFGAME_UPDATE_GOLDEN") != nullptr;
  for (const auto& line : worked::lines()) {
    INFO(line.name);
    const Series s = worked::play(line);
    const OutcomeTriple totals = series_totals(s);
    // Golden files are only ever written from a series whose totals match the table.
    REQUIRE(totals.total_busted == line.busted_sum);
    REQUIRE(totals.fix_cost == Weight(line.cost_sum));
    REQUIRE(s.outcome == line.winner);
    const std::filesystem::path path = std::filesystem::path(BFGAME_GOLDEN_DIR) / (line.name + ".txt");
    const std::string text = render_transcript(s);
    if (update) {
      std::ofstream(path) << text;
      continue;
    }
    REQUIRE(std::filesystem::exists(path));
    CHECK(slurp(path) == text);
  }
}
