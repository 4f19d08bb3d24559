#include <random>

#include "bfgame/errors.hpp"
#include "bfgame/graph.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bfgame;

namespace {

// a=0, b=1, c=2
const Edge e1{"e1", 0, 1, Weight(1)};
const Edge e2{"e2", 1, 2, Weight(1)};
const Edge e3{"e3", 2, 0, Weight(1)};
const Edge e4{"e4", 0, 1, Weight(1)};
const Edge e5{"e5", 1, 2, Weight(2)};

std::vector<Edge> random_edges(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_int_distribution<std::size_t> vd(0, n - 1);
  std::vector<Edge> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(Edge{"x" + std::to_string(i), vd(rng), vd(rng), Weight(1)});
  return out;
}

}  // namespace

TEST_CASE("weights parse exactly and print back") {
  CHECK(parse_weight("2") == Weight(2));
  CHECK(parse_weight("0.25") == Weight(1, 4));
  CHECK(parse_weight("1.50") == Weight(3, 2));
  CHECK(parse_weight("-1.5") == Weight(-3, 2));
  CHECK(parse_weight(".5") == Weight(1, 2));
  CHECK_THROWS_AS(parse_weight("1e3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("1.2.3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("."), std::invalid_argument);
  CHECK(parse_weight("7/3") == Weight(7, 3));
  CHECK(parse_weight("-2/6") == Weight(-1, 3));
  CHECK_THROWS_AS(parse_weight("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("1/-3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_weight("0.5/3"), std::invalid_argument);
  for (int p = -12; p <= 12; ++p) {
    for (int q = 1; q <= 12; ++q) CHECK(parse_weight(format_weight(Weight(p, q))) == Weight(p, q));
  }
  CHECK(format_weight(Weight(3, 2)) == "1.5");
  CHECK(format_weight(Weight(1, 8)) == "0.125");
  CHECK(format_weight(Weight(7)) == "7");
  CHECK(format_weight(Weight(1, 3)) == "1/3");
  CHECK(format_weight(Weight(-1, 20)) == "-0.05");
  // 0.1 + 0.2 is exactly 0.3 here.
  CHECK(parse_weight("0.1") + parse_weight("0.2") == parse_weight("0.3"));
}

TEST_CASE("components") {
  CHECK(components(Multigraph(3, {e1, e2, e3})).count == 1);

  const Components after = components(Multigraph(3, {e3}));
  CHECK(after.count == 2);
  CHECK(after.label[0] == after.label[2]);
  CHECK(after.label[1] != after.label[0]);
  // Canonical numbering: component of vertex 0 first.
  CHECK(after.label == std::vector<std::size_t>{0, 1, 0});

  CHECK(components(Multigraph(3, {})).count == 3);
}

TEST_CASE("is_connected") {
  CHECK(is_connected(Multigraph(3, {e3, e4})));
  CHECK_FALSE(is_connected(Multigraph(3, {e5})));
  CHECK(is_connected(Multigraph(1, {})));
}

TEST_CASE("bridges") {
  CHECK(bridges(Multigraph(3, {e1, e2, e3})).empty());
  CHECK(bridges(Multigraph(3, {e3, e4})) == std::set<EdgeId>{"e3", "e4"});
  CHECK(bridges(Multigraph(2, {Edge{"p", 0, 1, Weight(1)}, Edge{"q", 0, 1, Weight(1)}})).empty());
  CHECK(bridges(Multigraph(2, {Edge{"p", 0, 1, Weight(1)}, Edge{"loop", 1, 1, Weight(1)}})) ==
        std::set<EdgeId>{"p"});
}

TEST_CASE("bridges agree with the removal oracle on random multigraphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 3000; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const std::size_t m = rng() % 9;
    const auto edges = random_edges(rng, n, m);
    const Multigraph g(n, edges);
    CAPTURE(trial);
    CHECK(bridges(g) == oracle::bridges_by_removal(n, edges));
    CHECK(components(g).count == oracle::count_components(n, edges));
    CHECK(is_connected(g) == (components(g).count == 1));
  }
}

TEST_CASE("component labels are canonical and deterministic") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    auto edges = random_edges(rng, n, rng() % 6);
    const Components a = components(Multigraph(n, edges));
    std::reverse(edges.begin(), edges.end());
    const Components b = components(Multigraph(n, edges));
    CHECK(a.label == b.label);
    // Label of a component is the rank of its smallest vertex.
    std::size_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (a.label[v] == next) ++next;
      CHECK(a.label[v] < next);
    }
  }
}

TEST_CASE("contract") {
  SUBCASE("two components after busting e1, e2") {
    const ContractedGraph m = contract(Multigraph(3, {e3}), std::vector<Edge>{e4, e5});
    CHECK(m.component_count == 2);
    REQUIRE(m.edges.size() == 2);
    for (const Edge& e : m.edges) CHECK_FALSE(e.is_loop());
    CHECK(m.origin.at("e4") == "e4");
    CHECK(m.origin.at("e5") == "e5");
  }
  SUBCASE("connected base turns every reserve edge into a loop") {
    const ContractedGraph m = contract(Multigraph(3, {e1, e2, e3}), std::vector<Edge>{e4, e5});
    CHECK(m.component_count == 1);
    for (const Edge& e : m.edges) CHECK(e.is_loop());
  }
  SUBCASE("edgeless base") {
    const ContractedGraph m = contract(Multigraph(3, {}), std::vector<Edge>{Edge{"r", 0, 1, Weight(1)}});
    CHECK(m.component_count == 3);
    REQUIRE(m.edges.size() == 1);
    CHECK_FALSE(m.edges[0].is_loop());
  }
}

TEST_CASE("contract keeps ids, weights and cardinality; loops match same-component edges") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const auto base = random_edges(rng, n, rng() % 5);
    std::vector<Edge> reserve;
    std::uniform_int_distribution<std::size_t> vd(0, n - 1);
    const std::size_t count = rng() % 5;
    for (std::size_t i = 0; i < count; ++i) reserve.push_back(Edge{"r" + std::to_string(i), vd(rng), vd(rng), Weight(static_cast<long>(rng() % 4), 2)});
    const Multigraph g(n, base);
    const ContractedGraph m = contract(g, reserve);
    REQUIRE(m.edges.size() == reserve.size());
    const Components c = components(g);
    for (std::size_t i = 0; i < reserve.size(); ++i) {
      CHECK(m.edges[i].id == reserve[i].id);
      CHECK(m.edges[i].weight == reserve[i].weight);
      CHECK(m.origin.at(m.edges[i].id) == reserve[i].id);
      CHECK(m.edges[i].is_loop() == (c.label[reserve[i].u] == c.label[reserve[i].v]));
    }
  }
}

TEST_CASE("multigraph validation") {
  CHECK_THROWS_AS(Multigraph(2, {Edge{"a", 0, 2, Weight(1)}}), ValidationError);
  CHECK_THROWS_AS(Multigraph(2, {Edge{"a", 0, 1, Weight(-1)}}), ValidationError);
  CHECK_THROWS_AS(Multigraph(2, {Edge{"a", 0, 1, Weight(1)}, Edge{"a", 0, 1, Weight(1)}}), ValidationError);
  CHECK_THROWS_AS(Multigraph(0, {}), ValidationError);
  // Parallel edges with distinct ids are fine.
  CHECK(Multigraph(2, {Edge{"a", 0, 1, Weight(1)}, Edge{"b", 0, 1, Weight(1)}}).size() == 2);
}
