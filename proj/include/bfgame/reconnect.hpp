#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "bfgame/graph.hpp"
#include "bfgame/position.hpp"

namespace bfgame {

struct SpanningTree {
  IdSet edge_ids;
  Weight total_weight{0};

  friend bool operator==(const SpanningTree&, const SpanningTree&) = default;
  friend auto operator<=>(const SpanningTree& a, const SpanningTree& b) { return a.edge_ids <=> b.edge_ids; }
};

/// Order in which Prim grows the tree from a component.
struct PrimTrace {
  std::size_t start_vertex = 0;
  std::vector<EdgeId> addition_order;
};

/// Strict ordering used to pick among equally cheap crossing edges.
using TieBreak = std::function<bool(const Edge&, const Edge&)>;

/// Smallest id wins.
TieBreak lexicographic_tie_break();

/// Prim's algorithm on the contracted graph. Loops are skipped.
/// Throws Disconnected when no spanning tree exists.
SpanningTree prim_mst(const ContractedGraph& m, std::size_t start_vertex = 0,
                      const TieBreak& tie_break = lexicographic_tie_break());

/// Every spanning tree, by backtracking over edge subsets of size c - 1.
/// Sorted by edge ids. Empty when m is disconnected.
std::vector<SpanningTree> all_spanning_trees(const ContractedGraph& m);

/// Minimum-weight subset of all_spanning_trees. Throws Disconnected.
std::vector<SpanningTree> all_msts(const ContractedGraph& m);

/// Searches start vertices and greedy-feasible edge orders for a Prim run
/// that builds exactly `t`. Throws NotSpanningTree if t is not a spanning
/// tree of m, CapExceeded above `max_components`.
std::optional<PrimTrace> prim_reachable(const ContractedGraph& m, const SpanningTree& t,
                                        std::size_t max_components = 6);

/// Cheapest reserve subset reconnecting G - B, as origin ids of Prim's tree.
/// Empty if G - B is still connected. Throws BusterWins if (G - B) + R is
/// disconnected and IllegalMove if busted is empty or not inside G.
IdSet greedy_fixer_move(const Position& position, const IdSet& busted,
                        const TieBreak& tie_break = lexicographic_tie_break());

/// Every greedy response: one per minimum spanning tree of the contracted graph.
std::vector<IdSet> all_greedy_fixer_moves(const Position& position, const IdSet& busted);

}  // namespace bfgame
