#include "bfgame/reconnect.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "bfgame/errors.hpp"

namespace bfgame {

TieBreak lexicographic_tie_break() {
  return [](const Edge& a, const Edge& b) { return a.id < b.id; };
}

SpanningTree prim_mst(const ContractedGraph& m, std::size_t start_vertex, const TieBreak& tie_break) {
  const std::size_t c = m.component_count;
  if (start_vertex >= c) throw std::out_of_range("prim start vertex out of range");
  std::vector<bool> in_tree(c, false);
  in_tree[start_vertex] = true;
  SpanningTree tree;
  for (std::size_t added = 1; added < c; ++added) {
    const Edge* best = nullptr;
    for (const Edge& e : m.edges) {
      if (in_tree[e.u] == in_tree[e.v]) continue;
      if (best == nullptr || e.weight < best->weight ||
          (e.weight == best->weight && tie_break(e, *best))) {
        best = &e;
      }
    }
    if (best == nullptr) throw Disconnected("contracted graph has no spanning tree");
    in_tree[best->u] = in_tree[best->v] = true;
    tree.edge_ids.push_back(best->id);
    tree.total_weight += best->weight;
  }
  tree.edge_ids = make_id_set(std::move(tree.edge_ids));
  return tree;
}

std::vector<SpanningTree> all_spanning_trees(const ContractedGraph& m) {
  const std::size_t c = m.component_count;
  std::vector<const Edge*> candidates;
  for (const Edge& e : m.edges) {
    if (!e.is_loop()) candidates.push_back(&e);
  }

  std::vector<SpanningTree> out;
  std::vector<const Edge*> chosen;

  // Acyclicity via a fresh union-find per leaf; c and edge counts are tiny.
  auto acyclic = [&]() {
    std::vector<std::size_t> parent(c);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Edge* e : chosen) {
      auto a = find(e->u), b = find(e->v);
      if (a == b) return false;
      parent[a] = b;
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (chosen.size() + 1 == c) {
      SpanningTree t;
      for (const Edge* e : chosen) {
        t.edge_ids.push_back(e->id);
        t.total_weight += e->weight;
      }
      t.edge_ids = make_id_set(std::move(t.edge_ids));
      out.push_back(std::move(t));
      return;
    }
    if (candidates.size() - next < c - 1 - chosen.size()) return;
    for (std::size_t i = next; i < candidates.size(); ++i) {
      chosen.push_back(candidates[i]);
      if (acyclic()) self(self, i + 1);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SpanningTree> all_msts(const ContractedGraph& m) {
  std::vector<SpanningTree> trees = all_spanning_trees(m);
  if (trees.empty()) throw Disconnected("contracted graph has no spanning tree");
  Weight best = trees.front().total_weight;
  for (const auto& t : trees) best = std::min(best, t.total_weight);
  std::erase_if(trees, [&](const SpanningTree& t) { return t.total_weight != best; });
  return trees;
}

namespace {

void require_spanning_tree(const ContractedGraph& m, const SpanningTree& t) {
  const std::size_t c = m.component_count;
  if (t.edge_ids.size() + 1 != c) throw NotSpanningTree("tree has the wrong number of edges");
  std::vector<std::size_t> parent(c);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Weight sum{0};
  std::unordered_set<EdgeId> seen;
  for (const EdgeId& id : t.edge_ids) {
    const Edge* e = m.find(id);
    if (e == nullptr) throw NotSpanningTree("edge " + id + " is not in the contracted graph");
    if (!seen.insert(id).second) throw NotSpanningTree("edge " + id + " listed twice");
    auto a = find(e->u), b = find(e->v);
    if (a == b) throw NotSpanningTree("edge " + id + " closes a cycle");
    parent[a] = b;
    sum += e->weight;
  }
  if (sum != t.total_weight) throw NotSpanningTree("total weight does not match its edges");
}

}  // namespace

std::optional<PrimTrace> prim_reachable(const ContractedGraph& m, const SpanningTree& t,
                                        std::size_t max_components) {
  const std::size_t c = m.component_count;
  if (c > max_components || c > 30) {
    throw CapExceeded("prim_reachable supports at most " + std::to_string(max_components) +
                      " components");
  }
  require_spanning_tree(m, t);

  std::vector<const Edge*> tree_edges;
  for (const EdgeId& id : t.edge_ids) tree_edges.push_back(m.find(id));

  const std::uint32_t full = (std::uint32_t{1} << c) - 1;
  auto inside = [](std::uint32_t set, std::size_t v) { return (set >> v) & 1U; };

  // Grown vertex sets already known to dead-end. The tree edges inside a set
  // are determined by the set, so the set alone is a sound memo key.
  std::unordered_set<std::uint32_t> dead;
  std::vector<EdgeId> order;

  auto extend = [&](auto&& self, std::uint32_t grown) -> bool {
    if (grown == full) return true;
    if (dead.contains(grown)) return false;
    std::optional<Weight> cheapest;
    for (const Edge& e : m.edges) {
      if (inside(grown, e.u) != inside(grown, e.v) && (!cheapest || e.weight < *cheapest)) {
        cheapest = e.weight;
      }
    }
    if (cheapest) {
      for (const Edge* e : tree_edges) {
        if (inside(grown, e->u) == inside(grown, e->v) || e->weight != *cheapest) continue;
        order.push_back(e->id);
        if (self(self, grown | (std::uint32_t{1} << e->u) | (std::uint32_t{1} << e->v))) return true;
        order.pop_back();
      }
    }
    dead.insert(grown);
    return false;
  };

  for (std::size_t start = 0; start < c; ++start) {
    order.clear();
    if (extend(extend, std::uint32_t{1} << start)) return PrimTrace{start, order};
  }
  return std::nullopt;
}

namespace {

Multigraph remaining_graph(const Position& position, const IdSet& busted) {
  if (busted.empty()) throw IllegalMove("Buster must remove a nonempty set of edges");
  for (const EdgeId& id : busted) {
    if (!position.graph.contains(id)) throw IllegalMove("busted edge " + id + " is not in the graph");
  }
  return Multigraph(position.vertex_count(), without(position.graph.edges(), busted));
}

ContractedGraph reconnection_graph(const Position& position, const Multigraph& remaining) {
  ContractedGraph m = contract(remaining, position.reserve);
  std::vector<Edge> everything = remaining.edges();
  everything.insert(everything.end(), position.reserve.begin(), position.reserve.end());
  if (!is_connected(Multigraph(position.vertex_count(), std::move(everything)))) {
    throw BusterWins("the remaining graph plus the whole reserve is disconnected");
  }
  return m;
}

}  // namespace

IdSet greedy_fixer_move(const Position& position, const IdSet& busted, const TieBreak& tie_break) {
  const IdSet b = make_id_set(busted);
  const Multigraph remaining = remaining_graph(position, b);
  if (is_connected(remaining)) return {};
  const ContractedGraph m = reconnection_graph(position, remaining);
  IdSet out;
  for (const EdgeId& id : prim_mst(m, 0, tie_break).edge_ids) out.push_back(m.origin.at(id));
  return make_id_set(std::move(out));
}

std::vector<IdSet> all_greedy_fixer_moves(const Position& position, const IdSet& busted) {
  const IdSet b = make_id_set(busted);
  const Multigraph remaining = remaining_graph(position, b);
  if (is_connected(remaining)) return {IdSet{}};
  const ContractedGraph m = reconnection_graph(position, remaining);
  std::vector<IdSet> out;
  for (const SpanningTree& t : all_msts(m)) {
    IdSet ids;
    for (const EdgeId& id : t.edge_ids) ids.push_back(m.origin.at(id));
    out.push_back(make_id_set(std::move(ids)));
  }
  return out;
}

}  // namespace bfgame
