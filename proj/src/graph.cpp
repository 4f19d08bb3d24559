#include "bfgame/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

#include "bfgame/errors.hpp"

namespace bfgame {

IdSet make_id_set(std::vector<EdgeId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ == 0) throw ValidationError("multigraph needs at least one vertex");
  std::unordered_set<EdgeId> seen;
  for (const Edge& e : edges_) {
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw ValidationError("edge " + e.id + " references a vertex outside the graph");
    }
    if (e.weight < 0) throw ValidationError("edge " + e.id + " has negative weight");
    if (!seen.insert(e.id).second) throw ValidationError("duplicate edge id " + e.id);
  }
}

const Edge* Multigraph::find(const EdgeId& id) const {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
  return it == edges_.end() ? nullptr : &*it;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Keeps the smaller root so the root of a class is its minimum vertex.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

Components label_components(std::size_t n, const std::vector<Edge>& edges) {
  DisjointSets sets(n);
  for (const Edge& e : edges) sets.unite(e.u, e.v);
  Components out;
  out.label.assign(n, 0);
  std::vector<std::size_t> index_of_root(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (index_of_root[root] == n) index_of_root[root] = out.count++;
    out.label[v] = index_of_root[root];
  }
  return out;
}

}  // namespace

Components components(const Multigraph& g) { return label_components(g.vertex_count(), g.edges()); }

bool is_connected(const Multigraph& g) { return components(g).count == 1; }

std::set<EdgeId> bridges(const Multigraph& g) {
  // Lowlink DFS keyed on edge index, so a parallel edge back to the parent
  // counts as a cycle.
  const std::size_t n = g.vertex_count();
  const auto& edges = g.edges();
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].is_loop()) continue;
    adj[edges[i].u].emplace_back(edges[i].v, i);
    adj[edges[i].v].emplace_back(edges[i].u, i);
  }

  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, unvisited);
  std::vector<std::size_t> low(n, 0);
  std::size_t clock = 0;
  std::set<EdgeId> out;

  std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t v, std::size_t via) {
    order[v] = low[v] = clock++;
    for (auto [w, idx] : adj[v]) {
      if (idx == via) continue;
      if (order[w] == unvisited) {
        visit(w, idx);
        low[v] = std::min(low[v], low[w]);
        if (low[w] > order[v]) out.insert(edges[idx].id);
      } else {
        low[v] = std::min(low[v], order[w]);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (order[v] == unvisited) visit(v, unvisited);
  }
  return out;
}

const Edge* ContractedGraph::find(const EdgeId& id) const {
  auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.id == id; });
  return it == edges.end() ? nullptr : &*it;
}

ContractedGraph contract(const Multigraph& base, std::span<const Edge> reserve) {
  const Components comp = components(base);
  ContractedGraph out;
  out.component_count = comp.count;
  out.component_of = comp.label;
  out.edges.reserve(reserve.size());
  for (const Edge& r : reserve) {
    if (r.u >= base.vertex_count() || r.v >= base.vertex_count()) {
      throw ValidationError("reserve edge " + r.id + " references a vertex outside the graph");
    }
    out.edges.push_back(Edge{r.id, comp.label[r.u], comp.label[r.v], r.weight});
    out.origin.emplace(r.id, r.id);
  }
  return out;
}

ContractedGraph make_contracted(std::size_t component_count, std::vector<Edge> edges) {
  ContractedGraph out;
  out.component_count = component_count;
  out.component_of.resize(component_count);
  std::iota(out.component_of.begin(), out.component_of.end(), 0);
  for (const Edge& e : edges) {
    if (e.u >= component_count || e.v >= component_count) {
      throw ValidationError("edge " + e.id + " references a vertex outside the graph");
    }
    out.origin.emplace(e.id, e.id);
  }
  out.edges = std::move(edges);
  return out;
}

}  // namespace bfgame
