#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "bfgame/weight.hpp"

namespace bfgame {

using VertexId = std::size_t;
using EdgeId = std::string;

/// Sorted, duplicate-free list of edge ids. Ids are unique per instance,
/// so this doubles as the multiset of edges it names.
using IdSet = std::vector<EdgeId>;

IdSet make_id_set(std::vector<EdgeId> ids);

struct Edge {
  EdgeId id;
  VertexId u = 0;
  VertexId v = 0;
  Weight weight{0};

  bool is_loop() const { return u == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Multiset of edges over the dense vertex set [0, vertex_count).
class Multigraph {
 public:
  Multigraph() = default;
  /// Throws ValidationError on bad endpoints, negative weight or duplicate id.
  Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  const Edge* find(const EdgeId& id) const;
  bool contains(const EdgeId& id) const { return find(id) != nullptr; }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t vertex_count_ = 1;
  std::vector<Edge> edges_;
};

/// Component labels; label[v] is the index of v's component, and components
/// are numbered in increasing order of their smallest vertex.
struct Components {
  std::vector<std::size_t> label;
  std::size_t count = 0;
};

Components components(const Multigraph& g);
bool is_connected(const Multigraph& g);

/// Edges whose removal increases the component count. Loops and parallel
/// edges are never bridges.
std::set<EdgeId> bridges(const Multigraph& g);

/// Reserve edges re-expressed over the components of a base graph.
/// Contracted edges keep the id of the reserve edge they came from.
struct ContractedGraph {
  std::size_t component_count = 1;
  std::vector<std::size_t> component_of;
  std::vector<Edge> edges;
  std::map<EdgeId, EdgeId> origin;

  const Edge* find(const EdgeId& id) const;
};

ContractedGraph contract(const Multigraph& base, std::span<const Edge> reserve);

/// Builds a ContractedGraph directly from component-level edges (tests, tooling).
ContractedGraph make_contracted(std::size_t component_count, std::vector<Edge> edges);

}  // namespace bfgame
