#pragma once

#include <cstddef>
#include <vector>

#include "bfgame/graph.hpp"

namespace bfgame {

/// Current graph G_k and remaining reserve R_k over a fixed vertex set.
struct Position {
  Multigraph graph;
  std::vector<Edge> reserve;

  /// Checks id disjointness and that reserve endpoints fit the vertex set.
  /// Throws ValidationError.
  void validate() const;

  std::size_t vertex_count() const { return graph.vertex_count(); }
  std::size_t total_edges() const { return graph.size() + reserve.size(); }
  Weight reserve_weight() const;
  const Edge* find_reserve(const EdgeId& id) const;

  friend bool operator==(const Position&, const Position&) = default;
};

/// Edges of `pool` whose ids are not in `ids` (ids must be sorted).
std::vector<Edge> without(const std::vector<Edge>& pool, const IdSet& ids);

/// Edges of `pool` whose ids are in `ids`, in pool order.
std::vector<Edge> select(const std::vector<Edge>& pool, const IdSet& ids);

IdSet ids_of(const std::vector<Edge>& edges);

bool is_subset(const IdSet& ids, const std::vector<Edge>& pool);

Weight total_weight(const std::vector<Edge>& edges);

}  // namespace bfgame
