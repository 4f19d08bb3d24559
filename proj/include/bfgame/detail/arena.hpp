#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bfgame/position.hpp"

namespace bfgame::detail {

using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Fixed edge universe of one root position. Every later position of a
/// series from that root is a pair of disjoint masks (graph, reserve).
/// Bit i is the i-th edge in id order. Weights are scaled to integers by
/// the lcm of all denominators so sums compare exactly.
class Arena {
 public:
  static constexpr std::size_t kMaxEdges = 20;

  explicit Arena(const Position& root);

  std::size_t edge_count() const { return edges_.size(); }
  std::size_t vertex_count() const { return vertex_count_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  Mask root_graph() const { return root_graph_; }
  Mask root_reserve() const { return root_reserve_; }

  /// Throws IllegalMove for unknown ids.
  Mask mask_of(const IdSet& ids) const;
  IdSet ids_of(Mask m) const;

  bool connected(Mask edges) const;

  std::int64_t scaled_weight(Mask m) const;
  std::int64_t scale() const { return scale_; }
  Weight weight(Mask m) const;

  /// Every F inside `reserve` with remaining | F connected, cheapest first
  /// and then by id tuple. With bridge_only, only F whose every edge is a
  /// bridge of remaining | F.
  std::vector<Mask> responses(Mask remaining, Mask reserve, bool bridge_only) const;

  Position position(Mask graph, Mask reserve) const;

 private:
  std::size_t vertex_count_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> scaled_;
  std::int64_t scale_ = 1;
  Mask root_graph_ = 0;
  Mask root_reserve_ = 0;
  mutable std::vector<std::int8_t> connected_cache_;
};

}  // namespace bfgame::detail
