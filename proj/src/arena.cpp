#include "bfgame/detail/arena.hpp"

#include <algorithm>
#include <numeric>

#include "bfgame/errors.hpp"

namespace bfgame::detail {

Arena::Arena(const Position& root) : vertex_count_(root.vertex_count()) {
  root.validate();
  std::vector<std::pair<Edge, bool>> tagged;
  for (const Edge& e : root.graph.edges()) tagged.emplace_back(e, true);
  for (const Edge& e : root.reserve) tagged.emplace_back(e, false);
  if (tagged.size() > kMaxEdges) {
    throw CapExceeded("position has " + std::to_string(tagged.size()) + " edges; arena limit is " +
                      std::to_string(kMaxEdges));
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) { return a.first.id < b.first.id; });

  for (std::size_t i = 0; i < tagged.size(); ++i) {
    edges_.push_back(tagged[i].first);
    (tagged[i].second ? root_graph_ : root_reserve_) |= Mask{1} << i;
  }
  for (const Edge& e : edges_) {
    const std::int64_t g = std::gcd(scale_, e.weight.denominator());
    if (__builtin_mul_overflow(scale_ / g, e.weight.denominator(), &scale_)) {
      throw CapExceeded("weight denominators overflow the common scale");
    }
  }
  for (const Edge& e : edges_) {
    std::int64_t s = 0;
    if (__builtin_mul_overflow(e.weight.numerator(), scale_ / e.weight.denominator(), &s)) {
      throw CapExceeded("scaled weight overflows");
    }
    scaled_.push_back(s);
  }
  connected_cache_.assign(std::size_t{1} << edges_.size(), -1);
}

Mask Arena::mask_of(const IdSet& ids) const {
  Mask out = 0;
  for (const EdgeId& id : ids) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, const EdgeId& key) { return e.id < key; });
    if (it == edges_.end() || it->id != id) throw IllegalMove("unknown edge id " + id);
    out |= Mask{1} << (it - edges_.begin());
  }
  return out;
}

IdSet Arena::ids_of(Mask m) const {
  IdSet out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if ((m >> i) & 1U) out.push_back(edges_[i].id);
  }
  return out;
}

bool Arena::connected(Mask m) const {
  std::int8_t& slot = connected_cache_[m];
  if (slot >= 0) return slot != 0;
  std::vector<std::size_t> parent(vertex_count_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t classes = vertex_count_;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!((m >> i) & 1U)) continue;
    auto a = find(edges_[i].u), b = find(edges_[i].v);
    if (a != b) {
      parent[a] = b;
      --classes;
    }
  }
  slot = classes == 1 ? 1 : 0;
  return slot != 0;
}

std::int64_t Arena::scaled_weight(Mask m) const {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if ((m >> i) & 1U) sum += scaled_[i];
  }
  return sum;
}

Weight Arena::weight(Mask m) const { return Weight(scaled_weight(m), scale_); }

std::vector<Mask> Arena::responses(Mask remaining, Mask reserve, bool bridge_only) const {
  std::vector<Mask> out;
  // Walk all submasks of reserve, including the empty one.
  for (Mask f = reserve;; f = (f - 1) & reserve) {
    if (connected(remaining | f)) {
      bool keep = true;
      if (bridge_only) {
        for (Mask bits = f; bits != 0 && keep; bits &= bits - 1) {
          const Mask one = bits & (~bits + 1);
          keep = !connected((remaining | f) & ~one);
        }
      }
      if (keep) out.push_back(f);
    }
    if (f == 0) break;
  }
  std::vector<std::pair<std::int64_t, IdSet>> keys;
  keys.reserve(out.size());
  for (Mask f : out) keys.emplace_back(scaled_weight(f), ids_of(f));
  std::vector<std::size_t> order(out.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<Mask> sorted;
  sorted.reserve(out.size());
  for (std::size_t i : order) sorted.push_back(out[i]);
  return sorted;
}

Position Arena::position(Mask graph, Mask reserve) const {
  std::vector<Edge> g;
  std::vector<Edge> r;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if ((graph >> i) & 1U) g.push_back(edges_[i]);
    if ((reserve >> i) & 1U) r.push_back(edges_[i]);
  }
  return Position{Multigraph(vertex_count_, std::move(g)), std::move(r)};
}

}  // namespace bfgame::detail
