#include "bfgame/position.hpp"

#include <algorithm>
#include <unordered_set>

#include "bfgame/errors.hpp"

namespace bfgame {

void Position::validate() const {
  std::unordered_set<EdgeId> ids;
  for (const Edge& e : graph.edges()) ids.insert(e.id);
  for (const Edge& r : reserve) {
    if (r.u >= vertex_count() || r.v >= vertex_count()) {
      throw ValidationError("reserve edge " + r.id + " references a vertex outside the graph");
    }
    if (r.weight < 0) throw ValidationError("reserve edge " + r.id + " has negative weight");
    if (!ids.insert(r.id).second) throw ValidationError("duplicate edge id " + r.id);
  }
}

Weight Position::reserve_weight() const { return total_weight(reserve); }

const Edge* Position::find_reserve(const EdgeId& id) const {
  auto it = std::find_if(reserve.begin(), reserve.end(), [&](const Edge& e) { return e.id == id; });
  return it == reserve.end() ? nullptr : &*it;
}

std::vector<Edge> without(const std::vector<Edge>& pool, const IdSet& ids) {
  std::vector<Edge> out;
  out.reserve(pool.size());
  for (const Edge& e : pool) {
    if (!std::binary_search(ids.begin(), ids.end(), e.id)) out.push_back(e);
  }
  return out;
}

std::vector<Edge> select(const std::vector<Edge>& pool, const IdSet& ids) {
  std::vector<Edge> out;
  for (const Edge& e : pool) {
    if (std::binary_search(ids.begin(), ids.end(), e.id)) out.push_back(e);
  }
  return out;
}

IdSet ids_of(const std::vector<Edge>& edges) {
  IdSet out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back(e.id);
  return make_id_set(std::move(out));
}

bool is_subset(const IdSet& ids, const std::vector<Edge>& pool) {
  return std::all_of(ids.begin(), ids.end(), [&](const EdgeId& id) {
    return std::any_of(pool.begin(), pool.end(), [&](const Edge& e) { return e.id == id; });
  });
}

Weight total_weight(const std::vector<Edge>& edges) {
  Weight sum{0};
  for (const Edge& e : edges) sum += e.weight;
  return sum;
}

}  // namespace bfgame
