#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <sstream>
#include <thread>

#include "bfgame/adjudicator.hpp"
#include "bfgame/detail/arena.hpp"
#include "bfgame/detail/solver.hpp"
#include "bfgame/errors.hpp"

namespace bfgame {

namespace {

using detail::Arena;
using detail::GameSolver;
using detail::Mask;

using PairType = std::pair<VertexId, VertexId>;
using ReserveType = std::pair<PairType, std::size_t>;  // endpoints, weight index

/// Calls visit(chosen) for every size-k multiset of indices in [0, types).
template <typename Visit>
void multisets(std::size_t types, std::size_t k, Visit&& visit) {
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == k) {
      visit(chosen);
      return;
    }
    for (std::size_t t = from; t < types; ++t) {
      chosen.push_back(t);
      self(self, t);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

PairType relabel(const PairType& p, const std::vector<VertexId>& perm) {
  auto a = perm[p.first], b = perm[p.second];
  return a <= b ? PairType{a, b} : PairType{b, a};
}

std::string describe_instance(const Position& p) {
  std::ostringstream out;
  out << "n=" << p.vertex_count() << " G={";
  for (std::size_t i = 0; i < p.graph.size(); ++i) {
    const Edge& e = p.graph.edges()[i];
    out << (i ? "," : "") << e.id << ":" << e.u << "-" << e.v;
  }
  out << "} R={";
  for (std::size_t i = 0; i < p.reserve.size(); ++i) {
    const Edge& e = p.reserve[i];
    out << (i ? "," : "") << e.id << ":" << e.u << "-" << e.v << "@" << format_weight(e.weight);
  }
  out << "}";
  return out.str();
}

std::string describe_ids(const IdSet& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + ids[i];
  return out + "}";
}

void merge(SweepReport& into, const SweepReport& from) {
  into.instances += from.instances;
  into.buster_moves += from.buster_moves;
  into.responses += from.responses;
  into.greedy_checked += from.greedy_checked;
  into.greedy_optimal += from.greedy_optimal;
  into.optimal_responses += from.optimal_responses;
  into.optimal_not_min_weight += from.optimal_not_min_weight;
  into.min_weight_non_tree += from.min_weight_non_tree;
  into.min_weight_non_tree_optimal += from.min_weight_non_tree_optimal;
  into.prune_checked += from.prune_checked;
  into.prune_disagreements += from.prune_disagreements;
  into.naive_checked += from.naive_checked;
  into.naive_disagreements += from.naive_disagreements;
  into.naive_over_cap += from.naive_over_cap;
  into.counterexamples.insert(into.counterexamples.end(), from.counterexamples.begin(), from.counterexamples.end());
}

void check_instance(const Position& p, const SweepConfig& config, SweepReport& report) {
  if (p.total_edges() > config.caps.max_total_edges) {
    throw CapExceeded("sweep instance exceeds the search cap: " + describe_instance(p));
  }
  const Arena arena(p);
  GameSolver solver(arena);
  const bool prune = config.caps.bridge_prune;
  const bool run_naive = config.check_naive && p.total_edges() <= config.caps.naive_max_total_edges;
  ++report.instances;

  const Mask graph = arena.root_graph();
  const Mask reserve = arena.root_reserve();
  for (Mask busted = graph; busted != 0; busted = (busted - 1) & graph) {
    const Mask remaining = graph & ~busted;
    if (!arena.connected(remaining | reserve)) continue;
    ++report.buster_moves;
    const IdSet busted_ids = arena.ids_of(busted);
    auto fail = [&](const std::string& what, Mask response) {
      report.counterexamples.push_back(describe_instance(p) + " B=" + describe_ids(busted_ids) +
                                       " F=" + describe_ids(arena.ids_of(response)) + ": " + what);
    };

    const std::vector<Mask> responses = arena.responses(remaining, reserve, false);
    std::int64_t cheapest = arena.scaled_weight(responses.front());
    for (Mask f : responses) cheapest = std::min(cheapest, arena.scaled_weight(f));

    std::vector<Mask> greedy;
    for (const IdSet& ids : all_greedy_fixer_moves(p, busted_ids)) greedy.push_back(arena.mask_of(ids));
    for (Mask g : greedy) {
      if (arena.scaled_weight(g) != cheapest) fail("minimum spanning tree is not a cheapest response", g);
    }

    for (Mask f : responses) {
      ++report.responses;
      const bool optimal = solver.optimal(busted, f, prune);
      if (config.check_prune) {
        ++report.prune_checked;
        if (solver.optimal(busted, f, !prune) != optimal) {
          ++report.prune_disagreements;
          fail("bridge-only pruning changes the verdict", f);
        }
      }
      if (run_naive) {
        try {
          const bool literal = verify_optimal_naive(p, busted_ids, arena.ids_of(f), config.caps);
          ++report.naive_checked;
          if (literal != optimal) {
            ++report.naive_disagreements;
            fail("literal oracle disagrees with the game-tree search", f);
          }
        } catch (const CapExceeded&) {
          ++report.naive_over_cap;
        }
      }
      const bool is_greedy = std::find(greedy.begin(), greedy.end(), f) != greedy.end();
      const bool min_weight = arena.scaled_weight(f) == cheapest;
      if (is_greedy) {
        ++report.greedy_checked;
        if (optimal) {
          ++report.greedy_optimal;
        } else {
          fail("greedy response is not optimal", f);
        }
      } else if (min_weight) {
        ++report.min_weight_non_tree;
        if (optimal) ++report.min_weight_non_tree_optimal;
      }
      if (optimal) {
        ++report.optimal_responses;
        if (!min_weight) {
          ++report.optimal_not_min_weight;
          fail("optimal response is not minimum weight", f);
        }
      }
    }
  }
}

}  // namespace

void enumerate_instances(const SweepConfig& config, const InstanceVisitor& visit) {
  for (std::size_t n = 1; n <= config.max_vertices; ++n) {
    std::vector<PairType> pairs;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u; v < n; ++v) {
        if (u != v || config.allow_loops) pairs.emplace_back(u, v);
      }
    }
    if (pairs.empty()) continue;
    std::vector<ReserveType> reserve_types;
    for (const PairType& pt : pairs) {
      for (std::size_t w = 0; w < config.weights.size(); ++w) reserve_types.emplace_back(pt, w);
    }
    std::vector<std::vector<VertexId>> perms;
    std::vector<VertexId> perm(n);
    for (VertexId v = 0; v < n; ++v) perm[v] = v;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    for (std::size_t g = 1; g <= config.max_total_edges; ++g) {
      multisets(pairs.size(), g, [&](const std::vector<std::size_t>& gsel) {
        std::vector<Edge> graph_edges;
        for (std::size_t i = 0; i < gsel.size(); ++i) {
          const PairType& pt = pairs[gsel[i]];
          graph_edges.push_back(Edge{"g" + std::to_string(i + 1), pt.first, pt.second, Weight(1)});
        }
        const Multigraph graph(n, graph_edges);
        if (!is_connected(graph)) return;
        for (std::size_t r = 0; g + r <= config.max_total_edges; ++r) {
          multisets(reserve_types.size(), r, [&](const std::vector<std::size_t>& rsel) {
            if (config.symmetry_reduction && n > 1) {
              std::vector<PairType> gk;
              std::vector<ReserveType> rk;
              for (auto i : gsel) gk.push_back(pairs[i]);
              for (auto i : rsel) rk.push_back(reserve_types[i]);
              std::sort(gk.begin(), gk.end());
              std::sort(rk.begin(), rk.end());
              for (const auto& pm : perms) {
                std::vector<PairType> gp;
                std::vector<ReserveType> rp;
                for (const auto& x : gk) gp.push_back(relabel(x, pm));
                for (const auto& x : rk) rp.emplace_back(relabel(x.first, pm), x.second);
                std::sort(gp.begin(), gp.end());
                std::sort(rp.begin(), rp.end());
                if (std::tie(gp, rp) < std::tie(gk, rk)) return;  // not the canonical representative
              }
            }
            std::vector<Edge> reserve_edges;
            for (std::size_t i = 0; i < rsel.size(); ++i) {
              const auto& [pt, w] = reserve_types[rsel[i]];
              reserve_edges.push_back(Edge{"r" + std::to_string(i + 1), pt.first, pt.second, config.weights[w]});
            }
            visit(Position{graph, std::move(reserve_edges)});
          });
        }
      });
    }
  }
}

SweepReport theorem_sweep(const std::vector<Position>& instances, const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  SweepReport total;
  std::mutex lock;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    SweepReport local;
    for (std::size_t i = next++; i < instances.size(); i = next++) check_instance(instances[i], config, local);
    std::lock_guard guard(lock);
    merge(total, local);
  };
  const std::size_t threads = std::max<std::size_t>(1, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::sort(total.counterexamples.begin(), total.counterexamples.end());
  total.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

SweepReport theorem_sweep(const SweepConfig& config) {
  std::vector<Position> instances;
  enumerate_instances(config, [&](const Position& p) { instances.push_back(p); });
  return theorem_sweep(instances, config);
}

std::string render_report(const SweepReport& r) {
  std::ostringstream out;
  out << "instances:                      " << r.instances << "\n"
      << "buster moves (Fixer to answer): " << r.buster_moves << "\n"
      << "legal responses checked:        " << r.responses << "\n"
      << "greedy responses (all MSTs):    " << r.greedy_checked << " optimal " << r.greedy_optimal << "\n"
      << "responses verified optimal:     " << r.optimal_responses << " not min-weight "
      << r.optimal_not_min_weight << "\n"
      << "min-weight non-tree responses:  " << r.min_weight_non_tree << " optimal "
      << r.min_weight_non_tree_optimal << "\n"
      << "prune cross-checks:             " << r.prune_checked << " disagreements " << r.prune_disagreements << "\n"
      << "naive oracle cross-checks:      " << r.naive_checked << " disagreements " << r.naive_disagreements
      << " over cap " << r.naive_over_cap << "\n"
      << "counterexamples:                " << r.counterexamples.size() << "\n";
  for (const std::string& c : r.counterexamples) out << "  " << c << "\n";
  out << "elapsed seconds:                " << r.seconds << "\n";
  return out.str();
}

}  // namespace bfgame
