#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "bfgame/engine.hpp"

namespace bfgame {

enum class Pool { Graph, Reserve };

struct ScenarioEdge {
  EdgeId id;
  std::string u;
  std::string v;
  Weight weight{0};
  Pool pool = Pool::Graph;
  friend bool operator==(const ScenarioEdge&, const ScenarioEdge&) = default;
};

/// Line-based scenario:
///
///   # comment
///   vertex a
///   edge e1 a b 1 G
///   edge e4 a b 0.5 R
///   buster e1,e2
///   buster quit
///
/// Declarations may come in any order; `buster` lines form the script in
/// file order.
struct ScenarioFile {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<ScenarioEdge> edges;
  std::vector<BusterAction> script;

  Position initial_position() const;
  /// Maps a vertex name to its dense index. Throws ValidationError.
  VertexId vertex_index(const std::string& name) const;

  friend bool operator==(const ScenarioFile& a, const ScenarioFile& b);
};

/// Throws ParseError (with line number) on malformed lines and
/// ValidationError on semantic problems: unknown or duplicate names,
/// negative weights, a disconnected G pool, unknown ids in the script.
ScenarioFile parse_scenario(std::string_view text, std::string name = "scenario");

ScenarioFile load_scenario(const std::filesystem::path& path);

std::string render_scenario(const ScenarioFile& s);

/// Splits "e1,e2" into a sorted id set. Empty pieces are rejected with
/// std::invalid_argument; "" and "{}" give the empty set.
IdSet parse_id_list(std::string_view csv);

}  // namespace bfgame
