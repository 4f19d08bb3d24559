#include "bfgame/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bfgame/errors.hpp"

namespace bfgame {

namespace {

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

bool same_action(const BusterAction& a, const BusterAction& b) {
  return a.quit == b.quit && a.busted == b.busted;
}

}  // namespace

IdSet parse_id_list(std::string_view csv) {
  if (csv.size() >= 2 && csv.front() == '{' && csv.back() == '}') csv = csv.substr(1, csv.size() - 2);
  IdSet out;
  if (csv.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    const std::string_view piece = csv.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                     : comma - start);
    if (piece.empty()) throw std::invalid_argument("empty id in list '" + std::string(csv) + "'");
    out.emplace_back(piece);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return make_id_set(std::move(out));
}

bool operator==(const ScenarioFile& a, const ScenarioFile& b) {
  return a.name == b.name && a.vertices == b.vertices && a.edges == b.edges &&
         std::equal(a.script.begin(), a.script.end(), b.script.begin(), b.script.end(), same_action);
}

VertexId ScenarioFile::vertex_index(const std::string& vertex) const {
  auto it = std::find(vertices.begin(), vertices.end(), vertex);
  if (it == vertices.end()) throw ValidationError("unknown vertex '" + vertex + "'");
  return static_cast<VertexId>(it - vertices.begin());
}

Position ScenarioFile::initial_position() const {
  std::vector<Edge> graph;
  std::vector<Edge> reserve;
  for (const ScenarioEdge& e : edges) {
    Edge edge{e.id, vertex_index(e.u), vertex_index(e.v), e.weight};
    (e.pool == Pool::Graph ? graph : reserve).push_back(std::move(edge));
  }
  Position p{Multigraph(vertices.size(), std::move(graph)), std::move(reserve)};
  p.validate();
  return p;
}

ScenarioFile parse_scenario(std::string_view text, std::string name) {
  ScenarioFile out;
  out.name = std::move(name);
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::vector<std::string> words = split_words(line);
    if (words.empty()) continue;
    const std::string& keyword = words[0];
    if (keyword == "vertex") {
      if (words.size() != 2) throw ParseError(line_no, "expected: vertex <name>");
      out.vertices.push_back(words[1]);
    } else if (keyword == "edge") {
      if (words.size() != 6) throw ParseError(line_no, "expected: edge <id> <u> <v> <weight> <G|R>");
      ScenarioEdge e;
      e.id = words[1];
      e.u = words[2];
      e.v = words[3];
      try {
        e.weight = parse_weight(words[4]);
      } catch (const std::invalid_argument& err) {
        throw ParseError(line_no, err.what());
      }
      if (e.weight < 0) throw ValidationError("line " + std::to_string(line_no) + ": negative weight on edge " + e.id);
      if (words[5] == "G") {
        e.pool = Pool::Graph;
      } else if (words[5] == "R") {
        e.pool = Pool::Reserve;
      } else {
        throw ParseError(line_no, "pool must be G or R, got '" + words[5] + "'");
      }
      out.edges.push_back(std::move(e));
    } else if (keyword == "buster") {
      if (words.size() != 2) throw ParseError(line_no, "expected: buster <id>[,<id>...] | buster quit");
      if (words[1] == "quit") {
        out.script.push_back(BusterAction::stop());
      } else {
        try {
          IdSet ids = parse_id_list(words[1]);
          if (ids.empty()) throw ParseError(line_no, "buster move must name at least one edge");
          out.script.push_back(BusterAction::remove(std::move(ids)));
        } catch (const std::invalid_argument& err) {
          throw ParseError(line_no, err.what());
        }
      }
    } else {
      throw ParseError(line_no, "unknown keyword '" + keyword + "'");
    }
  }

  std::unordered_set<std::string> names;
  for (const std::string& v : out.vertices) {
    if (!names.insert(v).second) throw ValidationError("duplicate vertex '" + v + "'");
  }
  if (out.vertices.empty()) throw ValidationError("scenario declares no vertices");
  std::unordered_set<EdgeId> ids;
  for (const ScenarioEdge& e : out.edges) {
    if (!ids.insert(e.id).second) throw ValidationError("duplicate edge id '" + e.id + "'");
  }
  for (const BusterAction& a : out.script) {
    for (const EdgeId& id : a.busted) {
      if (!ids.contains(id)) throw ValidationError("script names unknown edge '" + id + "'");
    }
  }
  const Position p = out.initial_position();
  if (!is_connected(p.graph)) throw ValidationError("the G-pool edges do not form a connected graph");
  return out;
}

ScenarioFile load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open scenario " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_scenario(text.str(), path.stem().string());
}

std::string render_scenario(const ScenarioFile& s) {
  std::ostringstream out;
  out << "# " << s.name << "\n";
  for (const std::string& v : s.vertices) out << "vertex " << v << "\n";
  for (const ScenarioEdge& e : s.edges) {
    out << "edge " << e.id << " " << e.u << " " << e.v << " " << format_weight(e.weight) << " "
        << (e.pool == Pool::Graph ? "G" : "R") << "\n";
  }
  for (const BusterAction& a : s.script) {
    if (a.quit) {
      out << "buster quit\n";
      continue;
    }
    out << "buster ";
    for (std::size_t i = 0; i < a.busted.size(); ++i) out << (i ? "," : "") << a.busted[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace bfgame
