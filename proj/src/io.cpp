#include "symdig/io.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

namespace symdig {

void write_edgelist(std::ostream& os, const Digraph& g) {
  os << "# vertices " << g.vertex_count() << " directed "
     << (g.is_symmetric() ? "false" : "true") << "\n";
  if (g.labeled())
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      os << "# label " << v << " " << g.label_string(v) << "\n";
  for (const auto& [u, v] : g.arcs()) os << u << " " << v << "\n";
}

Digraph read_edgelist(std::istream& is) {
  std::string line;
  Vertex vertex_count = 0;
  bool header_seen = false;
  std::vector<std::pair<Vertex, std::string>> raw_labels;
  std::vector<VertexPair> arcs;

  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == '#') {
      std::string hash, keyword;
      ls >> hash >> keyword;
      if (keyword == "vertices") {
        std::string directed_kw, directed_val;
        if (!(ls >> vertex_count >> directed_kw >> directed_val))
          throw Error("edge list: malformed header line");
        header_seen = true;
      } else if (keyword == "label") {
        Vertex v;
        if (!(ls >> v)) throw Error("edge list: malformed label line");
        std::string text;
        std::getline(ls, text);
        const auto start = text.find_first_not_of(' ');
        raw_labels.emplace_back(v, start == std::string::npos ? "" : text.substr(start));
      }
      continue;
    }
    Vertex u, v;
    if (!(ls >> u >> v)) throw Error("edge list: malformed arc line: " + line);
    arcs.emplace_back(u, v);
  }
  if (!header_seen) throw Error("edge list: missing '# vertices' header");

  std::vector<std::vector<Vertex>> labels;
  std::vector<std::string> alphabet;
  if (!raw_labels.empty()) {
    if (raw_labels.size() != vertex_count)
      throw Error("edge list: label lines do not cover the vertex set");
    labels.resize(vertex_count);
    std::map<std::string, Vertex> symbol_index;
    for (const auto& [v, text] : raw_labels) {
      if (v >= vertex_count) throw Error("edge list: label vertex out of range");
      std::vector<Vertex> tuple;
      std::string symbol;
      std::istringstream parts(text);
      while (std::getline(parts, symbol, '|')) {
        auto [it, inserted] = symbol_index.try_emplace(
            symbol, static_cast<Vertex>(alphabet.size()));
        if (inserted) alphabet.push_back(symbol);
        tuple.push_back(it->second);
      }
      labels[v] = std::move(tuple);
    }
  }
  return Digraph(vertex_count, std::move(arcs), std::move(labels), std::move(alphabet));
}

void write_dot(std::ostream& os, const Digraph& g) {
  const bool symmetric = g.is_symmetric();
  os << (symmetric ? "graph" : "digraph") << " g {\n";
  if (g.labeled())
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      os << "  " << v << " [label=\"" << g.label_string(v) << "\"];\n";
  for (const auto& [u, v] : g.arcs()) {
    if (symmetric && u > v) continue;
    os << "  " << u << (symmetric ? " -- " : " -> ") << v << ";\n";
  }
  os << "}\n";
}

nlohmann::ordered_json graph_json(const Digraph& g) {
  nlohmann::ordered_json j;
  j["vertices"] = g.vertex_count();
  j["directed"] = !g.is_symmetric();
  if (g.labeled()) {
    auto labels = nlohmann::ordered_json::array();
    for (Vertex v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label_string(v));
    j["labels"] = std::move(labels);
  } else {
    j["labels"] = nullptr;
  }
  auto arcs = nlohmann::ordered_json::array();
  for (const auto& [u, v] : g.arcs()) arcs.push_back(nlohmann::ordered_json::array({u, v}));
  j["arcs"] = std::move(arcs);
  return j;
}

void write_blocks(std::ostream& os, const std::vector<std::vector<Vertex>>& blocks) {
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    os << b << ":";
    for (std::size_t i = 0; i < blocks[b].size(); ++i)
      os << (i ? ", " : " ") << blocks[b][i];
    os << "\n";
  }
}

}  // namespace symdig
