#include "cactus/emit.hpp"

#include <map>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace cactus {

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [label=\"" << g.label(v).text() << "\"];\n";
  }
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Graph from_dot(std::string_view text) {
  static const std::regex header(R"(^\s*graph\s+\w*\s*\{\s*$)");
  static const std::regex node(R"re(^\s*(\d+)\s*\[\s*label\s*=\s*"([^"]*)"\s*\]\s*;?\s*$)re");
  static const std::regex edge(R"(^\s*(\d+)\s*--\s*(\d+)\s*;?\s*$)");
  static const std::regex footer(R"(^\s*\}\s*$)");
  static const std::regex blank(R"(^\s*$)");

  std::map<unsigned long, std::string> labels;
  std::vector<std::pair<unsigned long, unsigned long>> edges;
  bool opened = false;
  bool closed = false;
  std::istringstream in{std::string(text)};
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, blank)) continue;
    if (closed) throw std::invalid_argument("content after closing brace");
    if (!opened) {
      if (!std::regex_match(line, header)) throw std::invalid_argument("missing graph header");
      opened = true;
    } else if (std::regex_match(line, m, node)) {
      if (!labels.emplace(std::stoul(m[1]), m[2]).second) {
        throw std::invalid_argument("duplicate node " + m[1].str());
      }
    } else if (std::regex_match(line, m, edge)) {
      edges.emplace_back(std::stoul(m[1]), std::stoul(m[2]));
    } else if (std::regex_match(line, footer)) {
      closed = true;
    } else {
      throw std::invalid_argument("unrecognised DOT line: " + line);
    }
  }
  if (!closed) throw std::invalid_argument("missing closing brace");

  GraphBuilder b;
  unsigned long expected = 0;
  for (const auto& [id, label] : labels) {
    if (id != expected++) throw std::invalid_argument("vertex ids are not dense");
    auto parsed = VertexLabel::parse(label);
    if (!parsed) throw std::invalid_argument("bad vertex label '" + label + "'");
    b.add_vertex(*parsed);
  }
  for (auto [u, v] : edges) {
    if (u >= labels.size() || v >= labels.size()) {
      throw std::invalid_argument("edge references unknown vertex");
    }
    b.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return std::move(b).build();
}

std::string to_json(const Graph& g, const GraphKey& key) {
  nlohmann::ordered_json j;
  j["family"] = std::string(family_name(key.family));
  j["aux"] = key.kind == GraphKind::Family ? std::string("none") : std::string(kind_name(key.kind));
  j["n"] = key.n;
  j["vertex_count"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  auto labels = nlohmann::ordered_json::object();
  for (VertexId v = 0; v < g.vertex_count(); ++v) labels[std::to_string(v)] = g.label(v).text();
  j["labels"] = std::move(labels);
  return j.dump(2) + "\n";
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace cactus
