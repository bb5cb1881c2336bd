#include "ccg/graph_io.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ccg {

std::string write_edge_list(const MultiGraph& g) {
  std::map<int, int> remap;
  int next = 0;
  for (int v : g.vertices()) remap[v] = next++;
  std::ostringstream out;
  out << g.num_vertices() << " " << g.num_edges() << "\n";
  for (const auto& e : g.edges()) {
    int a = remap[e.first], b = remap[e.second];
    if (a > b) std::swap(a, b);
    out << a << " " << b << "\n";
  }
  return out.str();
}

MultiGraph read_edge_list(std::istream& in) {
  std::size_t nv = 0, ne = 0;
  if (!(in >> nv >> ne)) throw std::runtime_error("bad edge-list header");
  MultiGraph g;
  for (std::size_t i = 0; i < nv; ++i) g.add_vertex((int)i);
  for (std::size_t i = 0; i < ne; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::runtime_error("truncated edge list");
    g.add_edge(u, v);
  }
  return g;
}

MultiGraph read_edge_list_string(const std::string& s) {
  std::istringstream in(s);
  return read_edge_list(in);
}

std::string write_dot(const MultiGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v : g.vertices()) {
    out << "  " << v;
    if (auto t = g.label(v)) out << " [label=\"" << v << ":" << *t << "\"]";
    out << ";\n";
  }
  for (const auto& e : g.edges())
    out << "  " << e.first << " -- " << e.second << ";\n";
  out << "}\n";
  return out.str();
}

std::string write_json_graph(const MultiGraph& g) {
  nlohmann::json j;
  j["vertices"] = g.vertices();
  auto edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.first, e.second});
  j["edges"] = edges;
  if (!g.labels().empty()) {
    nlohmann::json labels;
    for (const auto& [v, t] : g.labels()) labels[std::to_string(v)] = t;
    j["labels"] = labels;
  }
  return j.dump();
}

MultiGraph read_json_graph(const std::string& s) {
  auto j = nlohmann::json::parse(s);
  MultiGraph g;
  for (int v : j.at("vertices")) g.add_vertex(v);
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0), e.at(1));
  if (j.contains("labels"))
    for (auto it = j["labels"].begin(); it != j["labels"].end(); ++it)
      g.set_label(std::stoi(it.key()), it.value());
  return g;
}

}  // namespace ccg
