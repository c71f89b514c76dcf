#include "ktreg/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ktreg/errors.hpp"

namespace ktreg {

namespace {

bool data_line(const std::string& line, std::string& out) {
  std::string s = line;
  if (!s.empty() && s.back() == '\r') s.pop_back();
  size_t i = s.find_first_not_of(" \t");
  if (i == std::string::npos) return false;
  if (s[i] == '#') return false;
  out = s.substr(i);
  return true;
}

int parse_int(const std::string& token, const std::string& what) {
  size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (const std::exception&) {
    throw InputError("expected an integer for " + what + ", got '" + token + "'");
  }
  if (pos != token.size())
    throw InputError("expected an integer for " + what + ", got '" + token + "'");
  return value;
}

}  // namespace

std::string NamedGraph::display(Vertex v) const {
  if (v >= 1 && v < static_cast<Vertex>(names.size()) && !names[v].empty())
    return names[v];
  return std::to_string(v);
}

NamedGraph parse_graph_file(std::istream& in) {
  std::vector<std::string> lines;
  std::string raw;
  while (std::getline(in, raw)) {
    std::string content;
    if (data_line(raw, content)) lines.push_back(content);
  }
  if (lines.empty()) throw InputError("graph file has no data lines");

  std::istringstream head(lines[0]);
  std::string ns, ms, extra;
  if (!(head >> ns >> ms) || (head >> extra))
    throw InputError("first data line must be 'n m'");
  const int n = parse_int(ns, "vertex count");
  const int m = parse_int(ms, "edge count");
  if (n < 1) throw InputError("vertex count must be positive");
  if (m < 0) throw InputError("edge count must be nonnegative");
  if (static_cast<int>(lines.size()) < 1 + m)
    throw InputError("expected " + std::to_string(m) + " edge lines, found " +
                     std::to_string(lines.size() - 1));

  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::istringstream ls(lines[1 + i]);
    std::string us, vs;
    if (!(ls >> us >> vs) || (ls >> extra))
      throw InputError("edge line must be 'u v': '" + lines[1 + i] + "'");
    Edge e = make_edge(parse_int(us, "edge endpoint"), parse_int(vs, "edge endpoint"));
    if (e.first == e.second)
      throw InputError("self-loop at vertex " + std::to_string(e.first));
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw InputError("duplicate edge (" + std::to_string(e.first) + "," +
                       std::to_string(e.second) + ")");
    edges.push_back(e);
  }

  NamedGraph out;
  out.graph = Graph::from_edge_list(n, std::move(edges));
  out.names.assign(n + 1, "");
  for (size_t i = 1 + m; i < lines.size(); ++i) {
    std::istringstream ls(lines[i]);
    std::string kw, label, name;
    if (!(ls >> kw >> label >> name) || kw != "name" || (ls >> extra))
      throw InputError("trailing line must be 'name <label> <string>': '" + lines[i] +
                       "'");
    const int v = parse_int(label, "name label");
    if (v < 1 || v > n)
      throw InputError("name label out of range: " + std::to_string(v));
    if (!out.names[v].empty())
      throw InputError("vertex " + std::to_string(v) + " named twice");
    if (out.name_index.count(name))
      throw InputError("display name used twice: " + name);
    out.names[v] = name;
    out.name_index[name] = v;
  }
  return out;
}

NamedGraph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open graph file: " + path);
  try {
    return parse_graph_file(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string print_graph_file(const NamedGraph& g) {
  std::ostringstream out;
  out << g.graph.vertex_count() << " " << g.graph.edge_count() << "\n";
  for (const auto& [u, v] : g.graph.edges()) out << u << " " << v << "\n";
  for (Vertex v = 1; v < static_cast<Vertex>(g.names.size()); ++v)
    if (!g.names[v].empty()) out << "name " << v << " " << g.names[v] << "\n";
  return out.str();
}

Vertex resolve_vertex(const NamedGraph& g, const std::string& token) {
  auto it = g.name_index.find(token);
  if (it != g.name_index.end()) return it->second;
  const int v = parse_int(token, "vertex");
  if (v < 1 || v > g.graph.vertex_count())
    throw InputError("vertex out of range: " + token);
  return v;
}

VertexSet parse_vertex_list(const NamedGraph& g, const std::string& list) {
  VertexSet s;
  std::string token;
  std::istringstream in(list);
  while (std::getline(in, token, ',')) {
    size_t a = token.find_first_not_of(" \t");
    if (a == std::string::npos) throw InputError("empty entry in vertex list");
    size_t b = token.find_last_not_of(" \t");
    s.push_back(resolve_vertex(g, token.substr(a, b - a + 1)));
  }
  if (s.empty()) throw InputError("empty vertex list");
  return normalize_vertex_set(g.graph, s);
}

}  // namespace ktreg
