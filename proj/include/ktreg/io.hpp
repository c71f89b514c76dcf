#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "ktreg/graph.hpp"

namespace ktreg {

// Graph file format:
//   # comment lines anywhere
//   n m
//   u v               (exactly m lines, 1-based, no loops, no duplicates)
//   name <label> <string>   (optional trailing display names)
struct NamedGraph {
  Graph graph;
  std::vector<std::string> names;  // index v, "" when unnamed; [0] unused
  std::map<std::string, Vertex> name_index;

  bool has_names() const { return !name_index.empty(); }
  std::string display(Vertex v) const;  // name when present, else the number
};

NamedGraph parse_graph_file(std::istream& in);
NamedGraph load_graph_file(const std::string& path);
std::string print_graph_file(const NamedGraph& g);

// Accepts a numeric label or a display name.
Vertex resolve_vertex(const NamedGraph& g, const std::string& token);

// Comma-separated labels or names -> sorted vertex set.
VertexSet parse_vertex_list(const NamedGraph& g, const std::string& list);

}  // namespace ktreg
