#pragma once

#include <utility>
#include <vector>

#include "ktreg/rational.hpp"

namespace ktreg {

using Vertex = int;                       // dense 1-based labels
using Edge = std::pair<Vertex, Vertex>;   // normalized u < v
using VertexSet = std::vector<Vertex>;    // sorted, distinct, 1-based

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Immutable simple undirected graph. All operations on it are pure, so
// instances can be shared freely across threads.
class Graph {
public:
  Graph() = default;  // empty placeholder; build real graphs from_edge_list

  // Deduplicates edges; rejects self-loops and out-of-range labels.
  static Graph from_edge_list(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }  // lexicographic
  const std::vector<Vertex>& neighbors(Vertex v) const;      // sorted
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  int max_degree() const;
  int min_degree() const;
  bool is_regular() const { return max_degree() == min_degree(); }
  bool is_connected() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;  // index 0 unused
};

// Bijection between the edges of a graph and the vertices of a derived graph
// (line graph or the inserted midpoints of a subdivision). Edge i in
// lexicographic order carries label label_base + i.
struct EdgeLabeling {
  std::vector<Edge> edges;  // lexicographic order of the source graph
  Vertex label_base = 0;    // 0 for line graphs, n for subdivisions

  Vertex label_of(const Edge& e) const;
  Edge edge_of(Vertex label) const;
};

struct VertexDeletion {
  Graph graph;                      // n-1 vertices, labels compacted
  Vertex deleted;
  std::vector<Vertex> new_to_old;   // new_to_old[i-1] = original label of i
  Vertex new_label_of(Vertex old_label) const;  // old_label != deleted
};

// Vertices of the result are the edges of g; adjacency = shared endpoint.
std::pair<Graph, EdgeLabeling> line_graph(const Graph& g);

// When set to a writable directory, line_graph memoizes its results there,
// keyed by the input graph. Empty string (the default) disables caching.
void set_line_graph_cache_dir(std::string dir);

// Inserts a degree-2 midpoint on every edge. Original vertices keep their
// labels; midpoints get n+1..n+m in lexicographic edge order.
std::pair<Graph, EdgeLabeling> subdivision(const Graph& g);

Graph complement(const Graph& g);

VertexDeletion delete_vertex(const Graph& g, Vertex v);

// Definitional check: every vertex in s has exactly kappa neighbors in s and
// every vertex outside has exactly tau. When s is the whole vertex set there
// are no outside vertices, so the answer is "g is kappa-regular" and tau is
// ignored (the whole vertex set of a kappa-regular graph counts as a
// (kappa,0)-regular set).
bool is_kt_regular(const Graph& g, const VertexSet& s, int kappa, int tau);

bool induces_connected(const Graph& g, const VertexSet& s);

// Sorts, then rejects duplicates and out-of-range labels.
VertexSet normalize_vertex_set(const Graph& g, VertexSet s);

VertexSet set_complement(const Graph& g, const VertexSet& s);

template <typename Scalar>
DenseMatrix<Scalar> adjacency_matrix(const Graph& g) {
  const int n = g.vertex_count();
  DenseMatrix<Scalar> a = DenseMatrix<Scalar>::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u - 1, v - 1) = Scalar(1);
    a(v - 1, u - 1) = Scalar(1);
  }
  return a;
}

template <typename Scalar>
DenseVector<Scalar> characteristic_vector(int n, const VertexSet& s) {
  DenseVector<Scalar> x = DenseVector<Scalar>::Zero(n);
  for (Vertex v : s) x(v - 1) = Scalar(1);
  return x;
}

}  // namespace ktreg
