#include "ktreg/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <queue>
#include <sstream>

#include "ktreg/errors.hpp"

namespace ktreg {

namespace {

std::string g_line_cache_dir;

std::string graph_key(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) os << u << " " << v << "\n";
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (char c : os.str()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::ostringstream hex;
  hex << std::hex << h;
  return hex.str();
}

bool read_cached_graph(const std::string& path, Graph& out) {
  std::ifstream in(path);
  if (!in) return false;
  int n = 0, m = 0;
  if (!(in >> n >> m)) return false;
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    Vertex u, v;
    if (!(in >> u >> v)) return false;
    edges.push_back({u, v});
  }
  out = Graph::from_edge_list(n, std::move(edges));
  return true;
}

void write_cached_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) return;  // caching is best effort
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace

void set_line_graph_cache_dir(std::string dir) { g_line_cache_dir = std::move(dir); }

Graph Graph::from_edge_list(int n, std::vector<Edge> edges) {
  if (n < 1) throw InputError("vertex count must be positive");
  for (auto& e : edges) {
    if (e.first == e.second)
      throw InputError("self-loop at vertex " + std::to_string(e.first));
    if (e.first < 1 || e.first > n || e.second < 1 || e.second > n)
      throw InputError("edge endpoint out of range: (" + std::to_string(e.first) +
                       "," + std::to_string(e.second) + ")");
    e = make_edge(e.first, e.second);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.edges_ = std::move(edges);
  g.adj_.assign(n + 1, {});
  for (const auto& [u, v] : g.edges_) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (v < 1 || v > n_) throw InputError("vertex out of range: " + std::to_string(v));
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = neighbors(u);
  if (v < 1 || v > n_) throw InputError("vertex out of range: " + std::to_string(v));
  return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 1; v <= n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  int d = n_;
  for (Vertex v = 1; v <= n_; ++v) d = std::min(d, degree(v));
  return d;
}

bool Graph::is_connected() const {
  if (n_ <= 1) return true;
  std::vector<bool> seen(n_ + 1, false);
  std::queue<Vertex> q;
  q.push(1);
  seen[1] = true;
  int count = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
    }
  }
  return count == n_;
}

Vertex EdgeLabeling::label_of(const Edge& e) const {
  Edge key = make_edge(e.first, e.second);
  auto it = std::lower_bound(edges.begin(), edges.end(), key);
  if (it == edges.end() || *it != key)
    throw InputError("edge not present in labeling: (" + std::to_string(e.first) +
                     "," + std::to_string(e.second) + ")");
  return label_base + static_cast<Vertex>(it - edges.begin()) + 1;
}

Edge EdgeLabeling::edge_of(Vertex label) const {
  Vertex i = label - label_base;
  if (i < 1 || i > static_cast<Vertex>(edges.size()))
    throw InputError("label not present in labeling: " + std::to_string(label));
  return edges[i - 1];
}

Vertex VertexDeletion::new_label_of(Vertex old_label) const {
  if (old_label == deleted) throw InputError("vertex was deleted");
  return old_label < deleted ? old_label : old_label - 1;
}

std::pair<Graph, EdgeLabeling> line_graph(const Graph& g) {
  const int m = g.edge_count();
  if (m < 1) throw InputError("line graph needs at least one edge");
  EdgeLabeling lab{g.edges(), 0};  // labeling depends on g only, never cached

  std::string cache_path;
  if (!g_line_cache_dir.empty()) {
    cache_path = g_line_cache_dir + "/line-" + graph_key(g) + ".txt";
    Graph cached;
    if (read_cached_graph(cache_path, cached)) return {std::move(cached), std::move(lab)};
  }

  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Edge& a = lab.edges[i];
      const Edge& b = lab.edges[j];
      if (a.first == b.first || a.first == b.second || a.second == b.first ||
          a.second == b.second)
        edges.push_back({i + 1, j + 1});
    }
  }
  Graph lg = Graph::from_edge_list(m, std::move(edges));
  if (!cache_path.empty()) write_cached_graph(cache_path, lg);
  return {std::move(lg), std::move(lab)};
}

std::pair<Graph, EdgeLabeling> subdivision(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m < 1) throw InputError("subdivision needs at least one edge");
  EdgeLabeling lab{g.edges(), n};
  std::vector<Edge> edges;
  edges.reserve(2 * m);
  for (int i = 0; i < m; ++i) {
    Vertex mid = n + i + 1;
    edges.push_back(make_edge(lab.edges[i].first, mid));
    edges.push_back(make_edge(lab.edges[i].second, mid));
  }
  return {Graph::from_edge_list(n + m, std::move(edges)), std::move(lab)};
}

Graph complement(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<Edge> edges;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v});
  return Graph::from_edge_list(n, std::move(edges));
}

VertexDeletion delete_vertex(const Graph& g, Vertex v) {
  const int n = g.vertex_count();
  if (v < 1 || v > n) throw InputError("vertex out of range: " + std::to_string(v));
  if (n < 2) throw InputError("cannot delete the only vertex");
  VertexDeletion result;
  result.deleted = v;
  result.new_to_old.reserve(n - 1);
  for (Vertex u = 1; u <= n; ++u)
    if (u != v) result.new_to_old.push_back(u);
  auto relabel = [v](Vertex u) { return u < v ? u : u - 1; };
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges())
    if (a != v && b != v) edges.push_back({relabel(a), relabel(b)});
  result.graph = Graph::from_edge_list(n - 1, std::move(edges));
  return result;
}

VertexSet normalize_vertex_set(const Graph& g, VertexSet s) {
  std::sort(s.begin(), s.end());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > g.vertex_count())
      throw InputError("set member out of range: " + std::to_string(s[i]));
    if (i > 0 && s[i] == s[i - 1])
      throw InputError("duplicate set member: " + std::to_string(s[i]));
  }
  return s;
}

VertexSet set_complement(const Graph& g, const VertexSet& s) {
  VertexSet out;
  size_t i = 0;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    if (i < s.size() && s[i] == v)
      ++i;
    else
      out.push_back(v);
  }
  return out;
}

bool is_kt_regular(const Graph& g, const VertexSet& s, int kappa, int tau) {
  if (kappa < 0 || tau < 0) throw InputError("kappa and tau must be nonnegative");
  VertexSet sorted = normalize_vertex_set(g, s);
  std::vector<bool> in(g.vertex_count() + 1, false);
  for (Vertex v : sorted) in[v] = true;
  const bool whole = sorted.size() == static_cast<size_t>(g.vertex_count());
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    int count = 0;
    for (Vertex w : g.neighbors(v))
      if (in[w]) ++count;
    if (in[v]) {
      if (count != kappa) return false;
    } else if (!whole && count != tau) {
      return false;
    }
  }
  return true;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
  VertexSet sorted = normalize_vertex_set(g, s);
  if (sorted.empty()) throw InputError("induced connectivity of the empty set");
  std::vector<bool> in(g.vertex_count() + 1, false);
  for (Vertex v : sorted) in[v] = true;
  std::vector<bool> seen(g.vertex_count() + 1, false);
  std::queue<Vertex> q;
  q.push(sorted.front());
  seen[sorted.front()] = true;
  size_t count = 1;
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u)) {
      if (in[w] && !seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
    }
  }
  return count == sorted.size();
}

}  // namespace ktreg
