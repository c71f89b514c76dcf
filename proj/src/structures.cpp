#include "ktreg/structures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "ktreg/errors.hpp"
#include "ktreg/spectral.hpp"

namespace ktreg {

namespace {

int common_neighbors(const Graph& g, Vertex u, Vertex v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  int count = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

bool is_cycle_graph(const Graph& g) {
  return g.vertex_count() >= 3 && g.is_regular() && g.max_degree() == 2 &&
         g.is_connected();
}

std::vector<Vertex> cycle_sequence_of_cycle_graph(const Graph& g) {
  return assemble_cycle(g.edges());
}

std::vector<Edge> edges_of_labels(const EdgeLabeling& lab, const VertexSet& labels) {
  std::vector<Edge> out;
  out.reserve(labels.size());
  for (Vertex l : labels) out.push_back(lab.edge_of(l));
  return out;
}

}  // namespace

std::vector<Vertex> assemble_cycle(const std::vector<Edge>& edges) {
  if (edges.size() < 3) throw InputError("a cycle needs at least three edges");
  std::map<Vertex, std::vector<Vertex>> adj;
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& [v, nb] : adj) {
    if (nb.size() != 2)
      throw InputError("edge set is not 2-regular at vertex " + std::to_string(v));
    std::sort(nb.begin(), nb.end());
  }
  const Vertex start = adj.begin()->first;
  std::vector<Vertex> seq{start};
  Vertex prev = start;
  Vertex cur = adj[start][0];  // smaller neighbor first
  while (cur != start) {
    seq.push_back(cur);
    const auto& nb = adj[cur];
    Vertex next = (nb[0] == prev) ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (seq.size() != edges.size())
    throw InputError("edge set is not a single cycle");
  return seq;
}

std::optional<std::vector<Edge>> perfect_matching(const Graph& g,
                                                  const SolveOptions& options,
                                                  std::string* note) {
  if (note) note->clear();
  const int n = g.vertex_count();
  if (n % 2 != 0) return std::nullopt;
  if (g.min_degree() == 0) return std::nullopt;  // an uncovered vertex is forced
  if (n == 2 && g.edge_count() == 1) {
    // The line-graph criterion excludes K2; a single edge is its own matching.
    if (note) *note = "k2_answered_directly";
    return std::vector<Edge>{g.edges().front()};
  }

  auto [lg, lab] = line_graph(g);
  auto cert = find_kt_set(lg, 0, 2, options);
  if (!cert.has_value()) return std::nullopt;
  if (note) *note = "line_graph_certificate";

  std::vector<Edge> matching = edges_of_labels(lab, cert->set);
  std::vector<bool> covered(n + 1, false);
  for (const auto& [u, v] : matching) {
    if (covered[u] || covered[v])
      throw std::logic_error("matching edges are not disjoint");
    covered[u] = covered[v] = true;
  }
  for (Vertex v = 1; v <= n; ++v)
    if (!covered[v]) throw std::logic_error("matching does not cover every vertex");
  return matching;
}

std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g,
                                                     const SolveOptions& options) {
  const int n = g.vertex_count();
  if (n < 3) throw InputError("Hamiltonicity needs at least three vertices");
  if (!g.is_connected() || g.min_degree() < 2) return std::nullopt;
  if (is_cycle_graph(g)) return cycle_sequence_of_cycle_graph(g);

  auto [lg, lab] = line_graph(g);
  for (const KtCertificate& cert : enumerate_kt_sets(lg, 2, 4, options)) {
    if (!induces_connected(lg, cert.set)) continue;
    std::vector<Vertex> cycle = assemble_cycle(edges_of_labels(lab, cert.set));
    if (cycle.size() != static_cast<size_t>(n))
      throw std::logic_error("connected (2,4)-certificate is not a Hamilton cycle");
    return cycle;
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> hamiltonian_via_subdivision(
    const Graph& g, const SolveOptions& options) {
  const int n = g.vertex_count();
  if (n < 3) throw InputError("Hamiltonicity needs at least three vertices");
  if (!g.is_connected() || g.min_degree() < 2) return std::nullopt;
  if (is_cycle_graph(g)) return cycle_sequence_of_cycle_graph(g);

  auto [sd, lab] = subdivision(g);
  for (const KtCertificate& cert : enumerate_kt_sets(sd, 2, 2, options)) {
    if (!induces_connected(sd, cert.set)) continue;
    // cycle edges = edges of g whose midpoints were selected
    std::vector<Edge> cycle_edges;
    for (Vertex v : cert.set)
      if (v > n) cycle_edges.push_back(lab.edge_of(v));
    std::vector<Vertex> cycle = assemble_cycle(cycle_edges);
    if (cycle.size() != static_cast<size_t>(n))
      throw std::logic_error("connected (2,2)-certificate is not a Hamilton cycle");
    return cycle;
  }
  return std::nullopt;
}

std::vector<VertexSet> efficient_dominating_sets(const Graph& g,
                                                 const SolveOptions& options) {
  std::vector<VertexSet> out;
  for (KtCertificate& cert : enumerate_kt_sets(g, 0, 1, options))
    out.push_back(std::move(cert.set));
  return out;
}

std::vector<std::vector<Edge>> dominating_induced_matchings(
    const Graph& g, const SolveOptions& options) {
  if (g.edge_count() < 1) throw InputError("dominating induced matchings need an edge");
  auto [lg, lab] = line_graph(g);
  std::vector<std::vector<Edge>> out;
  for (const VertexSet& s : efficient_dominating_sets(lg, options))
    out.push_back(edges_of_labels(lab, s));
  return out;
}

std::optional<MaxRegularCertificate> max_regular_induced_certificate(
    const Graph& g, int kappa, const SolveOptions& options) {
  if (kappa < 0) throw InputError("kappa must be nonnegative");
  SpectralReport report = spectrum(g);
  const double smallest = report.eigenvalues.front().value;
  const double rounded = std::round(smallest);
  if (std::abs(smallest - rounded) >= kIntegerCandidateTol || rounded >= -0.5)
    throw InapplicableError(
        "-lambda_n is not a positive integer; the certificate route gives no "
        "conclusion");
  const long lambda_n = static_cast<long>(rounded);
  RationalMatrix a = adjacency_matrix<Rational>(g);
  if (integer_eigen_multiplicity(a, lambda_n) == 0)
    throw InapplicableError(
        "numeric smallest eigenvalue is near an integer that exact arithmetic "
        "refutes");
  const int tau = static_cast<int>(-lambda_n);

  auto cert = find_kt_set(g, kappa, kappa + tau, options);
  if (!cert.has_value()) return std::nullopt;
  return MaxRegularCertificate{std::move(cert->set), true};
}

std::optional<SrgParams> srg_check(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 3 || !g.is_regular()) return std::nullopt;
  const int p = g.max_degree();

  // Witness pair for each parameter; complete and edgeless graphs lack one.
  std::optional<int> a, c;
  for (Vertex u = 1; u <= n && (!a || !c); ++u) {
    for (Vertex v = u + 1; v <= n && (!a || !c); ++v) {
      if (g.adjacent(u, v)) {
        if (!a) a = common_neighbors(g, u, v);
      } else if (!c) {
        c = common_neighbors(g, u, v);
      }
    }
  }
  if (!a || !c) return std::nullopt;

  for (Vertex v = 1; v <= n; ++v) {
    VertexDeletion del = delete_vertex(g, v);
    VertexSet s;
    for (Vertex w : g.neighbors(v)) s.push_back(del.new_label_of(w));
    if (!is_kt_regular(del.graph, s, *a, *c)) return std::nullopt;
  }
  return SrgParams{n, p, *a, *c, *c != 0 && *c != p};
}

Rational srg_stable_set_size(int p, int tau, int c) {
  if (c < 1) throw InputError("the stable-set size formula needs c >= 1");
  return Rational(static_cast<long>(p) * (tau - 1) + c) / Rational(c);
}

Graph design_join(const Graph& g1, const Graph& g2, const DesignBlocks& blocks) {
  if (!g1.is_regular()) throw InputError("G1 must be regular");
  if (!g2.is_regular()) throw InputError("G2 must be regular");
  const int n1 = g1.vertex_count();
  const int n2 = g2.vertex_count();
  if (static_cast<int>(blocks.blocks.size()) != n1)
    throw InputError("need exactly one block per vertex of G1, got " +
                     std::to_string(blocks.blocks.size()));
  if (blocks.block_size < 1) throw InputError("block size tau must be positive");
  if (blocks.replication < 1) throw InputError("replication s must be positive");

  std::vector<int> coverage(n2 + 1, 0);
  for (int i = 0; i < n1; ++i) {
    VertexSet b = blocks.blocks[i];
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(b.begin(), b.end()) != b.end())
      throw InputError("block " + std::to_string(i + 1) + " repeats a vertex");
    if (static_cast<int>(b.size()) != blocks.block_size)
      throw InputError("block " + std::to_string(i + 1) + " has size " +
                       std::to_string(b.size()) + ", expected " +
                       std::to_string(blocks.block_size));
    for (Vertex y : b) {
      if (y < 1 || y > n2)
        throw InputError("block " + std::to_string(i + 1) + " names vertex " +
                         std::to_string(y) + " outside G2");
      ++coverage[y];
    }
  }
  for (Vertex y = 1; y <= n2; ++y)
    if (coverage[y] != blocks.replication)
      throw InputError("vertex " + std::to_string(y) + " of G2 lies in " +
                       std::to_string(coverage[y]) + " blocks, expected " +
                       std::to_string(blocks.replication));

  std::vector<Edge> edges = g1.edges();
  for (const auto& [u, v] : g2.edges()) edges.push_back({u + n1, v + n1});
  for (int i = 0; i < n1; ++i)
    for (Vertex y : blocks.blocks[i]) edges.push_back(make_edge(i + 1, y + n1));
  Graph h = Graph::from_edge_list(n1 + n2, std::move(edges));

  VertexSet left(n1), right(n2);
  for (int i = 0; i < n1; ++i) left[i] = i + 1;
  for (int i = 0; i < n2; ++i) right[i] = n1 + i + 1;
  const int kappa1 = g1.max_degree();
  const int kappa2 = g2.max_degree();
  if (!is_kt_regular(h, left, kappa1, blocks.replication))
    throw std::logic_error("V(G1) is not (kappa1,s)-regular in the join");
  if (!is_kt_regular(h, right, kappa2, blocks.block_size))
    throw std::logic_error("V(G2) is not (kappa2,tau)-regular in the join");
  return h;
}

JoinMainEigenvalues main_eigenvalues_of_join(int kappa1, int kappa2, int s, int tau) {
  if (s < 1 || tau < 1) throw InputError("s and tau must be positive");
  JoinMainEigenvalues out;
  out.center = Rational(static_cast<long>(kappa1) + kappa2, 2);
  const long diff = static_cast<long>(kappa2) - kappa1;
  out.discriminant = diff * diff + 4L * s * tau;
  const double root = std::sqrt(static_cast<double>(out.discriminant));
  out.plus_approx = out.center.to_double() + root / 2.0;
  out.minus_approx = out.center.to_double() - root / 2.0;
  const long iroot = std::lround(root);
  if (iroot * iroot == out.discriminant) {
    out.exact = true;
    out.plus_exact = out.center + Rational(iroot, 2);
    out.minus_exact = out.center - Rational(iroot, 2);
  }
  return out;
}

Graph pendant_unicyclic(int cycle_length, int pendants_per_vertex) {
  if (cycle_length < 3) throw InputError("cycle length must be at least 3");
  if (pendants_per_vertex < 1) throw InputError("need at least one pendant per vertex");
  const int n = cycle_length;
  const int s = pendants_per_vertex;

  Graph pendants = Graph::from_edge_list(s * n, {});
  std::vector<Edge> cycle_edges;
  for (int i = 1; i < n; ++i) cycle_edges.push_back({i, i + 1});
  cycle_edges.push_back({1, n});
  Graph cycle = Graph::from_edge_list(n, std::move(cycle_edges));

  DesignBlocks blocks;
  blocks.block_size = 1;
  blocks.replication = s;
  blocks.blocks.reserve(s * n);
  for (int i = 1; i <= s * n; ++i)
    blocks.blocks.push_back({(i - 1) % n + 1});
  return design_join(pendants, cycle, blocks);
}

}  // namespace ktreg
