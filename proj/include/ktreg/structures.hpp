#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktreg/graph.hpp"
#include "ktreg/rational.hpp"
#include "ktreg/solver.hpp"

namespace ktreg {

struct SrgParams {
  int n = 0, p = 0, a = 0, c = 0;
  bool primitive = false;  // c not in {0, p}
};

// Blocks of a 1-(n2, block_size, replication) design over V(G2): every block
// has block_size vertices and every vertex of G2 lies in exactly replication
// blocks.
struct DesignBlocks {
  std::vector<VertexSet> blocks;
  int block_size = 0;   // tau
  int replication = 0;  // s
};

struct MaxRegularCertificate {
  VertexSet set;
  bool maximum = false;
};

struct JoinMainEigenvalues {
  Rational center;         // (kappa1 + kappa2) / 2
  long discriminant = 0;   // (kappa2 - kappa1)^2 + 4 s tau
  bool exact = false;      // discriminant is a perfect square
  std::optional<Rational> plus_exact, minus_exact;
  double plus_approx = 0.0, minus_approx = 0.0;
};

// Walks a 2-regular connected edge set into its vertex sequence, starting at
// the smallest vertex and moving toward its smaller neighbor first.
std::vector<Vertex> assemble_cycle(const std::vector<Edge>& edges);

// Perfect matching via a (0,2)-regular set of the line graph. K2 is outside
// the theorem's scope and is answered directly; when note is non-null it
// records which route produced the answer.
std::optional<std::vector<Edge>> perfect_matching(const Graph& g,
                                                  const SolveOptions& options = {},
                                                  std::string* note = nullptr);

// Hamilton cycle via a connected (2,4)-regular set of the line graph; returns
// the cycle corresponding to the first such set in canonical order. A graph
// that is itself a cycle is answered directly (its certificate is the whole
// line-graph vertex set under the tau = 0 convention).
std::optional<std::vector<Vertex>> hamiltonian_cycle(const Graph& g,
                                                     const SolveOptions& options = {});

// Same property through the subdivision: a connected (2,2)-regular set.
// Agrees with hamiltonian_cycle on every input.
std::optional<std::vector<Vertex>> hamiltonian_via_subdivision(
    const Graph& g, const SolveOptions& options = {});

// Efficient dominating sets are exactly the (0,1)-regular sets.
std::vector<VertexSet> efficient_dominating_sets(const Graph& g,
                                                 const SolveOptions& options = {});

// Dominating induced matchings of g = efficient dominating sets of L(g).
std::vector<std::vector<Edge>> dominating_induced_matchings(
    const Graph& g, const SolveOptions& options = {});

// With tau = -lambda_n(G) confirmed as a positive integer by exact arithmetic,
// any (kappa, kappa+tau)-regular set is a maximum-cardinality vertex subset
// inducing a kappa-regular subgraph. Throws InapplicableError when -lambda_n
// is not a verified positive integer.
std::optional<MaxRegularCertificate> max_regular_induced_certificate(
    const Graph& g, int kappa, const SolveOptions& options = {});

// Strong regularity via the vertex-deletion criterion: for every v, N(v)
// must be (a,c)-regular in G - v. Parameters are inferred from one witness
// pair and then verified globally.
std::optional<SrgParams> srg_check(const Graph& g);

// |S| = (p(tau-1)+c)/c for a (0,tau)-regular set in a primitive strongly
// regular graph.
Rational srg_stable_set_size(int p, int tau, int c);

// H on n1+n2 vertices: G1 keeps labels 1..n1, G2 shifts to n1+1..n1+n2, and
// vertex i of G1 joins block i of the design. V(G1) is (kappa1,s)-regular and
// V(G2) is (kappa2,tau)-regular in H; both are verified after construction.
Graph design_join(const Graph& g1, const Graph& g2, const DesignBlocks& blocks);

// The two possible main eigenvalues of the design join:
// (kappa1 + kappa2 +- sqrt((kappa2-kappa1)^2 + 4 s tau)) / 2.
JoinMainEigenvalues main_eigenvalues_of_join(int kappa1, int kappa2, int s, int tau);

// Cycle of the given length with s pendant vertices on every cycle vertex;
// built as the design join of (s*n) K1 with C_n over singleton blocks.
// Pendants are labeled 1..s*n, cycle vertices s*n+1..s*n+n.
Graph pendant_unicyclic(int cycle_length, int pendants_per_vertex);

}  // namespace ktreg
