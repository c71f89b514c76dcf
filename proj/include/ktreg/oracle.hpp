#pragma once

#include <cstdint>
#include <vector>

#include "ktreg/graph.hpp"

namespace ktreg {

// Independent brute-force ground truth for small instances. Everything here
// works on subset bitmasks and neighbor counting only; none of it touches the
// linear-algebra solving path it is used to check.

// All (kappa,tau)-regular sets by exhaustive subset enumeration, in the same
// canonical order the solver uses. Requires n <= 24.
std::vector<VertexSet> brute_force_kt_sets(const Graph& g, int kappa, int tau);

// A maximum-cardinality vertex subset inducing a kappa-regular subgraph,
// ties broken by the lexicographically smallest vertex list. Empty when no
// nonempty subset qualifies. Requires n <= 24.
VertexSet brute_force_max_regular_induced(const Graph& g, int kappa);

// Every connected graph on 1..max_n vertices, one representative per
// isomorphism class (canonical form = minimum edge bitmask over all vertex
// permutations). Requires max_n <= 7.
std::vector<Graph> all_connected_graphs(int max_n);

// Reproducible connected random graphs: each vertex pair is an edge iff the
// next mt19937 draw is odd; disconnected samples are discarded and redrawn.
std::vector<Graph> seeded_random_connected_graphs(int count, int n, std::uint32_t seed);

// The seed the shipped test corpus is generated with.
inline constexpr std::uint32_t kRandomCorpusSeed = 8675309;

}  // namespace ktreg
