#include "ktreg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>

#include "ktreg/errors.hpp"

namespace ktreg {

namespace {

std::vector<std::uint32_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint32_t> nb(g.vertex_count() + 1, 0);
  for (const auto& [u, v] : g.edges()) {
    nb[u] |= 1u << (v - 1);
    nb[v] |= 1u << (u - 1);
  }
  return nb;
}

VertexSet mask_to_set(std::uint32_t mask, int n) {
  VertexSet s;
  for (int v = 1; v <= n; ++v)
    if (mask & (1u << (v - 1))) s.push_back(v);
  return s;
}

bool mask_connected(std::uint32_t mask, const std::vector<std::uint32_t>& nb, int n) {
  if (mask == 0) return false;
  std::uint32_t start = mask & ~(mask - 1);
  std::uint32_t seen = start;
  std::uint32_t frontier = start;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 1; v <= n; ++v)
      if (frontier & (1u << (v - 1))) next |= nb[v] & mask;
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

}  // namespace

std::vector<VertexSet> brute_force_kt_sets(const Graph& g, int kappa, int tau) {
  const int n = g.vertex_count();
  if (n > 24) throw ResourceLimitError("brute force limited to 24 vertices", n);
  if (kappa < 0 || tau < 0) throw InputError("kappa and tau must be nonnegative");

  const auto nb = neighbor_masks(g);
  const std::uint32_t full = (1u << n) - 1;
  std::vector<VertexSet> out;

  if (tau == 0) {
    // Whole-vertex-set convention only.
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v)
      ok = std::popcount(nb[v]) == kappa;
    if (ok) out.push_back(mask_to_set(full, n));
    return out;
  }

  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    bool ok = true;
    const bool whole = mask == full;
    for (int v = 1; v <= n && ok; ++v) {
      int count = std::popcount(nb[v] & mask);
      if (mask & (1u << (v - 1)))
        ok = count == kappa;
      else if (!whole)
        ok = count == tau;
    }
    if (ok) out.push_back(mask_to_set(mask, n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet brute_force_max_regular_induced(const Graph& g, int kappa) {
  const int n = g.vertex_count();
  if (n > 24) throw ResourceLimitError("brute force limited to 24 vertices", n);
  if (kappa < 0) throw InputError("kappa must be nonnegative");

  const auto nb = neighbor_masks(g);
  const std::uint32_t full = (1u << n) - 1;
  int best_size = 0;
  VertexSet best_set;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    int size = std::popcount(mask);
    if (size < best_size) continue;
    bool ok = true;
    for (int v = 1; v <= n && ok; ++v)
      if (mask & (1u << (v - 1))) ok = std::popcount(nb[v] & mask) == kappa;
    if (!ok) continue;
    VertexSet s = mask_to_set(mask, n);
    if (size > best_size || (size == best_size && s < best_set)) {
      best_size = size;
      best_set = std::move(s);
    }
  }
  return best_set;
}

std::vector<Graph> all_connected_graphs(int max_n) {
  if (max_n < 1 || max_n > 7)
    throw InputError("connected-graph census supported for 1..7 vertices");
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    const int pairs = n * (n - 1) / 2;
    std::vector<Edge> pair_list;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v) pair_list.push_back({u, v});

    // pair index remap table per permutation, for the canonical form
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> remaps;
    std::vector<std::vector<int>> pair_index(n + 1, std::vector<int>(n + 1, -1));
    for (int i = 0; i < pairs; ++i)
      pair_index[pair_list[i].first][pair_list[i].second] = i;
    do {
      std::vector<int> remap(pairs);
      for (int i = 0; i < pairs; ++i) {
        Vertex a = perm[pair_list[i].first - 1] + 1;
        Vertex b = perm[pair_list[i].second - 1] + 1;
        remap[i] = pair_index[std::min(a, b)][std::max(a, b)];
      }
      remaps.push_back(std::move(remap));
    } while (std::next_permutation(perm.begin(), perm.end()));

    const std::uint32_t top = pairs ? (1u << pairs) : 1u;
    for (std::uint32_t mask = 0; mask < top; ++mask) {
      // connectivity over the n vertices
      std::vector<std::uint32_t> nb(n + 1, 0);
      for (int i = 0; i < pairs; ++i) {
        if (mask & (1u << i)) {
          nb[pair_list[i].first] |= 1u << (pair_list[i].second - 1);
          nb[pair_list[i].second] |= 1u << (pair_list[i].first - 1);
        }
      }
      const std::uint32_t all = (1u << n) - 1;
      if (!mask_connected(all, nb, n)) continue;

      std::uint32_t canon = mask;
      for (const auto& remap : remaps) {
        std::uint32_t mapped = 0;
        for (int i = 0; i < pairs; ++i)
          if (mask & (1u << i)) mapped |= 1u << remap[i];
        canon = std::min(canon, mapped);
      }
      if (canon != mask) continue;  // keep the canonical representative only

      std::vector<Edge> edges;
      for (int i = 0; i < pairs; ++i)
        if (mask & (1u << i)) edges.push_back(pair_list[i]);
      out.push_back(Graph::from_edge_list(n, std::move(edges)));
    }
  }
  return out;
}

std::vector<Graph> seeded_random_connected_graphs(int count, int n,
                                                  std::uint32_t seed) {
  if (n < 1 || n > 24) throw InputError("random corpus supported for 1..24 vertices");
  std::mt19937 rng(seed);
  std::vector<Graph> out;
  while (static_cast<int>(out.size()) < count) {
    std::vector<Edge> edges;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v)
        if (rng() & 1u) edges.push_back({u, v});
    Graph g = Graph::from_edge_list(n, std::move(edges));
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace ktreg
