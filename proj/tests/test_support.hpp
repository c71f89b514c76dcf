#pragma once

#include <vector>

#include "ktreg/graph.hpp"
#include "ktreg/rational.hpp"

namespace ktreg::testing {

// Labeling fixed so that {1,2,3,4} is (0,2)-regular, {5..10} is
// (1,3)-regular, {1,2,5,7,8} induces the (2,1)-regular 5-cycle and
// N(1) = {5,7,9}; matches data/petersen.txt.
inline Graph petersen() {
  return Graph::from_edge_list(
      10, {{1, 5}, {1, 7}, {1, 9}, {2, 5}, {2, 8}, {2, 10}, {3, 6}, {3, 7},
           {3, 10}, {4, 6}, {4, 8}, {4, 9}, {5, 6}, {7, 8}, {9, 10}});
}

// 7-vertex Hamiltonian graph; the cycle 1-2-3-4-5-7-6-1 carries the edge
// labels a..g of data/fig2_hamiltonian.txt.
inline Graph fig2_hamiltonian() {
  return Graph::from_edge_list(7, {{1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4}, {3, 7},
                                   {4, 5}, {5, 6}, {5, 7}, {6, 7}});
}

// Octahedron: antipodal pairs {1,4}, {2,5}, {3,6}.
inline Graph octahedron() {
  return Graph::from_edge_list(6, {{1, 2}, {1, 3}, {1, 5}, {1, 6}, {2, 3}, {2, 4},
                                   {2, 6}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}});
}

// 2x3 grid, a..f = 1..6.
inline Graph fig4_grid() {
  return Graph::from_edge_list(6,
                               {{1, 2}, {1, 6}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {5, 6}});
}

inline Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({1, n});
  return Graph::from_edge_list(n, std::move(edges));
}

inline Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edge_list(n, std::move(edges));
}

inline Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) edges.push_back({u, v});
  return Graph::from_edge_list(n, std::move(edges));
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 1; u <= a; ++u)
    for (int v = a + 1; v <= a + b; ++v) edges.push_back({u, v});
  return Graph::from_edge_list(a + b, std::move(edges));
}

// The canonical kernel basis of the Petersen adjacency matrix at eigenvalue
// -2: identity on rows 1..4, the rows 5..10 with entries in {+-1/3, +-2/3}.
inline RationalMatrix petersen_kernel_minus2() {
  auto r = [](long num, long den) { return Rational(num, den); };
  RationalMatrix v = RationalMatrix::Zero(10, 4);
  v(0, 0) = 1;
  v(1, 1) = 1;
  v(2, 2) = 1;
  v(3, 3) = 1;
  const long rows[6][4] = {{-2, -2, 1, 1}, {1, 1, -2, -2}, {-2, 1, -2, 1},
                           {1, -2, 1, -2}, {-2, 1, 1, -2}, {1, -2, -2, 1}};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 4; ++j) v(4 + i, j) = r(rows[i][j], 3);
  return v;
}

}  // namespace ktreg::testing
