#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ktreg/exact.hpp"
#include "ktreg/graph.hpp"

namespace ktreg {

struct KtCertificate {
  VertexSet set;  // sorted
  int kappa = 0;
  int tau = 0;
  bool verified = false;  // re-checked definitionally, never inferred
};

struct SolveOptions {
  // 2^t candidate tuples are searched when kappa - tau is an eigenvalue of
  // multiplicity t; beyond the cap the solver refuses instead of hanging.
  int max_multiplicity = 30;
  int threads = 1;
};

// Filled as a side channel for reporting; every field reflects exact
// arithmetic except where noted.
struct SolveDiagnostics {
  long lambda = 0;  // kappa - tau
  int multiplicity = -1;
  bool lambda_is_eigenvalue = false;
  std::optional<bool> lambda_main;  // exact, set when lambda is an eigenvalue
  bool system_consistent = false;
  std::optional<Rational> predicted_cardinality;  // ones^T xbar
  std::optional<Rational> lower_bound, upper_bound;
  bool unique_solution_path = false;  // multiplicity 0
  std::string shortcut;               // fast negative that fired, "" if none
};

// ones^T xbar: the forced cardinality of any (kappa,tau)-regular set.
Rational predicted_cardinality(const ParticularSolution& xbar);

struct CardinalityBounds {
  Rational lower, upper;
};

// n*tau / (Delta - (kappa - tau)) <= |S| <= n*tau / (delta - (kappa - tau)).
// Requires delta(G) + tau > kappa; throws InapplicableError otherwise.
CardinalityBounds cardinality_bounds(const Graph& g, int kappa, int tau);

// First (kappa,tau)-regular set in the deterministic search order, or absent.
// The whole vertex set qualifies exactly when the graph is kappa-regular (the
// outside condition is then vacuous); tau = 0 is answered by that convention
// alone. Throws ResourceLimitError when the eigenvalue multiplicity exceeds
// options.max_multiplicity.
std::optional<KtCertificate> find_kt_set(const Graph& g, int kappa, int tau,
                                         const SolveOptions& options = {},
                                         SolveDiagnostics* diag = nullptr);

// All (kappa,tau)-regular sets, sorted by their vertex lists
// lexicographically. Every certificate is re-verified definitionally.
std::vector<KtCertificate> enumerate_kt_sets(const Graph& g, int kappa, int tau,
                                             const SolveOptions& options = {},
                                             SolveDiagnostics* diag = nullptr);

KtCertificate check_set(const Graph& g, const VertexSet& s, int kappa, int tau);

}  // namespace ktreg
