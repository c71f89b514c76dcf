#pragma once

#include <optional>
#include <vector>

#include "ktreg/exact.hpp"
#include "ktreg/graph.hpp"

namespace ktreg {

// Numeric tolerances used by the spectrum pipeline. Integer-ness and
// main-ness of integer eigenvalues are never decided numerically; the numeric
// values only nominate candidates that exact rank computations then confirm
// or refute.
inline constexpr double kEigenvalueClusterTol = 1e-6;
inline constexpr double kIntegerCandidateTol = 0.5e-6;
inline constexpr double kMainProjectionTol = 1e-8;
inline constexpr double kResidualTol = 1e-10;

struct EigenvalueEntry {
  double value = 0.0;       // cluster representative
  int multiplicity = 0;
  std::optional<long> exact_integer;  // set iff confirmed by exact nullity
  bool main = false;
  bool main_exact = false;  // true: decided by exact arithmetic
};

struct SpectralReport {
  std::vector<EigenvalueEntry> eigenvalues;  // ascending by value

  const EigenvalueEntry& largest() const { return eigenvalues.back(); }
  int main_count() const;
  int total_multiplicity() const;
};

SpectralReport spectrum(const Graph& g);

// Exact main-ness of an integer eigenvalue: the eigenspace is not orthogonal
// to the all-one vector. Throws InputError when lambda is not an eigenvalue.
bool is_main(const Graph& g, long lambda);

// Two distinct regular sets with the same kappa - tau certify that value as
// an eigenvalue: (tau2/tau1) x(S1) - x(S2) is a nonzero eigenvector.
RationalVector eigenvector_from_two_sets(const Graph& g, const VertexSet& s1, int kappa1,
                                         int tau1, const VertexSet& s2, int kappa2,
                                         int tau2);

// mu = tau * (u^T ones)/(u^T xbar) + (kappa - tau) for an exact eigenvector u
// of a main eigenvalue; the result must equal u's eigenvalue exactly.
Rational main_eigenvalue_from_solution(const Graph& g, const RationalVector& u,
                                       const ParticularSolution& xbar, int kappa,
                                       int tau);

// Exact evaluation of: lambda == kappa - tau, or x(S) orthogonal to the whole
// eigenspace of lambda. Equals NOT is_main(g, lambda) whenever s is a
// verified (kappa,tau)-regular set.
bool nonmain_criterion(const Graph& g, const VertexSet& s, int kappa, int tau,
                       long lambda);

}  // namespace ktreg
