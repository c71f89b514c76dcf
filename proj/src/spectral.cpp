#include "ktreg/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "ktreg/errors.hpp"

namespace ktreg {

namespace {

Rational exact_dot(const RationalVector& a, const RationalVector& b) {
  Rational s(0);
  for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
  return s;
}

bool kernel_reaches_ones(const KernelBasis& kb) {
  for (int j = 0; j < kb.t(); ++j) {
    Rational d(0);
    for (Eigen::Index r = 0; r < kb.basis.rows(); ++r) d += kb.basis(r, j);
    if (!d.is_zero()) return true;
  }
  return false;
}

// Exact eigenvalue of an exact eigenvector, or nullopt if u is not one.
std::optional<Rational> exact_eigenvalue_of(const RationalMatrix& a,
                                            const RationalVector& u) {
  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (!u(i).is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead < 0) return std::nullopt;
  RationalVector au = a * u;
  Rational mu = au(lead) / u(lead);
  for (Eigen::Index i = 0; i < u.size(); ++i)
    if (au(i) != mu * u(i)) return std::nullopt;
  return mu;
}

}  // namespace

int SpectralReport::main_count() const {
  int c = 0;
  for (const auto& e : eigenvalues) c += e.main ? 1 : 0;
  return c;
}

int SpectralReport::total_multiplicity() const {
  int c = 0;
  for (const auto& e : eigenvalues) c += e.multiplicity;
  return c;
}

SpectralReport spectrum(const Graph& g) {
  const int n = g.vertex_count();
  Eigen::MatrixXd a = adjacency_matrix<double>(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigen decomposition failed");
  const Eigen::VectorXd values = solver.eigenvalues();     // ascending
  const Eigen::MatrixXd vectors = solver.eigenvectors();   // orthonormal columns

  RationalMatrix ar = adjacency_matrix<Rational>(g);
  Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);

  SpectralReport report;
  int i = 0;
  while (i < n) {
    int j = i;
    while (j + 1 < n && values(j + 1) - values(j) < kEigenvalueClusterTol) ++j;
    EigenvalueEntry entry;
    entry.multiplicity = j - i + 1;
    double mean = 0.0;
    for (int k = i; k <= j; ++k) mean += values(k);
    mean /= entry.multiplicity;
    entry.value = mean;

    const double rounded = std::round(mean);
    if (std::abs(mean - rounded) < kIntegerCandidateTol) {
      long candidate = static_cast<long>(rounded);
      KernelBasis kb = kernel_basis(ar, candidate);
      if (kb.t() > 0) {
        entry.exact_integer = candidate;
        if (kb.t() != entry.multiplicity)
          throw std::logic_error("numeric multiplicity disagrees with exact nullity");
        entry.main = kernel_reaches_ones(kb);
        entry.main_exact = true;
      }
    }
    if (!entry.main_exact) {
      // projection of the all-one vector onto the eigenspace spanned by the
      // cluster's orthonormal eigenvectors
      double norm2 = 0.0;
      for (int k = i; k <= j; ++k) {
        double p = vectors.col(k).dot(ones);
        norm2 += p * p;
      }
      entry.main = std::sqrt(norm2) > kMainProjectionTol;
      entry.main_exact = false;
    }
    report.eigenvalues.push_back(entry);
    i = j + 1;
  }
  return report;
}

bool is_main(const Graph& g, long lambda) {
  RationalMatrix a = adjacency_matrix<Rational>(g);
  KernelBasis kb = kernel_basis(a, lambda);
  if (kb.t() == 0)
    throw InputError(std::to_string(lambda) + " is not an eigenvalue of the graph");
  return kernel_reaches_ones(kb);
}

RationalVector eigenvector_from_two_sets(const Graph& g, const VertexSet& s1, int kappa1,
                                         int tau1, const VertexSet& s2, int kappa2,
                                         int tau2) {
  if (tau1 <= 0) throw InputError("tau1 must be positive");
  if (!is_kt_regular(g, s1, kappa1, tau1))
    throw InputError("S1 is not a (kappa1,tau1)-regular set");
  if (!is_kt_regular(g, s2, kappa2, tau2))
    throw InputError("S2 is not a (kappa2,tau2)-regular set");
  if (kappa1 - tau1 != kappa2 - tau2)
    throw InputError("kappa1 - tau1 and kappa2 - tau2 differ");
  VertexSet a = normalize_vertex_set(g, s1);
  VertexSet b = normalize_vertex_set(g, s2);
  if (a == b) throw InputError("S1 and S2 must be distinct");

  const int n = g.vertex_count();
  Rational scale = Rational(tau2) / Rational(tau1);
  RationalVector u = characteristic_vector<Rational>(n, a) * scale -
                     characteristic_vector<Rational>(n, b);

  RationalMatrix am = adjacency_matrix<Rational>(g);
  const Rational lambda(static_cast<long>(kappa1) - tau1);
  RationalVector au = am * u;
  bool nonzero = false;
  for (int r = 0; r < n; ++r) {
    if (au(r) != lambda * u(r))
      throw std::logic_error("certified eigenvector fails the eigen-equation");
    nonzero = nonzero || !u(r).is_zero();
  }
  if (!nonzero) throw std::logic_error("certified eigenvector is zero");
  return u;
}

Rational main_eigenvalue_from_solution(const Graph& g, const RationalVector& u,
                                       const ParticularSolution& xbar, int kappa,
                                       int tau) {
  if (!xbar.consistent) throw InputError("particular solution is inconsistent");
  if (u.size() != g.vertex_count() || xbar.x.size() != g.vertex_count())
    throw InputError("vector length does not match the graph");

  RationalMatrix a = adjacency_matrix<Rational>(g);
  std::optional<Rational> mu_actual = exact_eigenvalue_of(a, u);
  if (!mu_actual.has_value()) throw InputError("u is not an exact eigenvector");

  Rational ue = exact_dot(u, rational_ones(u.size()));
  if (ue.is_zero()) throw InputError("u is orthogonal to the all-one vector");
  Rational ux = exact_dot(u, xbar.x);
  if (ux.is_zero())
    throw InputError("contract violation: u^T xbar = 0 despite a main eigenvalue");

  Rational mu = Rational(tau) * ue / ux + Rational(static_cast<long>(kappa) - tau);
  if (mu != *mu_actual)
    throw std::logic_error("formula value differs from the exact eigenvalue");
  return mu;
}

bool nonmain_criterion(const Graph& g, const VertexSet& s, int kappa, int tau,
                       long lambda) {
  if (!is_kt_regular(g, s, kappa, tau))
    throw InputError("S is not a (kappa,tau)-regular set");
  RationalMatrix a = adjacency_matrix<Rational>(g);
  KernelBasis kb = kernel_basis(a, lambda);
  if (kb.t() == 0)
    throw InputError(std::to_string(lambda) + " is not an eigenvalue of the graph");
  if (lambda == static_cast<long>(kappa) - tau) return true;
  RationalVector x = characteristic_vector<Rational>(g.vertex_count(),
                                                     normalize_vertex_set(g, s));
  for (int j = 0; j < kb.t(); ++j)
    if (!exact_dot(x, kb.basis.col(j)).is_zero()) return false;
  return true;
}

}  // namespace ktreg
