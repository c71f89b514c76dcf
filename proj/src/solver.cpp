#include "ktreg/solver.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include "ktreg/errors.hpp"

namespace ktreg {

namespace {

// Depth-first search over the 2^t admissible delta tuples of the solution
// parametrization x = xbar + sum_j delta_j * v_j. Levels follow the pivot
// rows in ascending order and each level tries the bit x_{i_j} = 0 before 1,
// so leaves appear in ascending order of the bit tuple.
//
// Pruning: for every coordinate the contribution of the still-unassigned
// levels lies in a precomputed exact interval; a branch dies as soon as some
// coordinate can reach neither 0 nor 1.
class DeltaSearch {
public:
  DeltaSearch(const RationalVector& xbar, const KernelBasis& kb)
      : n_(static_cast<int>(xbar.size())), t_(kb.t()), xbar_(xbar), basis_(kb.basis) {
    delta0_.reserve(t_);
    delta1_.reserve(t_);
    for (int j = 0; j < t_; ++j) {
      Rational at_pivot = xbar(kb.pivot_rows[j] - 1);
      delta0_.push_back(-at_pivot);               // x at pivot row = 0
      delta1_.push_back(Rational(1) - at_pivot);  // x at pivot row = 1
    }
    // suffix_lo_/hi_[j] = exact bounds of sum_{l >= j} delta_l * column_l
    suffix_lo_.assign(t_ + 1, RationalVector::Zero(n_));
    suffix_hi_.assign(t_ + 1, RationalVector::Zero(n_));
    for (int j = t_ - 1; j >= 0; --j) {
      suffix_lo_[j] = suffix_lo_[j + 1];
      suffix_hi_[j] = suffix_hi_[j + 1];
      for (int r = 0; r < n_; ++r) {
        Rational c0 = delta0_[j] * basis_(r, j);
        Rational c1 = delta1_[j] * basis_(r, j);
        suffix_lo_[j](r) += std::min(c0, c1);
        suffix_hi_[j](r) += std::max(c0, c1);
      }
    }
  }

  int levels() const { return t_; }

  // Visits every 0-1 solution in deterministic order. The visitor returns
  // true to keep going, false to stop the whole search.
  template <typename Visitor>
  void run(Visitor&& visit) const {
    RationalVector cur = xbar_;
    descend(0, cur, visit);
  }

  // Same leaves, but the subtrees below prefix_depth run as parallel tasks.
  // Concatenating the per-prefix results in prefix order reproduces the
  // sequential leaf order.
  std::vector<RationalVector> run_split(int prefix_depth) const {
    prefix_depth = std::min(prefix_depth, t_);
    const int tasks = 1 << prefix_depth;
    std::vector<std::future<std::vector<RationalVector>>> futures;
    futures.reserve(tasks);
    for (int prefix = 0; prefix < tasks; ++prefix) {
      futures.push_back(std::async(std::launch::async, [this, prefix, prefix_depth]() {
        std::vector<RationalVector> found;
        RationalVector cur = xbar_;
        for (int j = 0; j < prefix_depth; ++j) {
          const Rational& d =
              ((prefix >> (prefix_depth - 1 - j)) & 1) ? delta1_[j] : delta0_[j];
          for (int r = 0; r < n_; ++r) cur(r) += d * basis_(r, j);
        }
        descend(prefix_depth, cur, [&](const RationalVector& x) {
          found.push_back(x);
          return true;
        });
        return found;
      }));
    }
    std::vector<RationalVector> all;
    for (auto& f : futures) {
      auto part = f.get();
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }

private:
  template <typename Visitor>
  bool descend(int level, RationalVector& cur, Visitor&& visit) const {
    if (!feasible(level, cur)) return true;
    if (level == t_) return visit(cur);
    for (int bit = 0; bit <= 1; ++bit) {
      const Rational& d = bit ? delta1_[level] : delta0_[level];
      for (int r = 0; r < n_; ++r) cur(r) += d * basis_(r, level);
      bool keep = descend(level + 1, cur, visit);
      for (int r = 0; r < n_; ++r) cur(r) -= d * basis_(r, level);
      if (!keep) return false;
    }
    return true;
  }

  bool feasible(int level, const RationalVector& cur) const {
    static const Rational kZero(0), kOne(1);
    for (int r = 0; r < n_; ++r) {
      Rational lo = cur(r) + suffix_lo_[level](r);
      Rational hi = cur(r) + suffix_hi_[level](r);
      bool zero_ok = lo <= kZero && kZero <= hi;
      bool one_ok = lo <= kOne && kOne <= hi;
      if (!zero_ok && !one_ok) return false;
    }
    return true;
  }

  int n_;
  int t_;
  RationalVector xbar_;
  RationalMatrix basis_;
  std::vector<Rational> delta0_, delta1_;
  std::vector<RationalVector> suffix_lo_, suffix_hi_;
};

bool vector_is_01(const RationalVector& x) {
  for (Eigen::Index r = 0; r < x.size(); ++r)
    if (!x(r).is_zero_or_one()) return false;
  return true;
}

VertexSet support_of(const RationalVector& x) {
  VertexSet s;
  for (Eigen::Index r = 0; r < x.size(); ++r)
    if (x(r).is_one()) s.push_back(static_cast<Vertex>(r) + 1);
  return s;
}

Rational exact_dot_ones(const RationalVector& v) {
  Rational s(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) s += v(i);
  return s;
}

struct Prepared {
  bool negative = false;  // decided without searching: no sets exist
  ParticularSolution ps;
  KernelBasis kb;
};

Prepared prepare_search(const Graph& g, int kappa, int tau, const SolveOptions& options,
                        SolveDiagnostics* diag) {
  const long lambda = static_cast<long>(kappa) - tau;
  if (diag) diag->lambda = lambda;

  Prepared p;
  if (kappa > g.max_degree()) {
    if (diag) diag->shortcut = "kappa_exceeds_max_degree";
    p.negative = true;
    return p;
  }

  RationalMatrix a = adjacency_matrix<Rational>(g);
  p.kb = kernel_basis(a, lambda);
  const int t = p.kb.t();
  std::optional<bool> lambda_main;
  if (t > 0) {
    bool main = false;
    for (int j = 0; j < t && !main; ++j)
      main = !exact_dot_ones(p.kb.basis.col(j)).is_zero();
    lambda_main = main;
  }
  if (diag) {
    diag->multiplicity = t;
    diag->lambda_is_eigenvalue = t > 0;
    diag->lambda_main = lambda_main;
  }

  p.ps = solve_particular(a, lambda, tau);
  if (diag) diag->system_consistent = p.ps.consistent;
  if (!p.ps.consistent) {
    // With tau > 0 the system is inconsistent exactly when lambda is a main
    // eigenvalue, which is the paper's nonexistence criterion.
    if (!lambda_main.has_value() || !*lambda_main)
      throw std::logic_error("inconsistent system with non-main lambda");
    if (diag) diag->shortcut = "lambda_is_main_eigenvalue";
    p.negative = true;
    return p;
  }
  if (lambda_main.has_value() && *lambda_main)
    throw std::logic_error("consistent system with main lambda");

  Rational cardinality = exact_dot_ones(p.ps.x);
  if (diag) diag->predicted_cardinality = cardinality;
  if (!cardinality.is_integer() || cardinality < Rational(1)) {
    if (diag) diag->shortcut = "predicted_cardinality_not_positive_integer";
    p.negative = true;
    return p;
  }

  if (g.min_degree() + tau > kappa) {
    CardinalityBounds b = cardinality_bounds(g, kappa, tau);
    if (diag) {
      diag->lower_bound = b.lower;
      diag->upper_bound = b.upper;
    }
    if (cardinality < b.lower || cardinality > b.upper) {
      if (diag) diag->shortcut = "cardinality_outside_bounds";
      p.negative = true;
      return p;
    }
  }

  if (diag) diag->unique_solution_path = (t == 0);
  if (t > options.max_multiplicity)
    throw ResourceLimitError("eigenvalue multiplicity t=" + std::to_string(t) +
                                 " exceeds the cap of " +
                                 std::to_string(options.max_multiplicity) +
                                 " (2^t candidate tuples); raise the cap to override",
                             t);
  return p;
}

KtCertificate make_certificate(const Graph& g, VertexSet s, int kappa, int tau) {
  KtCertificate cert{std::move(s), kappa, tau, false};
  cert.verified = is_kt_regular(g, cert.set, kappa, tau);
  if (!cert.verified)
    throw std::logic_error("solver produced a set that fails the definitional check");
  return cert;
}

std::optional<KtCertificate> whole_set_convention(const Graph& g, int kappa) {
  if (g.is_regular() && g.max_degree() == kappa) {
    VertexSet all(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v) all[v - 1] = v;
    return KtCertificate{std::move(all), kappa, 0, true};
  }
  return std::nullopt;
}

void validate_query(int kappa, int tau) {
  if (kappa < 0 || tau < 0) throw InputError("kappa and tau must be nonnegative");
}

}  // namespace

Rational predicted_cardinality(const ParticularSolution& xbar) {
  if (!xbar.consistent) throw InputError("particular solution is inconsistent");
  return exact_dot_ones(xbar.x);
}

CardinalityBounds cardinality_bounds(const Graph& g, int kappa, int tau) {
  validate_query(kappa, tau);
  if (g.min_degree() + tau <= kappa)
    throw InapplicableError("cardinality bounds need delta(G) + tau > kappa");
  const long lambda = static_cast<long>(kappa) - tau;
  Rational nt(static_cast<long>(g.vertex_count()) * tau);
  return {nt / Rational(g.max_degree() - lambda), nt / Rational(g.min_degree() - lambda)};
}

std::optional<KtCertificate> find_kt_set(const Graph& g, int kappa, int tau,
                                         const SolveOptions& options,
                                         SolveDiagnostics* diag) {
  validate_query(kappa, tau);
  if (diag) *diag = SolveDiagnostics{};
  if (tau == 0) {
    if (diag) diag->lambda = kappa;
    return whole_set_convention(g, kappa);
  }

  Prepared p = prepare_search(g, kappa, tau, options, diag);
  if (p.negative) return std::nullopt;

  if (p.kb.t() == 0) {
    if (!vector_is_01(p.ps.x)) return std::nullopt;
    return make_certificate(g, support_of(p.ps.x), kappa, tau);
  }

  std::optional<KtCertificate> found;
  DeltaSearch search(p.ps.x, p.kb);
  search.run([&](const RationalVector& x) {
    found = make_certificate(g, support_of(x), kappa, tau);
    return false;
  });
  return found;
}

std::vector<KtCertificate> enumerate_kt_sets(const Graph& g, int kappa, int tau,
                                             const SolveOptions& options,
                                             SolveDiagnostics* diag) {
  validate_query(kappa, tau);
  if (diag) *diag = SolveDiagnostics{};
  std::vector<KtCertificate> out;
  if (tau == 0) {
    if (diag) diag->lambda = kappa;
    if (auto cert = whole_set_convention(g, kappa)) out.push_back(std::move(*cert));
    return out;
  }

  Prepared p = prepare_search(g, kappa, tau, options, diag);
  if (p.negative) return out;

  if (p.kb.t() == 0) {
    if (vector_is_01(p.ps.x))
      out.push_back(make_certificate(g, support_of(p.ps.x), kappa, tau));
    return out;
  }

  DeltaSearch search(p.ps.x, p.kb);
  std::vector<RationalVector> solutions;
  if (options.threads > 1 && search.levels() >= 2) {
    int depth = 0;
    while ((1 << depth) < options.threads && depth < search.levels()) ++depth;
    solutions = search.run_split(depth);
  } else {
    search.run([&](const RationalVector& x) {
      solutions.push_back(x);
      return true;
    });
  }

  for (const RationalVector& x : solutions)
    out.push_back(make_certificate(g, support_of(x), kappa, tau));
  std::sort(out.begin(), out.end(),
            [](const KtCertificate& a, const KtCertificate& b) { return a.set < b.set; });
  return out;
}

KtCertificate check_set(const Graph& g, const VertexSet& s, int kappa, int tau) {
  validate_query(kappa, tau);
  VertexSet sorted = normalize_vertex_set(g, s);
  KtCertificate cert{std::move(sorted), kappa, tau, false};
  cert.verified = is_kt_regular(g, cert.set, kappa, tau);
  return cert;
}

}  // namespace ktreg
