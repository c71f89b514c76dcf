// Acceptance suite: runs every shipped criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code = number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "ktreg/errors.hpp"
#include "ktreg/io.hpp"
#include "ktreg/oracle.hpp"
#include "ktreg/solver.hpp"
#include "ktreg/spectral.hpp"
#include "ktreg/structures.hpp"
#include "test_support.hpp"

using namespace ktreg;
using namespace ktreg::testing;

namespace {

struct Criterion {
  bool ok = true;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      first_failure = what;
    }
  }
};

std::string data_path(const std::string& file) {
  return std::string(KTREG_DATA_DIR) + "/" + file;
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(KTREG_CLI_PATH) + " " + args + " >/dev/null 2>/dev/null";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

std::vector<VertexSet> sets_of(const std::vector<KtCertificate>& certs) {
  std::vector<VertexSet> out;
  for (const auto& c : certs) out.push_back(c.set);
  return out;
}

const std::vector<VertexSet> kPetersen02 = {
    {1, 2, 3, 4}, {1, 6, 8, 10}, {2, 6, 7, 9}, {3, 5, 8, 9}, {4, 5, 7, 10}};
const std::vector<VertexSet> kPetersen13 = {{1, 2, 3, 6, 8, 9},
                                            {1, 2, 4, 6, 7, 10},
                                            {1, 3, 4, 5, 8, 10},
                                            {2, 3, 4, 5, 7, 9},
                                            {5, 6, 7, 8, 9, 10}};

// Shared between criteria 7 and 8: the corpus and every enumeration result.
struct SweepEntry {
  int kappa, tau;
  std::vector<VertexSet> sets;
};
std::vector<Graph> g_corpus;
std::vector<std::vector<SweepEntry>> g_sweep;  // parallel to g_corpus

void criterion1(Criterion& c) {
  auto e02 = enumerate_kt_sets(petersen(), 0, 2);
  c.expect(sets_of(e02) == kPetersen02, "(0,2) enumeration differs from the table");
  for (const auto& cert : e02) {
    c.expect(cert.set.size() == 4, "(0,2) set of wrong size");
    c.expect(cert.verified, "(0,2) certificate unverified");
  }

  auto e13 = enumerate_kt_sets(petersen(), 1, 3);
  c.expect(sets_of(e13) == kPetersen13, "(1,3) enumeration differs from the table");
  for (const auto& cert : e13) c.expect(cert.set.size() == 6, "(1,3) set of wrong size");

  // every (1,3)-set is the complement of a (0,2)-set
  for (const auto& cert : e02) {
    VertexSet rest = set_complement(petersen(), cert.set);
    bool found = false;
    for (const auto& other : e13) found = found || other.set == rest;
    c.expect(found, "complement pairing between the two tables broken");
  }
}

void criterion2(Criterion& c) {
  SolveDiagnostics d02, d13;
  enumerate_kt_sets(petersen(), 0, 2, {}, &d02);
  enumerate_kt_sets(petersen(), 1, 3, {}, &d13);
  c.expect(d02.predicted_cardinality.has_value() &&
               *d02.predicted_cardinality == Rational(4),
           "ones^T xbar != 4 for (0,2)");
  c.expect(d13.predicted_cardinality.has_value() &&
               *d13.predicted_cardinality == Rational(6),
           "ones^T xbar != 6 for (1,3)");
}

void criterion3(Criterion& c) {
  Graph g = octahedron();
  SpectralReport r = spectrum(g);
  c.expect(r.eigenvalues.size() == 3, "octahedron has three distinct eigenvalues");
  std::map<long, int> mults;
  for (const auto& e : r.eigenvalues) {
    c.expect(e.exact_integer.has_value(), "octahedron eigenvalue not integer-verified");
    if (e.exact_integer) mults[*e.exact_integer] = e.multiplicity;
  }
  c.expect(mults[4] == 1 && mults[0] == 3 && mults[-2] == 2,
           "octahedron multiplicities differ from {4^1, 0^3, (-2)^2}");

  auto cert = max_regular_induced_certificate(g, 2);
  c.expect(cert.has_value(), "no (2,4)-certificate found");
  if (cert) {
    c.expect(cert->maximum, "certificate not flagged maximum");
    c.expect(cert->set.size() == 4, "certificate size != 4");
    c.expect(is_kt_regular(g, cert->set, 2, 4), "certificate not (2,4)-regular");
    c.expect(induces_connected(g, cert->set), "certificate does not induce a 4-cycle");
    // the 4-cycle uses no antipodal pair: antipodes are {1,4}, {2,5}, {3,6}
    for (size_t i = 0; i < cert->set.size(); ++i)
      for (size_t j = i + 1; j < cert->set.size(); ++j)
        if (g.adjacent(cert->set[i], cert->set[j]))
          c.expect(cert->set[i] + 3 != cert->set[j],
                   "cycle edge joins an antipodal pair");
  }

  auto params = srg_check(g);
  c.expect(params.has_value(), "octahedron not recognized as strongly regular");
  if (params) {
    c.expect(params->n == 6 && params->p == 4 && params->a == 2 && params->c == 4,
             "octahedron parameters differ from (6,4,2,4)");
    c.expect(!params->primitive, "octahedron must be imprimitive");
  }
}

void criterion4(Criterion& c) {
  Graph g = fig4_grid();
  SpectralReport r = spectrum(g);
  const double s2 = std::sqrt(2.0);
  const double expected[6] = {-1 - s2, -1, 1 - s2, -1 + s2, 1, 1 + s2};
  c.expect(r.eigenvalues.size() == 6, "fig4 eigenvalues not all simple");
  for (int i = 0; i < 6 && r.eigenvalues.size() == 6; ++i)
    c.expect(std::abs(r.eigenvalues[i].value - expected[i]) < 1e-9,
             "fig4 eigenvalue off by more than 1e-9");

  SolveDiagnostics diag;
  auto cert = find_kt_set(g, 1, 1, {}, &diag);
  c.expect(cert.has_value() && cert->set == VertexSet{2, 5},
           "(1,1)-regular set {b,e} not found");
  c.expect(diag.unique_solution_path, "(1,1) not answered by the unique-solution path");
  c.expect(!diag.lambda_is_eigenvalue && diag.multiplicity == 0,
           "0 not confirmed as a non-eigenvalue exactly");

  c.expect(sets_of(enumerate_kt_sets(g, 2, 1)) ==
               std::vector<VertexSet>{{1, 2, 5, 6}, {2, 3, 4, 5}},
           "(2,1) sets differ");
  auto e12 = sets_of(enumerate_kt_sets(g, 1, 2));
  bool has12 = false;
  for (const auto& s : e12) has12 = has12 || s == VertexSet{1, 3, 4, 6};
  c.expect(has12, "(1,2) set {a,c,d,f} missing");
  c.expect(e12 == brute_force_kt_sets(g, 1, 2), "(1,2) sets differ from brute force");
  c.expect(sets_of(enumerate_kt_sets(g, 0, 1)) ==
               std::vector<VertexSet>{{1, 4}, {3, 6}},
           "(0,1) sets differ");

  RationalVector u1 = eigenvector_from_two_sets(g, {1, 2, 5, 6}, 2, 1,
                                                {2, 3, 4, 5}, 2, 1);
  const long v1[6] = {1, 0, -1, -1, 0, 1};
  for (int i = 0; i < 6; ++i)
    c.expect(u1(i) == Rational(v1[i]), "displayed eigenvector of 1 not reproduced");
  RationalVector u2 = eigenvector_from_two_sets(g, {1, 4}, 0, 1, {3, 6}, 0, 1);
  const long v2[6] = {1, 0, -1, 1, 0, -1};
  for (int i = 0; i < 6; ++i)
    c.expect(u2(i) == Rational(v2[i]), "displayed eigenvector of -1 not reproduced");
}

void criterion5(Criterion& c) {
  c.expect(efficient_dominating_sets(cycle(4)).empty(), "C4 must have no EDS");
  c.expect(run_cli("eds " + data_path("c4.txt")) == 1, "eds c4.txt must exit 1");

  Graph h = fig2_hamiltonian();
  auto cyc = hamiltonian_cycle(h);
  c.expect(cyc.has_value(), "fig2 graph not reported Hamiltonian");
  if (cyc) {
    c.expect(cyc->size() == 7, "fig2 cycle has wrong length");
    std::set<Edge> got;
    for (size_t i = 0; i < cyc->size(); ++i)
      got.insert(make_edge((*cyc)[i], (*cyc)[(i + 1) % cyc->size()]));
    std::set<Edge> labeled = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 7}, {6, 7}, {1, 6}};
    c.expect(got == labeled, "fig2 cycle does not use exactly the edges a..g");
  }

  // thirty graphs, both certificate routes
  std::vector<Graph> thirty = {petersen(),   fig2_hamiltonian(),
                               octahedron(), fig4_grid(),
                               complete(4),  complete(5),
                               complete_bipartite(2, 3), complete_bipartite(3, 3),
                               path(4),      path(5),
                               complement(cycle(6))};
  for (int n = 3; n <= 8; ++n) thirty.push_back(cycle(n));
  for (const Graph& g : all_connected_graphs(5)) {
    if (static_cast<int>(thirty.size()) >= 30) break;
    if (g.vertex_count() == 5) thirty.push_back(g);
  }
  c.expect(thirty.size() == 30, "corpus is not thirty graphs");
  for (const Graph& g : thirty) {
    auto a = hamiltonian_cycle(g);
    auto b = hamiltonian_via_subdivision(g);
    c.expect(a.has_value() == b.has_value(), "hamiltonicity routes disagree");
  }

  // Petersen: exhaustive certificate search comes back empty within 60 s,
  // with the line-graph multiplicity documented as t = 5
  auto start = std::chrono::steady_clock::now();
  auto [lg, lab] = line_graph(petersen());
  RationalMatrix la = adjacency_matrix<Rational>(lg);
  c.expect(integer_eigen_multiplicity(la, -2) == 5,
           "multiplicity of -2 in L(Petersen) is not 5");
  c.expect(!hamiltonian_cycle(petersen()).has_value(),
           "Petersen reported Hamiltonian");
  c.expect(run_cli("hamilton " + data_path("petersen.txt")) == 1,
           "hamilton petersen.txt must exit 1");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  c.expect(secs < 60.0, "Petersen non-Hamiltonicity took 60 s or more");
}

void criterion6(Criterion& c) {
  auto params = srg_check(petersen());
  c.expect(params.has_value(), "Petersen not recognized as strongly regular");
  if (params) {
    c.expect(params->n == 10 && params->p == 3 && params->a == 0 && params->c == 1,
             "Petersen parameters differ from (10,3,0,1)");
    c.expect(params->primitive, "Petersen must be primitive");
    c.expect(srg_stable_set_size(params->p, 2, params->c) == Rational(4),
             "stable set formula does not give 4");
  }
  auto e02 = enumerate_kt_sets(petersen(), 0, 2);
  c.expect(!e02.empty() && e02.front().set.size() == 4,
           "|S1| does not match the formula value");
}

void criterion7(Criterion& c) {
  auto start = std::chrono::steady_clock::now();
  g_corpus = all_connected_graphs(6);
  for (auto& g : seeded_random_connected_graphs(100, 7, kRandomCorpusSeed))
    g_corpus.push_back(std::move(g));
  for (auto& g : seeded_random_connected_graphs(100, 8, kRandomCorpusSeed + 1))
    g_corpus.push_back(std::move(g));
  c.expect(g_corpus.size() == 343, "corpus size is not 143 + 200");

  g_sweep.assign(g_corpus.size(), {});
  for (size_t i = 0; i < g_corpus.size(); ++i) {
    const Graph& g = g_corpus[i];
    const int maxdeg = g.max_degree();
    for (int kappa = 0; kappa <= maxdeg; ++kappa) {
      for (int tau = 1; tau <= maxdeg; ++tau) {
        auto enumerated = sets_of(enumerate_kt_sets(g, kappa, tau));
        auto brute = brute_force_kt_sets(g, kappa, tau);
        c.expect(enumerated == brute, "solver/oracle mismatch at n=" +
                                          std::to_string(g.vertex_count()) + " kappa=" +
                                          std::to_string(kappa) + " tau=" +
                                          std::to_string(tau));
        g_sweep[i].push_back({kappa, tau, std::move(enumerated)});
      }
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                    .count();
  c.expect(secs < 600.0, "full sweep took 10 minutes or more");
}

void criterion8(Criterion& c) {
  if (g_corpus.empty()) {
    c.expect(false, "criterion 7 corpus unavailable");
    return;
  }
  for (size_t i = 0; i < g_corpus.size(); ++i) {
    const Graph& g = g_corpus[i];
    const int n = g.vertex_count();
    RationalMatrix a = adjacency_matrix<Rational>(g);
    SpectralReport rep = spectrum(g);

    // regular <=> exactly one main eigenvalue; lambda_1 is always main
    c.expect(g.is_regular() == (rep.main_count() == 1),
             "regularity/main-count equivalence violated");
    c.expect(rep.largest().main, "largest eigenvalue not flagged main");

    // exact integer eigenvalues with their kernels, shared by the checks below
    std::vector<std::pair<long, KernelBasis>> integer_eigs;
    for (const auto& e : rep.eigenvalues)
      if (e.exact_integer)
        integer_eigs.push_back({*e.exact_integer, kernel_basis(a, *e.exact_integer)});

    const int p = g.max_degree();
    for (const SweepEntry& entry : g_sweep[i]) {
      const long lambda = static_cast<long>(entry.kappa) - entry.tau;

      // main kappa - tau forbids regular sets
      if (!entry.sets.empty()) {
        for (const auto& [mu, kb] : integer_eigs) {
          if (mu != lambda) continue;
          bool main = false;
          for (int j = 0; j < kb.t() && !main; ++j) {
            Rational d(0);
            for (int r = 0; r < n; ++r) d += kb.basis(r, j);
            main = !d.is_zero();
          }
          c.expect(!main, "regular set exists although kappa - tau is main");
        }
      }

      if (!g.is_regular() || entry.sets.empty()) continue;

      // strict sets in regular graphs put kappa - tau in the spectrum and
      // x(S) - (tau/(p+tau-kappa)) ones in its eigenspace, exactly
      bool has_strict = false;
      for (const VertexSet& s : entry.sets) {
        if (s.size() == static_cast<size_t>(n)) continue;
        has_strict = true;
        RationalVector w =
            characteristic_vector<Rational>(n, s) -
            rational_ones(n) * (Rational(entry.tau) / Rational(p + entry.tau - entry.kappa));
        RationalVector aw = a * w;
        bool in_eigenspace = true;
        for (int r = 0; r < n; ++r)
          in_eigenspace = in_eigenspace && aw(r) == Rational(lambda) * w(r);
        c.expect(in_eigenspace, "regular-graph eigenvector membership violated");

        // the nonmain criterion matches is_main on every integer eigenvalue
        for (const auto& [mu, kb] : integer_eigs)
          c.expect(nonmain_criterion(g, s, entry.kappa, entry.tau, mu) == !is_main(g, mu),
                   "nonmain criterion disagrees with is_main");
      }
      if (has_strict)
        c.expect(integer_eigen_multiplicity(a, lambda) > 0,
                 "kappa - tau not an eigenvalue despite a strict regular set");

      // the main-eigenvalue formula reproduces lambda_1 = p exactly
      ParticularSolution xbar = solve_particular(a, lambda, entry.tau);
      if (xbar.consistent) {
        Rational mu = main_eigenvalue_from_solution(g, rational_ones(n), xbar,
                                                    entry.kappa, entry.tau);
        c.expect(mu == Rational(p), "formula value differs from lambda_1");
      }
    }
  }
}

void criterion9(Criterion& c) {
  for (int n : {3, 4, 5}) {
    for (int s : {1, 2, 3}) {
      Graph h = pendant_unicyclic(n, s);  // postconditions verified inside
      c.expect(h.vertex_count() == n * (1 + s), "wrong order");

      // the two design-join regular-set postconditions, re-checked here
      VertexSet pendants, cycle_vertices;
      for (int v = 1; v <= s * n; ++v) pendants.push_back(v);
      for (int v = s * n + 1; v <= s * n + n; ++v) cycle_vertices.push_back(v);
      c.expect(is_kt_regular(h, pendants, 0, s), "(0,s) postcondition fails");
      c.expect(is_kt_regular(h, cycle_vertices, 2, 1), "(2,1) postcondition fails");

      SpectralReport r = spectrum(h);
      std::vector<double> mains;
      for (const auto& e : r.eigenvalues)
        if (e.main) mains.push_back(e.value);
      c.expect(mains.size() == 2, "main eigenvalue count is not 2");
      if (mains.size() == 2) {
        const double root = std::sqrt(1.0 + s);
        c.expect(std::abs(mains.front() - (1.0 - root)) < 1e-9,
                 "smaller main eigenvalue off by more than 1e-9");
        c.expect(std::abs(mains.back() - (1.0 + root)) < 1e-9,
                 "larger main eigenvalue off by more than 1e-9");
      }
    }
  }
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    std::function<void(Criterion&)> body;
    double budget_secs;  // hard runtime bound when positive
  };
  const std::vector<Entry> entries = {
      {1, "Petersen (0,2) and (1,3) enumeration tables", criterion1, 1.0},
      {2, "Petersen particular-solution cardinalities", criterion2, 0.0},
      {3, "octahedron spectrum, maxreg certificate, SRG parameters", criterion3, 0.0},
      {4, "fig4 grid spectrum, unique-solution path, eigenvectors", criterion4, 0.0},
      {5, "structure detections and Hamiltonicity routes", criterion5, 0.0},
      {6, "Petersen SRG parameters and stable-set formula", criterion6, 0.0},
      {7, "solver equals brute-force oracle on the corpus", criterion7, 600.0},
      {8, "spectral consistency suite on the corpus", criterion8, 0.0},
      {9, "pendant unicyclic main eigenvalues and design join", criterion9, 0.0},
  };

  int failures = 0;
  for (const auto& entry : entries) {
    Criterion c;
    auto start = std::chrono::steady_clock::now();
    try {
      entry.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (entry.budget_secs > 0.0 && secs >= entry.budget_secs)
      c.expect(false, "runtime budget exceeded");
    std::printf("%s criterion %d: %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", entry.id,
                entry.title, secs, c.ok ? "" : " -- ", c.ok ? "" : c.first_failure.c_str());
    failures += c.ok ? 0 : 1;
  }
  return failures;
}
