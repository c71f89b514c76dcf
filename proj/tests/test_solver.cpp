#include <doctest.h>

#include <algorithm>

#include "ktreg/errors.hpp"
#include "ktreg/oracle.hpp"
#include "ktreg/solver.hpp"
#include "test_support.hpp"

using namespace ktreg;
using namespace ktreg::testing;

namespace {

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

}  // namespace

TEST_CASE("predicted cardinality") {
  RationalMatrix a = adjacency_matrix<Rational>(petersen());
  CHECK(predicted_cardinality(solve_particular(a, -2, 2)) == Rational(4));
  CHECK(predicted_cardinality(solve_particular(a, -2, 3)) == Rational(6));

  RationalMatrix k2 = adjacency_matrix<Rational>(complete(2));
  CHECK(predicted_cardinality(solve_particular(k2, 5, 1)) == Rational(-1, 2));

  ParticularSolution bad;
  CHECK_THROWS_AS(predicted_cardinality(bad), InputError);
}

TEST_CASE("cardinality bounds") {
  CardinalityBounds b02 = cardinality_bounds(petersen(), 0, 2);
  CHECK(b02.lower == Rational(4));
  CHECK(b02.upper == Rational(4));
  CardinalityBounds b13 = cardinality_bounds(petersen(), 1, 3);
  CHECK(b13.lower == Rational(6));
  CHECK(b13.upper == Rational(6));

  CardinalityBounds f = cardinality_bounds(fig4_grid(), 1, 1);
  CHECK(f.lower == Rational(2));
  CHECK(f.upper == Rational(3));

  // delta + tau <= kappa has no bound statement
  CHECK_THROWS_AS(cardinality_bounds(path(3), 2, 1), InapplicableError);
}

TEST_CASE("find: unique-solution path on the fig4 grid") {
  SolveDiagnostics diag;
  auto cert = find_kt_set(fig4_grid(), 1, 1, {}, &diag);
  REQUIRE(cert.has_value());
  CHECK(cert->set == VertexSet{2, 5});
  CHECK(cert->verified);
  CHECK(diag.unique_solution_path);
  CHECK(diag.multiplicity == 0);
  CHECK_FALSE(diag.lambda_is_eigenvalue);  // 0 is not an eigenvalue, exactly
}

TEST_CASE("find: negative answers and shortcuts") {
  SolveDiagnostics diag;
  CHECK_FALSE(find_kt_set(cycle(4), 0, 1, {}, &diag).has_value());

  CHECK_FALSE(find_kt_set(complete(2), 5, 1, {}, &diag).has_value());
  CHECK(diag.shortcut == "kappa_exceeds_max_degree");

  // K2 with kappa=0, tau=2: the unique solution sums to 4/3
  CHECK_FALSE(find_kt_set(complete(2), 0, 2, {}, &diag).has_value());
  CHECK(diag.predicted_cardinality == Rational(4, 3));
  CHECK(diag.shortcut == "predicted_cardinality_not_positive_integer");

  // kappa - tau = 0 is a main eigenvalue of K2 + K1 (its eigenvector is the
  // indicator of the isolated vertex), so no (1,1)-regular set can exist
  Graph k2_plus_k1 = Graph::from_edge_list(3, {{1, 2}});
  CHECK_FALSE(find_kt_set(k2_plus_k1, 1, 1, {}, &diag).has_value());
  CHECK(diag.shortcut == "lambda_is_main_eigenvalue");
  CHECK_FALSE(diag.system_consistent);
  CHECK(diag.lambda_main == true);
}

TEST_CASE("a kappa-regular graph answers (kappa,tau) queries with V(G)") {
  // K2 is 1-regular, so its whole vertex set is vacuously (1,tau)-regular
  auto cert = find_kt_set(complete(2), 1, 2);
  REQUIRE(cert.has_value());
  CHECK(cert->set == VertexSet{1, 2});
  CHECK(sets_of(enumerate_kt_sets(complete(2), 1, 2)) ==
        brute_force_kt_sets(complete(2), 1, 2));
}

TEST_CASE("find on Petersen is deterministic and sound") {
  auto c1 = find_kt_set(petersen(), 0, 2);
  auto c2 = find_kt_set(petersen(), 0, 2);
  REQUIRE(c1.has_value());
  REQUIRE(c2.has_value());
  CHECK(c1->set == c2->set);
  CHECK(c1->verified);
  CHECK(std::find(kPetersen02.begin(), kPetersen02.end(), c1->set) !=
        kPetersen02.end());
}

TEST_CASE("enumerate reproduces both Petersen tables exactly") {
  SolveDiagnostics diag;
  auto e02 = enumerate_kt_sets(petersen(), 0, 2, {}, &diag);
  CHECK(sets_of(e02) == kPetersen02);
  CHECK(diag.multiplicity == 4);
  CHECK(diag.predicted_cardinality == Rational(4));
  for (const auto& c : e02) CHECK(c.verified);

  auto e13 = enumerate_kt_sets(petersen(), 1, 3, {}, &diag);
  CHECK(sets_of(e13) == kPetersen13);
  CHECK(diag.predicted_cardinality == Rational(6));

  // count bound: at most 2^t sets
  CHECK(e02.size() <= (1u << diag.multiplicity));
}

TEST_CASE("solutions satisfy the delta parametrization") {
  Graph g = petersen();
  RationalMatrix a = adjacency_matrix<Rational>(g);
  ParticularSolution xbar = solve_particular(a, -2, 2);
  KernelBasis kb = kernel_basis(a, -2);
  for (const auto& cert : enumerate_kt_sets(g, 0, 2)) {
    RationalVector x = characteristic_vector<Rational>(10, cert.set);
    // delta_j = x_{i_j} - xbar_{i_j}, then x must equal xbar + V * delta
    RationalVector delta(kb.t());
    for (int j = 0; j < kb.t(); ++j) {
      delta(j) = x(kb.pivot_rows[j] - 1) - xbar.x(kb.pivot_rows[j] - 1);
      bool admissible = delta(j) == -xbar.x(kb.pivot_rows[j] - 1) ||
                        delta(j) == Rational(1) - xbar.x(kb.pivot_rows[j] - 1);
      CHECK(admissible);
    }
    RationalVector rebuilt = xbar.x + kb.basis * delta;
    for (int r = 0; r < 10; ++r) CHECK(rebuilt(r) == x(r));
  }
}

TEST_CASE("whole vertex set answers") {
  // tau = 0: the convention route
  auto v = find_kt_set(complete(3), 2, 0);
  REQUIRE(v.has_value());
  CHECK(v->set == VertexSet{1, 2, 3});
  CHECK_FALSE(find_kt_set(complete(3), 1, 0).has_value());

  // tau >= 1: V(G) qualifies vacuously iff the graph is kappa-regular
  auto e = enumerate_kt_sets(complete(3), 2, 1);
  REQUIRE(e.size() == 1);
  CHECK(e[0].set == VertexSet{1, 2, 3});

  auto singles = enumerate_kt_sets(complete(3), 0, 1);
  CHECK(sets_of(singles) == std::vector<VertexSet>{{1}, {2}, {3}});
}

TEST_CASE("check_set") {
  CHECK(check_set(petersen(), {1, 2, 5, 7, 8}, 2, 1).verified);
  CHECK(check_set(fig4_grid(), {1, 3, 4, 6}, 1, 2).verified);
  CHECK_FALSE(check_set(petersen(), {1, 2, 3}, 0, 2).verified);
  CHECK_THROWS_AS(check_set(petersen(), {1, 99}, 0, 2), InputError);
}

TEST_CASE("multiplicity cap surfaces as a resource limit naming t") {
  SolveOptions opts;
  opts.max_multiplicity = 3;
  try {
    enumerate_kt_sets(petersen(), 0, 2, opts);
    FAIL("expected ResourceLimitError");
  } catch (const ResourceLimitError& e) {
    CHECK(e.multiplicity() == 4);
  }
}

TEST_CASE("threaded enumeration returns the canonical order") {
  SolveOptions four;
  four.threads = 4;
  CHECK(sets_of(enumerate_kt_sets(petersen(), 0, 2, four)) == kPetersen02);
  CHECK(sets_of(enumerate_kt_sets(petersen(), 1, 3, four)) == kPetersen13);
  for (const Graph& g : {octahedron(), fig4_grid()}) {
    for (int kappa = 0; kappa <= g.max_degree(); ++kappa)
      for (int tau = 1; tau <= g.max_degree(); ++tau)
        CHECK(sets_of(enumerate_kt_sets(g, kappa, tau, four)) ==
              sets_of(enumerate_kt_sets(g, kappa, tau)));
  }
}

TEST_CASE("solver equals the brute-force oracle on C6 for all queries") {
  Graph g = cycle(6);
  for (int kappa = 0; kappa <= 2; ++kappa)
    for (int tau = 1; tau <= 2; ++tau)
      CHECK(sets_of(enumerate_kt_sets(g, kappa, tau)) ==
            brute_force_kt_sets(g, kappa, tau));
}

TEST_CASE("query validation") {
  CHECK_THROWS_AS(find_kt_set(petersen(), -1, 2), InputError);
  CHECK_THROWS_AS(enumerate_kt_sets(petersen(), 0, -2), InputError);
}
