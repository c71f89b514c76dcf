#pragma once

#include <vector>

#include "ktreg/graph.hpp"
#include "ktreg/rational.hpp"

namespace ktreg {

// Reduced row echelon form with a fixed pivot rule: columns are scanned left
// to right and the pivot is the first unused row with a nonzero entry. No
// magnitude pivoting; over exact rationals the rule only fixes determinism.
struct RowEchelon {
  RationalMatrix mat;
  std::vector<int> pivot_cols;  // 0-based, one per pivot row, ascending
  int rank = 0;
};

RowEchelon reduced_row_echelon(RationalMatrix m);

// Canonical particular solution of (A - lambda I) x = tau * ones: free
// variables (non-pivot columns of the echelon form) are set to zero.
// consistent == false iff the right-hand side is outside the column space.
struct ParticularSolution {
  RationalVector x;
  bool consistent = false;
};

ParticularSolution solve_particular(const RationalMatrix& a, long lambda, long tau);

// Basis of the nullspace of A - lambda I in the normal form that makes the
// 0-1 search a choice of bits: the rows indexed by pivot_rows form a t x t
// identity, so a kernel element is determined by its values on pivot_rows.
// pivot_rows is the lexicographically smallest vertex subset over which such
// a basis exists, which makes the basis itself canonical.
struct KernelBasis {
  RationalMatrix basis;            // n x t
  std::vector<Vertex> pivot_rows;  // 1-based, ascending

  int t() const { return static_cast<int>(pivot_rows.size()); }
};

KernelBasis kernel_basis(const RationalMatrix& a, long lambda);

// Exact nullity of A - lambda I: the multiplicity of lambda when it is an
// eigenvalue, 0 otherwise.
int integer_eigen_multiplicity(const RationalMatrix& a, long lambda);

}  // namespace ktreg
