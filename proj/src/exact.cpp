#include "ktreg/exact.hpp"

#include <stdexcept>

namespace ktreg {

namespace {

RationalMatrix shifted(const RationalMatrix& a, long lambda) {
  if (a.rows() != a.cols()) throw InputError("matrix must be square");
  RationalMatrix m = a;
  for (Eigen::Index i = 0; i < m.rows(); ++i) m(i, i) -= Rational(lambda);
  return m;
}

}  // namespace

RowEchelon reduced_row_echelon(RationalMatrix m) {
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  RowEchelon re;
  Eigen::Index pr = 0;  // next pivot row
  for (Eigen::Index c = 0; c < cols && pr < rows; ++c) {
    Eigen::Index sel = -1;
    for (Eigen::Index r = pr; r < rows; ++r) {
      if (!m(r, c).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pr) m.row(sel).swap(m.row(pr));
    Rational inv = Rational(1) / m(pr, c);
    for (Eigen::Index j = c; j < cols; ++j) m(pr, j) *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == pr || m(r, c).is_zero()) continue;
      Rational f = m(r, c);
      for (Eigen::Index j = c; j < cols; ++j) m(r, j) -= f * m(pr, j);
    }
    re.pivot_cols.push_back(static_cast<int>(c));
    ++pr;
  }
  re.rank = static_cast<int>(pr);
  re.mat = std::move(m);
  return re;
}

ParticularSolution solve_particular(const RationalMatrix& a, long lambda, long tau) {
  const Eigen::Index n = a.rows();
  RationalMatrix aug(n, n + 1);
  aug.leftCols(n) = shifted(a, lambda);
  aug.col(n) = RationalVector::Constant(n, Rational(tau));
  RowEchelon re = reduced_row_echelon(std::move(aug));

  ParticularSolution sol;
  sol.x = RationalVector::Zero(n);
  for (size_t k = 0; k < re.pivot_cols.size(); ++k) {
    if (re.pivot_cols[k] == static_cast<int>(n)) return sol;  // row 0 = 1: inconsistent
    sol.x(re.pivot_cols[k]) = re.mat(static_cast<Eigen::Index>(k), n);
  }
  sol.consistent = true;
  return sol;
}

KernelBasis kernel_basis(const RationalMatrix& a, long lambda) {
  const Eigen::Index n = a.rows();
  RowEchelon re = reduced_row_echelon(shifted(a, lambda));
  const int t = static_cast<int>(n) - re.rank;

  KernelBasis kb;
  kb.basis = RationalMatrix::Zero(n, t);
  if (t == 0) return kb;

  // Raw basis from the echelon form: one column per free variable, with a
  // natural identity on the free positions.
  std::vector<bool> is_pivot(n, false);
  for (int c : re.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (Eigen::Index c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(static_cast<int>(c));

  RationalMatrix raw = RationalMatrix::Zero(n, t);
  for (int j = 0; j < t; ++j) {
    raw(free_cols[j], j) = Rational(1);
    for (size_t k = 0; k < re.pivot_cols.size(); ++k)
      raw(re.pivot_cols[k], j) = -re.mat(static_cast<Eigen::Index>(k), free_cols[j]);
  }

  // Greedy scan from row 1 upward picks the lexicographically smallest set of
  // t rows on which raw has full rank.
  std::vector<int> chosen;
  RationalMatrix elim(t, t);  // row echelon workspace over chosen rows
  int have = 0;
  for (Eigen::Index r = 0; r < n && have < t; ++r) {
    RationalVector cand = raw.row(r).transpose();
    RationalVector reduced = cand;
    // reduce against rows already in echelon form
    for (int i = 0; i < have; ++i) {
      int lead = -1;
      for (int j = 0; j < t; ++j) {
        if (!elim(i, j).is_zero()) {
          lead = j;
          break;
        }
      }
      if (lead >= 0 && !reduced(lead).is_zero()) {
        Rational f = reduced(lead) / elim(i, lead);
        for (int j = 0; j < t; ++j) reduced(j) -= f * elim(i, j);
      }
    }
    bool nonzero = false;
    for (int j = 0; j < t; ++j)
      if (!reduced(j).is_zero()) {
        nonzero = true;
        break;
      }
    if (nonzero) {
      elim.row(have) = reduced.transpose();
      chosen.push_back(static_cast<int>(r));
      ++have;
    }
  }
  if (have != t) throw std::logic_error("kernel basis rows not found");

  // Normalize: right-multiply by the inverse of the chosen t x t submatrix so
  // the chosen rows become the identity.
  RationalMatrix sub(t, t);
  for (int i = 0; i < t; ++i) sub.row(i) = raw.row(chosen[i]);
  RationalMatrix inv_aug(t, 2 * t);
  inv_aug.leftCols(t) = sub;
  inv_aug.rightCols(t) = RationalMatrix::Identity(t, t);
  RowEchelon inv_re = reduced_row_echelon(std::move(inv_aug));
  if (inv_re.rank != t) throw std::logic_error("pivot submatrix not invertible");
  RationalMatrix inv = inv_re.mat.rightCols(t);

  kb.basis = raw * inv;
  kb.pivot_rows.reserve(t);
  for (int r : chosen) kb.pivot_rows.push_back(r + 1);
  return kb;
}

int integer_eigen_multiplicity(const RationalMatrix& a, long lambda) {
  RowEchelon re = reduced_row_echelon(shifted(a, lambda));
  return static_cast<int>(a.rows()) - re.rank;
}

}  // namespace ktreg
