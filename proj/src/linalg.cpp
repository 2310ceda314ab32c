#include "polyrep/linalg.hpp"

#include <algorithm>

namespace polyrep {

namespace {

// Pivot on the largest entry in the column; with exact arithmetic this only
// tames intermediate numerator/denominator growth.
std::size_t pick_pivot(const Matrix<Rational>& m, std::size_t row0, std::size_t col) {
  std::size_t best = m.rows();
  Rational best_mag(0);
  for (std::size_t r = row0; r < m.rows(); ++r) {
    Rational mag = abs(m(r, col));
    if (mag > best_mag) {
      best_mag = mag;
      best = r;
    }
  }
  return best;
}

void swap_rows(Matrix<Rational>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

RowEchelon rref(Matrix<Rational> m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = pick_pivot(m, row, col);
    if (p == m.rows()) continue;
    swap_rows(m, row, p);

    Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    m(row, col) = 1;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(r, j) -= f * m(row, j);
      m(r, col) = 0;
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix<Rational>& m) { return rref(m).pivot_cols.size(); }

std::vector<Vector<Rational>> nullspace(const Matrix<Rational>& m) {
  RowEchelon e = rref(m);
  std::vector<Vector<Rational>> basis;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  for (std::size_t freec = 0; freec < m.cols(); ++freec) {
    if (is_pivot[freec]) continue;
    Vector<Rational> v(m.cols(), Rational(0));
    v[freec] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.reduced(k, freec);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<LinearSolution> solve_linear(const Matrix<Rational>& m, const Vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_linear shape mismatch");

  Matrix<Rational> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }

  RowEchelon e = rref(std::move(aug));
  for (std::size_t c : e.pivot_cols)
    if (c == m.cols()) return std::nullopt;

  LinearSolution sol;
  sol.particular.assign(m.cols(), Rational(0));
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k)
    sol.particular[e.pivot_cols[k]] = e.reduced(k, m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t freec = 0; freec < m.cols(); ++freec) {
    if (is_pivot[freec]) continue;
    Vector<Rational> v(m.cols(), Rational(0));
    v[freec] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) v[e.pivot_cols[k]] = -e.reduced(k, freec);
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

}  // namespace polyrep
