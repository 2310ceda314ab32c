// Exact linear algebra over the rationals: reduced row echelon form, rank,
// nullspace bases, and affine solve with explicit solution-set structure.
#pragma once

#include <optional>
#include <vector>

#include "polyrep/matrix.hpp"
#include "polyrep/rational.hpp"

namespace polyrep {

struct RowEchelon {
  Matrix<Rational> reduced;
  std::vector<std::size_t> pivot_cols;
};

RowEchelon rref(Matrix<Rational> m);

std::size_t rank(const Matrix<Rational>& m);

// Basis of { x : m x = 0 }, one vector per free column, in reduced echelon
// convention (free coordinate set to 1, pivots back-substituted).
std::vector<Vector<Rational>> nullspace(const Matrix<Rational>& m);

// Full solution set of m x = b. Empty optional means the system is
// inconsistent; a consistent system with only the zero solution comes back as
// particular = 0 with an empty nullspace.
struct LinearSolution {
  Vector<Rational> particular;
  std::vector<Vector<Rational>> nullspace;
};

std::optional<LinearSolution> solve_linear(const Matrix<Rational>& m, const Vector<Rational>& b);

}  // namespace polyrep
