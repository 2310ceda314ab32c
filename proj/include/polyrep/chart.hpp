// Log-ratio chart on the interior of the prism.
//
// Per group, the first strategy acts as the pivot: the chart coordinates are
// u_j = log(x_{j+1} / x_1), j = 1..n_a-1, collected across groups into a
// vector of dimension n - p. Its inverse phi is a per-group softmax with the
// pivot slot prepended. The rows of the difference matrix E are
// e_first - e_{first+j}, so the chart pushes the replicator field forward to
// du/dt = -E A phi(u).
#pragma once

#include "polyrep/game.hpp"
#include "polyrep/matrix.hpp"
#include "polyrep/rational.hpp"
#include "polyrep/signature.hpp"

namespace polyrep {

// E, the (n-p) x n block-diagonal matrix of pivot-vs-rest differences.
Matrix<Rational> chart_matrix(const Signature& sig);

// Chart inverse: interior prism point with group slices
// (1, e^{u_1}, ..., e^{u_{m-1}}) / (1 + sum e^{u_j}), computed shift-stably
// so large chart coordinates underflow to 0 instead of overflowing.
Vector<double> phi(const Signature& sig, const Vector<double>& u);

// Chart map; requires a strictly interior point, else throws BoundaryPoint.
Vector<double> phi_inverse(const Signature& sig, const Vector<double>& x);

// n x (n-p) Jacobian of phi at u, block-diagonal with entries
// x_i (delta_{i,j+1} - x_{j+1}) inside each group.
Matrix<double> jacobian_phi(const Signature& sig, const Vector<double>& u);

// The replicator field seen through the chart: -E A phi(u).
Vector<double> chart_field(const PolymatrixGame& g, const Vector<double>& u);

}  // namespace polyrep
