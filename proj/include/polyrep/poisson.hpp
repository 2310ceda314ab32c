// The bivector field attached to a game, its constant chart-side reduction,
// and the structure checks that make "Poisson" more than a label.
//
// With T_x = blockdiag(x^a 1^t - I) and D_x = diag(x), the bivector is
//
//   pi(x) = -T_x D_x A D_x T_x^t,
//
// entrywise, for i in group a and j in group b,
//
//   pi_ij = x_i x_j (-a_ij + (A^{ab} x^b)_i + ((A^{ab})^t x^a)_j
//                    - (x^a)^t A^{ab} x^b).
//
// For skew A this is a Poisson structure whose expression in the log-ratio
// chart is the constant matrix B = -E A E^t; the kernel vectors of B give the
// invariants w . phi^{-1}(x) whose level sets carry the symplectic leaves.
#pragma once

#include <optional>
#include <vector>

#include "polyrep/chart.hpp"
#include "polyrep/game.hpp"
#include "polyrep/linalg.hpp"
#include "polyrep/matrix.hpp"
#include "polyrep/rational.hpp"

namespace polyrep {

// blockdiag(x^a 1^t - I), the factor that projects payoffs onto in-group
// differences; defined for any scalar type used by the bivector.
template <typename T>
Matrix<T> difference_projector(const Signature& sig, const Vector<T>& x) {
  Matrix<T> t(sig.dimension(), sig.dimension());
  for (std::size_t a = 0; a < sig.groups(); ++a)
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i)
      for (std::size_t j = sig.offset(a); j < sig.offset(a) + sig.size(a); ++j)
        t(i, j) = x[i] - (i == j ? T(1) : T(0));
  return t;
}

template <typename T>
Matrix<T> bivector(const Signature& sig, const Matrix<T>& payoff, const Vector<T>& x) {
  if (x.size() != sig.dimension()) throw DimensionMismatch("point size does not match signature");
  Matrix<T> scaled(payoff.rows(), payoff.cols());
  for (std::size_t i = 0; i < payoff.rows(); ++i)
    for (std::size_t j = 0; j < payoff.cols(); ++j) scaled(i, j) = x[i] * payoff(i, j) * x[j];
  Matrix<T> t = difference_projector(sig, x);
  Matrix<T> result = t * scaled * t.transposed();
  for (std::size_t i = 0; i < result.rows(); ++i)
    for (std::size_t j = 0; j < result.cols(); ++j) result(i, j) = -result(i, j);
  return result;
}

inline Matrix<Rational> bivector(const PolymatrixGame& g, const Vector<Rational>& x) {
  return bivector<Rational>(g.signature(), g.payoff(), x);
}
inline Matrix<double> bivector(const PolymatrixGame& g, const Vector<double>& x) {
  return bivector<double>(g.signature(), g.payoff_double(), x);
}

// Single entry straight from the four-term formula; used to cross-check the
// matrix-product form.
template <typename T>
T bivector_entry(const Signature& sig, const Matrix<T>& payoff, const Vector<T>& x, std::size_t i,
                 std::size_t j) {
  std::size_t a = sig.group_of(i), b = sig.group_of(j);
  T row_avg(0), col_avg(0), full_avg(0);
  for (std::size_t c = sig.offset(b); c < sig.offset(b) + sig.size(b); ++c)
    row_avg += payoff(i, c) * x[c];
  for (std::size_t r = sig.offset(a); r < sig.offset(a) + sig.size(a); ++r)
    col_avg += payoff(r, j) * x[r];
  for (std::size_t r = sig.offset(a); r < sig.offset(a) + sig.size(a); ++r)
    for (std::size_t c = sig.offset(b); c < sig.offset(b) + sig.size(b); ++c)
      full_avg += x[r] * payoff(r, c) * x[c];
  return x[i] * x[j] * (-payoff(i, j) + row_avg + col_avg - full_avg);
}

// Constant chart-side data of a skew game's bivector.
struct PoissonData {
  Matrix<Rational> chart;                // E
  Matrix<Rational> reduced;              // B = -E A E^t, (n-p) x (n-p), skew
  std::vector<Vector<Rational>> kernel;  // exact basis of ker B
  std::size_t rank = 0;                  // rank of B, always even
};

// Requires a skew payoff (throws NotSkew): only then is the reduction a
// Poisson structure rather than a bookkeeping matrix.
PoissonData build_poisson_data(const PolymatrixGame& g);

// Max-norm residual of the pushforward identity
// jacobian_phi(u) B jacobian_phi(u)^t = pi(phi(u)); zero means phi is a
// Poisson map onto the interior. Requires a skew payoff.
double check_poisson_map(const PolymatrixGame& g, const Vector<double>& u);

// Largest Jacobi-identity cyclic sum over coordinate triples, by central
// finite differences of the bivector entries. Requires a skew payoff.
double jacobi_residual(const PolymatrixGame& g, const Vector<double>& x, double h = 1e-5);

// Same residual with exact rational arithmetic; the bivector's partial
// derivatives come from the product rule on the T D A D T^t factorization.
// Zero is an identity, not an approximation.
Rational jacobi_residual_exact(const PolymatrixGame& g, const Vector<Rational>& x);

// pi(x) applied to a gradient; rejects non-finite gradients.
Vector<double> hamiltonian_field(const PolymatrixGame& g, const Vector<double>& grad,
                                 const Vector<double>& x);

// Values of the leaf invariants w . phi^{-1}(x), one per kernel vector.
Vector<double> leaf_invariants(const PoissonData& data, const Signature& sig,
                               const Vector<double>& x);

// Same, evaluated directly on a chart point.
Vector<double> leaf_invariants_at_chart(const PoissonData& data, const Vector<double>& u);

}  // namespace polyrep
