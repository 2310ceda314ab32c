// The replicator vector field of a polymatrix game and its generalized form
// with state-dependent group scalings.
//
// Component i in group a:  dx_i/dt = x_i * ((A x)_i - sum_{j in a} x_j (A x)_j).
// The subtracted term is group a's average payoff, so every group's
// coordinate sum is conserved and faces of the prism are invariant.
#pragma once

#include <functional>
#include <vector>

#include "polyrep/errors.hpp"
#include "polyrep/game.hpp"
#include "polyrep/matrix.hpp"
#include "polyrep/rational.hpp"
#include "polyrep/signature.hpp"

namespace polyrep {

template <typename T>
Vector<T> replicator_field(const Signature& sig, const Matrix<T>& payoff, const Vector<T>& x) {
  if (x.size() != sig.dimension()) throw DimensionMismatch("point size does not match signature");
  Vector<T> y = payoff * x;
  Vector<T> out(x.size());
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    T avg(0);
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) avg += x[i] * y[i];
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i)
      out[i] = x[i] * (y[i] - avg);
  }
  return out;
}

inline Vector<Rational> vector_field(const PolymatrixGame& g, const Vector<Rational>& x) {
  return replicator_field<Rational>(g.signature(), g.payoff(), x);
}

inline Vector<double> vector_field(const PolymatrixGame& g, const Vector<double>& x) {
  return replicator_field<double>(g.signature(), g.payoff_double(), x);
}

// One nowhere-zero scalar weight per group, evaluated on prism points.
struct GeneralizedScaling {
  std::vector<std::function<double(const Vector<double>&)>> weights;
};

// Field of the game with payoff A * D(x), D(x) = blockdiag(w_b(x) I), the
// weights frozen at the evaluation point. Throws ZeroScaling if some weight
// vanishes at x.
Vector<double> generalized_field(const PolymatrixGame& g, const GeneralizedScaling& scaling,
                                 const Vector<double>& x);

}  // namespace polyrep
