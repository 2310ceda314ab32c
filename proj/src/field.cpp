#include "polyrep/field.hpp"

namespace polyrep {

Vector<double> generalized_field(const PolymatrixGame& g, const GeneralizedScaling& scaling,
                                 const Vector<double>& x) {
  const Signature& sig = g.signature();
  if (scaling.weights.size() != sig.groups())
    throw DimensionMismatch("one scaling weight per group required");
  if (x.size() != sig.dimension()) throw DimensionMismatch("point size does not match signature");

  Vector<double> scaled = x;
  for (std::size_t b = 0; b < sig.groups(); ++b) {
    double w = scaling.weights[b](x);
    if (w == 0.0) throw ZeroScaling("scaling weight " + std::to_string(b + 1) + " vanishes");
    for (std::size_t j = sig.offset(b); j < sig.offset(b) + sig.size(b); ++j) scaled[j] *= w;
  }

  Vector<double> y = g.payoff_double() * scaled;
  Vector<double> out(x.size());
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    double avg = 0;
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) avg += x[i] * y[i];
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i)
      out[i] = x[i] * (y[i] - avg);
  }
  return out;
}

}  // namespace polyrep
