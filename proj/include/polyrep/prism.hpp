// Points of the phase-space prism (the product of the groups' simplices):
// validated construction, the interior predicate, vertices, and deterministic
// random sampling used by test sweeps and the CLI.
#pragma once

#include <cstdint>
#include <random>

#include "polyrep/errors.hpp"
#include "polyrep/game.hpp"
#include "polyrep/matrix.hpp"
#include "polyrep/rational.hpp"
#include "polyrep/signature.hpp"

namespace polyrep {

template <typename T>
struct PrismPoint {
  Vector<T> coords;
  bool interior = false;
};

template <typename T>
PrismPoint<T> make_prism_point(const Signature& sig, Vector<T> coords, const T& tol) {
  using std::abs;
  if (coords.size() != sig.dimension())
    throw DimensionMismatch("point size does not match signature");
  for (const T& c : coords)
    if (c < -tol) throw DomainError("negative coordinate in prism point");
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    T sum(0);
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) sum += coords[i];
    if (abs(sum - T(1)) > tol)
      throw DomainError("group " + std::to_string(a + 1) + " does not sum to 1");
  }
  PrismPoint<T> p{std::move(coords), true};
  for (const T& c : p.coords)
    if (!(c > T(0))) {
      p.interior = false;
      break;
    }
  return p;
}

inline PrismPoint<Rational> make_prism_point(const Signature& sig, Vector<Rational> coords) {
  return make_prism_point<Rational>(sig, std::move(coords), Rational(0));
}

// Barycenter: every strategy weighted equally within its group.
template <typename T = Rational>
Vector<T> uniform_point(const Signature& sig) {
  Vector<T> x(sig.dimension());
  for (std::size_t a = 0; a < sig.groups(); ++a)
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i)
      x[i] = T(1) / T(static_cast<int>(sig.size(a)));
  return x;
}

// The vertex supported on one strategy per group; the face must be a vertex.
Vector<Rational> vertex_point(const FaceIndexSet& vertex);

// Deterministic interior sample: coordinates drawn uniformly then normalized
// per group. Suitable for property sweeps, not a uniform law on the prism.
Vector<double> random_interior_point(const Signature& sig, std::mt19937_64& rng);

// Chart-coordinate sample with entries uniform in [-bound, bound].
Vector<double> random_chart_point(const Signature& sig, std::mt19937_64& rng, double bound = 2.0);

// Interior sample with small exact-rational coordinates.
Vector<Rational> random_interior_point_exact(const Signature& sig, std::mt19937_64& rng);

}  // namespace polyrep
