#include "polyrep/prism.hpp"

namespace polyrep {

Vector<Rational> vertex_point(const FaceIndexSet& vertex) {
  if (!vertex.is_vertex()) throw NotVertex("face has more than one strategy in some group");
  Vector<Rational> x(vertex.parent_signature().dimension(), Rational(0));
  for (std::size_t i : vertex.indices()) x[i] = 1;
  return x;
}

Vector<double> random_interior_point(const Signature& sig, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.05, 1.0);
  Vector<double> x(sig.dimension());
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    double sum = 0;
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) {
      x[i] = unit(rng);
      sum += x[i];
    }
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) x[i] /= sum;
  }
  return x;
}

Vector<double> random_chart_point(const Signature& sig, std::mt19937_64& rng, double bound) {
  std::uniform_real_distribution<double> span(-bound, bound);
  Vector<double> u(sig.chart_dimension());
  for (double& e : u) e = span(rng);
  return u;
}

Vector<Rational> random_interior_point_exact(const Signature& sig, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> w(1, 12);
  Vector<Rational> x(sig.dimension());
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    Rational sum(0);
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) {
      x[i] = w(rng);
      sum += x[i];
    }
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) x[i] /= sum;
  }
  return x;
}

}  // namespace polyrep
