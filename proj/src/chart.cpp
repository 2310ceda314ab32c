#include "polyrep/chart.hpp"

#include <cmath>

namespace polyrep {

Matrix<Rational> chart_matrix(const Signature& sig) {
  Matrix<Rational> e(sig.chart_dimension(), sig.dimension());
  std::size_t row = 0;
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    std::size_t first = sig.offset(a);
    for (std::size_t j = 1; j < sig.size(a); ++j, ++row) {
      e(row, first) = 1;
      e(row, first + j) = -1;
    }
  }
  return e;
}

Vector<double> phi(const Signature& sig, const Vector<double>& u) {
  if (u.size() != sig.chart_dimension())
    throw DimensionMismatch("chart point size does not match signature");
  Vector<double> x(sig.dimension());
  std::size_t pos = 0;
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    std::size_t m = sig.size(a);
    double shift = 0.0;
    for (std::size_t j = 0; j + 1 < m; ++j) shift = std::max(shift, u[pos + j]);
    double denom = std::exp(-shift);
    for (std::size_t j = 0; j + 1 < m; ++j) denom += std::exp(u[pos + j] - shift);
    x[sig.offset(a)] = std::exp(-shift) / denom;
    for (std::size_t j = 0; j + 1 < m; ++j)
      x[sig.offset(a) + 1 + j] = std::exp(u[pos + j] - shift) / denom;
    pos += m - 1;
  }
  return x;
}

Vector<double> phi_inverse(const Signature& sig, const Vector<double>& x) {
  if (x.size() != sig.dimension()) throw DimensionMismatch("point size does not match signature");
  for (double c : x)
    if (!(c > 0.0)) throw BoundaryPoint("chart requires a strictly interior point");
  Vector<double> u(sig.chart_dimension());
  std::size_t pos = 0;
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    double pivot = x[sig.offset(a)];
    for (std::size_t j = 1; j < sig.size(a); ++j) u[pos++] = std::log(x[sig.offset(a) + j] / pivot);
  }
  return u;
}

Matrix<double> jacobian_phi(const Signature& sig, const Vector<double>& u) {
  Vector<double> x = phi(sig, u);
  Matrix<double> jac(sig.dimension(), sig.chart_dimension());
  std::size_t col0 = 0;
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    std::size_t first = sig.offset(a);
    std::size_t m = sig.size(a);
    for (std::size_t j = 0; j + 1 < m; ++j)
      for (std::size_t i = 0; i < m; ++i)
        jac(first + i, col0 + j) = x[first + i] * ((i == j + 1 ? 1.0 : 0.0) - x[first + j + 1]);
    col0 += m - 1;
  }
  return jac;
}

Vector<double> chart_field(const PolymatrixGame& g, const Vector<double>& u) {
  const Signature& sig = g.signature();
  Vector<double> y = g.payoff_double() * phi(sig, u);
  Vector<double> du(sig.chart_dimension());
  std::size_t pos = 0;
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    double pivot = y[sig.offset(a)];
    for (std::size_t j = 1; j < sig.size(a); ++j) du[pos++] = y[sig.offset(a) + j] - pivot;
  }
  return du;
}

}  // namespace polyrep
