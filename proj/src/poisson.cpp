#include "polyrep/poisson.hpp"

#include <cmath>

namespace polyrep {

namespace {

void require_skew(const PolymatrixGame& g, const char* where) {
  if (!g.is_skew()) throw NotSkew(std::string(where) + " requires a skew payoff matrix");
}

}  // namespace

PoissonData build_poisson_data(const PolymatrixGame& g) {
  require_skew(g, "build_poisson_data");
  PoissonData data;
  data.chart = chart_matrix(g.signature());
  Matrix<Rational> product = data.chart * g.payoff() * data.chart.transposed();
  for (std::size_t i = 0; i < product.rows(); ++i)
    for (std::size_t j = 0; j < product.cols(); ++j) product(i, j) = -product(i, j);
  data.reduced = std::move(product);
  data.kernel = nullspace(data.reduced);
  data.rank = data.reduced.rows() - data.kernel.size();
  return data;
}

double check_poisson_map(const PolymatrixGame& g, const Vector<double>& u) {
  require_skew(g, "check_poisson_map");
  const Signature& sig = g.signature();
  PoissonData data = build_poisson_data(g);
  Matrix<double> jac = jacobian_phi(sig, u);
  Matrix<double> pushforward = jac * to_double(data.reduced) * jac.transposed();
  Matrix<double> direct = bivector(g, phi(sig, u));
  return max_abs(pushforward - direct);
}

double jacobi_residual(const PolymatrixGame& g, const Vector<double>& x, double h) {
  require_skew(g, "jacobi_residual");
  const Signature& sig = g.signature();
  const std::size_t n = sig.dimension();

  Matrix<double> pi = bivector(g, x);
  std::vector<Matrix<double>> dpi(n);
  Vector<double> probe = x;
  for (std::size_t l = 0; l < n; ++l) {
    probe[l] = x[l] + h;
    Matrix<double> plus = bivector(g, probe);
    probe[l] = x[l] - h;
    Matrix<double> minus = bivector(g, probe);
    probe[l] = x[l];
    dpi[l] = Matrix<double>(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dpi[l](i, j) = (plus(i, j) - minus(i, j)) / (2 * h);
  }

  double worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        double sum = 0;
        for (std::size_t l = 0; l < n; ++l)
          sum += pi(i, l) * dpi[l](j, k) + pi(j, l) * dpi[l](k, i) + pi(k, l) * dpi[l](i, j);
        worst = std::max(worst, std::abs(sum));
      }
  return worst;
}

Rational jacobi_residual_exact(const PolymatrixGame& g, const Vector<Rational>& x) {
  require_skew(g, "jacobi_residual_exact");
  const Signature& sig = g.signature();
  const std::size_t n = sig.dimension();
  const Matrix<Rational>& a = g.payoff();

  Matrix<Rational> t = difference_projector(sig, x);
  Matrix<Rational> d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = x[i];

  Matrix<Rational> ad = a * d;
  Matrix<Rational> da = d * a;
  Matrix<Rational> dad = d * ad;
  Matrix<Rational> tt = t.transposed();
  Matrix<Rational> dad_tt = dad * tt;
  Matrix<Rational> ad_tt = ad * tt;
  Matrix<Rational> tda = t * da;
  Matrix<Rational> tdad = t * dad;
  Matrix<Rational> pi = tdad * tt;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pi(i, j) = -pi(i, j);

  // d pi / d x_l assembled from the product rule: the T-factor derivative
  // U_l has a single nonzero row (index l, ones across l's group), and the
  // D-factor derivative is the unit matrix E_ll.
  std::vector<Matrix<Rational>> dpi(n, Matrix<Rational>(n, n));
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t grp = sig.group_of(l);
    std::size_t lo = sig.offset(grp), hi = sig.offset(grp) + sig.size(grp);
    Matrix<Rational>& out = dpi[l];

    // U_l (D A D T^t): row l picks up the group-column sums.
    for (std::size_t j = 0; j < n; ++j) {
      Rational s(0);
      for (std::size_t c = lo; c < hi; ++c) s += dad_tt(c, j);
      out(l, j) += s;
    }
    // (T D A D) U_l^t: column l symmetrically.
    for (std::size_t i = 0; i < n; ++i) {
      Rational s(0);
      for (std::size_t c = lo; c < hi; ++c) s += tdad(i, c);
      out(i, l) += s;
    }
    // T E_ll (A D T^t): outer product of T's column l with row l of A D T^t.
    for (std::size_t i = 0; i < n; ++i) {
      if (t(i, l) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += t(i, l) * ad_tt(l, j);
    }
    // (T D A) E_ll T^t: outer product of T D A's column l with T's column l.
    for (std::size_t i = 0; i < n; ++i) {
      if (tda(i, l) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += tda(i, l) * t(j, l);
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) = -out(i, j);
  }

  Rational worst(0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Rational sum(0);
        for (std::size_t l = 0; l < n; ++l)
          sum += pi(i, l) * dpi[l](j, k) + pi(j, l) * dpi[l](k, i) + pi(k, l) * dpi[l](i, j);
        Rational mag = abs(sum);
        if (mag > worst) worst = mag;
      }
  return worst;
}

Vector<double> hamiltonian_field(const PolymatrixGame& g, const Vector<double>& grad,
                                 const Vector<double>& x) {
  if (grad.size() != g.signature().dimension())
    throw DimensionMismatch("gradient size does not match signature");
  for (double e : grad)
    if (!std::isfinite(e)) throw NonFiniteGradient("gradient has a non-finite entry");
  return bivector(g, x) * grad;
}

Vector<double> leaf_invariants(const PoissonData& data, const Signature& sig,
                               const Vector<double>& x) {
  return leaf_invariants_at_chart(data, phi_inverse(sig, x));
}

Vector<double> leaf_invariants_at_chart(const PoissonData& data, const Vector<double>& u) {
  Vector<double> values;
  values.reserve(data.kernel.size());
  for (const Vector<Rational>& w : data.kernel) {
    if (w.size() != u.size()) throw DimensionMismatch("kernel vector size does not match chart");
    double s = 0;
    for (std::size_t i = 0; i < u.size(); ++i) s += to_double(w[i]) * u[i];
    values.push_back(s);
  }
  return values;
}

}  // namespace polyrep
