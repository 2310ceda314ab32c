#include "polyrep/conservative.hpp"

#include <cmath>

#include "polyrep/prism.hpp"

namespace polyrep {

namespace {

bool all_positive(const Vector<Rational>& v) {
  for (const Rational& e : v)
    if (!(e > 0)) return false;
  return true;
}

// The affine system defining formal equilibria: consecutive payoff
// differences within each group vanish, group sums equal one.
void equilibrium_system(const PolymatrixGame& g, Matrix<Rational>& m, Vector<Rational>& rhs) {
  const Signature& sig = g.signature();
  const std::size_t n = sig.dimension();
  m = Matrix<Rational>(n, n);
  rhs.assign(n, Rational(0));
  std::size_t row = 0;
  for (std::size_t a = 0; a < sig.groups(); ++a)
    for (std::size_t i = sig.offset(a); i + 1 < sig.offset(a) + sig.size(a); ++i, ++row)
      for (std::size_t j = 0; j < n; ++j) m(row, j) = g.payoff()(i, j) - g.payoff()(i + 1, j);
  for (std::size_t a = 0; a < sig.groups(); ++a, ++row) {
    for (std::size_t j = sig.offset(a); j < sig.offset(a) + sig.size(a); ++j) m(row, j) = 1;
    rhs[row] = 1;
  }
}

bool solves_equilibrium_system(const PolymatrixGame& g, const Vector<Rational>& q) {
  const Signature& sig = g.signature();
  Vector<Rational> y = g.payoff() * q;
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    Rational sum(0);
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) {
      if (y[i] != y[sig.offset(a)]) return false;
      sum += q[i];
    }
    if (sum != 1) return false;
  }
  return true;
}

// Interior representative on a line: intersect { p + t v > 0 } exactly and
// take the midpoint of the resulting t-interval.
std::optional<Vector<Rational>> interior_on_line(const Vector<Rational>& p,
                                                 const Vector<Rational>& v) {
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (v[i] == 0) {
      if (!(p[i] > 0)) return std::nullopt;
    } else {
      Rational bound = -p[i] / v[i];
      if (v[i] > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
  }
  Rational t;
  if (lo && hi) {
    if (!(*lo < *hi)) return std::nullopt;
    t = (*lo + *hi) / 2;
  } else if (lo) {
    t = *lo + 1;
  } else if (hi) {
    t = *hi - 1;
  } else {
    t = 0;
  }
  Vector<Rational> q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[i] = p[i] + t * v[i];
  return q;
}

std::optional<Vector<Rational>> interior_by_sweep(const Vector<Rational>& p,
                                                  const std::vector<Vector<Rational>>& dirs) {
  if (dirs.size() > 3) return std::nullopt;
  std::vector<Rational> grid;
  for (int k = -8; k <= 8; ++k) grid.push_back(make_rational(k, 4));

  std::vector<std::size_t> pick(dirs.size(), 0);
  while (true) {
    Vector<Rational> q = p;
    for (std::size_t d = 0; d < dirs.size(); ++d)
      for (std::size_t i = 0; i < q.size(); ++i) q[i] += grid[pick[d]] * dirs[d][i];
    if (all_positive(q)) return q;

    std::size_t d = 0;
    while (d < pick.size() && ++pick[d] == grid.size()) pick[d++] = 0;
    if (d == pick.size()) return std::nullopt;
  }
}

Vector<Rational> min_norm_representative(const Vector<Rational>& p,
                                         const std::vector<Vector<Rational>>& dirs) {
  const std::size_t d = dirs.size();
  Matrix<Rational> gram(d, d);
  Vector<Rational> rhs(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) gram(i, j) = dot(dirs[i], dirs[j]);
    rhs[i] = -dot(dirs[i], p);
  }
  auto sol = solve_linear(gram, rhs);
  Vector<Rational> q = p;
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += sol->particular[k] * dirs[k][i];
  return q;
}

}  // namespace

std::optional<FormalEquilibrium> formal_equilibria(const PolymatrixGame& g) {
  Matrix<Rational> m;
  Vector<Rational> rhs;
  equilibrium_system(g, m, rhs);
  auto sol = solve_linear(m, rhs);
  if (!sol) return std::nullopt;

  FormalEquilibrium eq;
  eq.directions = std::move(sol->nullspace);

  Vector<Rational> uniform = uniform_point<Rational>(g.signature());
  if (solves_equilibrium_system(g, uniform)) {
    eq.point = std::move(uniform);
  } else if (eq.directions.empty()) {
    eq.point = std::move(sol->particular);
  } else if (eq.directions.size() == 1) {
    if (auto q = interior_on_line(sol->particular, eq.directions[0]))
      eq.point = std::move(*q);
    else
      eq.point = min_norm_representative(sol->particular, eq.directions);
  } else if (auto q = interior_by_sweep(sol->particular, eq.directions)) {
    eq.point = std::move(*q);
  } else {
    eq.point = min_norm_representative(sol->particular, eq.directions);
  }
  eq.interior = all_positive(eq.point);
  return eq;
}

VerifyResult verify_conservative(const PolymatrixGame& g, const ConservativeDecomposition& d) {
  const Signature& sig = g.signature();
  const std::size_t n = sig.dimension();
  if (d.skew_model.rows() != n || d.skew_model.cols() != n || d.offsets.rows() != n ||
      d.offsets.cols() != n)
    throw DimensionMismatch("decomposition matrices do not match the game");
  if (d.scaling.size() != sig.groups() || d.equilibrium.size() != n)
    throw DimensionMismatch("decomposition vectors do not match the game");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (d.skew_model(i, j) + d.skew_model(j, i) != 0) return {false, "skew_model not skew"};

  for (const Rational& l : d.scaling)
    if (l == 0) return {false, "scaling has a zero entry"};

  for (std::size_t a = 0; a < sig.groups(); ++a)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = sig.offset(a) + 1; i < sig.offset(a) + sig.size(a); ++i)
        if (d.offsets(i, j) != d.offsets(sig.offset(a), j))
          return {false, "offsets not constant down group columns"};

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational expected = d.skew_model(i, j) * d.scaling[sig.group_of(j)] + d.offsets(i, j);
      if (g.payoff()(i, j) != expected) return {false, "payoff differs from A0 D + C"};
    }

  if (!solves_equilibrium_system(g, d.equilibrium))
    return {false, "equilibrium is not a formal equilibrium"};
  return {true, ""};
}

std::pair<PolymatrixGame, ConservativeDecomposition> make_conservative(
    const Signature& sig, const Matrix<Rational>& skew_model, const Vector<Rational>& qt) {
  const std::size_t n = sig.dimension();
  if (skew_model.rows() != n || skew_model.cols() != n)
    throw DimensionMismatch("skew model size does not match signature");
  if (qt.size() != n) throw DimensionMismatch("equilibrium size does not match signature");

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (skew_model(i, j) + skew_model(j, i) != 0)
        throw SkewViolation("model matrix is not skew");

  Vector<Rational> y = skew_model * qt;
  for (std::size_t a = 0; a < sig.groups(); ++a)
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i)
      if (y[i] != y[sig.offset(a)])
        throw BlockConstantViolation("A0 qt is not constant within group " + std::to_string(a + 1));

  ConservativeDecomposition d;
  d.skew_model = skew_model;
  d.scaling.assign(sig.groups(), Rational(0));
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i)
      d.scaling[a] += qt[i];
    if (d.scaling[a] == 0)
      throw ZeroBlockSum("group " + std::to_string(a + 1) + " of qt sums to zero");
  }

  Matrix<Rational> payoff(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      payoff(i, j) = skew_model(i, j) * d.scaling[sig.group_of(j)];

  d.offsets = Matrix<Rational>(n, n);
  d.equilibrium.assign(n, Rational(0));
  for (std::size_t j = 0; j < n; ++j) d.equilibrium[j] = qt[j] / d.scaling[sig.group_of(j)];

  return {PolymatrixGame(sig, std::move(payoff)), std::move(d)};
}

std::optional<ConservativeDecomposition> detect_conservative(const PolymatrixGame& g) {
  const Signature& sig = g.signature();
  const std::size_t n = sig.dimension();
  const std::size_t p = sig.groups();

  // Unknowns: mu_1..mu_p, then for each ordered group pair (a,b) the vector
  // d^{ab} of length n_b. Skewness of (A - C) D^{-1} reads entrywise as
  //   mu_b a_ij + mu_a a_ji - d^{ab}_j - d^{ba}_i = 0.
  std::vector<std::size_t> dstart(p * p + 1, p);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      dstart[a * p + b + 1] = dstart[a * p + b] + sig.size(b);
  const std::size_t unknowns = dstart[p * p];

  Matrix<Rational> system(n * n, unknowns);
  std::size_t row = 0;
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i)
        for (std::size_t j = sig.offset(b); j < sig.offset(b) + sig.size(b); ++j, ++row) {
          system(row, b) += g.payoff()(i, j);
          system(row, a) += g.payoff()(j, i);
          system(row, dstart[a * p + b] + (j - sig.offset(b))) -= 1;
          system(row, dstart[b * p + a] + (i - sig.offset(a))) -= 1;
        }

  std::vector<Vector<Rational>> basis = nullspace(system);
  if (basis.empty()) return std::nullopt;

  // Need a vector with every mu_a nonzero. Along t(s) = (1, s, s^2, ...) each
  // mu_a is a polynomial in s of degree < basis.size(); unless identically
  // zero it has fewer roots than the sweep length.
  for (std::size_t a = 0; a < p; ++a) {
    bool all_zero = true;
    for (const auto& v : basis)
      if (v[a] != 0) all_zero = false;
    if (all_zero) return std::nullopt;
  }

  Vector<Rational> chosen;
  const std::size_t sweep = p * basis.size() + 1;
  for (std::size_t s = 1; s <= sweep && chosen.empty(); ++s) {
    Vector<Rational> v(unknowns, Rational(0));
    Rational power(1);
    for (const auto& w : basis) {
      for (std::size_t i = 0; i < unknowns; ++i) v[i] += power * w[i];
      power *= static_cast<long>(s);
    }
    bool ok = true;
    for (std::size_t a = 0; a < p; ++a)
      if (v[a] == 0) ok = false;
    if (ok) chosen = std::move(v);
  }
  if (chosen.empty()) return std::nullopt;

  Rational gauge = chosen[0];
  for (Rational& e : chosen) e /= gauge;

  ConservativeDecomposition d;
  d.scaling.assign(p, Rational(0));
  for (std::size_t a = 0; a < p; ++a) d.scaling[a] = 1 / chosen[a];

  d.offsets = Matrix<Rational>(n, n);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i)
        for (std::size_t j = sig.offset(b); j < sig.offset(b) + sig.size(b); ++j)
          d.offsets(i, j) = chosen[dstart[a * p + b] + (j - sig.offset(b))] * d.scaling[b];

  d.skew_model = Matrix<Rational>(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      d.skew_model(i, j) =
          (g.payoff()(i, j) - d.offsets(i, j)) * chosen[sig.group_of(j)];

  auto eq = formal_equilibria(g);
  if (!eq) return std::nullopt;
  d.equilibrium = eq->point;

  return d;
}

double hamiltonian(const Signature& sig, const HamiltonianSpec& spec, const Vector<double>& x) {
  if (x.size() != sig.dimension() || spec.equilibrium.size() != sig.dimension() ||
      spec.scaling.size() != sig.groups())
    throw DimensionMismatch("hamiltonian data does not match signature");
  double h = 0;
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    double lambda = to_double(spec.scaling[a]);
    for (std::size_t j = sig.offset(a); j < sig.offset(a) + sig.size(a); ++j) {
      if (spec.equilibrium[j] == 0) continue;
      if (!(x[j] > 0.0)) throw DomainError("hamiltonian undefined: x_j <= 0 where q_j != 0");
      h += lambda * to_double(spec.equilibrium[j]) * std::log(x[j]);
    }
  }
  return h;
}

Vector<double> hamiltonian_gradient(const Signature& sig, const HamiltonianSpec& spec,
                                    const Vector<double>& x) {
  if (x.size() != sig.dimension() || spec.equilibrium.size() != sig.dimension() ||
      spec.scaling.size() != sig.groups())
    throw DimensionMismatch("hamiltonian data does not match signature");
  Vector<double> grad(x.size(), 0.0);
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    double lambda = to_double(spec.scaling[a]);
    for (std::size_t j = sig.offset(a); j < sig.offset(a) + sig.size(a); ++j) {
      if (spec.equilibrium[j] == 0) continue;
      if (x[j] == 0.0) throw DomainError("gradient undefined: x_j = 0 where q_j != 0");
      grad[j] = lambda * to_double(spec.equilibrium[j]) / x[j];
    }
  }
  return grad;
}

Vector<double> xi_form(const Signature& sig, const Vector<Rational>& q,
                       const GeneralizedScaling& scaling, const Vector<double>& x) {
  if (q.size() != sig.dimension() || scaling.weights.size() != sig.groups())
    throw DimensionMismatch("xi data does not match signature");
  Vector<double> xi(x.size(), 0.0);
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    double w = scaling.weights[a](x);
    if (w == 0.0) throw ZeroScaling("scaling weight " + std::to_string(a + 1) + " vanishes");
    for (std::size_t j = sig.offset(a); j < sig.offset(a) + sig.size(a); ++j) {
      if (q[j] == 0) continue;
      if (x[j] == 0.0) throw DomainError("xi undefined: x_j = 0 where q_j != 0");
      xi[j] = w * to_double(q[j]) / x[j];
    }
  }
  return xi;
}

}  // namespace polyrep
