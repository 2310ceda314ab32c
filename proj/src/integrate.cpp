#include "polyrep/integrate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include "polyrep/chart.hpp"
#include "polyrep/field.hpp"
#include "polyrep/prism.hpp"

namespace polyrep {

namespace {

using Rhs = std::function<Vector<double>(const Vector<double>&)>;

bool finite(const Vector<double>& v) {
  for (double e : v)
    if (!std::isfinite(e)) return false;
  return true;
}

// Dormand-Prince 5(4) pair, FSAL.
constexpr double C2 = 1.0 / 5, C3 = 3.0 / 10, C4 = 4.0 / 5, C5 = 8.0 / 9;
constexpr double A21 = 1.0 / 5;
constexpr double A31 = 3.0 / 40, A32 = 9.0 / 40;
constexpr double A41 = 44.0 / 45, A42 = -56.0 / 15, A43 = 32.0 / 9;
constexpr double A51 = 19372.0 / 6561, A52 = -25360.0 / 2187, A53 = 64448.0 / 6561,
                 A54 = -212.0 / 729;
constexpr double A61 = 9017.0 / 3168, A62 = -355.0 / 33, A63 = 46732.0 / 5247, A64 = 49.0 / 176,
                 A65 = -5103.0 / 18656;
constexpr double B1 = 35.0 / 384, B3 = 500.0 / 1113, B4 = 125.0 / 192, B5 = -2187.0 / 6784,
                 B6 = 11.0 / 84;
// Difference between the 5th- and 4th-order weights.
constexpr double E1 = 71.0 / 57600, E3 = -71.0 / 16695, E4 = 71.0 / 1920, E5 = -17253.0 / 339200,
                 E6 = 22.0 / 525, E7 = -1.0 / 40;

Vector<double> combine(const Vector<double>& y, double h,
                       std::initializer_list<std::pair<double, const Vector<double>*>> terms) {
  Vector<double> out = y;
  for (const auto& [w, k] : terms)
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += h * w * (*k)[i];
  return out;
}

struct StepResult {
  Vector<double> y;
  Vector<double> tail;  // FSAL stage
  double error = 0;     // scaled error estimate
};

StepResult dopri_step(const Rhs& f, const Vector<double>& y, const Vector<double>& k1, double h,
                      double rtol, double atol) {
  Vector<double> k2 = f(combine(y, h, {{A21, &k1}}));
  Vector<double> k3 = f(combine(y, h, {{A31, &k1}, {A32, &k2}}));
  Vector<double> k4 = f(combine(y, h, {{A41, &k1}, {A42, &k2}, {A43, &k3}}));
  Vector<double> k5 = f(combine(y, h, {{A51, &k1}, {A52, &k2}, {A53, &k3}, {A54, &k4}}));
  Vector<double> k6 =
      f(combine(y, h, {{A61, &k1}, {A62, &k2}, {A63, &k3}, {A64, &k4}, {A65, &k5}}));
  Vector<double> y1 = combine(y, h, {{B1, &k1}, {B3, &k3}, {B4, &k4}, {B5, &k5}, {B6, &k6}});
  Vector<double> k7 = f(y1);

  double err = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    double e = h * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
    double scale = atol + rtol * std::max(std::abs(y[i]), std::abs(y1[i]));
    err += (e / scale) * (e / scale);
  }
  err = std::sqrt(err / y.size());
  return {std::move(y1), std::move(k7), err};
}

Vector<double> rk4_step(const Rhs& f, const Vector<double>& y, double h) {
  Vector<double> k1 = f(y);
  Vector<double> k2 = f(combine(y, h, {{0.5, &k1}}));
  Vector<double> k3 = f(combine(y, h, {{0.5, &k2}}));
  Vector<double> k4 = f(combine(y, h, {{1.0, &k3}}));
  Vector<double> out = y;
  for (std::size_t i = 0; i < y.size(); ++i)
    out[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  return out;
}

// Post-step cleanup in prism mode: refuse genuine boundary crossings, absorb
// rounding-level ones, renormalize the group sums.
void project_to_prism(const Signature& sig, Vector<double>& x, double atol, double t) {
  for (double e : x)
    if (e < -atol)
      throw BoundaryEscape("trajectory left the prism at t = " + std::to_string(t), t);
  for (double& e : x) e = std::max(e, 0.0);
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    double sum = 0;
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) sum += x[i];
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) x[i] /= sum;
  }
}

}  // namespace

Trajectory integrate(const PolymatrixGame& g, const Vector<double>& x0, double t0, double t1,
                     const IntegratorConfig& config) {
  const Signature& sig = g.signature();
  if (!(t1 > t0)) throw DomainError("integration span must satisfy t1 > t0");
  PrismPoint<double> start = make_prism_point<double>(sig, x0, 1e-9);

  CoordinateMode mode = config.mode;
  if (mode == CoordinateMode::automatic)
    mode = start.interior ? CoordinateMode::chart : CoordinateMode::prism;
  if (mode == CoordinateMode::chart && !start.interior)
    throw BoundaryPoint("chart mode requires an interior initial condition");

  const bool chart = mode == CoordinateMode::chart;
  Rhs f = chart ? Rhs([&g](const Vector<double>& u) { return chart_field(g, u); })
                : Rhs([&g](const Vector<double>& x) { return vector_field(g, x); });

  Trajectory traj;
  traj.mode_used = mode;
  Vector<double> y = chart ? phi_inverse(sig, start.coords) : start.coords;
  double t = t0;

  auto record = [&](double at, const Vector<double>& state) {
    traj.times.push_back(at);
    traj.states.push_back(chart ? phi(sig, state) : state);
  };
  record(t, y);

  std::size_t since_sample = 0;
  auto after_accept = [&](double at, Vector<double>& state) {
    if (!finite(state))
      throw NonFiniteState("state became non-finite at t = " + std::to_string(at), at);
    if (!chart) project_to_prism(sig, state, config.atol, at);
    ++traj.steps_accepted;
    if (++since_sample >= config.sample_stride) {
      since_sample = 0;
      record(at, state);
    }
  };

  if (config.method == IntegrationMethod::rk4) {
    const double h0 = config.max_step;
    while (t < t1) {
      double h = std::min(h0, t1 - t);
      Vector<double> next = rk4_step(f, y, h);
      t += h;
      after_accept(t, next);
      y = std::move(next);
    }
  } else {
    const double min_step = 1e-13 * (t1 - t0);
    double h = std::min(config.max_step, (t1 - t0) / 10);
    double prev_error = 1.0;
    Vector<double> k1 = f(y);
    while (t < t1) {
      h = std::min(h, t1 - t);
      StepResult step = dopri_step(f, y, k1, h, config.rtol, config.atol);
      if (step.error <= 1.0) {
        t += h;
        after_accept(t, step.y);
        y = std::move(step.y);
        k1 = chart ? std::move(step.tail) : f(y);  // projection invalidates FSAL
        double fac = 0.9 * std::pow(std::max(step.error, 1e-16), -0.14) *
                     std::pow(std::max(prev_error, 1e-16), 0.08);
        prev_error = std::max(step.error, 1e-16);
        h = std::min(config.max_step, h * std::clamp(fac, 0.2, 5.0));
      } else {
        ++traj.steps_rejected;
        h *= std::max(0.2, 0.9 * std::pow(step.error, -0.2));
        if (h < min_step)
          throw NonFiniteState("step size underflow at t = " + std::to_string(t), t);
      }
    }
  }

  if (traj.times.back() != t1) record(t1, y);
  return traj;
}

MonitorReport monitor_report(const PolymatrixGame& g, const Trajectory& traj,
                             const std::optional<HamiltonianSpec>& spec, const PoissonData* data) {
  const Signature& sig = g.signature();
  MonitorReport report;
  for (std::size_t s = 0; s < traj.states.size(); ++s) {
    const Vector<double>& x = traj.states[s];

    double worst = 0;
    for (std::size_t a = 0; a < sig.groups(); ++a) {
      double sum = 0;
      for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) sum += x[i];
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    report.group_sum_error.push_back(worst);

    if (spec) {
      try {
        report.hamiltonian.push_back(hamiltonian(sig, *spec, x));
      } catch (const DomainError&) {
        throw BoundarySample("sample " + std::to_string(s) +
                             " lies on the boundary; Hamiltonian undefined");
      }
    }
    if (data) {
      try {
        report.leaves.push_back(leaf_invariants(*data, sig, x));
      } catch (const BoundaryPoint&) {
        throw BoundarySample("sample " + std::to_string(s) +
                             " lies on the boundary; leaf invariants undefined");
      }
    }
  }

  for (double e : report.group_sum_error)
    report.max_group_sum_error = std::max(report.max_group_sum_error, e);
  if (!report.hamiltonian.empty())
    for (double h : report.hamiltonian)
      report.hamiltonian_drift =
          std::max(report.hamiltonian_drift, std::abs(h - report.hamiltonian.front()));
  if (!report.leaves.empty())
    for (const auto& row : report.leaves)
      for (std::size_t k = 0; k < row.size(); ++k)
        report.leaf_drift = std::max(report.leaf_drift, std::abs(row[k] - report.leaves[0][k]));
  return report;
}

double recurrence_check(const Trajectory& traj, const Vector<double>& x0, double t_min) {
  if (traj.times.empty() || traj.times.back() - traj.times.front() < t_min)
    throw DomainError("trajectory too short for a recurrence check");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    if (traj.times[s] - traj.times.front() < t_min) continue;
    double dist = 0;
    for (std::size_t i = 0; i < x0.size(); ++i) {
      double d = traj.states[s][i] - x0[i];
      dist += d * d;
    }
    best = std::min(best, std::sqrt(dist));
  }
  return best;
}

VertexLinearization linearize_at_vertex(const PolymatrixGame& g, const FaceIndexSet& vertex) {
  if (!vertex.is_vertex()) throw NotVertex("face has more than one strategy in some group");
  const Signature& sig = g.signature();
  Vector<Rational> e = vertex_point(vertex);
  Vector<Rational> y = g.payoff() * e;

  VertexLinearization lin;
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    std::size_t played = vertex.indices()[a];
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) {
      if (i == played) continue;
      lin.off_support.push_back(i);
      lin.rates.push_back(y[i] - y[played]);
    }
  }
  return lin;
}

}  // namespace polyrep
