// Structure-aware integration of the replicator flow.
//
// Chart mode integrates du/dt = -E A phi(u): every Runge-Kutta stage then
// lies in the chart image, so group sums are conserved by construction and
// the leaf invariants are linear functions of the state. Prism mode
// integrates the field directly, renormalizing group sums after each
// accepted step and refusing to cross the boundary.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyrep/conservative.hpp"
#include "polyrep/game.hpp"
#include "polyrep/poisson.hpp"

namespace polyrep {

enum class IntegrationMethod { rk4, rk45 };
enum class CoordinateMode { automatic, prism, chart };

struct IntegratorConfig {
  IntegrationMethod method = IntegrationMethod::rk45;
  double rtol = 1e-10;
  double atol = 1e-12;
  // Step ceiling for rk45, and the fixed step itself for rk4.
  double max_step = 0.1;
  // automatic: chart for interior starts, prism otherwise.
  CoordinateMode mode = CoordinateMode::automatic;
  // Record every k-th accepted step; the endpoint is always recorded.
  std::size_t sample_stride = 1;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Vector<double>> states;  // prism coordinates
  CoordinateMode mode_used = CoordinateMode::prism;
  std::size_t steps_accepted = 0;
  std::size_t steps_rejected = 0;
};

// Integrates from x0 over [t0, t1], t1 > t0. Throws BoundaryEscape when a
// prism-mode coordinate drops below -atol and NonFiniteState on overflow,
// both carrying the time reached.
Trajectory integrate(const PolymatrixGame& g, const Vector<double>& x0, double t0, double t1,
                     const IntegratorConfig& config = {});

// Conservation diagnostics over a trajectory's samples. Hamiltonian values
// appear when spec is present, leaf invariants when data is present; both
// need every sample interior on the relevant coordinates, else
// BoundarySample.
struct MonitorReport {
  std::vector<double> hamiltonian;
  std::vector<Vector<double>> leaves;
  std::vector<double> group_sum_error;
  double hamiltonian_drift = 0;
  double leaf_drift = 0;
  double max_group_sum_error = 0;
};

MonitorReport monitor_report(const PolymatrixGame& g, const Trajectory& traj,
                             const std::optional<HamiltonianSpec>& spec,
                             const PoissonData* data);

// Closest Euclidean return distance to x0 over samples with t >= t_min;
// requires the trajectory to span past t_min.
double recurrence_check(const Trajectory& traj, const Vector<double>& x0, double t_min = 10.0);

// Exact eigenvalues of the flow linearized at a vertex, transverse to the
// vertex's face: for each unused strategy i in group a, the growth rate
// (A e)_i - (A e)_k with k the strategy the vertex plays in group a. The
// tangential rates are all zero.
struct VertexLinearization {
  std::vector<std::size_t> off_support;  // strategy index per rate
  Vector<Rational> rates;
};

VertexLinearization linearize_at_vertex(const PolymatrixGame& g, const FaceIndexSet& vertex);

}  // namespace polyrep
