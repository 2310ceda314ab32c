// Integrator behavior: fixed points, convergence order, coordinate-mode
// agreement, face invariance, boundary handling, conservation monitors,
// recurrence distances and vertex linearization.
#include <doctest.h>

#include <cmath>
#include <random>

#include "polyrep/conservative.hpp"
#include "polyrep/errors.hpp"
#include "polyrep/examples.hpp"
#include "polyrep/integrate.hpp"
#include "polyrep/poisson.hpp"
#include "polyrep/prism.hpp"
#include "polyrep/rational.hpp"
#include "test_support.hpp"

using namespace polyrep;
using testsupport::rmat;
using testsupport::rvec;

namespace {

PolymatrixGame example_game(const std::string& name) {
  const BundledExample& ex = bundled_example(name);
  return make_conservative(ex.signature, ex.skew_model, ex.unnormalized_equilibrium).first;
}

double max_abs_diff(const Vector<double>& a, const Vector<double>& b) {
  double out = 0;
  for (std::size_t i = 0; i < a.size(); ++i) out = std::max(out, std::abs(a[i] - b[i]));
  return out;
}

}  // namespace

TEST_CASE("fixed points yield constant trajectories") {
  PolymatrixGame g = example_game("ex1");

  SUBCASE("a vertex, integrated on the prism") {
    Vector<double> v{1, 0, 1, 0, 1, 0};
    Trajectory traj = integrate(g, v, 0.0, 10.0);
    CHECK(traj.mode_used == CoordinateMode::prism);
    CHECK(traj.times.front() == 0.0);
    CHECK(traj.times.back() == 10.0);
    for (const auto& x : traj.states)
      for (std::size_t i = 0; i < 6; ++i) CHECK(x[i] == v[i]);
  }

  SUBCASE("the interior equilibrium, integrated in the chart") {
    auto dec = detect_conservative(g);
    REQUIRE(dec.has_value());
    Vector<double> q = to_double(dec->equilibrium);
    Trajectory traj = integrate(g, q, 0.0, 50.0);
    CHECK(traj.mode_used == CoordinateMode::chart);
    CHECK(traj.steps_accepted > 0);
    for (const auto& x : traj.states) CHECK(max_abs_diff(x, q) <= 1e-8);
  }
}

TEST_CASE("fixed-step integration converges at fourth order") {
  const BundledExample& ex = bundled_example("ex1");
  PolymatrixGame g = example_game("ex1");
  const double t1 = 4.0;

  IntegratorConfig ref_cfg;
  ref_cfg.rtol = 1e-13;
  ref_cfg.atol = 1e-14;
  Vector<double> ref = integrate(g, ex.initial, 0.0, t1, ref_cfg).states.back();

  auto endpoint_error = [&](double h) {
    IntegratorConfig cfg;
    cfg.method = IntegrationMethod::rk4;
    cfg.max_step = h;
    return max_abs_diff(integrate(g, ex.initial, 0.0, t1, cfg).states.back(), ref);
  };

  double coarse = endpoint_error(0.1);
  double fine = endpoint_error(0.05);
  REQUIRE(fine > 1e-13);  // above roundoff, so the ratio is meaningful
  double ratio = coarse / fine;
  CHECK(ratio > 10.0);
  CHECK(ratio < 24.0);
}

TEST_CASE("chart and prism integrations agree on interior orbits") {
  const BundledExample& ex = bundled_example("ex1");
  PolymatrixGame g = example_game("ex1");

  IntegratorConfig chart_cfg;
  chart_cfg.mode = CoordinateMode::chart;
  IntegratorConfig prism_cfg;
  prism_cfg.mode = CoordinateMode::prism;

  Trajectory a = integrate(g, ex.initial, 0.0, 20.0, chart_cfg);
  Trajectory b = integrate(g, ex.initial, 0.0, 20.0, prism_cfg);
  CHECK(a.mode_used == CoordinateMode::chart);
  CHECK(b.mode_used == CoordinateMode::prism);
  CHECK(max_abs_diff(a.states.back(), b.states.back()) <= 1e-6);
}

TEST_CASE("faces are invariant and closed under the flow") {
  PolymatrixGame g = example_game("ex1");
  FaceIndexSet face(g.signature(), {0, 1, 2, 3, 4});
  PolymatrixGame small = restrict_to_face(g, face);

  Vector<double> x0{0.3, 0.7, 0.6, 0.4, 1.0, 0.0};
  Trajectory full = integrate(g, x0, 0.0, 15.0);
  CHECK(full.mode_used == CoordinateMode::prism);
  for (const auto& x : full.states) {
    CHECK(x[5] == 0.0);
    CHECK(x[4] == 1.0);
  }

  Trajectory sub = integrate(small, Vector<double>{0.3, 0.7, 0.6, 0.4, 1.0}, 0.0, 15.0);
  const Vector<double>& xf = full.states.back();
  const Vector<double>& xs = sub.states.back();
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::abs(xf[i] - xs[i]) <= 1e-6);
}

TEST_CASE("boundary and argument violations are reported") {
  SUBCASE("an overshooting fixed step escapes the prism") {
    // One huge step on a fast interior drift lands far outside; the
    // projection refuses the crossing rather than silently clamping it.
    PolymatrixGame g(Signature({2}), rmat({"0 10", "-10 0"}));
    IntegratorConfig cfg;
    cfg.method = IntegrationMethod::rk4;
    cfg.max_step = 1.0;
    cfg.mode = CoordinateMode::prism;
    CHECK_THROWS_AS(integrate(g, Vector<double>{0.5, 0.5}, 0.0, 5.0, cfg), BoundaryEscape);
  }

  SUBCASE("chart mode needs an interior start") {
    PolymatrixGame g = example_game("ex1");
    IntegratorConfig cfg;
    cfg.mode = CoordinateMode::chart;
    CHECK_THROWS_AS(integrate(g, Vector<double>{1, 0, 1, 0, 1, 0}, 0.0, 1.0, cfg), BoundaryPoint);
  }

  SUBCASE("the time span must run forward") {
    PolymatrixGame g = example_game("ex1");
    const BundledExample& ex = bundled_example("ex1");
    CHECK_THROWS_AS(integrate(g, ex.initial, 1.0, 1.0), DomainError);
    CHECK_THROWS_AS(integrate(g, ex.initial, 2.0, 1.0), DomainError);
  }
}

TEST_CASE("conservation monitors on the quasi-periodic example") {
  const BundledExample& ex = bundled_example("ex1");
  auto [game, dec] = make_conservative(ex.signature, ex.skew_model, ex.unnormalized_equilibrium);
  PolymatrixGame model(ex.signature, ex.skew_model);
  PoissonData data = build_poisson_data(model);

  Trajectory traj = integrate(game, ex.initial, 0.0, ex.horizon);
  HamiltonianSpec spec{dec.scaling, dec.equilibrium};
  MonitorReport mon = monitor_report(game, traj, spec, &data);

  CHECK(mon.hamiltonian.size() == traj.states.size());
  CHECK(mon.leaves.size() == traj.states.size());
  CHECK(mon.hamiltonian_drift <= 1e-8);
  CHECK(mon.leaf_drift <= 1e-8);
  CHECK(mon.max_group_sum_error <= 1e-12);
}

TEST_CASE("conservation monitors on the heteroclinic example") {
  const BundledExample& ex = bundled_example("ex2");
  auto [game, dec] = make_conservative(ex.signature, ex.skew_model, ex.unnormalized_equilibrium);
  PolymatrixGame model(ex.signature, ex.skew_model);
  PoissonData data = build_poisson_data(model);

  Trajectory traj = integrate(game, ex.initial, 0.0, ex.horizon);
  MonitorReport mon = monitor_report(game, traj, std::nullopt, &data);
  CHECK(mon.hamiltonian.empty());
  CHECK(mon.leaf_drift <= 1e-8);

  // The orbit settles on the attracting vertex.
  Vector<double> sink = to_double(vertex_point(FaceIndexSet(ex.signature, {2, 3})));
  CHECK(max_abs_diff(traj.states.back(), sink) <= 1e-3);
}

TEST_CASE("monitors refuse boundary samples") {
  const BundledExample& ex = bundled_example("ex1");
  auto [game, dec] = make_conservative(ex.signature, ex.skew_model, ex.unnormalized_equilibrium);
  PolymatrixGame model(ex.signature, ex.skew_model);
  PoissonData data = build_poisson_data(model);

  Trajectory traj = integrate(game, Vector<double>{0.3, 0.7, 0.6, 0.4, 1.0, 0.0}, 0.0, 1.0);
  HamiltonianSpec spec{dec.scaling, dec.equilibrium};
  CHECK_THROWS_AS(monitor_report(game, traj, spec, nullptr), BoundarySample);
  CHECK_THROWS_AS(monitor_report(game, traj, std::nullopt, &data), BoundarySample);
  CHECK_NOTHROW(monitor_report(game, traj, std::nullopt, nullptr));
}

TEST_CASE("recurrence distances") {
  PolymatrixGame g = example_game("ex1");

  SUBCASE("a fixed point recurs immediately") {
    auto dec = detect_conservative(g);
    REQUIRE(dec.has_value());
    Vector<double> q = to_double(dec->equilibrium);
    Trajectory traj = integrate(g, q, 0.0, 50.0);
    CHECK(recurrence_check(traj, q) <= 1e-8);
  }

  SUBCASE("the demo orbit returns near its start") {
    const BundledExample& ex = bundled_example("ex1");
    Trajectory traj = integrate(g, ex.initial, 0.0, 500.0);
    CHECK(recurrence_check(traj, ex.initial) <= 1e-2);
  }

  SUBCASE("too short a span is an error") {
    const BundledExample& ex = bundled_example("ex1");
    Trajectory traj = integrate(g, ex.initial, 0.0, 5.0);
    CHECK_THROWS_AS(recurrence_check(traj, ex.initial, 10.0), DomainError);
  }
}

TEST_CASE("vertex linearization gives exact transverse growth rates") {
  SUBCASE("the zero game is everywhere neutral") {
    Signature sig({2, 3});
    PolymatrixGame g(sig, Matrix<Rational>(5, 5));
    VertexLinearization lin = linearize_at_vertex(g, FaceIndexSet(sig, {0, 2}));
    CHECK(lin.off_support == std::vector<std::size_t>{1, 3, 4});
    CHECK(lin.rates == Vector<Rational>(3, Rational(0)));
  }

  SUBCASE("repeller and attractor of the heteroclinic example") {
    PolymatrixGame g = example_game("ex2");
    const Signature& sig = g.signature();

    VertexLinearization rep = linearize_at_vertex(g, FaceIndexSet(sig, {0, 4}));
    CHECK(rep.off_support == std::vector<std::size_t>{1, 2, 3});
    CHECK(rep.rates == rvec("1/2 8/5 3/10"));
    for (const auto& r : rep.rates) CHECK(r > 0);

    VertexLinearization att = linearize_at_vertex(g, FaceIndexSet(sig, {2, 3}));
    CHECK(att.off_support == std::vector<std::size_t>{0, 1, 4});
    CHECK(att.rates == rvec("-3/5 -2/5 -1/10"));
    for (const auto& r : att.rates) CHECK(r < 0);
  }

  SUBCASE("faces with choices left are not vertices") {
    PolymatrixGame g = example_game("ex2");
    CHECK_THROWS_AS(linearize_at_vertex(g, FaceIndexSet(g.signature(), {0, 1, 4})), NotVertex);
  }
}
