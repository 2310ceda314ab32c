#include "polyrep/report.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "polyrep/chart.hpp"
#include "polyrep/poisson.hpp"
#include "polyrep/prism.hpp"

namespace polyrep {

namespace {

Json json_rational(const Rational& q) { return to_string(q); }

Json json_vector(const Vector<Rational>& v) {
  Json arr = Json::array();
  for (const Rational& e : v) arr.push_back(json_rational(e));
  return arr;
}

Json json_matrix(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(json_rational(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json json_floats(const Vector<double>& v) {
  Json arr = Json::array();
  for (double e : v) arr.push_back(e);
  return arr;
}

Json json_signature(const Signature& sig) {
  Json arr = Json::array();
  for (std::size_t s : sig.parts()) arr.push_back(s);
  return arr;
}

// Strategy indices are 1-based in every report.
Json json_indices(const std::vector<std::size_t>& idx) {
  Json arr = Json::array();
  for (std::size_t i : idx) arr.push_back(i + 1);
  return arr;
}

Json json_kernel(const std::vector<Vector<Rational>>& kernel) {
  Json arr = Json::array();
  for (const auto& w : kernel) arr.push_back(json_vector(w));
  return arr;
}

// Coordinates with the last strategy of each group dropped; the group sums
// make those redundant, and low-dimensional examples read naturally in them.
Vector<Rational> model_coordinates(const Signature& sig, const Vector<Rational>& x) {
  Vector<Rational> out;
  for (std::size_t a = 0; a < sig.groups(); ++a)
    for (std::size_t i = sig.offset(a); i + 1 < sig.offset(a) + sig.size(a); ++i)
      out.push_back(x[i]);
  return out;
}

Json equilibrium_json(const FormalEquilibrium& eq, const Signature& sig) {
  Json out;
  out["point"] = json_vector(eq.point);
  out["point_model"] = json_vector(model_coordinates(sig, eq.point));
  out["interior"] = eq.interior;
  out["dimension"] = eq.directions.size();
  Json dirs = Json::array();
  for (const auto& d : eq.directions) dirs.push_back(json_vector(d));
  out["directions"] = std::move(dirs);
  return out;
}

Json decomposition_json(const Signature& sig, const ConservativeDecomposition& d) {
  Json out;
  out["skew_model"] = json_matrix(d.skew_model);
  out["scaling"] = json_vector(d.scaling);
  out["offsets"] = json_matrix(d.offsets);
  out["equilibrium"] = json_vector(d.equilibrium);
  out["equilibrium_model"] = json_vector(model_coordinates(sig, d.equilibrium));
  bool interior = true;
  for (const Rational& e : d.equilibrium)
    if (!(e > 0)) interior = false;
  out["equilibrium_interior"] = interior;
  return out;
}

Json poisson_json(const PoissonData& data) {
  Json out;
  out["reduced"] = json_matrix(data.reduced);
  out["rank"] = data.rank;
  out["kernel"] = json_kernel(data.kernel);
  return out;
}

std::string csv_number(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

Json info_report(const GameFile& file) {
  PolymatrixGame g = file.game();
  Json out;
  out["format"] = "v1";
  out["report"] = "info";
  out["signature"] = json_signature(g.signature());
  out["groups"] = g.signature().groups();
  out["strategies"] = g.signature().dimension();
  out["chart_dimension"] = g.signature().chart_dimension();
  out["skew"] = g.is_skew();
  Json sections;
  sections["skew_model"] = file.skew_model.has_value();
  sections["scaling"] = file.scaling.has_value();
  sections["equilibrium"] = file.equilibrium.has_value();
  out["sections"] = std::move(sections);
  return out;
}

Json equilibrium_report(const PolymatrixGame& g) {
  Json out;
  out["format"] = "v1";
  out["report"] = "equilibrium";
  auto eq = formal_equilibria(g);
  out["exists"] = eq.has_value();
  if (eq) out["equilibria"] = equilibrium_json(*eq, g.signature());
  return out;
}

Json conservative_report(const GameFile& file) {
  PolymatrixGame g = file.game();
  Json out;
  out["format"] = "v1";
  out["report"] = "conservative";
  auto detected = detect_conservative(g);
  out["conservative"] = detected.has_value();
  if (detected) out["decomposition"] = decomposition_json(g.signature(), *detected);
  if (auto candidate = file.candidate()) {
    VerifyResult check = verify_conservative(g, *candidate);
    Json cand;
    cand["ok"] = check.ok;
    if (!check.ok) cand["failure"] = check.failure;
    out["candidate"] = std::move(cand);
  }
  return out;
}

Json poisson_report(const PolymatrixGame& skew_game, std::uint64_t seed, std::size_t samples,
                    const std::string& payoff_used) {
  const Signature& sig = skew_game.signature();
  Json out;
  out["format"] = "v1";
  out["report"] = "poisson_check";
  out["payoff_used"] = payoff_used;
  out["seed"] = seed;
  out["samples"] = samples;

  std::mt19937_64 rng(seed);
  double map_worst = 0, jacobi_fd_worst = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    Vector<double> u = random_chart_point(sig, rng);
    map_worst = std::max(map_worst, check_poisson_map(skew_game, u));
    Vector<double> x = random_interior_point(sig, rng);
    jacobi_fd_worst = std::max(jacobi_fd_worst, jacobi_residual(skew_game, x));
  }

  Rational jacobi_exact_worst(0);
  std::mt19937_64 exact_rng(seed);
  for (std::size_t s = 0; s < 20; ++s) {
    Vector<Rational> x = random_interior_point_exact(sig, exact_rng);
    Rational r = jacobi_residual_exact(skew_game, x);
    if (r > jacobi_exact_worst) jacobi_exact_worst = r;
  }

  out["poisson_map_max"] = map_worst;
  out["jacobi_fd_max"] = jacobi_fd_worst;
  out["jacobi_exact_max"] = json_rational(jacobi_exact_worst);
  out["poisson"] = poisson_json(build_poisson_data(skew_game));
  return out;
}

Json leaves_report(const PolymatrixGame& skew_game, const std::optional<Vector<double>>& point) {
  Json out;
  out["format"] = "v1";
  out["report"] = "leaves";
  PoissonData data = build_poisson_data(skew_game);
  out["poisson"] = poisson_json(data);
  if (point) {
    out["point"] = json_floats(*point);
    out["invariants"] = json_floats(leaf_invariants(data, skew_game.signature(), *point));
  }
  return out;
}

std::string trajectory_csv(const Trajectory& traj, const MonitorReport& monitors) {
  std::ostringstream out;
  out << "t";
  for (std::size_t i = 1; i <= traj.states.front().size(); ++i) out << ",x_" << i;
  if (!monitors.hamiltonian.empty()) out << ",H";
  if (!monitors.leaves.empty())
    for (std::size_t k = 1; k <= monitors.leaves.front().size(); ++k) out << ",c_" << k;
  out << '\n';
  for (std::size_t s = 0; s < traj.times.size(); ++s) {
    out << csv_number(traj.times[s]);
    for (double x : traj.states[s]) out << ',' << csv_number(x);
    if (!monitors.hamiltonian.empty()) out << ',' << csv_number(monitors.hamiltonian[s]);
    if (!monitors.leaves.empty())
      for (double c : monitors.leaves[s]) out << ',' << csv_number(c);
    out << '\n';
  }
  return out.str();
}

IntegrateOutcome integrate_report(const GameFile& file, const Vector<double>& x0, double t0,
                                  double t1, const IntegratorConfig& config) {
  PolymatrixGame g = file.game();

  std::optional<HamiltonianSpec> spec;
  std::optional<PoissonData> data;
  std::string structure = "none";
  if (auto candidate = file.candidate(); candidate && verify_conservative(g, *candidate).ok) {
    spec = HamiltonianSpec{candidate->scaling, candidate->equilibrium};
    data = build_poisson_data(PolymatrixGame(g.signature(), candidate->skew_model));
    structure = "candidate";
  } else if (auto detected = detect_conservative(g)) {
    spec = HamiltonianSpec{detected->scaling, detected->equilibrium};
    data = build_poisson_data(PolymatrixGame(g.signature(), detected->skew_model));
    structure = "detected";
  }

  Trajectory traj = integrate(g, x0, t0, t1, config);
  MonitorReport monitors = monitor_report(g, traj, spec, data ? &*data : nullptr);

  Json out;
  out["format"] = "v1";
  out["report"] = "integrate";
  out["t0"] = t0;
  out["t1"] = t1;
  out["initial"] = json_floats(x0);
  out["final"] = json_floats(traj.states.back());
  out["method"] = config.method == IntegrationMethod::rk4 ? "rk4" : "rk45";
  out["mode"] = traj.mode_used == CoordinateMode::chart ? "chart" : "prism";
  out["samples"] = traj.times.size();
  out["steps_accepted"] = traj.steps_accepted;
  out["steps_rejected"] = traj.steps_rejected;
  out["structure"] = structure;
  out["group_sum_error_max"] = monitors.max_group_sum_error;
  if (spec) out["hamiltonian_drift"] = monitors.hamiltonian_drift;
  if (data) out["leaf_drift"] = monitors.leaf_drift;

  return {std::move(out), trajectory_csv(traj, monitors)};
}

GameFile example_game_file(const BundledExample& ex) {
  auto [game, decomposition] = make_conservative(ex.signature, ex.skew_model,
                                                 ex.unnormalized_equilibrium);
  GameFile file;
  file.signature = ex.signature;
  file.payoff = game.payoff();
  file.skew_model = decomposition.skew_model;
  file.scaling = decomposition.scaling;
  file.equilibrium = decomposition.equilibrium;
  return file;
}

ExampleOutcome example_report(const BundledExample& ex) {
  auto [game, decomposition] = make_conservative(ex.signature, ex.skew_model,
                                                 ex.unnormalized_equilibrium);
  const Signature& sig = game.signature();
  PolymatrixGame model(sig, ex.skew_model);
  PoissonData data = build_poisson_data(model);

  Json out;
  out["format"] = "v1";
  out["report"] = "example";
  out["name"] = ex.name;
  out["signature"] = json_signature(sig);
  out["payoff"] = json_matrix(game.payoff());
  out["conservative"] = decomposition_json(sig, decomposition);

  auto eq = formal_equilibria(game);
  out["equilibrium_line"] = eq ? equilibrium_json(*eq, sig) : Json();

  out["poisson"] = poisson_json(data);

  Json vertices = Json::array();
  for (const auto& support : ex.notable_vertices) {
    FaceIndexSet vertex(sig, support);
    VertexLinearization lin = linearize_at_vertex(game, vertex);
    Json v;
    v["support"] = json_indices(vertex.indices());
    v["off_support"] = json_indices(lin.off_support);
    v["rates"] = json_vector(lin.rates);
    bool pos = true, neg = true;
    for (const Rational& r : lin.rates) {
      if (!(r > 0)) pos = false;
      if (!(r < 0)) neg = false;
    }
    v["classification"] = pos ? "repelling" : neg ? "attracting" : "mixed";
    vertices.push_back(std::move(v));
  }
  out["vertices"] = std::move(vertices);

  IntegratorConfig config;
  Trajectory traj = integrate(game, ex.initial, 0.0, ex.horizon, config);
  HamiltonianSpec spec{decomposition.scaling, decomposition.equilibrium};
  MonitorReport monitors = monitor_report(game, traj, spec, &data);

  Json dynamics;
  dynamics["initial"] = json_floats(ex.initial);
  dynamics["t1"] = ex.horizon;
  dynamics["mode"] = traj.mode_used == CoordinateMode::chart ? "chart" : "prism";
  dynamics["samples"] = traj.times.size();
  dynamics["final"] = json_floats(traj.states.back());
  dynamics["group_sum_error_max"] = monitors.max_group_sum_error;
  dynamics["hamiltonian_drift"] = monitors.hamiltonian_drift;
  dynamics["leaf_drift"] = monitors.leaf_drift;
  out["dynamics"] = std::move(dynamics);

  if (ex.name == "ex1") {
    Trajectory longer = integrate(game, ex.initial, 0.0, 500.0, config);
    Json rec;
    rec["span"] = 500.0;
    rec["t_min"] = 10.0;
    rec["min_distance"] = recurrence_check(longer, ex.initial, 10.0);
    out["recurrence"] = std::move(rec);
  }
  if (!ex.notable_vertices.empty()) {
    const auto& sink = ex.notable_vertices.back();
    Vector<double> target(sig.dimension(), 0.0);
    for (std::size_t i : sink) target[i] = 1.0;
    double dist = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
      double d = traj.states.back()[i] - target[i];
      dist += d * d;
    }
    Json sink_json;
    sink_json["support"] = json_indices(sink);
    sink_json["distance_at_horizon"] = std::sqrt(dist);
    out["sink"] = std::move(sink_json);
  }

  return {std::move(out), trajectory_csv(traj, monitors)};
}

}  // namespace polyrep
