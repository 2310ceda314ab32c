// JSON report builders behind the CLI subcommands, kept in the library so
// tests can compare them against golden files without spawning processes.
// Exact quantities are serialized as rational strings, measured ones as
// numbers; object key order is fixed, so identical inputs give identical
// bytes.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "polyrep/examples.hpp"
#include "polyrep/gamefile.hpp"
#include "polyrep/integrate.hpp"

namespace polyrep {

using Json = nlohmann::ordered_json;

Json info_report(const GameFile& file);

Json equilibrium_report(const PolymatrixGame& g);

// detect_conservative plus, when the file carries a candidate decomposition,
// its verification.
Json conservative_report(const GameFile& file);

// Poisson-map and Jacobi sweeps on a skew payoff: float checks at `samples`
// seeded random points, exact Jacobi checks at a 20-point rational sweep.
Json poisson_report(const PolymatrixGame& skew_game, std::uint64_t seed, std::size_t samples,
                    const std::string& payoff_used);

Json leaves_report(const PolymatrixGame& skew_game,
                   const std::optional<Vector<double>>& point);

struct IntegrateOutcome {
  Json report;
  std::string csv;
};

// Integrates and summarizes; monitors use whatever structure the file
// provides (candidate decomposition, else detection, else none).
IntegrateOutcome integrate_report(const GameFile& file, const Vector<double>& x0, double t0,
                                  double t1, const IntegratorConfig& config);

struct ExampleOutcome {
  Json report;
  std::string csv;  // the demo trajectory
};

ExampleOutcome example_report(const BundledExample& ex);

// The bundled example as a game file (exact payoff, model, scalings).
GameFile example_game_file(const BundledExample& ex);

std::string trajectory_csv(const Trajectory& traj, const MonitorReport& monitors);

}  // namespace polyrep
