// Command-line front end: parse a game file, run a query, print a JSON
// report. Exit codes: 0 success (verdicts like "not conservative" included),
// 2 game-file syntax errors, 3 semantic and precondition errors, 4 a failed
// --expect assertion, 1 anything else.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polyrep/examples.hpp"
#include "polyrep/gamefile.hpp"
#include "polyrep/prism.hpp"
#include "polyrep/report.hpp"

namespace {

using polyrep::GameFile;
using polyrep::Json;
using polyrep::PolymatrixGame;

constexpr int kExitSyntax = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitExpect = 4;

struct ExpectFailure {
  std::string message;
};

void emit(const Json& report, const std::string& out_path) {
  std::string text = report.dump(2) + "\n";
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw polyrep::Error("cannot write '" + out_path + "'");
    out << text;
  }
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw polyrep::Error("cannot write '" + path.string() + "'");
  out << text;
}

std::vector<double> parse_floats(const std::string& text) {
  std::string normalized = text;
  for (char& c : normalized)
    if (c == ',') c = ' ';
  std::istringstream in(normalized);
  std::vector<double> out;
  double v;
  while (in >> v) out.push_back(v);
  if (!in.eof()) throw polyrep::DomainError("bad number list '" + text + "'");
  return out;
}

// The skew matrix the structure checks run on: the payoff itself when skew,
// else the file's skew_model section, else a detected model.
std::pair<PolymatrixGame, std::string> skew_subject(const GameFile& file) {
  PolymatrixGame g = file.game();
  if (g.is_skew()) return {std::move(g), "payoff"};
  if (file.skew_model)
    return {PolymatrixGame(file.signature, *file.skew_model), "skew_model"};
  if (auto detected = polyrep::detect_conservative(g))
    return {PolymatrixGame(file.signature, detected->skew_model), "detected"};
  throw polyrep::NotSkew("payoff is not skew and no skew model is available");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polymatrix replicator games: equilibria, conservative structure, dynamics"};
  app.require_subcommand(1);

  std::string game_path, out_path, expect, point_text, x0_text, csv_path, outdir;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  double t0 = 0.0, t1 = 0.0;
  polyrep::IntegratorConfig cli_config;
  std::string method = "rk45", mode = "auto";
  std::size_t stride = 1;

  auto add_game_arg = [&](CLI::App* cmd) {
    cmd->add_option("game", game_path, "game file")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", out_path, "also write the report to this path");
  };

  CLI::App* info = app.add_subcommand("info", "signature and structure overview");
  add_game_arg(info);

  CLI::App* equilibrium = app.add_subcommand("equilibrium", "formal equilibria, exact");
  add_game_arg(equilibrium);
  equilibrium->add_option("--expect", expect, "assert the verdict: solution | no-solution");

  CLI::App* conservative = app.add_subcommand("conservative", "detect or verify a decomposition");
  add_game_arg(conservative);
  conservative->add_option("--expect", expect,
                           "assert the verdict: conservative | not-conservative");

  CLI::App* poisson = app.add_subcommand("poisson-check", "Poisson-map and Jacobi sweeps");
  add_game_arg(poisson);
  poisson->add_option("--seed", seed, "sweep seed (default 0)");
  poisson->add_option("--samples", samples, "points per sweep (default 100)");

  CLI::App* leaves = app.add_subcommand("leaves", "reduced matrix, rank, leaf invariants");
  add_game_arg(leaves);
  leaves->add_option("--point", point_text, "prism point, comma separated");

  CLI::App* integrate = app.add_subcommand("integrate", "integrate the replicator flow");
  add_game_arg(integrate);
  integrate->add_option("--t0", t0, "start time (default 0)");
  integrate->add_option("--t1", t1, "end time")->required();
  integrate->add_option("--x0", x0_text, "initial state, comma separated (default: barycenter)");
  integrate->add_option("--rtol", cli_config.rtol, "relative tolerance");
  integrate->add_option("--atol", cli_config.atol, "absolute tolerance");
  integrate->add_option("--max-step", cli_config.max_step, "step ceiling (rk4: the step)");
  integrate->add_option("--method", method, "rk45 | rk4");
  integrate->add_option("--mode", mode, "auto | chart | prism");
  integrate->add_option("--stride", stride, "record every k-th step");
  integrate->add_option("--csv", csv_path, "write the trajectory as CSV");

  CLI::App* example = app.add_subcommand("example", "regenerate a bundled example");
  std::string example_name;
  example->add_option("name", example_name, "ex1 | ex2")->required();
  example->add_option("--outdir", outdir, "directory for report, trajectory and game file");
  example->add_option("--out", out_path, "also write the report to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) {
      emit(polyrep::info_report(polyrep::load_game_file(game_path)), out_path);
    } else if (equilibrium->parsed()) {
      GameFile file = polyrep::load_game_file(game_path);
      Json report = polyrep::equilibrium_report(file.game());
      emit(report, out_path);
      if (!expect.empty()) {
        bool exists = report.at("exists").get<bool>();
        if (expect != "solution" && expect != "no-solution")
          throw polyrep::DomainError("unknown --expect value '" + expect + "'");
        if (exists != (expect == "solution"))
          throw ExpectFailure{"expected " + expect + ", found the opposite"};
      }
    } else if (conservative->parsed()) {
      GameFile file = polyrep::load_game_file(game_path);
      Json report = polyrep::conservative_report(file);
      emit(report, out_path);
      if (!expect.empty()) {
        bool is_conservative = report.at("conservative").get<bool>();
        if (expect != "conservative" && expect != "not-conservative")
          throw polyrep::DomainError("unknown --expect value '" + expect + "'");
        if (is_conservative != (expect == "conservative"))
          throw ExpectFailure{"expected " + expect + ", found the opposite"};
      }
    } else if (poisson->parsed()) {
      GameFile file = polyrep::load_game_file(game_path);
      auto [subject, used] = skew_subject(file);
      emit(polyrep::poisson_report(subject, seed, samples, used), out_path);
    } else if (leaves->parsed()) {
      GameFile file = polyrep::load_game_file(game_path);
      PolymatrixGame subject = skew_subject(file).first;
      std::optional<polyrep::Vector<double>> point;
      if (!point_text.empty()) point = parse_floats(point_text);
      emit(polyrep::leaves_report(subject, point), out_path);
    } else if (integrate->parsed()) {
      GameFile file = polyrep::load_game_file(game_path);
      polyrep::IntegratorConfig config = file.integration.apply();
      if (integrate->count("--rtol")) config.rtol = cli_config.rtol;
      if (integrate->count("--atol")) config.atol = cli_config.atol;
      if (integrate->count("--max-step")) config.max_step = cli_config.max_step;
      if (integrate->count("--method")) {
        if (method == "rk4")
          config.method = polyrep::IntegrationMethod::rk4;
        else if (method == "rk45")
          config.method = polyrep::IntegrationMethod::rk45;
        else
          throw polyrep::DomainError("unknown method '" + method + "'");
      }
      if (integrate->count("--mode")) {
        if (mode == "prism")
          config.mode = polyrep::CoordinateMode::prism;
        else if (mode == "chart")
          config.mode = polyrep::CoordinateMode::chart;
        else if (mode == "auto")
          config.mode = polyrep::CoordinateMode::automatic;
        else
          throw polyrep::DomainError("unknown mode '" + mode + "'");
      }
      config.sample_stride = stride;

      polyrep::Vector<double> x0 = x0_text.empty()
                                       ? polyrep::to_double(polyrep::uniform_point<polyrep::Rational>(
                                             file.signature))
                                       : parse_floats(x0_text);
      auto outcome = polyrep::integrate_report(file, x0, t0, t1, config);
      emit(outcome.report, out_path);
      if (!csv_path.empty()) write_file(csv_path, outcome.csv);
    } else if (example->parsed()) {
      const polyrep::BundledExample& ex = polyrep::bundled_example(example_name);
      auto outcome = polyrep::example_report(ex);
      emit(outcome.report, out_path);

      std::filesystem::path dir = outdir;
      if (dir.empty()) {
        if (const char* env = std::getenv("POLYREP_OUTDIR")) dir = env;
      }
      if (!dir.empty()) {
        std::filesystem::create_directories(dir);
        write_file(dir / (ex.name + "_report.json"), outcome.report.dump(2) + "\n");
        write_file(dir / (ex.name + "_trajectory.csv"), outcome.csv);
        write_file(dir / (ex.name + ".game"),
                   polyrep::serialize_game_file(polyrep::example_game_file(ex)));
      }
    }
  } catch (const ExpectFailure& e) {
    std::cerr << "expectation failed: " << e.message << "\n";
    return kExitExpect;
  } catch (const polyrep::SyntaxError& e) {
    std::cerr << game_path << ":" << e.line << ": syntax error: " << e.what() << "\n";
    return kExitSyntax;
  } catch (const polyrep::SemanticError& e) {
    std::cerr << game_path << ":" << e.line << ": error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const polyrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
