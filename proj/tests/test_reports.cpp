// JSON report builders against golden files, byte determinism, and the CSV
// trajectory format.
#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "polyrep/conservative.hpp"
#include "polyrep/examples.hpp"
#include "polyrep/report.hpp"
#include "test_support.hpp"

using namespace polyrep;
using testsupport::rmat;

namespace {

Json load_golden(const std::string& name) {
  std::ifstream in(std::string(POLYREP_GOLDEN_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing golden file " << name);
  return Json::parse(in);
}

std::string load_text(const std::string& path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "missing file " << path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Exact equality except for floating-point leaves, which carry measurement
// noise and get a small relative window.
void check_close(const Json& got, const Json& want, const std::string& path) {
  INFO("at " << path);
  if (want.is_object()) {
    REQUIRE(got.is_object());
    REQUIRE(got.size() == want.size());
    auto gi = got.items().begin();
    for (const auto& [key, value] : want.items()) {
      CHECK(gi.key() == key);
      check_close(gi.value(), value, path + "/" + key);
      ++gi;
    }
  } else if (want.is_array()) {
    REQUIRE(got.is_array());
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i)
      check_close(got[i], want[i], path + "[" + std::to_string(i) + "]");
  } else if (want.is_number_float()) {
    REQUIRE(got.is_number_float());
    double a = got.get<double>(), b = want.get<double>();
    CHECK(std::abs(a - b) <= 1e-9 + 1e-6 * std::abs(b));
  } else {
    CHECK(got == want);
  }
}

std::size_t count_columns(const std::string& line) {
  return static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1;
}

}  // namespace

TEST_CASE("example reports match their golden files") {
  check_close(example_report(bundled_example("ex1")).report, load_golden("ex1_report.json"), "ex1");
  check_close(example_report(bundled_example("ex2")).report, load_golden("ex2_report.json"), "ex2");
}

TEST_CASE("example reports are byte-deterministic") {
  ExampleOutcome a = example_report(bundled_example("ex2"));
  ExampleOutcome b = example_report(bundled_example("ex2"));
  CHECK(a.report.dump(2) == b.report.dump(2));
  CHECK(a.csv == b.csv);
}

TEST_CASE("the shipped game files are the library serialization") {
  for (const char* name : {"ex1", "ex2"}) {
    std::string shipped = load_text(std::string(POLYREP_DATA_DIR) + "/" + name + ".game");
    CHECK(shipped == serialize_game_file(example_game_file(bundled_example(name))));
  }
}

TEST_CASE("info report reflects the file sections") {
  Json info = info_report(example_game_file(bundled_example("ex1")));
  CHECK(info["report"] == "info");
  CHECK(info["signature"] == Json::array({2, 2, 2}));
  CHECK(info["groups"] == 3);
  CHECK(info["strategies"] == 6);
  CHECK(info["chart_dimension"] == 3);
  CHECK(info["skew"] == false);
  CHECK(info["sections"]["skew_model"] == true);
  CHECK(info["sections"]["scaling"] == true);
  CHECK(info["sections"]["equilibrium"] == true);

  GameFile bare;
  bare.signature = Signature({2});
  bare.payoff = Matrix<Rational>(2, 2);
  Json trivial = info_report(bare);
  CHECK(trivial["skew"] == true);
  CHECK(trivial["sections"]["skew_model"] == false);
}

TEST_CASE("equilibrium report carries the verdict") {
  Json yes = equilibrium_report(example_game_file(bundled_example("ex1")).game());
  CHECK(yes["exists"] == true);
  CHECK(yes["equilibria"]["interior"] == true);
  CHECK(yes["equilibria"]["dimension"] == 1);
  CHECK(yes["equilibria"]["directions"][0] ==
        Json::array({"6/5", "-6/5", "-4/9", "4/9", "-1", "1"}));

  Json no = equilibrium_report(PolymatrixGame(Signature({2, 1}), rmat({"0 0 1", "0 0 0", "0 0 0"})));
  CHECK(no["exists"] == false);
  CHECK_FALSE(no.contains("equilibria"));
}

TEST_CASE("conservative report runs detection and candidate verification") {
  GameFile file = example_game_file(bundled_example("ex1"));

  Json good = conservative_report(file);
  CHECK(good["conservative"] == true);
  CHECK(good["decomposition"]["scaling"] == Json::array({"1", "9/10", "4/5"}));
  CHECK(good["decomposition"]["equilibrium_model"] == Json::array({"11/20", "11/18", "5/8"}));
  CHECK(good["decomposition"]["equilibrium_interior"] == true);
  CHECK(good["candidate"]["ok"] == true);

  (*file.scaling)[0] = Rational(1);  // candidate now claims the wrong scaling
  Json tampered = conservative_report(file);
  CHECK(tampered["conservative"] == true);
  CHECK(tampered["candidate"]["ok"] == false);
  CHECK(tampered["candidate"]["failure"].get<std::string>() != "");

  GameFile plain;
  plain.signature = Signature({2, 2});
  plain.payoff = Matrix<Rational>(4, 4);
  plain.payoff(0, 0) = Rational(1);
  Json none = conservative_report(plain);
  CHECK(none["conservative"] == false);
  CHECK_FALSE(none.contains("decomposition"));
  CHECK_FALSE(none.contains("candidate"));
}

TEST_CASE("poisson report sweeps stay within the advertised bounds") {
  const BundledExample& ex = bundled_example("ex1");
  PolymatrixGame model(ex.signature, ex.skew_model);

  Json report = poisson_report(model, 0, 20, "skew_model");
  CHECK(report["payoff_used"] == "skew_model");
  CHECK(report["seed"] == 0);
  CHECK(report["samples"] == 20);
  CHECK(report["poisson_map_max"].get<double>() <= 1e-12);
  CHECK(report["jacobi_fd_max"].get<double>() <= 1e-6);
  CHECK(report["jacobi_exact_max"] == "0");
  CHECK(report["poisson"]["reduced"] ==
        Json::array({Json::array({"0", "1", "-1/2"}), Json::array({"-1", "0", "-3/2"}),
                     Json::array({"1/2", "3/2", "0"})}));
  CHECK(report["poisson"]["rank"] == 2);

  Json again = poisson_report(model, 0, 20, "skew_model");
  CHECK(report.dump() == again.dump());
}

TEST_CASE("leaves report evaluates invariants only when given a point") {
  const BundledExample& ex = bundled_example("ex2");
  PolymatrixGame model(ex.signature, ex.skew_model);

  Json bare = leaves_report(model, std::nullopt);
  CHECK(bare["poisson"]["kernel"] == Json::array({Json::array({"-1", "1/2", "1"})}));
  CHECK_FALSE(bare.contains("point"));
  CHECK_FALSE(bare.contains("invariants"));

  Json at = leaves_report(model, Vector<double>{0.3, 0.3, 0.4, 0.5, 0.5});
  CHECK(at["point"].size() == 5);
  CHECK(at["invariants"].size() == 1);
}

TEST_CASE("integrate report picks the strongest available structure") {
  const BundledExample& ex = bundled_example("ex1");

  SUBCASE("a full file supplies the candidate decomposition") {
    GameFile file = example_game_file(ex);
    IntegrateOutcome out = integrate_report(file, ex.initial, 0.0, 10.0, {});
    CHECK(out.report["structure"] == "candidate");
    CHECK(out.report["mode"] == "chart");
    CHECK(out.report["hamiltonian_drift"].get<double>() <= 1e-9);
    CHECK(out.report["leaf_drift"].get<double>() <= 1e-9);
    CHECK(out.report["final"].size() == 6);

    std::istringstream csv(out.csv);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "t,x_1,x_2,x_3,x_4,x_5,x_6,H,c_1");
    std::size_t rows = 0;
    for (std::string line; std::getline(csv, line); ++rows) CHECK(count_columns(line) == 9);
    CHECK(rows == out.report["samples"].get<std::size_t>());
  }

  SUBCASE("a bare payoff falls back to detection") {
    GameFile file;
    file.signature = ex.signature;
    file.payoff = example_game_file(ex).payoff;
    IntegrateOutcome out = integrate_report(file, ex.initial, 0.0, 1.0, {});
    CHECK(out.report["structure"] == "detected");
    CHECK(out.report.contains("hamiltonian_drift"));
  }

  SUBCASE("without any structure only the group sums are monitored") {
    GameFile file;
    file.signature = Signature({2, 2});
    file.payoff = Matrix<Rational>(4, 4);
    file.payoff(0, 0) = Rational(1);
    Vector<double> x0{0.25, 0.75, 0.5, 0.5};
    IntegrateOutcome out = integrate_report(file, x0, 0.0, 1.0, {});
    CHECK(out.report["structure"] == "none");
    CHECK_FALSE(out.report.contains("hamiltonian_drift"));
    CHECK_FALSE(out.report.contains("leaf_drift"));
    CHECK(out.report["group_sum_error_max"].get<double>() <= 1e-12);

    std::istringstream csv(out.csv);
    std::string header;
    std::getline(csv, header);
    CHECK(header == "t,x_1,x_2,x_3,x_4");
  }
}
