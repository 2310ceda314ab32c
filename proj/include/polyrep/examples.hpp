// The two bundled demonstration games, both built from a skew model and an
// unnormalized equilibrium via make_conservative. ex1 has an interior
// equilibrium and quasi-periodic interior orbits; ex2's equilibrium lies
// outside the prism and interior orbits run from a repelling vertex to an
// attracting one.
#pragma once

#include <string>
#include <vector>

#include "polyrep/conservative.hpp"
#include "polyrep/game.hpp"

namespace polyrep {

struct BundledExample {
  std::string name;
  Signature signature;
  Matrix<Rational> skew_model;
  Vector<Rational> unnormalized_equilibrium;  // qt, group sums = scalings

  // Demo trajectory: initial state and horizon used by reports and tests.
  Vector<double> initial;
  double horizon = 0;

  // Vertices worth reporting rates for (ex2's repeller and attractor).
  std::vector<std::vector<std::size_t>> notable_vertices;
};

const std::vector<BundledExample>& bundled_examples();
const BundledExample& bundled_example(const std::string& name);  // DomainError if unknown

}  // namespace polyrep
