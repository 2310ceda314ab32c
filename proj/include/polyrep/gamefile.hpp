// Line-oriented game-file format, version v1.
//
//   format: v1
//   signature: 3 2
//   payoff:
//     0 0 -1/10 1/2 -1
//     ...               (one row per line, n rows)
//   skew_model:         (optional, n rows like payoff)
//   scaling: -1/5 1     (optional, one rational per group)
//   equilibrium: -9/2 8 -5/2 0 1   (optional, length n)
//   integration: rtol=1e-10 atol=1e-12 max_step=0.1 method=rk45 mode=chart
//
// '#' starts a comment anywhere; numbers are exact rational or decimal
// literals except in the integration line, which holds floats. Unknown keys
// are rejected. SyntaxError marks malformed text, SemanticError well-formed
// text with inconsistent content; both carry line numbers.
#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "polyrep/game.hpp"
#include "polyrep/integrate.hpp"

namespace polyrep {

struct IntegrationDefaults {
  std::optional<double> rtol, atol, max_step;
  std::optional<IntegrationMethod> method;
  std::optional<CoordinateMode> mode;

  IntegratorConfig apply(IntegratorConfig base = {}) const;
};

struct GameFile {
  Signature signature;
  Matrix<Rational> payoff;
  std::optional<Matrix<Rational>> skew_model;
  std::optional<Vector<Rational>> scaling;
  std::optional<Vector<Rational>> equilibrium;
  IntegrationDefaults integration;

  PolymatrixGame game() const { return validate_game(signature, payoff); }

  // Candidate decomposition from the optional sections, with the offset part
  // defined as A - A0 D; present only when all three sections are.
  std::optional<ConservativeDecomposition> candidate() const;
};

GameFile parse_game_file(std::istream& in);
GameFile parse_game_file_text(const std::string& text);
GameFile load_game_file(const std::string& path);

std::string serialize_game_file(const GameFile& file);

}  // namespace polyrep
