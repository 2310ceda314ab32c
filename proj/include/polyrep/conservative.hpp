// Formal equilibria and the conservative structure of a game: the
// decomposition A ~ A0 D into a skew model and nonzero group scalings, the
// Hamiltonian it induces, and exact detection of the decomposition from the
// payoff alone.
#pragma once

#include <optional>
#include <string>
#include <utility>

#include "polyrep/field.hpp"
#include "polyrep/game.hpp"
#include "polyrep/linalg.hpp"
#include "polyrep/matrix.hpp"
#include "polyrep/rational.hpp"

namespace polyrep {

// Solution set of (A q)_i constant within each group, group sums 1. The
// point q is one exact representative: interior when the set meets the open
// prism, minimum-norm otherwise; directions span the rest of the set.
struct FormalEquilibrium {
  Vector<Rational> point;
  std::vector<Vector<Rational>> directions;
  bool interior = false;
};

// Empty when the affine system is inconsistent.
std::optional<FormalEquilibrium> formal_equilibria(const PolymatrixGame& g);

struct ConservativeDecomposition {
  Matrix<Rational> skew_model;     // A0, exactly skew
  Vector<Rational> scaling;        // one nonzero lambda per group
  Matrix<Rational> offsets;        // C, row-constant blocks, A = A0 D + C
  Vector<Rational> equilibrium;    // q, formal equilibrium of the game
};

struct VerifyResult {
  bool ok = false;
  std::string failure;  // empty when ok; otherwise names the broken condition
};

// Checks every defining condition of the decomposition against the game.
VerifyResult verify_conservative(const PolymatrixGame& g, const ConservativeDecomposition& d);

// Builds the game A = A0 D from a skew matrix and an unnormalized equilibrium
// qt: requires A0 qt constant within groups, and each group sum of qt nonzero
// (those sums become the scalings). Throws SkewViolation,
// BlockConstantViolation or ZeroBlockSum.
std::pair<PolymatrixGame, ConservativeDecomposition> make_conservative(
    const Signature& sig, const Matrix<Rational>& skew_model, const Vector<Rational>& qt);

// Exact search for a conservative decomposition of an arbitrary game. The
// skewness of (A - C) D^{-1} is linear in the reciprocals mu_a = 1/lambda_a
// and in d^{ab} = mu_b c^{ab}; the rational nullspace of that system is
// scanned along (1, s, s^2, ...) until every mu_a is nonzero, which a
// polynomial-root count bounds by a short deterministic sweep. Empty result
// means no decomposition exists (including the case of no formal
// equilibrium).
std::optional<ConservativeDecomposition> detect_conservative(const PolymatrixGame& g);

// Hamiltonian data: H(x) = sum_b lambda_b sum_{j in b} q_j log x_j.
struct HamiltonianSpec {
  Vector<Rational> scaling;      // per group
  Vector<Rational> equilibrium;  // q
};

// Finite whenever x_j > 0 at every j with q_j != 0; throws DomainError
// otherwise. Terms with q_j = 0 are dropped, so boundary faces that the
// support of q avoids are fine.
double hamiltonian(const Signature& sig, const HamiltonianSpec& spec, const Vector<double>& x);

// Gradient lambda_b q_j / x_j, zero where q_j = 0.
Vector<double> hamiltonian_gradient(const Signature& sig, const HamiltonianSpec& spec,
                                    const Vector<double>& x);

// The covector with components lambda_b(x) q_j / x_j for state-dependent
// scalings; pairs with the bivector of the skew model to give the
// generalized field.
Vector<double> xi_form(const Signature& sig, const Vector<Rational>& q,
                       const GeneralizedScaling& scaling, const Vector<double>& x);

}  // namespace polyrep
