// Polymatrix games: a signature plus an n x n payoff matrix of exact
// rationals, read blockwise. Includes the payoff-equivalence relation (games
// with the same replicator field), face restriction, and the equilibrium
// predicate on prism points.
#pragma once

#include <cstddef>
#include <vector>

#include "polyrep/errors.hpp"
#include "polyrep/linalg.hpp"
#include "polyrep/matrix.hpp"
#include "polyrep/rational.hpp"
#include "polyrep/signature.hpp"

namespace polyrep {

class PolymatrixGame {
 public:
  PolymatrixGame(Signature sig, Matrix<Rational> payoff);

  const Signature& signature() const { return sig_; }
  const Matrix<Rational>& payoff() const { return payoff_; }
  const Matrix<double>& payoff_double() const { return payoff_double_; }

  // Submatrix A^{ab} pairing group a's strategies against group b's.
  Matrix<Rational> block(std::size_t a, std::size_t b) const;

  bool is_skew() const;

 private:
  Signature sig_;
  Matrix<Rational> payoff_;
  Matrix<double> payoff_double_;
};

// Named constructor mirroring the file/CLI entry path; throws
// DimensionMismatch or EmptyGroup on malformed input.
PolymatrixGame validate_game(const Signature& sig, const Matrix<Rational>& payoff);

// Normal form under payoff equivalence: in every block, the block's last row
// is subtracted from all its rows, so equivalent games share one normal form.
Matrix<Rational> equivalence_normal_form(const PolymatrixGame& g);

// True when the two games induce identical replicator fields. Entries are
// compared within tol (exact when tol = 0) after normalization; tolerance
// exists for payoffs that came in as floats.
bool games_equivalent(const PolymatrixGame& a, const PolymatrixGame& b,
                      const Rational& tol = Rational(0));

// A face of the prism: a nonempty set of surviving strategies per group.
class FaceIndexSet {
 public:
  FaceIndexSet(const Signature& sig, std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const { return indices_; }
  const Signature& parent_signature() const { return parent_; }
  const Signature& restricted_signature() const { return restricted_; }
  bool is_vertex() const { return indices_.size() == parent_.groups(); }

 private:
  Signature parent_;
  Signature restricted_;
  std::vector<std::size_t> indices_;
};

// The game induced on a face: the surviving rows and columns of the payoff.
PolymatrixGame restrict_to_face(const PolymatrixGame& g, const FaceIndexSet& face);

// Equilibrium test on a point of the prism: within every group, the payoffs
// (Ax)_i of the strategies actually used (x_i > 0) must coincide within tol.
bool is_equilibrium(const PolymatrixGame& g, const Vector<Rational>& x,
                    const Rational& tol = Rational(0));
bool is_equilibrium(const PolymatrixGame& g, const Vector<double>& x, double tol = 1e-12);

}  // namespace polyrep
