#include "polyrep/game.hpp"

#include <algorithm>
#include <cmath>

namespace polyrep {

PolymatrixGame::PolymatrixGame(Signature sig, Matrix<Rational> payoff)
    : sig_(std::move(sig)), payoff_(std::move(payoff)) {
  if (payoff_.rows() != sig_.dimension() || payoff_.cols() != sig_.dimension())
    throw DimensionMismatch("payoff must be " + std::to_string(sig_.dimension()) + "x" +
                            std::to_string(sig_.dimension()) + ", got " +
                            std::to_string(payoff_.rows()) + "x" + std::to_string(payoff_.cols()));
  payoff_double_ = to_double(payoff_);
}

Matrix<Rational> PolymatrixGame::block(std::size_t a, std::size_t b) const {
  return payoff_.block(sig_.offset(a), sig_.offset(b), sig_.size(a), sig_.size(b));
}

bool PolymatrixGame::is_skew() const {
  const std::size_t n = sig_.dimension();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (payoff_(i, j) + payoff_(j, i) != 0) return false;
  return true;
}

PolymatrixGame validate_game(const Signature& sig, const Matrix<Rational>& payoff) {
  return PolymatrixGame(sig, payoff);
}

Matrix<Rational> equivalence_normal_form(const PolymatrixGame& g) {
  const Signature& sig = g.signature();
  Matrix<Rational> m = g.payoff();
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    std::size_t last = sig.offset(a) + sig.size(a) - 1;
    for (std::size_t b = 0; b < sig.groups(); ++b)
      for (std::size_t j = sig.offset(b); j < sig.offset(b) + sig.size(b); ++j) {
        Rational pivot = m(last, j);
        if (pivot == 0) continue;
        for (std::size_t i = sig.offset(a); i <= last; ++i) m(i, j) -= pivot;
      }
  }
  return m;
}

bool games_equivalent(const PolymatrixGame& a, const PolymatrixGame& b, const Rational& tol) {
  if (!(a.signature() == b.signature()))
    throw SignatureMismatch("games_equivalent requires a common signature");
  Matrix<Rational> diff = equivalence_normal_form(a) - equivalence_normal_form(b);
  return max_abs(diff) <= tol;
}

FaceIndexSet::FaceIndexSet(const Signature& sig, std::vector<std::size_t> indices)
    : parent_(sig), indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  if (indices_.empty() || indices_.back() >= sig.dimension())
    throw InvalidFace("face indices out of range");

  std::vector<std::size_t> counts(sig.groups(), 0);
  for (std::size_t i : indices_) ++counts[sig.group_of(i)];
  for (std::size_t a = 0; a < sig.groups(); ++a)
    if (counts[a] == 0)
      throw InvalidFace("face leaves group " + std::to_string(a + 1) + " without strategies");
  restricted_ = Signature(counts);
}

PolymatrixGame restrict_to_face(const PolymatrixGame& g, const FaceIndexSet& face) {
  if (!(face.parent_signature() == g.signature()))
    throw SignatureMismatch("face belongs to a different signature");
  const auto& idx = face.indices();
  Matrix<Rational> sub(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = g.payoff()(idx[i], idx[j]);
  return PolymatrixGame(face.restricted_signature(), sub);
}

namespace {

template <typename T>
bool equilibrium_impl(const PolymatrixGame& g, const Matrix<T>& payoff, const Vector<T>& x,
                      const T& tol) {
  const Signature& sig = g.signature();
  if (x.size() != sig.dimension()) throw DimensionMismatch("point size does not match signature");
  Vector<T> y = payoff * x;
  using std::abs;
  for (std::size_t a = 0; a < sig.groups(); ++a) {
    bool have_ref = false;
    T ref(0);
    for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) {
      if (!(x[i] > T(0))) continue;
      if (!have_ref) {
        ref = y[i];
        have_ref = true;
      } else if (abs(y[i] - ref) > tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_equilibrium(const PolymatrixGame& g, const Vector<Rational>& x, const Rational& tol) {
  return equilibrium_impl<Rational>(g, g.payoff(), x, tol);
}

bool is_equilibrium(const PolymatrixGame& g, const Vector<double>& x, double tol) {
  return equilibrium_impl<double>(g, g.payoff_double(), x, tol);
}

}  // namespace polyrep
