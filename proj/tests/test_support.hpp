// Shared helpers for the test suites: literal-based construction and small
// deterministic generators.
#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "polyrep/game.hpp"
#include "polyrep/matrix.hpp"
#include "polyrep/rational.hpp"
#include "polyrep/signature.hpp"

namespace testsupport {

using polyrep::Matrix;
using polyrep::Rational;
using polyrep::Signature;
using polyrep::Vector;

inline Vector<Rational> rvec(const std::string& text) {
  std::istringstream in(text);
  Vector<Rational> v;
  std::string tok;
  while (in >> tok) v.push_back(polyrep::parse_rational(tok));
  return v;
}

inline Matrix<Rational> rmat(const std::vector<std::string>& rows) {
  std::vector<Vector<Rational>> parsed;
  for (const std::string& r : rows) parsed.push_back(rvec(r));
  Matrix<Rational> m(parsed.size(), parsed.empty() ? 0 : parsed[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = parsed[i][j];
  return m;
}

// Small rationals keep exact elimination fast.
inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  return polyrep::make_rational(num(rng), den(rng));
}

inline Matrix<Rational> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
  return m;
}

inline Matrix<Rational> random_skew_matrix(std::mt19937_64& rng, std::size_t n) {
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = random_rational(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

inline Signature random_signature(std::mt19937_64& rng, std::size_t max_groups = 3,
                                  std::size_t max_size = 3) {
  std::uniform_int_distribution<std::size_t> groups(1, max_groups);
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::vector<std::size_t> parts(groups(rng));
  for (auto& s : parts) s = size(rng);
  return Signature(parts);
}

}  // namespace testsupport
