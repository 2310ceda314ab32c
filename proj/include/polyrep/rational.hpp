// Exact rational scalar type and literal parsing.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

#include "polyrep/matrix.hpp"

namespace polyrep {

using Rational = mpq_class;

// The two-argument mpq_class constructor skips canonicalization; route all
// numerator/denominator construction through here.
inline Rational make_rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "3", "-9/8", "0.25", "+1/2". Decimal literals convert exactly.
// Throws std::invalid_argument on malformed input or zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

inline Vector<double> to_double(const Vector<Rational>& v) {
  Vector<double> out;
  out.reserve(v.size());
  for (const Rational& q : v) out.push_back(q.get_d());
  return out;
}

inline Matrix<double> to_double(const Matrix<Rational>& m) {
  Matrix<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

inline Vector<Rational> to_rational(const Vector<double>& v) {
  Vector<Rational> out;
  out.reserve(v.size());
  for (double d : v) out.emplace_back(d);
  return out;
}

}  // namespace polyrep
