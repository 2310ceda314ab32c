#include "polyrep/rational.hpp"

#include <cctype>

namespace polyrep {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  auto fail = [&] {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
  };

  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    mpz_class n(std::string(num), 10), d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    value = mpq_class(n, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail();
    if (!whole.empty() && !all_digits(whole)) fail();
    if (!frac.empty() && !all_digits(frac)) fail();
    mpz_class n = whole.empty() ? mpz_class(0) : mpz_class(std::string(whole), 10);
    mpz_class d(1);
    for (char c : frac) {
      n = n * 10 + (c - '0');
      d *= 10;
    }
    value = mpq_class(n, d);
  } else {
    if (!all_digits(s)) fail();
    value = mpq_class(mpz_class(std::string(s), 10));
  }

  value.canonicalize();
  if (negative) value = -value;
  return value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace polyrep
