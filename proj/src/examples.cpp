#include "polyrep/examples.hpp"

#include <sstream>

namespace polyrep {

namespace {

Matrix<Rational> matrix_from_rows(std::size_t n, const std::vector<std::string>& rows) {
  Matrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::istringstream in(rows[i]);
    std::string tok;
    for (std::size_t j = 0; j < n; ++j) {
      in >> tok;
      m(i, j) = parse_rational(tok);
    }
  }
  return m;
}

Vector<Rational> vector_from(const std::string& text) {
  std::istringstream in(text);
  Vector<Rational> v;
  std::string tok;
  while (in >> tok) v.push_back(parse_rational(tok));
  return v;
}

std::vector<BundledExample> build() {
  std::vector<BundledExample> out;

  BundledExample ex1;
  ex1.name = "ex1";
  ex1.signature = Signature({2, 2, 2});
  ex1.skew_model = matrix_from_rows(6, {
                                           "0    -1    0    1/2  0    1",
                                           "1    0    0    -1/2 -1   1/2",
                                           "0    0    0    0    1/2  -1",
                                           "-1/2 1/2  0    0    0    0",
                                           "0    1    -1/2 0    0    -1/2",
                                           "-1   -1/2 1    0    1/2  0",
                                       });
  ex1.unnormalized_equilibrium = vector_from("7/4 3/4 5/4 1 1 1");
  ex1.initial = {0.8, 0.2, 0.45, 0.55, 0.55, 0.45};
  ex1.horizon = 100.0;
  out.push_back(std::move(ex1));

  BundledExample ex2;
  ex2.name = "ex2";
  ex2.signature = Signature({3, 2});
  ex2.skew_model = matrix_from_rows(5, {
                                           "0    0    1/2  1/2  -1",
                                           "0    0    -1/2 1/2  -1/2",
                                           "-1/2 1/2  0    1    1/2",
                                           "-1/2 -1/2 -1   0    0",
                                           "1    1/2  -1/2 0    0",
                                       });
  ex2.unnormalized_equilibrium = vector_from("9/10 -8/5 1/2 0 1");
  ex2.initial = {0.3, 0.3, 0.4, 0.5, 0.5};
  ex2.horizon = 200.0;
  ex2.notable_vertices = {{0, 4}, {2, 3}};
  out.push_back(std::move(ex2));

  return out;
}

}  // namespace

const std::vector<BundledExample>& bundled_examples() {
  static const std::vector<BundledExample> examples = build();
  return examples;
}

const BundledExample& bundled_example(const std::string& name) {
  for (const BundledExample& e : bundled_examples())
    if (e.name == name) return e;
  throw DomainError("no bundled example named '" + name + "'");
}

}  // namespace polyrep
