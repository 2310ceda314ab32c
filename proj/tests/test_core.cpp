// Game algebra: signatures, validation, payoff equivalence, face
// restriction, equilibrium predicates and prism points.
#include <doctest.h>

#include <random>

#include "polyrep/errors.hpp"
#include "polyrep/examples.hpp"
#include "polyrep/field.hpp"
#include "polyrep/game.hpp"
#include "polyrep/prism.hpp"
#include "test_support.hpp"

using namespace polyrep;
using testsupport::random_matrix;
using testsupport::random_rational;
using testsupport::random_signature;
using testsupport::rmat;
using testsupport::rvec;

namespace {

PolymatrixGame example_game(const std::string& name) {
  const BundledExample& ex = bundled_example(name);
  return make_conservative(ex.signature, ex.skew_model, ex.unnormalized_equilibrium).first;
}

// A random matrix whose blocks have all rows equal; adding it to a payoff
// never changes the induced field.
Matrix<Rational> random_row_constant(std::mt19937_64& rng, const Signature& sig) {
  Matrix<Rational> m(sig.dimension(), sig.dimension());
  for (std::size_t a = 0; a < sig.groups(); ++a)
    for (std::size_t j = 0; j < sig.dimension(); ++j) {
      Rational c = random_rational(rng);
      for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) m(i, j) = c;
    }
  return m;
}

}  // namespace

TEST_CASE("signature layout and derived quantities") {
  Signature sig({2, 3, 1});
  CHECK(sig.groups() == 3);
  CHECK(sig.dimension() == 6);
  CHECK(sig.offset(0) == 0);
  CHECK(sig.offset(1) == 2);
  CHECK(sig.offset(2) == 5);
  CHECK(sig.size(1) == 3);
  CHECK(sig.group_of(0) == 0);
  CHECK(sig.group_of(4) == 1);
  CHECK(sig.group_of(5) == 2);
  CHECK(sig.chart_dimension() == 3);
  CHECK(sig == Signature({2, 3, 1}));
  CHECK_FALSE(sig == Signature({2, 3}));

  CHECK_THROWS_AS(Signature({2, 0, 1}), EmptyGroup);
}

TEST_CASE("validate_game accepts well-formed input and rejects bad shapes") {
  const BundledExample& ex1 = bundled_example("ex1");
  CHECK_NOTHROW(validate_game(ex1.signature, ex1.skew_model));

  // Smallest possible game: one group, one strategy.
  PolymatrixGame trivial = validate_game(Signature({1}), rmat({"0"}));
  CHECK(trivial.signature().dimension() == 1);

  CHECK_THROWS_AS(validate_game(Signature({2, 2}), Matrix<Rational>(5, 5)), DimensionMismatch);
  CHECK_THROWS_AS(validate_game(Signature({2, 2}), Matrix<Rational>(4, 5)), DimensionMismatch);
}

TEST_CASE("payoff blocks slice by group pair") {
  PolymatrixGame g = example_game("ex1");
  CHECK(g.block(0, 0) == rmat({"0 -5/2", "5/2 0"}));
  CHECK(g.block(0, 2) == rmat({"0 2", "-2 1"}));
  CHECK(g.block(2, 1) == rmat({"-9/8 0", "9/4 0"}));
}

TEST_CASE("games_equivalent: row-constant block additions do not matter") {
  PolymatrixGame g = example_game("ex1");
  CHECK(games_equivalent(g, g));

  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    Signature sig = random_signature(rng);
    std::size_t n = sig.dimension();
    PolymatrixGame a(sig, random_matrix(rng, n, n));
    PolymatrixGame b(sig, a.payoff() + random_row_constant(rng, sig));
    CHECK(games_equivalent(a, b));
  }

  // A single perturbed entry breaks the equal-rows property of its block.
  Matrix<Rational> perturbed = g.payoff();
  perturbed(0, 1) += 1;
  CHECK_FALSE(games_equivalent(g, PolymatrixGame(g.signature(), perturbed)));

  CHECK_THROWS_AS(games_equivalent(g, example_game("ex2")), SignatureMismatch);
}

TEST_CASE("games_equivalent is an equivalence relation") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    Signature sig = random_signature(rng);
    std::size_t n = sig.dimension();
    PolymatrixGame a(sig, random_matrix(rng, n, n));
    PolymatrixGame b(sig, a.payoff() + random_row_constant(rng, sig));
    PolymatrixGame c(sig, b.payoff() + random_row_constant(rng, sig));
    PolymatrixGame d(sig, a.payoff() + random_matrix(rng, n, n));

    CHECK(games_equivalent(a, a));
    CHECK(games_equivalent(b, a));       // symmetry with the pair above
    CHECK(games_equivalent(a, c));       // transitivity through b
    if (!games_equivalent(a, d)) {       // contrapositive keeps the relation honest
      CHECK_FALSE(games_equivalent(d, a));
    }
  }
}

TEST_CASE("equivalent games induce the same replicator field, exactly") {
  std::mt19937_64 rng(11);
  int points = 0;
  while (points < 100) {
    Signature sig = random_signature(rng);
    std::size_t n = sig.dimension();
    PolymatrixGame a(sig, random_matrix(rng, n, n));
    PolymatrixGame b(sig, a.payoff() + random_row_constant(rng, sig));
    for (int k = 0; k < 4; ++k, ++points) {
      Vector<Rational> x = random_interior_point_exact(sig, rng);
      CHECK(vector_field(a, x) == vector_field(b, x));
    }
  }
}

TEST_CASE("games_equivalent tolerance covers float-born payoffs") {
  PolymatrixGame g = example_game("ex1");
  Matrix<Rational> wobble = g.payoff();
  wobble(2, 3) += make_rational(1, 10000000000000L);  // 1e-13
  PolymatrixGame h(g.signature(), wobble);
  CHECK_FALSE(games_equivalent(g, h));
  CHECK(games_equivalent(g, h, make_rational(1, 1000000000000L)));  // 1e-12
}

TEST_CASE("restrict_to_face keeps the selected rows and columns") {
  PolymatrixGame g = example_game("ex1");

  SUBCASE("the full face is the identity restriction") {
    FaceIndexSet all(g.signature(), {0, 1, 2, 3, 4, 5});
    PolymatrixGame same = restrict_to_face(g, all);
    CHECK(same.signature() == g.signature());
    CHECK(same.payoff() == g.payoff());
  }

  SUBCASE("dropping one strategy of group three") {
    FaceIndexSet face(g.signature(), {0, 1, 2, 3, 5});
    CHECK(face.restricted_signature() == Signature({2, 2, 1}));
    PolymatrixGame sub = restrict_to_face(g, face);
    CHECK(sub.payoff() == rmat({
                              "0 -5/2 0 9/8 2",
                              "5/2 0 0 -9/8 1",
                              "0 0 0 0 -2",
                              "-5/4 5/4 0 0 0",
                              "-5/2 -5/4 9/4 0 0",
                          }));
  }

  SUBCASE("emptied groups and bad indices are refused") {
    CHECK_THROWS_AS(FaceIndexSet(g.signature(), {0, 1}), InvalidFace);
    CHECK_THROWS_AS(FaceIndexSet(g.signature(), {0, 2, 4, 17}), InvalidFace);
  }
}

TEST_CASE("restriction composes with index re-mapping") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    Signature sig = random_signature(rng, 3, 4);
    std::size_t n = sig.dimension();
    PolymatrixGame g(sig, random_matrix(rng, n, n));

    // Keep a random nonempty subset of each group, then a sub-subset.
    std::vector<std::size_t> inner, outer;
    for (std::size_t a = 0; a < sig.groups(); ++a) {
      std::vector<std::size_t> members;
      for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i)
        if (i == sig.offset(a) || rng() % 2 == 0) members.push_back(i);
      for (std::size_t i : members)
        if (i == members.front() || rng() % 2 == 0) inner.push_back(i);
      outer.insert(outer.end(), members.begin(), members.end());
    }

    FaceIndexSet big(sig, outer);
    PolymatrixGame once = restrict_to_face(g, FaceIndexSet(sig, inner));

    // Positions of the inner strategies inside the outer restriction.
    std::vector<std::size_t> relative;
    for (std::size_t k = 0; k < outer.size(); ++k)
      for (std::size_t i : inner)
        if (outer[k] == i) relative.push_back(k);
    PolymatrixGame twice = restrict_to_face(restrict_to_face(g, big),
                                            FaceIndexSet(big.restricted_signature(), relative));

    CHECK(once.signature() == twice.signature());
    CHECK(once.payoff() == twice.payoff());
  }
}

TEST_CASE("is_equilibrium: exact test on used strategies per group") {
  PolymatrixGame g = example_game("ex1");

  Vector<Rational> q = rvec("7/10 3/10 5/9 4/9 1/2 1/2");
  CHECK(is_equilibrium(g, q));

  Vector<Rational> center = uniform_point<Rational>(g.signature());
  CHECK_FALSE(is_equilibrium(g, center));

  // Vertices use one strategy per group, so the agreement is vacuous.
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    Signature sig = random_signature(rng);
    std::size_t n = sig.dimension();
    PolymatrixGame h(sig, random_matrix(rng, n, n));
    std::vector<std::size_t> support;
    for (std::size_t a = 0; a < sig.groups(); ++a)
      support.push_back(sig.offset(a) + rng() % sig.size(a));
    CHECK(is_equilibrium(h, vertex_point(FaceIndexSet(sig, support))));
  }
}

TEST_CASE("prism points validate sums, signs and interiority") {
  Signature sig({2, 2});

  PrismPoint<Rational> inside = make_prism_point(sig, rvec("1/3 2/3 1/2 1/2"));
  CHECK(inside.interior);

  PrismPoint<Rational> edge = make_prism_point(sig, rvec("1 0 1/2 1/2"));
  CHECK_FALSE(edge.interior);

  CHECK_THROWS_AS(make_prism_point(sig, rvec("1/2 1/3 1/2 1/2")), DomainError);
  CHECK_THROWS_AS(make_prism_point(sig, rvec("3/2 -1/2 1/2 1/2")), DomainError);
  CHECK_THROWS_AS(make_prism_point(sig, rvec("1/2 1/2 1/2")), DimensionMismatch);

  CHECK(uniform_point<Rational>(Signature({3, 2})) == rvec("1/3 1/3 1/3 1/2 1/2"));

  CHECK(vertex_point(FaceIndexSet(Signature({3, 2}), {1, 4})) == rvec("0 1 0 0 1"));
  CHECK_THROWS_AS(vertex_point(FaceIndexSet(Signature({3, 2}), {0, 1, 4})), NotVertex);
}

TEST_CASE("random point generators respect the prism structure") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    Signature sig = random_signature(rng);

    Vector<double> x = random_interior_point(sig, rng);
    for (std::size_t a = 0; a < sig.groups(); ++a) {
      double sum = 0;
      for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) {
        CHECK(x[i] > 0);
        sum += x[i];
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }

    Vector<Rational> xr = random_interior_point_exact(sig, rng);
    for (std::size_t a = 0; a < sig.groups(); ++a) {
      Rational sum(0);
      for (std::size_t i = sig.offset(a); i < sig.offset(a) + sig.size(a); ++i) {
        CHECK(xr[i] > 0);
        sum += xr[i];
      }
      CHECK(sum == Rational(1));
    }
  }
}
