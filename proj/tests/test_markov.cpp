#include <doctest.h>

#include <cmath>

#include "tailspace/checks.hpp"
#include "tailspace/markov.hpp"

using namespace tailspace;

TEST_CASE("finite space validation") {
  Eigen::VectorXd pos(2), mu(2);
  pos << 0, 1;
  mu << 0.5, 0.6;
  CHECK_THROWS_AS(FiniteSpace(pos, mu), Error);  // sum != 1
  mu << 1.0, 0.0;
  CHECK_THROWS_AS(FiniteSpace(pos, mu), Error);  // zero mass
}

TEST_CASE("hypercube generator matches the cube operators") {
  Rng rng(21);
  for (int n : {2, 4, 6}) {
    const MarkovGenerator gen = hypercube_generator(n);
    const CubeFunction f = random_mean_zero(n, rng);
    const Eigen::VectorXd via_gen = gen.semigroup(0.7, f.values());
    const Eigen::VectorXd via_fwht = heat(f, 0.7).values();
    CHECK((via_gen - via_fwht).cwiseAbs().maxCoeff() < 1e-10);
    const Eigen::VectorXd lap_gen = gen.apply(f.values());
    CHECK((lap_gen - laplacian(f).values()).cwiseAbs().maxCoeff() < 1e-10);
    CHECK(gen.poincare_constant() == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("semigroup basics") {
  Rng rng(22);
  const MarkovGenerator gen = random_reversible_generator(6, rng);
  const Eigen::VectorXd f = random_state_function(6, rng);
  CHECK((gen.semigroup(0.0, f) - f).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(6);
  CHECK((gen.semigroup(1.3, ones) - ones).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(gen.mean(gen.semigroup(0.9, f)) == doctest::Approx(gen.mean(f)).epsilon(1e-12));
  // Semigroup law.
  const Eigen::VectorXd ab = gen.semigroup(0.3, gen.semigroup(0.5, f));
  CHECK((ab - gen.semigroup(0.8, f)).cwiseAbs().maxCoeff() < 1e-10);
  // Positivity on nonnegative functions.
  const Eigen::VectorXd pos = f.cwiseAbs();
  CHECK(gen.semigroup(0.4, pos).minCoeff() > -1e-12);
  CHECK_THROWS_AS(gen.semigroup(-1.0, f), Error);
  CHECK_THROWS_AS(gen.semigroup(1.0, Eigen::VectorXd::Zero(5)), Error);
}

TEST_CASE("L2 contraction at the advertised gap") {
  Rng rng(23);
  for (int rep = 0; rep < 10; ++rep) {
    const MarkovGenerator gen = random_reversible_generator(2 + rep % 6, rng);
    const double C = gen.poincare_constant() + 1e-9;
    const Eigen::VectorXd f = random_mean_zero_state(gen, rng);
    for (double t : {0.1, 0.5, 2.0}) {
      CHECK(gen.norm_lp(gen.semigroup(t, f), 2.0) <=
            std::exp(-t / C) * gen.norm_lp(f, 2.0) + 1e-9);
    }
  }
}

TEST_CASE("poincare constants") {
  // Symmetric two-state chain with unit jump rate: eigenvalues {0, 2}.
  Eigen::VectorXd pos(2), mu(2);
  pos << -1, 1;
  mu << 0.5, 0.5;
  Eigen::MatrixXd L(2, 2);
  L << 1, -1, -1, 1;
  const MarkovGenerator gen(FiniteSpace(pos, mu), L);
  CHECK(gen.eigenvalues()(1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(gen.poincare_constant() == doctest::Approx(0.5).epsilon(1e-12));

  for (double C0 : {0.3, 1.0, 4.5}) {
    const MarkovGenerator ext = extremal_generator(0.3, 0.7, C0);
    CHECK(ext.poincare_constant() == doctest::Approx(C0).epsilon(1e-10));
  }

  // Disconnected: two isolated states.
  Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(2, 2);
  const MarkovGenerator flat(FiniteSpace(pos, mu), zero);
  CHECK_THROWS_AS(flat.poincare_constant(), Error);
}

TEST_CASE("dirichlet forms") {
  const MarkovGenerator gen = hypercube_generator(3);
  const Eigen::VectorXd c = Eigen::VectorXd::Constant(8, 3.0);
  CHECK(gen.dirichlet_form(c, c) == doctest::Approx(0.0).epsilon(1e-14));
  const Eigen::VectorXd dict = CubeFunction::dictator(3, 0).values();
  CHECK(gen.dirichlet_form(dict, dict) == doctest::Approx(1.0).epsilon(1e-12));

  Rng rng(24);
  for (int rep = 0; rep < 10; ++rep) {
    const MarkovGenerator g = random_reversible_generator(5, rng);
    const Eigen::VectorXd a = random_state_function(5, rng);
    const Eigen::VectorXd b = random_state_function(5, rng);
    CHECK(std::abs(g.dirichlet_form(a, b) - g.dirichlet_form_edge_sum(a, b)) < 1e-10);
    CHECK(std::abs(g.dirichlet_form(a, b) - g.dirichlet_form(b, a)) < 1e-10);
  }
}

TEST_CASE("extremal generator attains Poincare equality for every function") {
  Rng rng(25);
  const double C = 2.5;
  const MarkovGenerator ext = extremal_generator(0.21, 0.79, C);
  for (int rep = 0; rep < 100; ++rep) {
    const Eigen::VectorXd f = random_state_function(2, rng);
    const double var = ext.inner(f, f) - ext.mean(f) * ext.mean(f);
    CHECK(std::abs(var - C * ext.dirichlet_form(f, f)) < 1e-12);
  }
  CHECK_THROWS_AS(extremal_generator(0.3, 0.6, 1.0), Error);
  CHECK_THROWS_AS(extremal_generator(-0.1, 1.1, 1.0), Error);

  const MarkovGenerator sym = extremal_generator(0.5, 0.5, 1.0);
  CHECK(sym.eigenvalues()(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sym.eigenvalues()(1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("generator validation rejects bad matrices") {
  Eigen::VectorXd pos(2), mu(2);
  pos << 0, 1;
  mu << 0.25, 0.75;
  Eigen::MatrixXd bad_rows(2, 2);
  bad_rows << 1, -0.5, -1, 1;
  CHECK_THROWS_AS(MarkovGenerator(FiniteSpace(pos, mu), bad_rows), Error);
  Eigen::MatrixXd not_reversible(2, 2);
  not_reversible << 1, -1, -1, 1;  // mu(0) L(0,1) != mu(1) L(1,0)
  CHECK_THROWS_AS(MarkovGenerator(FiniteSpace(pos, mu), not_reversible), Error);
  Eigen::MatrixXd negative_rate(2, 2);
  negative_rate << -3, 3, 1, -1;  // off-diagonal entries positive => rate < 0
  CHECK_THROWS_AS(MarkovGenerator(FiniteSpace(pos, mu), negative_rate), Error);
}
