#include <doctest.h>

#include <cmath>

#include "tailspace/checks.hpp"
#include "tailspace/suite.hpp"

using namespace tailspace;

TEST_CASE("kappa closed forms, duality, lower bounds") {
  CHECK(kappa(4.0).value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-10));
  CHECK(kappa(4.0 / 3.0).value == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-10));
  CHECK(kappa(6.0).value == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(kappa(1.2).value == doctest::Approx(kappa(6.0).value).epsilon(1e-9));
  for (double p : {1.2, 1.5, 3.0, 5.0}) {
    CHECK(kappa(p).value == doctest::Approx(kappa(p / (p - 1.0)).value).epsilon(1e-9));
    const double s = p / (p - 2.0);
    CHECK(kappa(p).value >= std::abs(s) - 1e-9);
    CHECK(kappa(p).value >=
          std::sqrt((p * p + 4.0 * p - 4.0) / (p * p - 4.0 * p + 4.0)) - 1e-9);
  }
  // The minimizer for p = 4 is (sqrt2 + sqrt6)/2.
  CHECK(kappa(4.0).minimizer ==
        doctest::Approx((std::sqrt(2.0) + std::sqrt(6.0)) / 2.0).epsilon(1e-7));
  CHECK_THROWS_AS(kappa(2.0), Error);
  CHECK_THROWS_AS(kappa(1.0), Error);
}

TEST_CASE("heat smoothing bound") {
  // Eigenfunction equality at p = 2, |S| = 1 (rate is exactly 1).
  const CubeFunction dict = CubeFunction::dictator(4, 1);
  const CheckReport eq = check_heat_smoothing(dict, 2.0, 0.8, HeatBoundMode::Base);
  CHECK(eq.pass);
  CHECK(std::abs(eq.slack) < 1e-12);

  // The sharpened p = 4 exponent is 2/(3C).
  CHECK(heat_smoothing_rate(4.0, 1.0, HeatBoundMode::Kappa) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-9));
  CHECK(heat_smoothing_rate(6.0, 1.0, HeatBoundMode::Kappa) ==
        doctest::Approx(4.0 / 9.0).epsilon(1e-9));
  CHECK(heat_smoothing_rate(2.0, 2.0, HeatBoundMode::Kappa) ==
        doctest::Approx(0.5).epsilon(1e-12));

  Rng rng(41);
  for (int rep = 0; rep < 40; ++rep) {
    const CubeFunction f = random_mean_zero(2 + rep % 5, rng);
    for (double p : {1.1, 1.5, 2.0, 3.0, 4.0, 6.0}) {
      for (double t : {0.01, 0.5, 2.0}) {
        CHECK(check_heat_smoothing(f, p, t, HeatBoundMode::Base).pass);
        CHECK(check_heat_smoothing(f, p, t, HeatBoundMode::Kappa).pass);
      }
    }
  }
  // The ratio lhs/rhs is nonincreasing in t for eigenfunctions.
  const CubeFunction w3 = CubeFunction::character(5, 0b111);
  double prev_ratio = 2.0;
  for (double t : {0.01, 0.1, 0.5, 1.0, 2.0}) {
    const CheckReport r = check_heat_smoothing(w3, 3.0, t, HeatBoundMode::Base);
    const double ratio = r.lhs / r.rhs;
    CHECK(ratio <= prev_ratio + 1e-12);
    prev_ratio = ratio;
  }
  CHECK_THROWS_AS(check_heat_smoothing(CubeFunction::constant(3, 1.0), 2.0, 1.0,
                                       HeatBoundMode::Base),
                  Error);

  // Generator route agrees on the hypercube.
  const MarkovGenerator gen = hypercube_generator(4);
  const CubeFunction f = random_mean_zero(4, rng);
  const CheckReport via_gen =
      check_heat_smoothing(gen, f.values(), 3.0, 0.7, HeatBoundMode::Base);
  const CheckReport via_cube = check_heat_smoothing(f, 3.0, 0.7, HeatBoundMode::Base);
  CHECK(via_gen.lhs == doctest::Approx(via_cube.lhs).epsilon(1e-10));
  CHECK(via_gen.rhs == doctest::Approx(via_cube.rhs).epsilon(1e-10));
}

TEST_CASE("lp poincare") {
  // p = 2 on a character: lhs = |S|, rhs = 1.
  const CheckReport r2 = check_lp_poincare(CubeFunction::character(5, 0b11011), 2.0);
  CHECK(r2.lhs == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(r2.rhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r2.pass);

  // p = 4, dictator: phi_3(f) = f on +-1 values, so lhs = 1 vs rhs = 6/10.
  const CheckReport r4 = check_lp_poincare(CubeFunction::dictator(3, 0), 4.0);
  CHECK(r4.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r4.rhs == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(r4.pass);

  Rng rng(42);
  for (int rep = 0; rep < 60; ++rep) {
    const CubeFunction f = random_mean_zero(2 + rep % 5, rng);
    for (double p : {1.1, 1.5, 3.0, 4.0, 6.0}) {
      CHECK(check_lp_poincare(f, p).pass);
    }
  }
}

TEST_CASE("ternary tail contraction") {
  const CubeFunction w = CubeFunction::character(6, 0b111);
  // p = 2: the bound is exactly the eigenvalue decay.
  const CheckReport r = check_ternary_contraction(w, 3, 2.0, 0.4);
  CHECK(r.pass);
  CHECK(std::abs(r.slack) < 1e-12);
  // p = 4: min((p-1)/p, 1/p) = 1/4, rhs = e^{-tk/2} > lhs = e^{-tk}.
  const CheckReport r4 = check_ternary_contraction(w, 3, 4.0, 0.4);
  CHECK(r4.lhs == doctest::Approx(std::exp(-1.2)).epsilon(1e-10));
  CHECK(r4.rhs == doctest::Approx(std::exp(-0.6)).epsilon(1e-10));

  const CubeFunction zf = zero_mean_difference(indicator(hamming_7_4()));
  for (double p : {1.5, 2.0, 4.0}) {
    for (double t : {0.1, 1.0}) {
      CHECK(check_ternary_contraction(zf, 4, p, t).pass);
    }
  }
  // Range and tail violations are rejected.
  CHECK_THROWS_AS(check_ternary_contraction(CubeFunction::constant(3, 0.5), 1, 3.0, 1.0),
                  Error);
  CHECK_THROWS_AS(check_ternary_contraction(CubeFunction::dictator(3, 0), 2, 3.0, 1.0),
                  Error);
}

TEST_CASE("moment split lemma") {
  // Rademacher at p = 4: all four terms are 1/4, equality with E|X|^4 = 1.
  Eigen::VectorXd v(2), pr(2);
  v << 1, -1;
  pr << 0.5, 0.5;
  const DiscreteRV rademacher(v, pr);
  const CheckReport r = check_pospart_moment_split(rademacher, 4.0);
  CHECK(r.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.pass);

  // Scaling X -> cX scales both sides by c^p: the slack sign is invariant.
  Eigen::VectorXd vc = 0.37 * v;
  const CheckReport rc = check_pospart_moment_split(DiscreteRV(vc, pr), 4.0);
  CHECK(rc.pass);
  CHECK(std::abs(rc.slack) < 1e-12);

  Rng rng(43);
  for (int rep = 0; rep < 100; ++rep) {
    const DiscreteRV x = random_mean_zero_rv(6, rng);
    for (double p : {1.5, 3.0, 4.0}) {
      CHECK(check_pospart_moment_split(x, p).pass);
    }
  }
  CHECK_THROWS_AS(check_pospart_moment_split(DiscreteRV(v, Eigen::Vector2d(0.3, 0.7)), 3.0),
                  Error);  // nonzero mean
}

TEST_CASE("two point gap lemma") {
  const CheckReport eq = check_two_point_gap(1.7, 1.7, 3.0);
  CHECK(eq.lhs == 0.0);
  CHECK(eq.pass);
  // a=2, b=1, p=4: coefficient 1/5, bracket 4 + 1 + 1/2 + 8 = 13.5.
  const CheckReport r = check_two_point_gap(2.0, 1.0, 4.0);
  CHECK(r.rhs == doctest::Approx(2.7).epsilon(1e-12));
  CHECK(r.lhs == 1.0);
  Rng rng(44);
  for (int rep = 0; rep < 200; ++rep) {
    CHECK(check_two_point_gap(rng.uniform(0.01, 3.0), rng.uniform(0.01, 3.0),
                              rep % 2 ? 1.4 : 5.0)
              .pass);
  }
}

TEST_CASE("signed moment gap lemma") {
  Eigen::VectorXd v(2), pr(2);
  v << 1, -1;
  pr << 0.5, 0.5;
  const CheckReport p2 = check_signed_moment_gap(DiscreteRV(v, pr), 2.0);
  CHECK(p2.lhs == 0.0);
  CHECK(p2.rhs == 0.0);
  CHECK(p2.pass);
  const CheckReport p4 = check_signed_moment_gap(DiscreteRV(v, pr), 4.0);
  CHECK(p4.rhs == doctest::Approx(0.2).epsilon(1e-12));

  // The extremal X at p = 4 has lhs exactly E|X|^p / 9.
  const ExtremalResult ext = extremal_two_point(4.0);
  const DiscreteRV x(ext.values, ext.probs);
  const CheckReport rx = check_signed_moment_gap(x, 4.0);
  CHECK(rx.lhs == doctest::Approx(x.abs_moment(4.0) / 9.0).epsilon(1e-7));
  CHECK(rx.pass);
}

TEST_CASE("pointwise stroock-varopoulos") {
  const CheckReport eq = check_stroock_varopoulos(0.7, -1.3, 2.0);
  CHECK(std::abs(eq.slack) < 1e-12);  // both sides (a-b)^2
  const CheckReport r1 = check_stroock_varopoulos(1.0, 0.0, 4.0);
  CHECK(r1.lhs == doctest::Approx(1.0));
  CHECK(r1.rhs == doctest::Approx(0.75));
  const CheckReport r2 = check_stroock_varopoulos(1.0, -1.0, 4.0);
  CHECK(r2.lhs == doctest::Approx(4.0));
  CHECK(r2.rhs == doctest::Approx(3.0));
  Rng rng(45);
  for (int rep = 0; rep < 500; ++rep) {
    CHECK(check_stroock_varopoulos(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0),
                                   rep % 2 ? 1.3 : 5.5)
              .pass);
  }
}

TEST_CASE("weak stroock-varopoulos") {
  Rng rng(46);
  // Identity: (p-2)^2 + 4(p-1) = p^2 gives exact equality.
  Eigen::VectorXd mu(4);
  mu << 0.1, 0.2, 0.3, 0.4;
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(4, 4);
  const Eigen::VectorXd f = random_state_function(4, rng);
  const CheckReport raw = check_weak_stroock_varopoulos(eye, mu, f, 3.3);
  CHECK(std::abs(raw.lhs - raw.rhs) < 1e-12);

  for (int rep = 0; rep < 50; ++rep) {
    const MarkovGenerator gen = random_reversible_generator(2 + rep % 7, rng);
    const Eigen::MatrixXd P = gen.semigroup_matrix(rng.uniform(0.05, 2.0));
    const Eigen::VectorXd g = random_state_function(gen.size(), rng);
    for (double p : {1.5, 2.5, 4.0}) {
      CHECK(check_weak_stroock_varopoulos(P, gen.space().mu, g, p).pass);
    }
  }
  Eigen::MatrixXd not_stochastic = Eigen::MatrixXd::Identity(4, 4) * 0.5;
  CHECK_THROWS_AS(check_weak_stroock_varopoulos(not_stochastic, mu, f, 3.0), Error);
}

TEST_CASE("semigroup difference norm") {
  // Hypercube n = 4, eps = 1, t = 0.1: the five-eigenvalue max stays under 0.2.
  const MarkovGenerator gen = hypercube_generator(4);
  const CheckReport r = check_semigroup_difference(gen, 1.0, 0.1);
  double expected = 0.0;
  for (int lambda = 0; lambda <= 4; ++lambda) {
    expected = std::max(expected,
                        std::abs(std::exp(-1.1 * lambda) - std::exp(-1.0 * lambda)));
  }
  CHECK(r.lhs == doctest::Approx(expected).epsilon(1e-12));
  CHECK(r.rhs == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(r.pass);

  Rng rng(47);
  for (int rep = 0; rep < 100; ++rep) {
    const MarkovGenerator g = random_reversible_generator(2 + rep % 6, rng);
    CHECK(check_semigroup_difference(g, rng.uniform(0.2, 2.0), rng.uniform(0.001, 1.0))
              .pass);
  }
}

TEST_CASE("nazarov contraction and extension operator") {
  Rng rng(48);
  // Two-state chain: g is the second eigenfunction, equality at p = 2.
  const MarkovGenerator chain = random_reversible_generator(2, rng);
  const Eigen::MatrixXd P = chain.semigroup_matrix(0.6);
  Eigen::VectorXd g(2);
  // Mean-zero in L2(mu) on two points is one-dimensional: any mean-zero g is
  // proportional to the eigenfunction.
  g << chain.space().mu(1), -chain.space().mu(0);
  const NazarovResult res = check_nazarov(P, chain.space().mu, g, 2.0, true);
  CHECK(res.contraction.pass);
  CHECK(std::abs(res.contraction.slack) < 1e-10);
  for (const CheckReport& r : res.extension_norms) CHECK(r.pass);

  // Identity: eps = 0, the bound degenerates to ||g||_p.
  Eigen::VectorXd mu(3);
  mu << 0.2, 0.3, 0.5;
  const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(3, 3);
  Eigen::VectorXd h(3);
  h << 1.0, 1.0, -1.0;
  h.array() -= mu.dot(h);
  const NazarovResult none = check_nazarov(eye, mu, h, 3.0, false);
  CHECK(none.epsilon == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(none.contraction.pass);

  for (int rep = 0; rep < 60; ++rep) {
    const MarkovGenerator gen = random_reversible_generator(2 + rep % 5, rng);
    const Eigen::MatrixXd Pt = gen.semigroup_matrix(rng.uniform(0.05, 1.5));
    const Eigen::VectorXd z = random_mean_zero_state(gen, rng);
    for (double p : {1.5, 3.0}) {
      const NazarovResult rr = check_nazarov(Pt, gen.space().mu, z, p, true);
      CHECK(rr.contraction.pass);
      for (const CheckReport& r : rr.extension_norms) CHECK(r.pass);
    }
  }
}

TEST_CASE("talagrand tail inequality") {
  // Dictator at k = 1: mid term is exactly 3.
  const auto [d1, d2] = check_talagrand_tail(CubeFunction::dictator(4, 0), 1);
  CHECK(d1.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d1.rhs == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(d1.pass);
  CHECK(d2.pass);

  // Parity at k = n.
  const auto [p1, p2] =
      check_talagrand_tail(CubeFunction::character(5, 0b11111), 5);
  CHECK(p1.rhs == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(p1.pass);
  CHECK(p2.pass);

  Rng rng(49);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = 4 + rep % 4;
    const int k = 1 + rep % 3;
    const CubeFunction f = random_tail_function(n, k, rng);
    const auto [a, b] = check_talagrand_tail(f, k);
    CHECK(a.pass);
    CHECK(b.pass);
  }
  CHECK_THROWS_AS(check_talagrand_tail(CubeFunction::dictator(4, 0), 2), Error);
}

TEST_CASE("hypercontractivity") {
  Rng rng(50);
  for (int rep = 0; rep < 50; ++rep) {
    const CubeFunction f = random_cube_function(2 + rep % 5, rng);
    for (double t : {0.05, 0.3, 1.0, 10.0}) {
      CHECK(check_hypercontractivity(f, t).pass);
    }
  }
}

TEST_CASE("beckner inequality") {
  const CubeFunction dict = CubeFunction::dictator(3, 0);
  const CheckReport eq = check_beckner(dict, 2.0);
  CHECK(eq.lhs == 0.0);
  CHECK(std::abs(eq.rhs) < 1e-14);
  const CheckReport p1 = check_beckner(dict, 1.0);
  CHECK(p1.lhs == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(p1.rhs == doctest::Approx(0.0).epsilon(1e-12));
  Rng rng(51);
  for (int rep = 0; rep < 100; ++rep) {
    const CubeFunction f = random_cube_function(2 + rep % 5, rng);
    for (double p : {1.0, 1.3, 1.7, 2.0}) {
      CHECK(check_beckner(f, p).pass);
    }
  }
  CHECK_THROWS_AS(check_beckner(dict, 2.5), Error);
}

TEST_CASE("extremal two point distribution") {
  const ExtremalResult r4 = extremal_two_point(4.0);
  CHECK(r4.v == doctest::Approx((std::sqrt(2.0) + std::sqrt(6.0)) / 2.0).epsilon(1e-7));
  CHECK(r4.alpha == doctest::Approx(1.0 / (3.0 + std::sqrt(3.0))).epsilon(1e-7));
  CHECK(r4.kappa_value * r4.kappa_value + 1.0 == doctest::Approx(9.0).epsilon(1e-8));
  CHECK(r4.moment_equality.pass);
  CHECK(r4.generator_equality.pass);

  const ExtremalResult r6 = extremal_two_point(6.0);
  CHECK(r6.kappa_value * r6.kappa_value + 1.0 == doctest::Approx(5.0).epsilon(1e-8));
  CHECK(r6.moment_equality.pass);
  CHECK(r6.generator_equality.pass);

  const ExtremalResult dual_p = extremal_two_point(1.5);
  CHECK(dual_p.kappa_value == doctest::Approx(extremal_two_point(3.0).kappa_value)
                                  .epsilon(1e-9));
}

TEST_CASE("harper inequality") {
  // f = (x1+1)/2: equality.
  const CheckReport half = check_harper(to_zero_one(CubeFunction::dictator(1, 0)));
  CHECK(half.pass);
  CHECK(std::abs(half.slack) < 1e-12);
  CHECK(half.lhs == doctest::Approx(1.0));

  // Single-point indicator on four bits: equality again.
  const CheckReport point = check_harper(indicator01(zero_code(4)));
  CHECK(point.lhs == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(point.slack) < 1e-12);

  const CheckReport degenerate =
      check_harper(CubeFunction::constant(3, 1.0).retagged(ValueKind::ZeroOne));
  CHECK(degenerate.pass);
  CHECK(degenerate.note == "degenerate");

  CHECK_THROWS_AS(check_harper(CubeFunction::dictator(2, 0)), Error);
}

TEST_CASE("kkl ratio report") {
  const CheckReport dict = check_kkl_ratio(CubeFunction::dictator(6, 0));
  CHECK(dict.lhs == doctest::Approx(6.0 / std::log(6.0)).epsilon(1e-12));
  CHECK(dict.note == "report-only");
  CHECK_THROWS_AS(check_kkl_ratio(CubeFunction::constant(4, 1.0)), Error);
}

TEST_CASE("decay exponent estimates") {
  std::vector<CubeFunction> eigen2;
  for (int s = 0; s + 2 <= 5; ++s) {
    eigen2.push_back(CubeFunction::character(5, 0b11u << s));
  }
  CHECK(estimate_decay_exponent(eigen2, 2.0, 2, {0.1, 0.5, 1.0}) ==
        doctest::Approx(1.0).epsilon(1e-9));

  Rng rng(52);
  std::vector<CubeFunction> fam;
  for (int i = 0; i < 10; ++i) fam.push_back(random_mean_zero(5, rng));
  for (double p : {1.5, 4.0}) {
    CHECK(estimate_decay_exponent(fam, p, 1, {0.1, 0.5, 1.0}) >=
          heat_smoothing_rate(p, 1.0, HeatBoundMode::Base) - 1e-9);
  }
  CHECK_THROWS_AS(estimate_decay_exponent({}, 2.0, 1, {0.5}), Error);
}

TEST_CASE("random tail functions really sit in the tail") {
  Rng rng(53);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 4 + rep % 4;
    const int k = 1 + rep % 3;
    const CubeFunction f = random_tail_function(n, k, rng);
    const TailCertificate cert = tail_certificate(f, k - 1, true);
    CHECK(cert.member);
    CHECK(cert.max_violation < 1e-13);
  }
}

TEST_CASE("sweep driver smoke and determinism") {
  SweepOptions opt;
  opt.trials = 20;
  opt.seed = 5;
  for (const std::string& id : known_check_ids()) {
    const auto reports = run_check_sweep(id, opt);
    CHECK(!reports.empty());
    CHECK(all_pass(reports));
  }
  // Thread count does not change results.
  SweepOptions par = opt;
  par.workers = 4;
  const auto serial = run_check_sweep("heat-smoothing", opt);
  const auto parallel = run_check_sweep("heat-smoothing", par);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].lhs == parallel[i].lhs);
    CHECK(serial[i].rhs == parallel[i].rhs);
  }
  CHECK_THROWS_AS(run_check_sweep("nope", opt), Error);
}
