#include "tailspace/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <thread>

namespace tailspace {

namespace {

const std::vector<double> kDefaultPGrid = {1.1, 1.5, 2.0, 3.0, 4.0, 6.0};
const std::vector<double> kDefaultTGrid = {0.01, 0.1, 0.5, 1.0, 2.0};
const std::vector<double> kKappaGrid = {1.1, 1.2, 1.5, 1.75, 2.5, 3.0, 4.0, 5.0, 6.0, 8.0};

std::vector<double> or_default(const std::vector<double>& v,
                               const std::vector<double>& d) {
  return v.empty() ? d : v;
}
int or_default(int v, int d) { return v == 0 ? d : v; }

/// Runs fn(trial) for trial in [0, count) across `workers` threads; results
/// are concatenated in trial order, so the output is thread-count invariant.
/// Every report is stamped with its trial index: together with the sweep
/// seed that reproduces the offending instance exactly.
std::vector<CheckReport> parallel_trials(
    int count, int workers,
    const std::function<std::vector<CheckReport>(int)>& fn) {
  std::vector<std::vector<CheckReport>> buckets(static_cast<std::size_t>(count));
  const auto run_one = [&](int i) {
    std::vector<CheckReport> reports = fn(i);
    for (CheckReport& r : reports) r.params["trial"] = static_cast<double>(i);
    buckets[static_cast<std::size_t>(i)] = std::move(reports);
  };
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) run_one(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
          run_one(i);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<CheckReport> out;
  for (auto& b : buckets) {
    out.insert(out.end(), std::make_move_iterator(b.begin()),
               std::make_move_iterator(b.end()));
  }
  return out;
}

std::vector<CheckReport> sweep_kappa(const SweepOptions& opt) {
  std::vector<CheckReport> out;
  out.push_back(check_equal("kappa-value", {{"p", 4.0}}, kappa(4.0).value,
                            2.0 * std::sqrt(2.0), 1e-9));
  out.push_back(check_equal("kappa-value", {{"p", 6.0}}, kappa(6.0).value, 2.0, 1e-9));
  for (double p : or_default(opt.p_grid, kKappaGrid)) {
    if (std::abs(p - 2.0) <= 1e-9) continue;
    const double dualp = p / (p - 1.0);
    const double k = kappa(p).value;
    out.push_back(check_equal("kappa-duality", {{"p", p}, {"p_dual", dualp}}, k,
                              kappa(dualp).value, 1e-9));
    out.push_back(check_lower("kappa-lower-ratio", {{"p", p}}, k,
                              std::abs(p / (p - 2.0)), 1e-9));
    out.push_back(check_lower(
        "kappa-lower-sqrt", {{"p", p}}, k,
        std::sqrt((p * p + 4.0 * p - 4.0) / (p * p - 4.0 * p + 4.0)), 1e-9));
  }
  return out;
}

std::vector<CheckReport> sweep_heat_smoothing(const SweepOptions& opt) {
  const int n_max = std::max(2, or_default(opt.n, 6));
  const int trials = or_default(opt.trials, 1000);
  const auto p_grid = or_default(opt.p_grid, kDefaultPGrid);
  const auto t_grid = or_default(opt.t_grid, kDefaultTGrid);
  std::vector<CheckReport> out =
      parallel_trials(trials, opt.workers, [&](int trial) {
        Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
        const int n = 2 + trial % (n_max - 1);
        const CubeFunction f = random_mean_zero(n, rng);
        std::vector<CheckReport> reports;
        for (double p : p_grid) {
          for (double t : t_grid) {
            reports.push_back(check_heat_smoothing(f, p, t, HeatBoundMode::Base));
            reports.push_back(check_heat_smoothing(f, p, t, HeatBoundMode::Kappa));
          }
        }
        return reports;
      });
  // Equality case: p = 2, dictator, C = 1 attains the bound exactly.
  const CubeFunction dict = CubeFunction::dictator(n_max, 0);
  for (double t : t_grid) {
    out.push_back(check_equal("heat-smoothing-equality",
                              {{"p", 2.0}, {"t", t}, {"n", n_max}},
                              lp_norm(heat(dict, t), 2.0),
                              std::exp(-t) * lp_norm(dict, 2.0), 1e-12));
  }
  return out;
}

std::vector<CheckReport> sweep_lp_poincare(const SweepOptions& opt) {
  const int n_max = std::max(2, or_default(opt.n, 6));
  const int trials = or_default(opt.trials, 1000);
  const auto p_grid = or_default(opt.p_grid, kDefaultPGrid);
  return parallel_trials(trials, opt.workers, [&](int trial) {
    Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
    const int n = 2 + trial % (n_max - 1);
    const CubeFunction f = random_mean_zero(n, rng);
    std::vector<CheckReport> reports;
    for (double p : p_grid) {
      if (p <= 1.0) continue;
      reports.push_back(check_lp_poincare(f, p));
    }
    return reports;
  });
}

std::vector<CubeFunction> ternary_tail_family(int n_max, std::uint64_t seed) {
  std::vector<CubeFunction> family;
  const int n = std::max(4, n_max);
  for (int deg = 1; deg <= std::min(3, n); ++deg) {
    family.push_back(CubeFunction::character(n, (std::uint32_t(1) << deg) - 1));
  }
  family.push_back(zero_mean_difference(alleq(2)));
  family.push_back(zero_mean_difference(indicator(hamming_7_4())));
  family.push_back(zero_mean_difference(indicator(extended_hamming_8_4())));
  // Coset differences of disjoint {0,1} indicators are {-1,0,1} and keep the
  // tail (shifts only flip coefficient signs).
  const CubeFunction base = indicator01(extended_hamming_8_4());
  Rng rng(seed);
  for (int i = 0; i < 3; ++i) {
    const Word y = static_cast<Word>(rng.next()) & 0xFF;
    const CubeFunction shifted = coset_shift(base, y);
    Eigen::VectorXd diff = base.values() - shifted.values();
    if (diff.cwiseAbs().maxCoeff() == 0.0) continue;
    family.emplace_back(base.dimension(), std::move(diff), ValueKind::Ternary);
  }
  return family;
}

std::vector<CheckReport> sweep_ternary_contraction(const SweepOptions& opt) {
  const auto p_grid = or_default(opt.p_grid, kDefaultPGrid);
  const auto t_grid = or_default(opt.t_grid, kDefaultTGrid);
  std::vector<CheckReport> out;
  for (const CubeFunction& f : ternary_tail_family(or_default(opt.n, 6), opt.seed)) {
    const int k = achieved_tail_level(f, /*include_constant=*/true) + 1;
    if (k < 1) continue;
    for (double p : p_grid) {
      if (p <= 1.0) continue;
      for (double t : t_grid) {
        out.push_back(check_ternary_contraction(f, k, p, t));
      }
    }
  }
  return out;
}

std::vector<CheckReport> sweep_moment_split(const SweepOptions& opt) {
  const int trials = or_default(opt.trials, 1000);
  const auto p_grid = or_default(opt.p_grid, {1.5, 3.0, 4.0});
  return parallel_trials(trials, opt.workers, [&](int trial) {
    Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
    const DiscreteRV x = random_mean_zero_rv(6, rng);
    std::vector<CheckReport> reports;
    for (double p : p_grid) {
      if (std::abs(p - 2.0) <= 1e-12) continue;
      reports.push_back(check_pospart_moment_split(x, p));
    }
    return reports;
  });
}

std::vector<CheckReport> sweep_two_point_gap(const SweepOptions& opt) {
  const int trials = or_default(opt.trials, 1000);
  const auto p_grid = or_default(opt.p_grid, {1.2, 1.5, 3.0, 4.0, 6.0});
  return parallel_trials(trials, opt.workers, [&](int trial) {
    Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
    const double a = rng.uniform(0.01, 3.0);
    const double b = rng.uniform(0.01, 3.0);
    std::vector<CheckReport> reports;
    for (double p : p_grid) {
      if (std::abs(p - 2.0) <= 1e-12) continue;
      reports.push_back(check_two_point_gap(a, b, p));
    }
    return reports;
  });
}

std::vector<CheckReport> sweep_signed_moment_gap(const SweepOptions& opt) {
  const int trials = or_default(opt.trials, 1000);
  const auto p_grid = or_default(opt.p_grid, {1.5, 2.0, 3.0, 4.0});
  return parallel_trials(trials, opt.workers, [&](int trial) {
    Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
    const DiscreteRV x = random_mean_zero_rv(6, rng);
    std::vector<CheckReport> reports;
    for (double p : p_grid) reports.push_back(check_signed_moment_gap(x, p));
    return reports;
  });
}

std::vector<CheckReport> sweep_stroock_varopoulos(const SweepOptions& opt) {
  const int trials = or_default(opt.trials, 1000);
  const auto p_grid = or_default(opt.p_grid, kDefaultPGrid);
  std::vector<CheckReport> out =
      parallel_trials(trials, opt.workers, [&](int trial) {
        Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
        const double a = rng.uniform(-2.0, 2.0);
        const double b = rng.uniform(-2.0, 2.0);
        std::vector<CheckReport> reports;
        for (double p : p_grid) {
          if (p <= 1.0) continue;
          reports.push_back(check_stroock_varopoulos(a, b, p));
        }
        return reports;
      });
  // p = 2 turns both sides into (a-b)^2.
  Rng rng(opt.seed);
  for (int i = 0; i < 50; ++i) {
    const double a = rng.uniform(-2.0, 2.0);
    const double b = rng.uniform(-2.0, 2.0);
    out.push_back(check_equal("stroock-varopoulos-p2", {{"a", a}, {"b", b}},
                              (a - b) * (a - b),
                              (signed_power(a, 1.0) - signed_power(b, 1.0)) * (a - b),
                              1e-12));
  }
  return out;
}

std::vector<CheckReport> sweep_weak_sv(const SweepOptions& opt) {
  const int trials = or_default(opt.trials, 300);
  const auto p_grid = or_default(opt.p_grid, kDefaultPGrid);
  std::vector<CheckReport> out =
      parallel_trials(trials, opt.workers, [&](int trial) {
        Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
        const Index states = 2 + trial % 7;
        const MarkovGenerator gen = random_reversible_generator(states, rng);
        const Eigen::MatrixXd P = gen.semigroup_matrix(rng.uniform(0.05, 2.0));
        const Eigen::VectorXd f = random_state_function(states, rng);
        std::vector<CheckReport> reports;
        for (double p : p_grid) {
          if (p <= 1.0) continue;
          reports.push_back(check_weak_stroock_varopoulos(P, gen.space().mu, f, p));
        }
        return reports;
      });
  // P = identity: (p-2)^2 + 4(p-1) = p^2 makes both sides equal.
  Rng rng(opt.seed);
  for (int i = 0; i < 20; ++i) {
    const Index states = 2 + i % 7;
    Eigen::VectorXd mu(states);
    for (Index s = 0; s < states; ++s) mu(s) = rng.uniform(0.2, 1.0);
    mu /= mu.sum();
    const Eigen::VectorXd f = random_state_function(states, rng);
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(states, states);
    for (double p : {1.5, 3.0, 4.0}) {
      double abs_p = 0.0;
      for (Index s = 0; s < states; ++s) {
        abs_p += mu(s) * std::pow(std::abs(f(s)), p);
      }
      const CheckReport r =
          check_weak_stroock_varopoulos(eye, mu, f, p);
      out.push_back(check_equal("weak-sv-identity", {{"p", p}}, r.lhs, r.rhs,
                                1e-12 * std::max(1.0, std::abs(r.rhs))));
    }
    // P = full averaging onto the mean.
    Eigen::MatrixXd avg(states, states);
    for (Index r0 = 0; r0 < states; ++r0) avg.row(r0) = mu.transpose();
    for (double p : {1.5, 3.0, 4.0}) {
      out.push_back(check_weak_stroock_varopoulos(avg, mu, f, p));
    }
  }
  return out;
}

std::vector<CheckReport> sweep_semigroup_difference(const SweepOptions& opt) {
  const int trials = or_default(opt.trials, 300);
  std::vector<CheckReport> out =
      parallel_trials(trials, opt.workers, [&](int trial) {
        Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
        const Index states = 2 + trial % 7;
        const MarkovGenerator gen = random_reversible_generator(states, rng);
        std::vector<CheckReport> reports;
        for (int rep = 0; rep < 3; ++rep) {
          const double eps = rng.uniform(0.2, 2.0);
          const double t = rng.uniform(0.01, 1.0);
          reports.push_back(check_semigroup_difference(gen, eps, t));
        }
        return reports;
      });
  out.push_back(check_semigroup_difference(hypercube_generator(4), 1.0, 0.1));
  return out;
}

std::vector<CheckReport> sweep_nazarov(const SweepOptions& opt) {
  const int trials = or_default(opt.trials, 200);
  const auto p_grid = or_default(opt.p_grid, {1.5, 2.0, 3.0, 5.0});
  return parallel_trials(trials, opt.workers, [&](int trial) {
    Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
    const Index states = 2 + trial % 7;
    const MarkovGenerator gen = random_reversible_generator(states, rng);
    const Eigen::MatrixXd P = gen.semigroup_matrix(rng.uniform(0.05, 2.0));
    const Eigen::VectorXd g = random_mean_zero_state(gen, rng);
    std::vector<CheckReport> reports;
    for (double p : p_grid) {
      if (p <= 1.0) continue;
      NazarovResult res = check_nazarov(P, gen.space().mu, g, p, true);
      reports.push_back(std::move(res.contraction));
      for (CheckReport& r : res.extension_norms) reports.push_back(std::move(r));
    }
    return reports;
  });
}

std::vector<CheckReport> sweep_talagrand(const SweepOptions& opt) {
  const int trials = or_default(opt.trials, 500);
  const int n_max = std::max(4, or_default(opt.n, 8));
  std::vector<CheckReport> out;
  {
    const auto [a, b] = check_talagrand_tail(CubeFunction::dictator(4, 0), 1);
    out.push_back(a);
    out.push_back(b);
    const auto [c, d] = check_talagrand_tail(
        CubeFunction::character(n_max, (std::uint32_t(1) << n_max) - 1), n_max);
    out.push_back(c);
    out.push_back(d);
  }
  std::vector<CheckReport> random_part =
      parallel_trials(trials, opt.workers, [&](int trial) {
        Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
        const int n = 4 + trial % (n_max - 3);
        const int k = opt.k > 0 ? std::min(opt.k, n) : 1 + trial % std::min(3, n);
        const CubeFunction f = random_tail_function(n, k, rng);
        const auto [a, b] = check_talagrand_tail(f, k);
        return std::vector<CheckReport>{a, b};
      });
  out.insert(out.end(), random_part.begin(), random_part.end());
  return out;
}

std::vector<CheckReport> sweep_hypercontractivity(const SweepOptions& opt) {
  const int trials = or_default(opt.trials, 400);
  const int n_max = std::max(2, or_default(opt.n, 6));
  const auto t_grid = or_default(opt.t_grid, kDefaultTGrid);
  std::vector<CheckReport> out =
      parallel_trials(trials, opt.workers, [&](int trial) {
        Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
        const int n = 2 + trial % (n_max - 1);
        const CubeFunction f = random_cube_function(n, rng);
        std::vector<CheckReport> reports;
        for (double t : t_grid) {
          reports.push_back(check_hypercontractivity(f, t));
        }
        return reports;
      });
  // Two-point classic: f = 1 + eps x1 at e^{-2t} = 1/2.
  Eigen::VectorXd v(2);
  v << 1.05, 0.95;
  out.push_back(check_hypercontractivity(CubeFunction(1, v), 0.5 * std::log(2.0)));
  // t -> infinity: lhs -> |E f| <= ||f||_1.
  Rng rng(opt.seed);
  const CubeFunction f = random_cube_function(4, rng);
  out.push_back(check_hypercontractivity(f, 50.0));
  return out;
}

std::vector<CheckReport> sweep_beckner(const SweepOptions& opt) {
  const int trials = or_default(opt.trials, 400);
  const int n_max = std::max(2, or_default(opt.n, 6));
  const auto p_grid = or_default(opt.p_grid, {1.0, 1.25, 1.5, 1.75, 2.0});
  return parallel_trials(trials, opt.workers, [&](int trial) {
    Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
    const int n = 2 + trial % (n_max - 1);
    const CubeFunction f = random_cube_function(n, rng);
    std::vector<CheckReport> reports;
    for (double p : p_grid) reports.push_back(check_beckner(f, p));
    return reports;
  });
}

std::vector<CheckReport> sweep_extremal(const SweepOptions& opt) {
  const auto p_grid = or_default(opt.p_grid, {1.5, 3.0, 4.0, 6.0});
  std::vector<CheckReport> out;
  for (double p : p_grid) {
    if (std::abs(p - 2.0) <= 1e-9) continue;
    ExtremalResult res = extremal_two_point(p);
    out.push_back(res.moment_equality);
    out.push_back(res.generator_equality);
    const double dualp = p / (p - 1.0);
    out.push_back(check_equal("extremal-duality", {{"p", p}, {"p_dual", dualp}},
                              res.kappa_value, kappa(dualp).value, 1e-9));
  }
  return out;
}

std::vector<CheckReport> sweep_harper(const SweepOptions& opt) {
  std::vector<CheckReport> out;
  out.push_back(check_harper(to_zero_one(CubeFunction::dictator(1, 0))));
  out.push_back(check_harper(indicator01(zero_code(4))));
  out.push_back(check_harper(CubeFunction::constant(3, 1.0).retagged(ValueKind::ZeroOne)));
  const ConstructionRecord ext = harper_witness_from_code(extended_hamming_8_4());
  out.push_back(check_harper(ext.function));
  const ConstructionRecord ham = harper_witness_from_code(hamming_7_4());
  out.push_back(check_harper(ham.function));
  const ConstructionRecord searched = harper_witness(2, opt.seed, 0.5);
  out.push_back(check_harper(searched.function));
  // Ratio claims of the witnesses hold exactly.
  for (const ConstructionRecord* rec : {&ext, &ham, &searched}) {
    out.push_back(check_upper("harper-witness-ratio",
                              {{"n", rec->function.dimension()}},
                              rec->claim("sum_pivotal_bound").achieved.to_double(),
                              rec->claim("sum_pivotal_bound").bound.to_double(),
                              0.0));
  }
  return out;
}

std::vector<CheckReport> sweep_kkl_ratio(const SweepOptions& opt) {
  std::vector<CheckReport> out;
  out.push_back(check_kkl_ratio(CubeFunction::dictator(6, 0)));
  out.push_back(check_kkl_ratio(tribes(4, 4)));
  out.push_back(check_kkl_ratio(tribes(5, 2)));
  const ConstructionRecord ct = coding_tribes(2, opt.seed);
  out.push_back(check_kkl_ratio(ct.function));
  const ConstructionRecord bal = balanced_coding_tribes(3, opt.seed);
  out.push_back(check_kkl_ratio(bal.function));
  return out;
}

std::vector<CheckReport> sweep_decay_exponent(const SweepOptions& opt) {
  const int n = std::max(4, or_default(opt.n, 6));
  const auto t_grid = or_default(opt.t_grid, kDefaultTGrid);
  std::vector<CheckReport> out;
  // Eigenfunctions: the fitted constant is exactly 1 at p = 2.
  for (int k : {1, 2, 3}) {
    std::vector<CubeFunction> family;
    for (int shift = 0; shift + k <= n; ++shift) {
      family.push_back(
          CubeFunction::character(n, ((std::uint32_t(1) << k) - 1) << shift));
    }
    const double c = estimate_decay_exponent(family, 2.0, k, t_grid);
    out.push_back(check_equal("decay-exponent-eigen",
                              {{"k", static_cast<double>(k)}, {"p", 2.0}}, c, 1.0,
                              1e-9));
  }
  // k = 1: the fitted constant cannot drop below the proven rate.
  Rng rng(opt.seed);
  std::vector<CubeFunction> family;
  for (int i = 0; i < 20; ++i) family.push_back(random_mean_zero(n, rng));
  for (double p : or_default(opt.p_grid, kDefaultPGrid)) {
    if (p <= 1.0) continue;
    const double c = estimate_decay_exponent(family, p, 1, t_grid);
    out.push_back(check_lower("decay-exponent-floor", {{"p", p}, {"k", 1.0}}, c,
                              heat_smoothing_rate(p, 1.0, HeatBoundMode::Base),
                              1e-9));
  }
  // Higher tails: evidence only, no proof claim.
  for (double p : {1.5, 4.0}) {
    for (int k : {2, 3}) {
      std::vector<CubeFunction> tails;
      for (int i = 0; i < 10; ++i) tails.push_back(random_tail_function(n, k, rng));
      CheckReport r = check_lower("decay-exponent-probe",
                                  {{"p", p}, {"k", static_cast<double>(k)}},
                                  estimate_decay_exponent(tails, p, k, t_grid), 0.0,
                                  0.0);
      r.note = "report-only";
      out.push_back(r);
    }
  }
  return out;
}

std::vector<CheckReport> sweep_macwilliams(const SweepOptions& opt) {
  const int trials = or_default(opt.trials, 200);
  const int k_max = std::max(1, or_default(opt.k, 4));
  return parallel_trials(trials, opt.workers, [&](int trial) {
    Rng rng(mix_seed(opt.seed, static_cast<std::uint64_t>(trial)));
    const int len = 4 + trial % 9;  // lengths 4..12
    const int row_count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(len)));
    std::vector<Word> rows;
    for (int r = 0; r < row_count; ++r) {
      rows.push_back(static_cast<Word>(rng.next()) & ((Word(1) << len) - 1));
    }
    const LinearCode code(len, std::move(rows));
    const CubeFunction g = indicator(code);
    std::vector<CheckReport> reports;
    for (int k = 1; k <= k_max; ++k) {
      const bool by_weight = macwilliams_tail(code, k);
      const bool by_fourier = tail_certificate(g, k, false).member;
      reports.push_back(check_equal(
          "macwilliams",
          {{"length", static_cast<double>(len)},
           {"dim", static_cast<double>(code.dimension())},
           {"k", static_cast<double>(k)}},
          by_weight ? 1.0 : 0.0, by_fourier ? 1.0 : 0.0, 0.0));
    }
    return reports;
  });
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<std::string> known_check_ids() {
  return {"kappa",
          "heat-smoothing",
          "lp-poincare",
          "ternary-contraction",
          "pospart-moment-split",
          "two-point-gap",
          "signed-moment-gap",
          "stroock-varopoulos",
          "weak-stroock-varopoulos",
          "semigroup-difference",
          "nazarov",
          "talagrand",
          "hypercontractivity",
          "beckner",
          "extremal-two-point",
          "harper",
          "kkl-ratio",
          "decay-exponent",
          "macwilliams"};
}

std::vector<CheckReport> run_check_sweep(const std::string& check_id,
                                         const SweepOptions& opt) {
  if (check_id == "kappa") return sweep_kappa(opt);
  if (check_id == "heat-smoothing") return sweep_heat_smoothing(opt);
  if (check_id == "lp-poincare") return sweep_lp_poincare(opt);
  if (check_id == "ternary-contraction") return sweep_ternary_contraction(opt);
  if (check_id == "pospart-moment-split") return sweep_moment_split(opt);
  if (check_id == "two-point-gap") return sweep_two_point_gap(opt);
  if (check_id == "signed-moment-gap") return sweep_signed_moment_gap(opt);
  if (check_id == "stroock-varopoulos") return sweep_stroock_varopoulos(opt);
  if (check_id == "weak-stroock-varopoulos") return sweep_weak_sv(opt);
  if (check_id == "semigroup-difference") return sweep_semigroup_difference(opt);
  if (check_id == "nazarov") return sweep_nazarov(opt);
  if (check_id == "talagrand") return sweep_talagrand(opt);
  if (check_id == "hypercontractivity") return sweep_hypercontractivity(opt);
  if (check_id == "beckner") return sweep_beckner(opt);
  if (check_id == "extremal-two-point") return sweep_extremal(opt);
  if (check_id == "harper") return sweep_harper(opt);
  if (check_id == "kkl-ratio") return sweep_kkl_ratio(opt);
  if (check_id == "decay-exponent") return sweep_decay_exponent(opt);
  if (check_id == "macwilliams") return sweep_macwilliams(opt);
  fail("unknown-check", "no check named '" + check_id + "'");
}

bool all_pass(const std::vector<CheckReport>& reports) {
  for (const CheckReport& r : reports) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace tailspace
