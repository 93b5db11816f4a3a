#include "tailspace/checks.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace tailspace {

namespace {

CheckReport finish(std::string id, std::map<std::string, double> params, double lhs,
                   double rhs, double slack, double tol, bool pass, std::string note) {
  CheckReport r;
  r.check_id = std::move(id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = slack;
  r.tol = tol;
  r.pass = pass;
  r.note = std::move(note);
  return r;
}

void require_markov_operator(const Eigen::MatrixXd& P, const Eigen::VectorXd& mu) {
  const Index n = mu.size();
  require(P.rows() == n && P.cols() == n, "dimension-mismatch",
          "operator shape mismatch");
  for (Index i = 0; i < n; ++i) {
    require(mu(i) > 0.0, "bad-measure", "measure must be positive");
    require(std::abs(P.row(i).sum() - 1.0) <= 1e-10, "bad-operator",
            "operator rows must sum to 1");
    for (Index j = 0; j < n; ++j) {
      require(P(i, j) >= -1e-12, "bad-operator", "operator entries must be >= 0");
      require(std::abs(mu(i) * P(i, j) - mu(j) * P(j, i)) <= 1e-10, "bad-operator",
              "operator must be mu-symmetric");
    }
  }
}

double mu_mean(const Eigen::VectorXd& mu, const Eigen::VectorXd& f) {
  return mu.dot(f);
}

double mu_norm(const Eigen::VectorXd& mu, const Eigen::VectorXd& f, double p) {
  if (std::isinf(p)) return f.cwiseAbs().maxCoeff();
  double acc = 0.0;
  for (Index i = 0; i < f.size(); ++i) acc += mu(i) * std::pow(std::abs(f(i)), p);
  return std::pow(acc, 1.0 / p);
}

Eigen::VectorXd map_signed_power(const Eigen::VectorXd& f, double s) {
  Eigen::VectorXd out(f.size());
  for (Index i = 0; i < f.size(); ++i) out(i) = signed_power(f(i), s);
  return out;
}

}  // namespace

CheckReport check_upper(std::string id, std::map<std::string, double> params,
                        double lhs, double rhs, double tol) {
  const double slack = rhs - lhs;
  return finish(std::move(id), std::move(params), lhs, rhs, slack, tol,
                slack >= -tol, "");
}

CheckReport check_lower(std::string id, std::map<std::string, double> params,
                        double lhs, double rhs, double tol) {
  const double slack = lhs - rhs;
  return finish(std::move(id), std::move(params), lhs, rhs, slack, tol,
                slack >= -tol, "");
}

CheckReport check_equal(std::string id, std::map<std::string, double> params,
                        double lhs, double rhs, double tol) {
  const double slack = rhs - lhs;
  return finish(std::move(id), std::move(params), lhs, rhs, slack, tol,
                std::abs(slack) <= tol, "equality");
}

DiscreteRV::DiscreteRV(Eigen::VectorXd values_in, Eigen::VectorXd probs_in)
    : values(std::move(values_in)), probs(std::move(probs_in)) {
  require(values.size() == probs.size() && values.size() >= 1, "bad-size",
          "atom/probability size mismatch");
  for (Index i = 0; i < probs.size(); ++i) {
    require(probs(i) > 0.0, "bad-measure", "atom probabilities must be positive");
  }
  require(std::abs(probs.sum() - 1.0) <= 1e-12, "bad-measure",
          "probabilities must sum to 1 within 1e-12");
}

double DiscreteRV::mean() const { return probs.dot(values); }

double DiscreteRV::abs_moment(double p) const {
  double acc = 0.0;
  for (Index i = 0; i < values.size(); ++i) {
    acc += probs(i) * std::pow(std::abs(values(i)), p);
  }
  return acc;
}

double DiscreteRV::pos_moment(double s) const {
  double acc = 0.0;
  for (Index i = 0; i < values.size(); ++i) {
    if (values(i) > 0.0) acc += probs(i) * std::pow(values(i), s);
  }
  return acc;
}

double DiscreteRV::neg_moment(double s) const {
  double acc = 0.0;
  for (Index i = 0; i < values.size(); ++i) {
    if (values(i) < 0.0) acc += probs(i) * std::pow(-values(i), s);
  }
  return acc;
}

double signed_power(double x, double s) {
  if (x == 0.0) return 0.0;
  return x > 0.0 ? std::pow(x, s) : -std::pow(-x, s);
}

KappaResult kappa(double p) {
  require(p > 1.0 && std::isfinite(p), "bad-exponent", "kappa needs p in (1, inf)");
  require(std::abs(p - 2.0) > 1e-9, "bad-exponent",
          "kappa diverges at p = 2 (handled by callers as the limit case)");
  const double a = std::abs(p / (p - 2.0));  // > 1
  const auto h = [a](double x) { return std::cosh(a * x) / std::sinh(x); };

  // Rough bracket from a geometric scan, then golden section on x = log u.
  double best_x = 1.0, best_v = h(1.0);
  for (double x = 1e-6; x < 400.0; x *= 1.25) {
    const double v = h(x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  }
  double lo = best_x / 1.3, hi = best_x * 1.3;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = h(x1), f2 = h(x2);
  for (int it = 0; it < 220 && (hi - lo) > 1e-14 * (1.0 + hi); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = h(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = h(x2);
    }
  }
  const double x = (lo + hi) / 2.0;
  return KappaResult{h(x), std::exp(x)};
}

double heat_smoothing_rate(double p, double C, HeatBoundMode mode) {
  require(p > 1.0 && std::isfinite(p), "bad-exponent", "rate needs p in (1, inf)");
  if (mode == HeatBoundMode::Base || std::abs(p - 2.0) <= 1e-9) {
    return (2.0 * p - 2.0) / ((p * p - 2.0 * p + 2.0) * C);
  }
  const double k = kappa(p).value;
  return (4.0 * p - 4.0) / (C * p * p * (1.0 + 1.0 / (k * k)));
}

namespace {
void require_mean_zero(double m) {
  require(std::abs(m) <= 1e-12, "nonzero-mean",
          "check requires a mean-zero function");
}
}  // namespace

CheckReport check_heat_smoothing(const CubeFunction& f, double p, double t,
                                 HeatBoundMode mode) {
  require(t > 0.0, "bad-time", "heat smoothing needs t > 0");
  require_mean_zero(mean(f));
  const double rate = heat_smoothing_rate(p, 1.0, mode);
  const double lhs = lp_norm(heat(f, t), p);
  const double rhs = std::exp(-rate * t) * lp_norm(f, p);
  return check_upper("heat-smoothing",
                     {{"n", f.dimension()},
                      {"p", p},
                      {"t", t},
                      {"C", 1.0},
                      {"kappa_mode", mode == HeatBoundMode::Kappa ? 1.0 : 0.0}},
                     lhs, rhs, kTolSweep);
}

CheckReport check_heat_smoothing(const MarkovGenerator& gen, const Eigen::VectorXd& f,
                                 double p, double t, HeatBoundMode mode) {
  require(t > 0.0, "bad-time", "heat smoothing needs t > 0");
  require_mean_zero(gen.mean(f));
  const double C = gen.poincare_constant();
  const double rate = heat_smoothing_rate(p, C, mode);
  const double lhs = gen.norm_lp(gen.semigroup(t, f), p);
  const double rhs = std::exp(-rate * t) * gen.norm_lp(f, p);
  return check_upper("heat-smoothing",
                     {{"states", static_cast<double>(gen.size())},
                      {"p", p},
                      {"t", t},
                      {"C", C},
                      {"kappa_mode", mode == HeatBoundMode::Kappa ? 1.0 : 0.0}},
                     lhs, rhs, kTolSweep);
}

CheckReport check_lp_poincare(const CubeFunction& f, double p) {
  require(p > 1.0 && std::isfinite(p), "bad-exponent", "poincare needs p > 1");
  require_mean_zero(mean(f));
  const Eigen::VectorXd phi = map_signed_power(f.values(), p - 1.0);
  const double lhs = (phi.array() * laplacian(f).values().array()).mean();
  const double rate = (2.0 * p - 2.0) / (p * p - 2.0 * p + 2.0);
  const double rhs = rate * std::pow(lp_norm(f, p), p);
  return check_lower("lp-poincare", {{"n", f.dimension()}, {"p", p}, {"C", 1.0}},
                     lhs, rhs, kTolSweep);
}

CheckReport check_lp_poincare(const MarkovGenerator& gen, const Eigen::VectorXd& f,
                              double p) {
  require(p > 1.0 && std::isfinite(p), "bad-exponent", "poincare needs p > 1");
  require_mean_zero(gen.mean(f));
  const double C = gen.poincare_constant();
  const Eigen::VectorXd phi = map_signed_power(f, p - 1.0);
  const double lhs = gen.inner(phi, gen.apply(f));
  const double rate = (2.0 * p - 2.0) / ((p * p - 2.0 * p + 2.0) * C);
  const double rhs = rate * std::pow(gen.norm_lp(f, p), p);
  return check_lower("lp-poincare",
                     {{"states", static_cast<double>(gen.size())}, {"p", p}, {"C", C}},
                     lhs, rhs, kTolSweep);
}

CheckReport check_ternary_contraction(const CubeFunction& f, int k, double p, double t) {
  require(p > 1.0 && std::isfinite(p), "bad-exponent", "needs p in (1, inf)");
  require(t > 0.0, "bad-time", "needs t > 0");
  require(k >= 1 && k <= f.dimension(), "bad-level", "needs 1 <= k <= n");
  for (Index j = 0; j < f.size(); ++j) {
    require(value_in_kind(f(j), ValueKind::Ternary), "range-violation",
            "function must be {-1,0,1}-valued");
  }
  const CubeFunction ternary =
      f.kind() == ValueKind::Real ? f.retagged(ValueKind::Ternary) : f;
  const TailCertificate cert =
      tail_certificate(ternary, k - 1, /*include_constant=*/true);
  require(cert.member, "tail-violation",
          "coefficients below level " + std::to_string(k) + " must vanish");
  const double rate = 2.0 * k * std::min((p - 1.0) / p, 1.0 / p);
  const double lhs = lp_norm(heat(f, t), p);
  const double rhs = std::exp(-rate * t) * lp_norm(f, p);
  return check_upper("ternary-contraction",
                     {{"n", f.dimension()}, {"k", static_cast<double>(k)}, {"p", p}, {"t", t}},
                     lhs, rhs, kTolSweep);
}

CheckReport check_pospart_moment_split(const DiscreteRV& x, double p) {
  require(p > 1.0 && std::abs(p - 2.0) > 1e-12, "bad-exponent",
          "needs p in (1, inf) minus {2}");
  require_mean_zero(x.mean());
  const double a = x.pos_moment(p / 2.0);
  const double b = x.neg_moment(p / 2.0);
  require(a > 0.0 && b > 0.0, "degenerate",
          "mean-zero nonzero X must charge both signs");
  const double e1 = -2.0 / (p - 2.0);
  const double e2 = (2.0 * p - 2.0) / (p - 2.0);
  const double lhs = a * a + b * b + std::pow(a, e1) * std::pow(b, e2) +
                     std::pow(b, e1) * std::pow(a, e2);
  const double rhs = x.abs_moment(p);
  return check_upper("pospart-moment-split",
                     {{"p", p}, {"atoms", static_cast<double>(x.values.size())}},
                     lhs, rhs, kTolSweep);
}

CheckReport check_two_point_gap(double a, double b, double p) {
  require(a > 0.0 && b > 0.0, "bad-parameter", "needs a, b > 0");
  require(p > 1.0 && std::abs(p - 2.0) > 1e-12, "bad-exponent",
          "needs p in (1, inf) minus {2}");
  const double lhs = (a - b) * (a - b);
  const double coeff =
      (p * p - 4.0 * p + 4.0) / (2.0 * p * p - 4.0 * p + 4.0);
  const double e1 = 2.0 / (2.0 - p);
  const double e2 = (2.0 * p - 2.0) / (p - 2.0);
  const double rhs = coeff * (a * a + b * b + std::pow(a, e1) * std::pow(b, e2) +
                              std::pow(b, e1) * std::pow(a, e2));
  return check_upper("two-point-gap", {{"a", a}, {"b", b}, {"p", p}}, lhs, rhs,
                     kTolSweep);
}

CheckReport check_signed_moment_gap(const DiscreteRV& x, double p) {
  require(p > 1.0 && std::isfinite(p), "bad-exponent", "needs p in (1, inf)");
  require_mean_zero(x.mean());
  const double d = x.pos_moment(p / 2.0) - x.neg_moment(p / 2.0);
  const double lhs = d * d;
  const double rhs =
      (1.0 - p * p / (2.0 * (p * p - 2.0 * p + 2.0))) * x.abs_moment(p);
  return check_upper("signed-moment-gap",
                     {{"p", p}, {"atoms", static_cast<double>(x.values.size())}},
                     lhs, rhs, kTolSweep);
}

CheckReport check_stroock_varopoulos(double a, double b, double p) {
  require(p > 1.0 && std::isfinite(p), "bad-exponent", "needs p in (1, inf)");
  const double lhs =
      (signed_power(a, p - 1.0) - signed_power(b, p - 1.0)) * (a - b);
  const double d = signed_power(a, p / 2.0) - signed_power(b, p / 2.0);
  const double rhs = (4.0 * (p - 1.0) / (p * p)) * d * d;
  return check_lower("stroock-varopoulos", {{"a", a}, {"b", b}, {"p", p}}, lhs, rhs,
                     kTolPointwise);
}

CheckReport check_weak_stroock_varopoulos(const Eigen::MatrixXd& P,
                                          const Eigen::VectorXd& mu,
                                          const Eigen::VectorXd& f, double p) {
  require(p > 1.0 && std::isfinite(p), "bad-exponent", "needs p in (1, inf)");
  require(f.size() == mu.size(), "dimension-mismatch", "function size mismatch");
  require_markov_operator(P, mu);
  const Eigen::VectorXd phi_half = map_signed_power(f, p / 2.0);
  const Eigen::VectorXd phi_pm1 = map_signed_power(f, p - 1.0);
  double abs_p = 0.0;
  for (Index i = 0; i < f.size(); ++i) abs_p += mu(i) * std::pow(std::abs(f(i)), p);
  const double lhs = p * p * (mu.array() * phi_pm1.array() * (P * f).array()).sum();
  const double rhs =
      (p - 2.0) * (p - 2.0) * abs_p +
      4.0 * (p - 1.0) * (mu.array() * phi_half.array() * (P * phi_half).array()).sum();
  return check_upper("weak-stroock-varopoulos",
                     {{"states", static_cast<double>(mu.size())}, {"p", p}}, lhs,
                     rhs, kTolSweep);
}

CheckReport check_semigroup_difference(const MarkovGenerator& gen, double eps, double t) {
  require(eps > 0.0 && t > 0.0, "bad-time", "needs eps, t > 0");
  double lhs = 0.0;
  for (Index i = 0; i < gen.eigenvalues().size(); ++i) {
    const double lambda = std::max(gen.eigenvalues()(i), 0.0);
    lhs = std::max(lhs, std::abs(std::exp(-(eps + t) * lambda) - std::exp(-eps * lambda)));
  }
  const double rhs = 2.0 * t / eps;
  return check_upper("semigroup-difference",
                     {{"states", static_cast<double>(gen.size())}, {"eps", eps}, {"t", t}},
                     lhs, rhs, kTolPointwise);
}

NazarovResult check_nazarov(const Eigen::MatrixXd& P, const Eigen::VectorXd& mu,
                            const Eigen::VectorXd& g, double p, bool with_extension) {
  require(p > 1.0 && std::isfinite(p), "bad-exponent", "needs p in (1, inf)");
  require(g.size() == mu.size(), "dimension-mismatch", "function size mismatch");
  require_markov_operator(P, mu);
  require_mean_zero(mu_mean(mu, g));
  const Index n = mu.size();

  // L2(mu) gap: largest squared singular value of P off the constants.
  const Eigen::VectorXd sqrt_mu = mu.cwiseSqrt();
  Eigen::MatrixXd sym =
      sqrt_mu.asDiagonal() * P * sqrt_mu.cwiseInverse().asDiagonal();
  sym = ((sym + sym.transpose()) / 2.0).eval();
  sym -= sqrt_mu * sqrt_mu.transpose();  // remove the eigenvalue-1 direction
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  require(solver.info() == Eigen::Success, "eigen-failure", "eigensolver failed");
  double top_sq = 0.0;
  for (Index i = 0; i < n; ++i) {
    top_sq = std::max(top_sq, solver.eigenvalues()(i) * solver.eigenvalues()(i));
  }
  top_sq = std::min(top_sq, 1.0);
  const double eps = 1.0 - top_sq;
  require(top_sq > 0.0 || eps <= 1.0, "bad-epsilon", "gap outside [0, 1]");

  const double pstar = std::max(p, p / (p - 1.0));
  // 1 - 2^{2-p*} eps, written to keep the tiny spectral remainder when eps
  // rounds to 1 (at p* = 2 the factor IS top_sq).
  const double w = std::pow(2.0, 2.0 - pstar);
  const double factor = std::pow(std::max((1.0 - w) + w * top_sq, 0.0), 1.0 / pstar);
  const double lhs = mu_norm(mu, P * g, p);
  const double rhs = factor * mu_norm(mu, g, p);
  NazarovResult result;
  result.epsilon = eps;
  result.contraction = check_upper(
      "nazarov-contraction",
      {{"states", static_cast<double>(n)}, {"p", p}, {"eps", eps}}, lhs, rhs,
      kTolSweep);

  if (with_extension) {
    // For p < 2 the denominator 2^{1/(p-1)} - 2 eps stays positive even at
    // eps = 1; p = 2 takes the Riesz-Thorin branch c = 2 shared with p > 2.
    const double c =
        (p < 2.0) ? 1.0 / (std::pow(2.0, 1.0 / (p - 1.0)) - 2.0 * eps) : 2.0;
    // T f = (c Pf, f - E f) on Omega x {0,1} with weights (mu, c^2 eps mu).
    Eigen::MatrixXd T(2 * n, n);
    T.topRows(n) = c * P;
    T.bottomRows(n) =
        Eigen::MatrixXd::Identity(n, n) - Eigen::VectorXd::Ones(n) * mu.transpose();
    Eigen::VectorXd mu_ext(2 * n);
    mu_ext << mu, c * c * eps * mu;

    double norm11 = 0.0;
    for (Index j = 0; j < n; ++j) {
      double col = 0.0;
      for (Index i = 0; i < 2 * n; ++i) col += mu_ext(i) * std::abs(T(i, j));
      norm11 = std::max(norm11, col / mu(j));
    }
    double norm_inf = 0.0;
    for (Index i = 0; i < 2 * n; ++i) norm_inf = std::max(norm_inf, T.row(i).cwiseAbs().sum());
    const Eigen::MatrixXd weighted = mu_ext.cwiseSqrt().asDiagonal() * T *
                                     sqrt_mu.cwiseInverse().asDiagonal();
    const double norm22 =
        weighted.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV)
            .singularValues()(0);

    std::map<std::string, double> params{{"p", p}, {"eps", eps}, {"c", c}};
    result.extension_norms.push_back(check_upper(
        "nazarov-extension-l1", params, norm11, c + 2.0 * c * c * eps, kTolSweep));
    result.extension_norms.push_back(check_upper(
        "nazarov-extension-linf", params, norm_inf, std::max(c, 2.0), kTolSweep));
    result.extension_norms.push_back(
        check_upper("nazarov-extension-l2", params, norm22, c, kTolSweep));
  }
  return result;
}

std::pair<CheckReport, CheckReport> check_talagrand_tail(const CubeFunction& f, int k) {
  require(k >= 1 && k <= f.dimension(), "bad-level", "needs 1 <= k <= n");
  const TailCertificate cert = tail_certificate(f, k - 1, /*include_constant=*/true);
  require(cert.member, "tail-violation",
          "coefficients below level " + std::to_string(k) + " must vanish");
  const double ef2 = std::pow(lp_norm(f, 2.0), 2.0);
  require(ef2 > 0.0, "degenerate", "f must not vanish identically");

  const double q = 1.0 + std::exp(-2.0 / k);
  double mid = 0.0, right = 0.0;
  for (int i = 1; i <= f.dimension(); ++i) {
    const CubeFunction di = discrete_derivative(f, i);
    const double d2 = std::pow(lp_norm(di, 2.0), 2.0);
    if (d2 == 0.0) continue;  // zero-derivative coordinates contribute 0
    const double nq = lp_norm(di, q);
    const double n1 = lp_norm(di, 1.0);
    mid += d2 / std::max(1.0, std::log(std::sqrt(d2) / nq));
    right += d2 / (k + std::log(std::sqrt(d2) / n1));
  }
  mid *= 3.0 / k;
  right *= 8.0;
  std::map<std::string, double> params{{"n", f.dimension()},
                                       {"k", static_cast<double>(k)}};
  return {check_upper("talagrand-tail", params, ef2, mid, kTolSweep),
          check_upper("talagrand-tail-chain", params, mid, right, kTolSweep)};
}

CheckReport check_hypercontractivity(const CubeFunction& f, double t) {
  require(t > 0.0, "bad-time", "needs t > 0");
  const double lhs = lp_norm(heat(f, t), 2.0);
  const double rhs = lp_norm(f, 1.0 + std::exp(-2.0 * t));
  return check_upper("hypercontractivity", {{"n", f.dimension()}, {"t", t}}, lhs,
                     rhs, kTolSweep);
}

CheckReport check_beckner(const CubeFunction& f, double p) {
  require(p >= 1.0 && p <= 2.0, "bad-exponent", "needs p in [1, 2]");
  const double dirichlet =
      (f.values().array() * laplacian(f).values().array()).mean();
  const double lhs = (2.0 - p) * dirichlet;
  const double rhs =
      std::pow(lp_norm(f, 2.0), 2.0) - std::pow(lp_norm(f, p), 2.0);
  return check_lower("beckner", {{"n", f.dimension()}, {"p", p}}, lhs, rhs,
                     kTolSweep);
}

ExtremalResult extremal_two_point(double p) {
  const KappaResult kr = kappa(p);
  const double v = kr.minimizer;
  const double alpha = 1.0 / (1.0 + std::pow(v, 4.0 / (p - 2.0)));
  const double beta = 1.0 - alpha;

  ExtremalResult out;
  out.v = v;
  out.alpha = alpha;
  out.kappa_value = kr.value;
  out.values = Eigen::VectorXd(2);
  out.values << beta, -alpha;
  out.probs = Eigen::VectorXd(2);
  out.probs << alpha, beta;

  const DiscreteRV x(out.values, out.probs);
  const double d = x.pos_moment(p / 2.0) - x.neg_moment(p / 2.0);
  const double lhs = (kr.value * kr.value + 1.0) * d * d;
  const double rhs = x.abs_moment(p);
  out.moment_equality =
      check_equal("extremal-two-point", {{"p", p}, {"v", v}, {"alpha", alpha}}, lhs,
                  rhs, kTolSolver * std::abs(rhs));

  // Generator side: L = C^{-1}(Id - E) on the same two points, f(x) = x.
  const double C = 1.0;
  const MarkovGenerator gen = extremal_generator(alpha, beta, C);
  const Eigen::VectorXd f = gen.space().positions;
  const Eigen::VectorXd phi = map_signed_power(f, p / 2.0);
  const double glhs = gen.dirichlet_form(phi, phi);
  const double grhs =
      (1.0 / C) / (1.0 + 1.0 / (kr.value * kr.value)) * [&] {
        double acc = 0.0;
        for (Index i = 0; i < f.size(); ++i) {
          acc += gen.space().mu(i) * std::pow(std::abs(f(i)), p);
        }
        return acc;
      }();
  out.generator_equality =
      check_equal("extremal-generator", {{"p", p}, {"C", C}}, glhs, grhs,
                  kTolSolver * std::abs(grhs));
  return out;
}

CheckReport check_harper(const CubeFunction& f01) {
  require(f01.kind() == ValueKind::ZeroOne, "range-violation",
          "Harper check expects a {0,1}-valued function");
  const Dyadic ef = mean_dyadic(f01);
  if (ef == Dyadic(0) || ef == Dyadic(1)) {
    CheckReport r = check_lower("harper", {{"n", f01.dimension()}}, 0.0, 0.0, kTolPointwise);
    r.note = "degenerate";
    return r;
  }
  const CubeFunction g = to_plus_minus_one(f01);
  Dyadic total = 0;
  for (int i = 1; i <= f01.dimension(); ++i) total += pivotal_probability(g, i);
  const double mu = ef.to_double();
  const double lhs = total.to_double();
  const double rhs = (2.0 / std::log(2.0)) * mu * std::log(1.0 / mu);
  return check_lower("harper", {{"n", f01.dimension()}, {"mean", mu}}, lhs, rhs,
                     kTolPointwise);
}

CheckReport check_kkl_ratio(const CubeFunction& f) {
  require(f.kind() == ValueKind::PlusMinusOne, "not-boolean",
          "KKL ratio expects a +-1-valued function");
  require(f.dimension() >= 2, "bad-parameter", "needs n >= 2");
  const double ef = mean(f);
  const double var = 1.0 - ef * ef;
  require(var > 0.0, "degenerate", "constant function has no KKL ratio");
  const double max_piv = max_pivotal_probability(f).to_double();
  const double n = static_cast<double>(f.dimension());
  const double ratio = max_piv / (var * std::log(n) / n);
  CheckReport r = check_lower("kkl-ratio",
                              {{"n", n}, {"max_pivotal", max_piv}, {"variance", var}},
                              ratio, 0.0, 0.0);
  r.note = "report-only";
  return r;
}

double estimate_decay_exponent(const std::vector<CubeFunction>& family, double p,
                               int k, const std::vector<double>& t_grid) {
  require(!family.empty(), "bad-parameter", "empty family");
  require(k >= 1, "bad-level", "needs k >= 1");
  double c = std::numeric_limits<double>::infinity();
  for (const CubeFunction& f : family) {
    const double base = lp_norm(f, p);
    if (base == 0.0) continue;
    for (double t : t_grid) {
      require(t > 0.0, "bad-time", "t grid must be positive");
      const double decayed = lp_norm(heat(f, t), p);
      if (decayed <= 0.0) continue;
      c = std::min(c, -std::log(decayed / base) / (t * k));
    }
  }
  return c;
}

CubeFunction random_cube_function(int n, Rng& rng) {
  Eigen::VectorXd v(Index(1) << n);
  for (Index j = 0; j < v.size(); ++j) v(j) = rng.uniform(-1.0, 1.0);
  return CubeFunction(n, std::move(v), ValueKind::Real);
}

CubeFunction random_mean_zero(int n, Rng& rng) {
  Eigen::VectorXd v(Index(1) << n);
  for (Index j = 0; j < v.size(); ++j) v(j) = rng.uniform(-1.0, 1.0);
  v.array() -= v.mean();
  return CubeFunction(n, std::move(v), ValueKind::Real);
}

CubeFunction random_tail_function(int n, int k, Rng& rng) {
  Eigen::VectorXd c(Index(1) << n);
  for (Index s = 0; s < c.size(); ++s) {
    c(s) = popcount32(static_cast<std::uint32_t>(s)) < k ? 0.0 : rng.uniform(-1.0, 1.0);
  }
  return inverse_fwht(FourierSpectrum(n, std::move(c)));
}

DiscreteRV random_mean_zero_rv(int max_atoms, Rng& rng) {
  const int atoms = rng.uniform_int(2, max_atoms);
  Eigen::VectorXd values(atoms), probs(atoms);
  for (int i = 0; i < atoms; ++i) {
    values(i) = rng.uniform(-2.0, 2.0);
    probs(i) = rng.uniform(0.05, 1.0);
  }
  probs /= probs.sum();
  values.array() -= probs.dot(values);
  return DiscreteRV(std::move(values), std::move(probs));
}

MarkovGenerator random_reversible_generator(Index states, Rng& rng) {
  Eigen::VectorXd mu(states);
  for (Index i = 0; i < states; ++i) mu(i) = rng.uniform(0.2, 1.0);
  mu /= mu.sum();
  Eigen::MatrixXd rates = Eigen::MatrixXd::Zero(states, states);
  for (Index i = 0; i < states; ++i) {
    for (Index j = i + 1; j < states; ++j) {
      rates(i, j) = rates(j, i) = rng.uniform(0.05, 1.0);
    }
  }
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(states, states);
  for (Index i = 0; i < states; ++i) {
    for (Index j = 0; j < states; ++j) {
      if (i != j) L(i, j) = -rates(i, j) / mu(i);
    }
    L(i, i) = -L.row(i).sum();
  }
  Eigen::VectorXd pos(states);
  for (Index i = 0; i < states; ++i) pos(i) = static_cast<double>(i);
  return MarkovGenerator(FiniteSpace(std::move(pos), std::move(mu)), std::move(L));
}

Eigen::VectorXd random_state_function(Index size, Rng& rng) {
  Eigen::VectorXd f(size);
  for (Index i = 0; i < size; ++i) f(i) = rng.uniform(-1.0, 1.0);
  return f;
}

Eigen::VectorXd random_mean_zero_state(const MarkovGenerator& gen, Rng& rng) {
  Eigen::VectorXd f = random_state_function(gen.size(), rng);
  f.array() -= gen.mean(f);
  return f;
}

}  // namespace tailspace
