#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "tailspace/constructions.hpp"
#include "tailspace/markov.hpp"
#include "tailspace/random.hpp"

namespace tailspace {

// Tolerance tiers: pointwise algebra, exhaustive sweeps, nonlinear solvers.
inline constexpr double kTolPointwise = 1e-12;
inline constexpr double kTolSweep = 1e-10;
inline constexpr double kTolSolver = 1e-8;

/// Outcome of one inequality check.  `slack` is oriented so that
/// pass <=> slack >= -tol regardless of which side the source inequality
/// bounds; `lhs`/`rhs` keep the sides as the inequality states them.
/// Equality-case checks additionally require slack <= tol and carry
/// note = "equality".
struct CheckReport {
  std::string check_id;
  std::map<std::string, double> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double tol = 0.0;
  bool pass = false;
  std::string note;
};

/// `lhs <= rhs` style check: slack = rhs - lhs.
CheckReport check_upper(std::string id, std::map<std::string, double> params,
                        double lhs, double rhs, double tol);
/// `lhs >= rhs` style check: slack = lhs - rhs.
CheckReport check_lower(std::string id, std::map<std::string, double> params,
                        double lhs, double rhs, double tol);
/// `lhs == rhs` within tol.
CheckReport check_equal(std::string id, std::map<std::string, double> params,
                        double lhs, double rhs, double tol);

/// A finitely supported real random variable.
struct DiscreteRV {
  Eigen::VectorXd values;
  Eigen::VectorXd probs;

  DiscreteRV(Eigen::VectorXd values_in, Eigen::VectorXd probs_in);

  double mean() const;
  double abs_moment(double p) const;  // E |X|^p
  double pos_moment(double s) const;  // E X_+^s
  double neg_moment(double s) const;  // E X_-^s
};

/// phi_s(x) = sign(x) |x|^s.
double signed_power(double x, double s);

/// kappa(p) = inf_{u>1} (u^{p/(p-2)} + u^{-p/(p-2)}) / (u - u^{-1}),
/// by golden section on log u with an expanding bracket; also returns the
/// minimizing u.  p in (1, inf) \ {2}.
struct KappaResult {
  double value;
  double minimizer;
};
KappaResult kappa(double p);

enum class HeatBoundMode { Base, Kappa };

/// Decay rate of the heat-smoothing bound exp(-rate * t):
/// base (2p-2)/((p^2-2p+2)C) or the sharper (4p-4)/(C p^2 (1 + kappa^-2)).
double heat_smoothing_rate(double p, double C, HeatBoundMode mode);

// Heat smoothing ||P_t f||_p <= exp(-rate t) ||f||_p for mean-zero f:
// hypercube route (C = 1) and general-generator route.
CheckReport check_heat_smoothing(const CubeFunction& f, double p, double t,
                                 HeatBoundMode mode);
CheckReport check_heat_smoothing(const MarkovGenerator& gen, const Eigen::VectorXd& f,
                                 double p, double t, HeatBoundMode mode);

// Lp Poincare: E phi_{p-1}(f) Lf >= (2p-2)/((p^2-2p+2)C) E|f|^p, mean-zero f.
CheckReport check_lp_poincare(const CubeFunction& f, double p);
CheckReport check_lp_poincare(const MarkovGenerator& gen, const Eigen::VectorXd& f,
                              double p);

/// {-1,0,1}-valued f with all coefficients below level k vanishing (exact
/// certificate): ||P_t f||_p <= exp(-2tk min((p-1)/p, 1/p)) ||f||_p.
CheckReport check_ternary_contraction(const CubeFunction& f, int k, double p, double t);

/// Mean-zero X, p != 2: the four-term positive/negative moment sum is
/// dominated by E|X|^p.
CheckReport check_pospart_moment_split(const DiscreteRV& x, double p);

/// a, b > 0, p != 2: (a-b)^2 against the weighted power sum.
CheckReport check_two_point_gap(double a, double b, double p);

/// Mean-zero X: (E X_+^{p/2} - E X_-^{p/2})^2 <= (1 - p^2/(2(p^2-2p+2))) E|X|^p.
CheckReport check_signed_moment_gap(const DiscreteRV& x, double p);

/// Pointwise Stroock-Varopoulos:
/// (phi_{p-1}(a) - phi_{p-1}(b))(a - b) >= (4(p-1)/p^2)(phi_{p/2}(a) - phi_{p/2}(b))^2.
CheckReport check_stroock_varopoulos(double a, double b, double p);

/// Weak Stroock-Varopoulos for a mu-symmetric Markov operator P:
/// p^2 E phi_{p-1}(f) Pf <= (p-2)^2 E|f|^p + 4(p-1) E phi_{p/2}(f) P phi_{p/2}(f).
CheckReport check_weak_stroock_varopoulos(const Eigen::MatrixXd& P,
                                          const Eigen::VectorXd& mu,
                                          const Eigen::VectorXd& f, double p);

/// Operator-norm bound ||P_{eps+t} - P_eps||_{2->2} <= 2t/eps, evaluated on
/// the spectrum.
CheckReport check_semigroup_difference(const MarkovGenerator& gen, double eps, double t);

/// Interpolation contraction for a mean-preserving Markov operator with
/// L2 gap eps: ||Pg||_p <= (1 - 2^{2-p*} eps)^{1/p*} ||g||_p, plus optional
/// validation of the extension operator's three norm bounds.
struct NazarovResult {
  double epsilon = 0.0;
  CheckReport contraction;
  std::vector<CheckReport> extension_norms;
};
NazarovResult check_nazarov(const Eigen::MatrixXd& P, const Eigen::VectorXd& mu,
                            const Eigen::VectorXd& g, double p, bool with_extension);

/// Talagrand for tail spaces: both links of the chain
///   E f^2 <= (3/k) sum_i E(D_i f)^2 / max(1, log(||D_i f||_2 / ||D_i f||_q))
///         <= 8 sum_i E(D_i f)^2 / (k + log(||D_i f||_2 / ||D_i f||_1)),
/// q = 1 + e^{-2/k}; zero-derivative coordinates contribute 0 to both sums.
std::pair<CheckReport, CheckReport> check_talagrand_tail(const CubeFunction& f, int k);

/// ||P_t f||_2 <= ||f||_{1 + e^{-2t}}.
CheckReport check_hypercontractivity(const CubeFunction& f, double t);

/// (2 - p) E fLf >= E|f|^2 - (E|f|^p)^{2/p} for p in [1, 2].
CheckReport check_beckner(const CubeFunction& f, double p);

/// The two-point distribution achieving equality in the sharpened moment
/// gap, plus the matching extremal-generator equality (both relative 1e-8).
struct ExtremalResult {
  double v = 0.0;      // stationary point, > 1
  double alpha = 0.0;  // 1 / (1 + v^{4/(p-2)})
  double kappa_value = 0.0;
  Eigen::VectorXd values, probs;  // the extremal X
  CheckReport moment_equality;
  CheckReport generator_equality;
};
ExtremalResult extremal_two_point(double p);

/// Harper: sum_i pivotal(f) >= (2/log 2)(E f) log(1/E f) for {0,1}-valued f;
/// E f in {0,1} reports a degenerate pass.
CheckReport check_harper(const CubeFunction& f01);

/// Achieved KKL ratio max_i pivotal / (Var f (log n)/n); report-only (the
/// universal constant is existential), used comparatively across families.
CheckReport check_kkl_ratio(const CubeFunction& f);

/// Largest c with ||P_t f||_p <= e^{-tkc} ||f||_p across the family and
/// t grid; empirical evidence only.
double estimate_decay_exponent(const std::vector<CubeFunction>& family, double p,
                               int k, const std::vector<double>& t_grid);

// Seeded instance generators for the sweeps.
CubeFunction random_cube_function(int n, Rng& rng);
CubeFunction random_mean_zero(int n, Rng& rng);
/// Projection of a random function onto span{W_S : |S| >= k} (all
/// coefficients below level k vanish).
CubeFunction random_tail_function(int n, int k, Rng& rng);
DiscreteRV random_mean_zero_rv(int max_atoms, Rng& rng);
MarkovGenerator random_reversible_generator(Index states, Rng& rng);
Eigen::VectorXd random_state_function(Index size, Rng& rng);
Eigen::VectorXd random_mean_zero_state(const MarkovGenerator& gen, Rng& rng);

}  // namespace tailspace
