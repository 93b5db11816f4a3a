#pragma once

#include <Eigen/Dense>

#include "tailspace/cube.hpp"

namespace tailspace {

/// Dense eigendecomposition is the semigroup route, so spaces stay small.
inline constexpr Index kMaxStates = 4096;

/// A finite probability space with real-valued state labels ("positions"),
/// used by the two-point extremal examples where f(x) = x matters.
struct FiniteSpace {
  Eigen::VectorXd positions;
  Eigen::VectorXd mu;

  FiniteSpace(Eigen::VectorXd positions_in, Eigen::VectorXd mu_in);
  static FiniteSpace uniform(Index size);

  Index size() const { return mu.size(); }
};

/// A reversible Markov generator L on a finite space, acting on functions as
/// (Lf)(x) = sum_y matrix(x,y) f(y), with P_t = e^{-tL}.  Construction
/// validates: rows sum to zero (1e-10), mu-reversibility (1e-10), jump-rate
/// positivity -mu(x)L(x,y) >= -1e-12 off the diagonal, and positive
/// semidefiniteness in L2(mu) (eigenvalues >= -1e-10).  The spectral
/// decomposition is computed eagerly; instances are immutable and safe to
/// share across threads.
class MarkovGenerator {
 public:
  MarkovGenerator(FiniteSpace space, Eigen::MatrixXd matrix);

  const FiniteSpace& space() const { return space_; }
  const Eigen::MatrixXd& matrix() const { return matrix_; }
  Index size() const { return space_.size(); }

  /// Eigenvalues of L in L2(mu), ascending; the first is ~0 (constants).
  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

  double mean(const Eigen::VectorXd& f) const;
  double inner(const Eigen::VectorXd& f, const Eigen::VectorXd& g) const;
  /// (E_mu |f|^p)^{1/p}; p = +infinity returns max |f|.
  double norm_lp(const Eigen::VectorXd& f, double p) const;

  Eigen::VectorXd apply(const Eigen::VectorXd& f) const;  // L f

  /// e^{-tL} f via the spectral decomposition.  P_0 = identity, P_t 1 = 1,
  /// and the mu-mean is preserved.
  Eigen::VectorXd semigroup(double t, const Eigen::VectorXd& f) const;
  Eigen::MatrixXd semigroup_matrix(double t) const;

  /// 1 / (smallest nonzero eigenvalue): the least C with
  /// Var f <= C E fLf.  Signals a disconnected generator.
  double poincare_constant() const;

  /// E_mu g (Lh).
  double dirichlet_form(const Eigen::VectorXd& g, const Eigen::VectorXd& h) const;
  /// Same quantity through the edge sum
  /// (1/2) sum_{x!=y} (-mu(x) L(x,y)) (g(x)-g(y)) (h(x)-h(y)).
  double dirichlet_form_edge_sum(const Eigen::VectorXd& g,
                                 const Eigen::VectorXd& h) const;

 private:
  FiniteSpace space_;
  Eigen::MatrixXd matrix_;
  Eigen::VectorXd sqrt_mu_, inv_sqrt_mu_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;  // of the symmetrized operator
};

/// The hypercube number operator on 2^n states (uniform measure): eigenvalues
/// 0..n, matching core's laplacian/heat exactly.  n <= 12 so the dense route
/// stays within kMaxStates.
MarkovGenerator hypercube_generator(int n);

/// Two-point space {-alpha, beta} with mu = (beta, alpha) and
/// L = C^{-1}(Id - E_mu); requires alpha + beta = 1 (within 1e-12).  Equality
/// holds in the Poincare inequality for every function.
MarkovGenerator extremal_generator(double alpha, double beta, double C);

}  // namespace tailspace
