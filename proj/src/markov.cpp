#include "tailspace/markov.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace tailspace {

namespace {
constexpr double kStructureTol = 1e-10;
constexpr double kSignTol = 1e-12;
}  // namespace

FiniteSpace::FiniteSpace(Eigen::VectorXd positions_in, Eigen::VectorXd mu_in)
    : positions(std::move(positions_in)), mu(std::move(mu_in)) {
  require(positions.size() == mu.size(), "bad-size",
          "positions/measure size mismatch");
  require(mu.size() >= 1 && mu.size() <= kMaxStates, "capacity",
          "state count outside [1, " + std::to_string(kMaxStates) + "]");
  for (Index i = 0; i < mu.size(); ++i) {
    require(mu(i) > 0.0, "bad-measure", "measure must be strictly positive");
  }
  require(std::abs(mu.sum() - 1.0) <= 1e-12, "bad-measure",
          "measure must sum to 1 within 1e-12");
}

FiniteSpace FiniteSpace::uniform(Index size) {
  Eigen::VectorXd pos(size);
  for (Index i = 0; i < size; ++i) pos(i) = static_cast<double>(i);
  return FiniteSpace(std::move(pos),
                     Eigen::VectorXd::Constant(size, 1.0 / static_cast<double>(size)));
}

MarkovGenerator::MarkovGenerator(FiniteSpace space, Eigen::MatrixXd matrix)
    : space_(std::move(space)), matrix_(std::move(matrix)) {
  const Index n = space_.size();
  require(matrix_.rows() == n && matrix_.cols() == n, "bad-size",
          "generator matrix shape mismatch");

  for (Index x = 0; x < n; ++x) {
    require(std::abs(matrix_.row(x).sum()) <= kStructureTol, "bad-generator",
            "row " + std::to_string(x) + " does not sum to zero");
    for (Index y = 0; y < n; ++y) {
      require(std::abs(space_.mu(x) * matrix_(x, y) - space_.mu(y) * matrix_(y, x)) <=
                  kStructureTol,
              "bad-generator", "generator is not mu-reversible");
      if (x != y) {
        require(-space_.mu(x) * matrix_(x, y) >= -kSignTol, "bad-generator",
                "negative jump rate at (" + std::to_string(x) + "," +
                    std::to_string(y) + ")");
      }
    }
  }

  sqrt_mu_ = space_.mu.cwiseSqrt();
  inv_sqrt_mu_ = sqrt_mu_.cwiseInverse();
  Eigen::MatrixXd sym =
      sqrt_mu_.asDiagonal() * matrix_ * inv_sqrt_mu_.asDiagonal();
  sym = ((sym + sym.transpose()) / 2.0).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym);
  require(solver.info() == Eigen::Success, "eigen-failure",
          "eigendecomposition did not converge");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
  require(eigenvalues_(0) >= -kStructureTol, "bad-generator",
          "generator is not positive semidefinite in L2(mu)");
}

double MarkovGenerator::mean(const Eigen::VectorXd& f) const {
  require(f.size() == size(), "dimension-mismatch", "function size mismatch");
  return space_.mu.dot(f);
}

double MarkovGenerator::inner(const Eigen::VectorXd& f,
                              const Eigen::VectorXd& g) const {
  require(f.size() == size() && g.size() == size(), "dimension-mismatch",
          "function size mismatch");
  return (space_.mu.array() * f.array() * g.array()).sum();
}

double MarkovGenerator::norm_lp(const Eigen::VectorXd& f, double p) const {
  require(p >= 1.0, "bad-exponent", "norm requires p >= 1");
  require(f.size() == size(), "dimension-mismatch", "function size mismatch");
  if (std::isinf(p)) return f.cwiseAbs().maxCoeff();
  double acc = 0.0;
  for (Index i = 0; i < f.size(); ++i) {
    acc += space_.mu(i) * std::pow(std::abs(f(i)), p);
  }
  return std::pow(acc, 1.0 / p);
}

Eigen::VectorXd MarkovGenerator::apply(const Eigen::VectorXd& f) const {
  require(f.size() == size(), "dimension-mismatch", "function size mismatch");
  return matrix_ * f;
}

Eigen::VectorXd MarkovGenerator::semigroup(double t, const Eigen::VectorXd& f) const {
  require(t >= 0.0, "bad-time", "semigroup requires t >= 0");
  require(f.size() == size(), "dimension-mismatch", "function size mismatch");
  if (t == 0.0) return f;
  const Eigen::VectorXd decay = (-t * eigenvalues_.array()).exp().matrix();
  const Eigen::VectorXd coords =
      eigenvectors_.transpose() * (sqrt_mu_.asDiagonal() * f);
  return inv_sqrt_mu_.asDiagonal() *
         (eigenvectors_ * (decay.asDiagonal() * coords));
}

Eigen::MatrixXd MarkovGenerator::semigroup_matrix(double t) const {
  require(t >= 0.0, "bad-time", "semigroup requires t >= 0");
  const Eigen::VectorXd decay = (-t * eigenvalues_.array()).exp().matrix();
  return inv_sqrt_mu_.asDiagonal() *
         (eigenvectors_ * decay.asDiagonal() * eigenvectors_.transpose()) *
         sqrt_mu_.asDiagonal();
}

double MarkovGenerator::poincare_constant() const {
  require(size() >= 2, "bad-generator", "single-state space has no gap");
  const double gap = eigenvalues_(1);
  require(gap > 1e-12, "disconnected", "spectral gap below 1e-12");
  return 1.0 / gap;
}

double MarkovGenerator::dirichlet_form(const Eigen::VectorXd& g,
                                       const Eigen::VectorXd& h) const {
  return inner(g, apply(h));
}

double MarkovGenerator::dirichlet_form_edge_sum(const Eigen::VectorXd& g,
                                                const Eigen::VectorXd& h) const {
  require(g.size() == size() && h.size() == size(), "dimension-mismatch",
          "function size mismatch");
  double acc = 0.0;
  for (Index x = 0; x < size(); ++x) {
    for (Index y = 0; y < size(); ++y) {
      if (x == y) continue;
      acc += (-space_.mu(x) * matrix_(x, y)) * (g(x) - g(y)) * (h(x) - h(y));
    }
  }
  return acc / 2.0;
}

MarkovGenerator hypercube_generator(int n) {
  require(n >= 1 && n <= 12, "capacity",
          "hypercube generator limited to n <= 12 states 2^n <= 4096");
  const Index size = Index(1) << n;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(size, size);
  for (Index x = 0; x < size; ++x) {
    L(x, x) = n / 2.0;
    for (int i = 0; i < n; ++i) L(x, x ^ (Index(1) << i)) = -0.5;
  }
  return MarkovGenerator(FiniteSpace::uniform(size), std::move(L));
}

MarkovGenerator extremal_generator(double alpha, double beta, double C) {
  require(alpha > 0.0 && beta > 0.0 && C > 0.0, "bad-parameter",
          "extremal generator needs alpha, beta, C > 0");
  require(std::abs(alpha + beta - 1.0) <= 1e-12, "bad-parameter",
          "extremal generator needs alpha + beta = 1");
  Eigen::VectorXd pos(2), mu(2);
  pos << -alpha, beta;
  mu << beta, alpha;
  Eigen::MatrixXd L(2, 2);
  for (Index x = 0; x < 2; ++x) {
    for (Index y = 0; y < 2; ++y) {
      L(x, y) = ((x == y ? 1.0 : 0.0) - mu(y)) / C;
    }
  }
  return MarkovGenerator(FiniteSpace(std::move(pos), std::move(mu)), std::move(L));
}

}  // namespace tailspace
