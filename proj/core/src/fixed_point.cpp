#include "abslcp/fixed_point.hpp"

#include "abslcp/errors.hpp"
#include "abslcp/smoothing.hpp"

#include <cmath>
#include <limits>

namespace abslcp::fixed_point {

IterationMatrixFactorization::IterationMatrixFactorization(const LcpProblem& problem)
    : q_(problem.q()) {
  const Eigen::Index n = problem.size();
  const Matrix I_plus_M = problem.M() + Matrix::Identity(n, n);
  I_minus_M_ = Matrix::Identity(n, n) - problem.M();
  lu_.compute(I_plus_M);

  const Vector pivots = lu_.matrixLU().diagonal().cwiseAbs();
  const double scale = std::max(1.0, I_plus_M.cwiseAbs().maxCoeff());
  const double floor = static_cast<double>(n) * std::numeric_limits<double>::epsilon() * scale;
  if (!pivots.allFinite() || pivots.minCoeff() <= floor) {
    throw SingularMatrixError("I + M is numerically singular; the fixed-point map is undefined");
  }
  lu_transpose_.compute(I_plus_M.transpose());
  offset_ = lu_.solve(q_);
}

Vector IterationMatrixFactorization::apply_D(const Vector& v) const {
  return lu_.solve(I_minus_M_ * v);
}

Vector IterationMatrixFactorization::apply_D_transpose(const Vector& v) const {
  return I_minus_M_.transpose() * lu_transpose_.solve(v);
}

IterationMatrixFactorization factorize(const LcpProblem& problem) {
  return IterationMatrixFactorization(problem);
}

Vector step(const IterationMatrixFactorization& fact, const Vector& x) {
  require_length(x, fact.size(), "x");
  return fact.solve(fact.I_minus_M() * x.cwiseAbs() - fact.q());
}

double spectral_radius_estimate(const IterationMatrixFactorization& fact, double tol,
                                int max_iter) {
  if (!(tol > 0.0)) {
    throw std::invalid_argument("tol must be positive");
  }
  const Eigen::Index n = fact.size();
  // all-ones start, nudged so it is not orthogonal to a symmetric eigenvector
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v[i] = 1.0 + 0.01 * static_cast<double>(i + 1) / static_cast<double>(n);
  }
  v.normalize();

  double lambda = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    const Vector y = fact.apply_D_transpose(fact.apply_D(v));
    const double norm = y.norm();
    if (norm == 0.0) {
      return 0.0;
    }
    const double next = v.dot(y);  // Rayleigh quotient, ||v|| = 1
    v = y / norm;
    if (it > 0 && std::abs(next - lambda) <= tol * std::abs(next)) {
      return std::sqrt(std::max(next, 0.0));
    }
    lambda = next;
  }
  throw ConvergenceError("power iteration did not converge", std::sqrt(std::max(lambda, 0.0)));
}

SolveReport solve(const LcpProblem& problem, const Vector& x0, const SolverConfig& config) {
  if (config.max_iters < 1) {
    throw std::invalid_argument("max_iters must be at least 1");
  }
  if (!(config.eps > 0.0)) {
    throw std::invalid_argument("eps must be positive");
  }
  require_length(x0, problem.size(), "x0");
  require_finite(x0, "x0");

  const IterationMatrixFactorization fact = factorize(problem);

  SolveReport report;
  try {
    report.contraction_estimate = spectral_radius_estimate(fact);
  } catch (const ConvergenceError& e) {
    report.contraction_estimate = e.best_estimate();
  }
  report.non_contractive = *report.contraction_estimate >= 1.0;

  Vector x = x0;
  for (int k = 0;; ++k) {
    const Vector F = eval_F(problem, x);
    const double res = F.cwiseAbs().maxCoeff();
    report.records.push_back(make_record(k, x, 0.5 * F.squaredNorm(), res));
    if (res <= config.eps) {
      report.status = SolveStatus::Converged;
      break;
    }
    if (k == config.max_iters) {
      report.status = SolveStatus::MaxIters;
      break;
    }
    x = step(fact, x);
    ++report.linear_solves;
  }
  report.final_residuals = residuals(problem, report.records.back().z);
  return report;
}

}  // namespace abslcp::fixed_point
