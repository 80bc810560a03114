#pragma once

#include "abslcp/problem.hpp"
#include "abslcp/solve_report.hpp"

#include <Eigen/LU>

namespace abslcp::fixed_point {

/// LU factorization of (I + M) with partial pivoting, plus the data needed to
/// apply x -> (I + M)^{-1} ((I - M)|x| - q). D = (I + M)^{-1}(I - M) is never
/// formed; it is applied through solves.
class IterationMatrixFactorization {
 public:
  explicit IterationMatrixFactorization(const LcpProblem& problem);

  Eigen::Index size() const noexcept { return I_minus_M_.rows(); }

  /// (I + M)^{-1} q.
  const Vector& offset() const noexcept { return offset_; }

  /// D v.
  Vector apply_D(const Vector& v) const;
  /// D' v.
  Vector apply_D_transpose(const Vector& v) const;

  /// (I + M)^{-1} rhs.
  Vector solve(const Vector& rhs) const { return lu_.solve(rhs); }

  const Matrix& I_minus_M() const noexcept { return I_minus_M_; }
  const Vector& q() const noexcept { return q_; }

 private:
  Eigen::PartialPivLU<Matrix> lu_;
  Eigen::PartialPivLU<Matrix> lu_transpose_;  // of (I + M)'
  Matrix I_minus_M_;
  Vector q_;
  Vector offset_;
};

/// Throws SingularMatrixError when I + M is numerically singular.
IterationMatrixFactorization factorize(const LcpProblem& problem);

/// One application of the fixed-point map, costing a single LU solve.
Vector step(const IterationMatrixFactorization& fact, const Vector& x);

/// ||D||_2 by power iteration on D'D. For symmetric positive definite M this
/// equals the spectral radius of D, and a value below 1 certifies that the
/// iteration is a contraction. Throws ConvergenceError (carrying the last
/// estimate) when the Rayleigh quotient has not settled to a relative change
/// of tol within max_iter products.
double spectral_radius_estimate(const IterationMatrixFactorization& fact, double tol = 1e-12,
                                int max_iter = 100000);

/// Iterates the map from x0 until ||F(x)||_inf <= config.eps or
/// config.max_iters steps. Record k holds x^(k); record 0 is x0. The report's
/// merit column is 0.5 ||F(x)||^2 (the method never smooths).
SolveReport solve(const LcpProblem& problem, const Vector& x0, const SolverConfig& config);

}  // namespace abslcp::fixed_point
