#pragma once

#include <Eigen/Dense>

#include <utility>

namespace abslcp {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// LCP(M, q): find z >= 0 with w = Mz + q >= 0 and z'w = 0.
///
/// Immutable once constructed. The constructor validates that M is square,
/// that q has matching length, and that every entry is finite.
class LcpProblem {
 public:
  LcpProblem(Matrix M, Vector q);

  Eigen::Index size() const noexcept { return q_.size(); }
  const Matrix& M() const noexcept { return M_; }
  const Vector& q() const noexcept { return q_; }

 private:
  Matrix M_;
  Vector q_;
};

/// Validating factory; throws DimensionError or NonFiniteError.
LcpProblem new_problem(Matrix M, Vector q);

/// Feasibility and complementarity measures for a candidate z.
struct ResidualMetrics {
  double gap = 0.0;               // z'(Mz + q), unclamped
  double min_z = 0.0;             // most negative entry of z, 0 if none
  double min_w = 0.0;             // most negative entry of Mz + q, 0 if none
  double natural_residual = 0.0;  // || min(z, Mz + q) ||_inf

  bool is_solution(double tol = 1e-8) const noexcept {
    return gap <= tol && min_z >= -tol && min_w >= -tol;
  }
};

/// z = |x| + x, w = |x| - x.
std::pair<Vector, Vector> x_to_zw(const Vector& x);

/// x = (z - w) / 2. Throws DimensionError on length mismatch.
Vector zw_to_x(const Vector& z, const Vector& w);

/// Throws DimensionError unless z has length n.
ResidualMetrics residuals(const LcpProblem& problem, const Vector& z);

// Shared argument checks.
void require_length(const Vector& v, Eigen::Index n, const char* what);
void require_finite(const Vector& v, const char* what);

}  // namespace abslcp
