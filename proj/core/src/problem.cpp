#include "abslcp/problem.hpp"

#include "abslcp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace abslcp {

LcpProblem::LcpProblem(Matrix M, Vector q) : M_(std::move(M)), q_(std::move(q)) {
  if (M_.rows() != M_.cols()) {
    throw DimensionError("M must be square, got " + std::to_string(M_.rows()) + "x" +
                         std::to_string(M_.cols()));
  }
  if (M_.rows() != q_.size()) {
    throw DimensionError("M is " + std::to_string(M_.rows()) + "x" + std::to_string(M_.cols()) +
                         " but q has length " + std::to_string(q_.size()));
  }
  if (q_.size() == 0) {
    throw DimensionError("problem dimension must be positive");
  }
  if (!M_.allFinite()) {
    throw NonFiniteError("M contains a non-finite entry");
  }
  if (!q_.allFinite()) {
    throw NonFiniteError("q contains a non-finite entry");
  }
}

LcpProblem new_problem(Matrix M, Vector q) { return LcpProblem(std::move(M), std::move(q)); }

void require_length(const Vector& v, Eigen::Index n, const char* what) {
  if (v.size() != n) {
    throw DimensionError(std::string(what) + " has length " + std::to_string(v.size()) +
                         ", expected " + std::to_string(n));
  }
}

void require_finite(const Vector& v, const char* what) {
  if (!v.allFinite()) {
    throw NonFiniteError(std::string(what) + " contains a non-finite entry");
  }
}

std::pair<Vector, Vector> x_to_zw(const Vector& x) {
  const Vector a = x.cwiseAbs();
  return {a + x, a - x};
}

Vector zw_to_x(const Vector& z, const Vector& w) {
  require_length(w, z.size(), "w");
  return (z - w) / 2.0;
}

ResidualMetrics residuals(const LcpProblem& problem, const Vector& z) {
  require_length(z, problem.size(), "z");
  const Vector w = problem.M() * z + problem.q();

  ResidualMetrics r;
  r.gap = z.dot(w);
  r.min_z = std::min(0.0, z.minCoeff());
  r.min_w = std::min(0.0, w.minCoeff());
  r.natural_residual = z.cwiseMin(w).cwiseAbs().maxCoeff();
  return r;
}

}  // namespace abslcp
