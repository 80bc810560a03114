#include "abslcp/smoothing.hpp"

#include "abslcp/errors.hpp"

#include <cmath>
#include <string>

namespace abslcp {

SmoothingParam::SmoothingParam(double p) : p_(p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    throw std::invalid_argument("smoothing parameter must be positive and finite, got " +
                                std::to_string(p));
  }
}

namespace {

void check_point(const LcpProblem& problem, const Vector& x) {
  require_length(x, problem.size(), "x");
  require_finite(x, "x");
}

// (M + I)x + (M - I)a + q without forming M + I or M - I.
Vector combine(const LcpProblem& problem, const Vector& x, const Vector& a) {
  return problem.M() * (x + a) + (x - a) + problem.q();
}

}  // namespace

Vector eval_F(const LcpProblem& problem, const Vector& x) {
  check_point(problem, x);
  return combine(problem, x, x.cwiseAbs());
}

double smooth_abs(SmoothingParam p, double t) {
  // 1 + e^{pt} + e^{-pt} = e^{p|t|} (1 + e^{-p|t|} + e^{-2p|t|})
  const double a = std::abs(t);
  const double e = std::exp(-p.value() * a);
  return a + std::log1p(e + e * e) / p.value();
}

Vector eval_F_tilde(const LcpProblem& problem, SmoothingParam p, const Vector& x) {
  check_point(problem, x);
  const Vector s = x.unaryExpr([p](double t) { return smooth_abs(p, t); });
  return combine(problem, x, s);
}

Vector eval_E_diag(SmoothingParam p, const Vector& x) {
  return x.unaryExpr([p](double t) {
    const double a = std::abs(t);
    const double e = std::exp(-p.value() * a);
    // (1 - e^{-2pa}) / (1 + e^{-pa} + e^{-2pa}), odd in t
    return std::copysign(-std::expm1(-2.0 * p.value() * a) / (1.0 + e + e * e), t);
  });
}

Matrix eval_jacobian(const LcpProblem& problem, SmoothingParam p, const Vector& x) {
  check_point(problem, x);
  const Eigen::Index n = problem.size();
  const Vector e = eval_E_diag(p, x);
  // column j: (1 + e_j) M_j + (1 - e_j) I_j
  Matrix J = problem.M() * (Vector::Ones(n) + e).asDiagonal();
  J.diagonal() += Vector::Ones(n) - e;
  return J;
}

double merit(const LcpProblem& problem, SmoothingParam p, const Vector& x) {
  return 0.5 * eval_F_tilde(problem, p, x).squaredNorm();
}

Vector merit_gradient(const LcpProblem& problem, SmoothingParam p, const Vector& x) {
  return merit_with_gradient(problem, p, x).gradient;
}

MeritEval merit_with_gradient(const LcpProblem& problem, SmoothingParam p, const Vector& x) {
  MeritEval out;
  out.F_tilde = eval_F_tilde(problem, p, x);
  out.value = 0.5 * out.F_tilde.squaredNorm();
  // J'F = diag(1 + e) M'F + diag(1 - e) F
  const Vector e = eval_E_diag(p, x);
  const Vector MtF = problem.M().transpose() * out.F_tilde;
  out.gradient = (Vector::Ones(x.size()) + e).cwiseProduct(MtF) +
                 (Vector::Ones(x.size()) - e).cwiseProduct(out.F_tilde);
  return out;
}

}  // namespace abslcp
