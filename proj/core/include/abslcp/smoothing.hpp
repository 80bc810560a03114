#pragma once

#include "abslcp/problem.hpp"

namespace abslcp {

/// Sharpness of the smooth |t| surrogate. Must be positive and finite.
class SmoothingParam {
 public:
  explicit SmoothingParam(double p);

  double value() const noexcept { return p_; }

 private:
  double p_;
};

/// F(x) = (M + I)x + (M - I)|x| + q. Its roots are exactly the x with
/// (|x| + x, |x| - x) solving LCP(M, q).
Vector eval_F(const LcpProblem& problem, const Vector& x);

/// (1/p) ln(1 + e^{pt} + e^{-pt}), evaluated with the e^{p|t|} factor pulled
/// out so it never overflows. Lies in [|t|, |t| + ln(3)/p].
double smooth_abs(SmoothingParam p, double t);

/// (M + I)x + (M - I)s + q with s_i = smooth_abs(p, x_i).
Vector eval_F_tilde(const LcpProblem& problem, SmoothingParam p, const Vector& x);

/// Derivative of smooth_abs at each x_i:
/// (e^{px} - e^{-px}) / (1 + e^{px} + e^{-px}), in rescaled form.
Vector eval_E_diag(SmoothingParam p, const Vector& x);

/// (M + I) + (M - I) diag(eval_E_diag(p, x)).
Matrix eval_jacobian(const LcpProblem& problem, SmoothingParam p, const Vector& x);

/// f(p, x) = 0.5 * ||F~(p, x)||^2.
double merit(const LcpProblem& problem, SmoothingParam p, const Vector& x);

/// grad f(p, x) = J(p, x)' F~(p, x).
Vector merit_gradient(const LcpProblem& problem, SmoothingParam p, const Vector& x);

/// Value and gradient of the merit from one evaluation of F~ and E.
struct MeritEval {
  Vector F_tilde;
  double value;
  Vector gradient;
};

MeritEval merit_with_gradient(const LcpProblem& problem, SmoothingParam p, const Vector& x);

}  // namespace abslcp
