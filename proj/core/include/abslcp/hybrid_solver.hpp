#pragma once

#include "abslcp/problem.hpp"
#include "abslcp/smoothing.hpp"
#include "abslcp/solve_report.hpp"

#include <optional>

namespace abslcp::hybrid {

/// d = -J(p, x)' F~(p, x), the steepest-descent direction of the merit.
Vector descent_direction(const LcpProblem& problem, SmoothingParam p, const Vector& x);

/// Vector-division secant directions built from the last two iterates.
struct SecantPair {
  Vector u;  // xi1 * F~(x_k),  xi1 = -||dx||^2 / <dx, dF>
  Vector v;  // xi2 * dx,       xi2 = -<dF, F~(x_k)> / ||dF||^2
  double xi1 = 0.0;
  double xi2 = 0.0;
};

/// Returns nullopt (degenerate) when x_k == x_km1 or when either denominator
/// is below floor * (1 + ||F~(x_k)||^2).
std::optional<SecantPair> secant_directions(const Vector& x_k, const Vector& x_km1,
                                            const Vector& F_k, const Vector& F_km1,
                                            double floor = 1e-300);

std::optional<SecantPair> secant_directions(const LcpProblem& problem, SmoothingParam p,
                                            const Vector& x_k, const Vector& x_km1,
                                            double floor = 1e-300);

struct BlendResult {
  Vector s;
  DirectionKind kind;
};

/// Picks s on the line v + alpha (u - v) with the largest cosine to d.
///
/// With a = <v, d> and b = <u - v, d>:
///  - b != 0: the unique stationary point of the cosine,
///      alpha* = (<v, u-v> a - ||v||^2 b) / (<v, u-v> b - ||u-v||^2 a),
///    is used when it is finite and gives <s, d> > 0. Otherwise the
///    stationary point is the cosine's minimum and the supremum is the limit
///    direction sign(b) (u - v); `on_reject` chooses between that limit and d.
///  - b == 0, a > 0: s = (u + v) / 2.
///  - b == 0, a <= 0: s = d.
/// Requires d != 0.
BlendResult blend_direction(const Vector& u, const Vector& v, const Vector& d,
                            BlendRejection on_reject = BlendRejection::LimitDirection);

/// Step length gamma > 0 along s with
///   f(x + gamma s) <= f(x) - gamma rho <d, s>          (sufficient decrease)
///   <grad f(x + gamma s), s> >= -sigma <d, s>           (curvature)
/// found by bracketing: bisect when decrease fails, double (up to 2^20) while
/// only curvature fails. Uses at most config.ls_max_trials merit
/// evaluations; returns nullopt when none qualifies. Requires <d, s> > 0.
std::optional<double> line_search(const LcpProblem& problem, SmoothingParam p, const Vector& x,
                                  const Vector& s, const Vector& d, const SolverConfig& config);

/// Default second starting point: x0 + 1e-3 d(x0) / max(1, ||d(x0)||).
Vector seed_second_point(const LcpProblem& problem, SmoothingParam p, const Vector& x0);

/// Runs the hybrid iteration from the pair (x0, x1). Record 0 holds x0 and
/// record k holds x^(k) together with the direction and step taken from it.
/// Throws std::invalid_argument on an invalid config.
SolveReport solve(const LcpProblem& problem, const Vector& x0, const Vector& x1,
                  const SolverConfig& config);

/// Same, with x1 from seed_second_point.
SolveReport solve(const LcpProblem& problem, const Vector& x0, const SolverConfig& config);

}  // namespace abslcp::hybrid
