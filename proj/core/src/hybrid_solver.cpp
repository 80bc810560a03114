#include "abslcp/hybrid_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace abslcp::hybrid {

namespace {

constexpr double kMaxStep = 1048576.0;  // 2^20

}  // namespace

Vector descent_direction(const LcpProblem& problem, SmoothingParam p, const Vector& x) {
  return -merit_gradient(problem, p, x);
}

std::optional<SecantPair> secant_directions(const Vector& x_k, const Vector& x_km1,
                                            const Vector& F_k, const Vector& F_km1,
                                            double floor) {
  const Vector dx = x_k - x_km1;
  const Vector dF = F_k - F_km1;
  if (dx.isZero(0.0)) {
    return std::nullopt;
  }
  const double guard = floor * (1.0 + F_k.squaredNorm());
  const double dx_dF = dx.dot(dF);
  const double dF_dF = dF.squaredNorm();
  if (!(std::abs(dx_dF) > guard) || !(dF_dF > guard)) {
    return std::nullopt;
  }
  SecantPair out;
  out.xi1 = -dx.squaredNorm() / dx_dF;
  out.xi2 = -dF.dot(F_k) / dF_dF;
  out.u = out.xi1 * F_k;
  out.v = out.xi2 * dx;
  if (!out.u.allFinite() || !out.v.allFinite()) {
    return std::nullopt;
  }
  return out;
}

std::optional<SecantPair> secant_directions(const LcpProblem& problem, SmoothingParam p,
                                            const Vector& x_k, const Vector& x_km1,
                                            double floor) {
  return secant_directions(x_k, x_km1, eval_F_tilde(problem, p, x_k),
                           eval_F_tilde(problem, p, x_km1), floor);
}

BlendResult blend_direction(const Vector& u, const Vector& v, const Vector& d,
                            BlendRejection on_reject) {
  const Vector w = u - v;
  const double a = v.dot(d);
  const double b = w.dot(d);

  if (b == 0.0) {
    if (a > 0.0) {
      return {0.5 * (u + v), DirectionKind::Midpoint};
    }
    return {d, DirectionKind::FallbackDescent};
  }

  const double vw = v.dot(w);
  const double alpha = (vw * a - v.squaredNorm() * b) / (vw * b - w.squaredNorm() * a);
  if (std::isfinite(alpha)) {
    Vector s = v + alpha * w;
    if (s.allFinite() && a + alpha * b > 0.0 && s.dot(d) > 0.0) {
      return {std::move(s), DirectionKind::Blend};
    }
  }
  if (on_reject == BlendRejection::LimitDirection && w.allFinite()) {
    // cos(v + alpha w, d) -> |b| / ||w|| as alpha -> sign(b) * inf
    return {b > 0.0 ? w : Vector(-w), DirectionKind::Blend};
  }
  return {d, DirectionKind::FallbackDescent};
}

std::optional<double> line_search(const LcpProblem& problem, SmoothingParam p, const Vector& x,
                                  const Vector& s, const Vector& d, const SolverConfig& config) {
  const double ds = d.dot(s);
  if (!(ds > 0.0)) {
    throw std::invalid_argument("line_search requires <d, s> > 0");
  }
  const double f0 = merit(problem, p, x);
  int trials = 0;

  double gamma = 1.0;
  if (config.initial_step == InitialStep::QuadraticInterpolation) {
    const double f1 = merit(problem, p, x + s);
    ++trials;
    const double curvature = f1 - f0 + ds;
    if (std::isfinite(f1) && curvature > 0.0) {
      gamma = std::clamp(ds / (2.0 * curvature), 1e-3, 1e3);
    }
  }

  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (; trials < config.ls_max_trials; ++trials) {
    const Vector xn = x + gamma * s;
    const MeritEval e = merit_with_gradient(problem, p, xn);
    if (!std::isfinite(e.value) || !(e.value <= f0 - gamma * config.rho * ds) ||
        !(e.value < f0)) {
      hi = gamma;
      gamma = 0.5 * (lo + hi);
      continue;
    }
    if (e.gradient.dot(s) < -config.sigma * ds) {
      lo = gamma;
      if (std::isinf(hi)) {
        if (gamma >= kMaxStep) {
          return std::nullopt;
        }
        gamma = std::min(2.0 * gamma, kMaxStep);
      } else {
        gamma = 0.5 * (lo + hi);
      }
      continue;
    }
    return gamma;
  }
  return std::nullopt;
}

Vector seed_second_point(const LcpProblem& problem, SmoothingParam p, const Vector& x0) {
  const Vector d = descent_direction(problem, p, x0);
  return x0 + 1e-3 * d / std::max(1.0, d.norm());
}

SolveReport solve(const LcpProblem& problem, const Vector& x0, const SolverConfig& config) {
  require_length(x0, problem.size(), "x0");
  require_finite(x0, "x0");
  const SmoothingParam p(config.p);
  return solve(problem, x0, seed_second_point(problem, p, x0), config);
}

SolveReport solve(const LcpProblem& problem, const Vector& x0, const Vector& x1,
                  const SolverConfig& config) {
  config.validate();
  require_length(x0, problem.size(), "x0");
  require_length(x1, problem.size(), "x1");
  require_finite(x0, "x0");
  require_finite(x1, "x1");
  const SmoothingParam p(config.p);

  SolveReport report;
  auto record = [&](int k, const Vector& x, double f) -> IterationRecord& {
    const double res = eval_F(problem, x).cwiseAbs().maxCoeff();
    report.records.push_back(make_record(k, x, f, res));
    return report.records.back();
  };

  Vector x_prev = x0;
  Vector F_prev = eval_F_tilde(problem, p, x0);
  record(0, x0, 0.5 * F_prev.squaredNorm());
  Vector x = x1;

  for (int k = 1;; ++k) {
    const MeritEval cur = merit_with_gradient(problem, p, x);
    IterationRecord& rec = record(k, x, cur.value);
    if (rec.residual_F_inf <= config.eps) {
      report.status = SolveStatus::Converged;
      break;
    }
    if (k > config.max_iters) {
      report.status = SolveStatus::MaxIters;
      break;
    }

    const Vector d = -cur.gradient;
    if (d.isZero(0.0)) {
      // stationary point of the merit that is not a root of F
      report.status = SolveStatus::LineSearchFailed;
      break;
    }

    Vector s;
    DirectionKind kind;
    if (k % config.kstar == 0) {
      s = d;
      kind = DirectionKind::SteepestDescent;
    } else if (auto sec = secant_directions(x, x_prev, cur.F_tilde, F_prev,
                                            config.degenerate_floor)) {
      BlendResult blend = blend_direction(sec->u, sec->v, d, config.blend_rejection);
      s = std::move(blend.s);
      kind = blend.kind;
    } else {
      s = d;
      kind = DirectionKind::FallbackDescent;
    }

    std::optional<double> gamma = line_search(problem, p, x, s, d, config);
    if (!gamma && kind != DirectionKind::SteepestDescent &&
        kind != DirectionKind::FallbackDescent) {
      s = d;
      kind = DirectionKind::FallbackDescent;
      gamma = line_search(problem, p, x, s, d, config);
    }
    if (!gamma) {
      report.status = SolveStatus::LineSearchFailed;
      break;
    }

    rec.direction_kind = kind;
    rec.step_length = *gamma;
    x_prev = x;
    F_prev = cur.F_tilde;
    x = x + *gamma * s;
  }

  report.final_residuals = residuals(problem, report.records.back().z);
  return report;
}

}  // namespace abslcp::hybrid
