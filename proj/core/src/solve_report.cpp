#include "abslcp/solve_report.hpp"

#include <cmath>
#include <stdexcept>

namespace abslcp {

void SolverConfig::validate() const {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("p must be positive and finite");
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be positive");
  if (kstar < 1) throw std::invalid_argument("kstar must be a positive integer");
  if (!(rho > 0.0 && rho < 0.5)) throw std::invalid_argument("rho must lie in (0, 1/2)");
  if (!(sigma > rho && sigma < 1.0)) throw std::invalid_argument("sigma must lie in (rho, 1)");
  if (max_iters < 1) throw std::invalid_argument("max_iters must be at least 1");
  if (ls_max_trials < 1) throw std::invalid_argument("ls_max_trials must be at least 1");
  if (!(degenerate_floor >= 0.0)) throw std::invalid_argument("degenerate_floor must be >= 0");
}

std::string_view to_string(DirectionKind kind) {
  switch (kind) {
    case DirectionKind::None: return "none";
    case DirectionKind::SteepestDescent: return "steepest";
    case DirectionKind::Blend: return "blend";
    case DirectionKind::Midpoint: return "midpoint";
    case DirectionKind::FallbackDescent: return "fallback";
  }
  return "?";
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Converged: return "Converged";
    case SolveStatus::MaxIters: return "MaxIters";
    case SolveStatus::LineSearchFailed: return "LineSearchFailed";
  }
  return "?";
}

IterationRecord make_record(int k, const Vector& x, double merit, double residual_F_inf) {
  IterationRecord r;
  r.k = k;
  r.x = x;
  r.z = x.cwiseAbs() + x;
  r.merit = merit;
  r.residual_F_inf = residual_F_inf;
  return r;
}

}  // namespace abslcp
