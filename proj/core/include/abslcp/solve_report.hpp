#pragma once

#include "abslcp/problem.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace abslcp {

/// How the hybrid solver picks its first line-search trial step.
enum class InitialStep {
  Unit,                    // gamma = 1
  QuadraticInterpolation,  // minimizer of the quadratic through f(0), f'(0), f(1)
};

/// What the blend does when the cosine stationary point is rejected.
enum class BlendRejection {
  LimitDirection,   // sign(b) (u - v), the supremum of the cosine along the line
  SteepestDescent,  // s = d
};

/// Knobs shared by both solvers. The fixed-point solver only reads eps and
/// max_iters.
struct SolverConfig {
  double p = 1e8;            // smoothing sharpness
  double eps = 1e-9;         // stop when ||F(x)||_inf <= eps
  int kstar = 6;             // steepest-descent restart period
  double rho = 0.1;          // sufficient-decrease constant, 0 < rho < 1/2
  double sigma = 0.9;        // curvature constant, rho < sigma < 1
  int max_iters = 500;
  int ls_max_trials = 60;    // merit evaluations per line search
  double degenerate_floor = 1e-300;
  InitialStep initial_step = InitialStep::QuadraticInterpolation;
  BlendRejection blend_rejection = BlendRejection::LimitDirection;

  /// Throws std::invalid_argument when a field is outside its range.
  void validate() const;
};

enum class DirectionKind {
  None,             // no step taken from this iterate
  SteepestDescent,  // periodic restart
  Blend,
  Midpoint,
  FallbackDescent,
};

enum class SolveStatus { Converged, MaxIters, LineSearchFailed };

std::string_view to_string(DirectionKind kind);
std::string_view to_string(SolveStatus status);

/// State at iterate k and the step taken away from it.
struct IterationRecord {
  int k = 0;
  Vector x;
  Vector z;                  // |x| + x
  double merit = 0.0;
  double residual_F_inf = 0.0;
  DirectionKind direction_kind = DirectionKind::None;
  double step_length = 0.0;
};

struct SolveReport {
  SolveStatus status = SolveStatus::MaxIters;
  std::vector<IterationRecord> records;
  ResidualMetrics final_residuals;

  // Fixed-point only.
  std::optional<double> contraction_estimate;
  bool non_contractive = false;
  long linear_solves = 0;

  const IterationRecord& final_record() const { return records.back(); }
  int iterations() const { return records.empty() ? 0 : records.back().k; }
};

IterationRecord make_record(int k, const Vector& x, double merit, double residual_F_inf);

}  // namespace abslcp
