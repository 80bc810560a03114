#include "abslcp/errors.hpp"
#include "abslcp/hybrid_solver.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace abslcp {
namespace {

using hybrid::BlendResult;
using hybrid::blend_direction;
using hybrid::line_search;
using hybrid::secant_directions;

Vector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

TEST(Secant, ScalarExample) {
  const auto sec = secant_directions(vec({1, 0}), vec({0, 0}), vec({2, 0}), vec({0, 0}));
  ASSERT_TRUE(sec.has_value());
  EXPECT_DOUBLE_EQ(sec->xi1, -0.5);
  EXPECT_DOUBLE_EQ(sec->xi2, -1.0);
  EXPECT_EQ(sec->u, vec({-1, 0}));
  EXPECT_EQ(sec->v, vec({-1, 0}));
}

TEST(Secant, OrthogonalResidualGivesZeroV) {
  const auto sec = secant_directions(vec({1, 0}), vec({0, 0}), vec({0, 3}), vec({-1, 3}));
  ASSERT_TRUE(sec.has_value());
  EXPECT_EQ(sec->xi2, 0.0);
  EXPECT_TRUE(sec->v.isZero(0.0));
  EXPECT_EQ(sec->u, vec({0, -3}));
}

TEST(Secant, DegenerateDifferencesAreReported) {
  EXPECT_FALSE(secant_directions(vec({1, 1}), vec({1, 1}), vec({1, 0}), vec({0, 0})));
  EXPECT_FALSE(secant_directions(vec({1, 0}), vec({0, 0}), vec({1, 1}), vec({1, 1})));
  // dF orthogonal to dx
  EXPECT_FALSE(secant_directions(vec({1, 0}), vec({0, 0}), vec({0, 1}), vec({0, 0})));
}

TEST(Secant, SatisfiesTheSecantEquationOnLinearMaps) {
  std::mt19937_64 rng(6);
  const Matrix A = testing::random_spd_problem(rng, 3).M();
  const Vector x0 = testing::random_vector(rng, 3);
  const Vector x1 = testing::random_vector(rng, 3);
  const auto sec = secant_directions(x1, x0, A * x1, A * x0);
  ASSERT_TRUE(sec);
  const Vector dx = x1 - x0;
  const Vector dF = A * dx;
  // xi1 is the scalar s minimising ||s dF + dx||; xi2 the one minimising ||F + s dF||
  EXPECT_NEAR(sec->xi1 * dx.dot(dF), -dx.squaredNorm(), 1e-12 * dx.squaredNorm());
  EXPECT_NEAR((A * x1 + sec->xi2 * dF).dot(dF), 0.0, 1e-10 * dF.squaredNorm());
}

TEST(Blend, MidpointWhenBothAreEquallyAligned) {
  const BlendResult r = blend_direction(vec({1, 1}), vec({1, -1}), vec({1, 0}));
  EXPECT_EQ(r.kind, DirectionKind::Midpoint);
  EXPECT_EQ(r.s, vec({1, 0}));
}

TEST(Blend, FallbackWhenNeitherDescends) {
  const BlendResult r = blend_direction(vec({-1, 1}), vec({-1, -1}), vec({1, 0}));
  EXPECT_EQ(r.kind, DirectionKind::FallbackDescent);
  EXPECT_EQ(r.s, vec({1, 0}));
}

TEST(Blend, ReachesFullAlignmentWhenPossible) {
  // v + alpha (u - v) = (alpha, 1) tends to d only in the limit; the line through
  // u and v also contains no multiple of d, so the best cosine is the limit direction w
  const BlendResult r = blend_direction(vec({1, 1}), vec({0, 1}), vec({1, 0}));
  EXPECT_EQ(r.kind, DirectionKind::Blend);
  EXPECT_NEAR(testing::cosine(r.s, vec({1, 0})), 1.0, 1e-15);
}

TEST(Blend, ClosedFormBeatsGridSearch) {
  std::mt19937_64 rng(44);
  int closed_form = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Vector u = testing::random_vector(rng, 5);
    const Vector v = testing::random_vector(rng, 5);
    const Vector d = testing::random_vector(rng, 5);
    const BlendResult r = blend_direction(u, v, d);
    const double c = testing::cosine(r.s, d);
    EXPECT_GT(c, 0.0);
    if (r.kind == DirectionKind::FallbackDescent) {
      EXPECT_EQ(r.s, d);
      continue;
    }
    const auto grid = testing::grid_best_alpha(u, v, d, -100.0, 100.0, 20000);
    EXPECT_GE(c, grid.cos - 1e-9) << "trial " << trial;
    if (std::abs(grid.alpha) < 90.0) {
      ++closed_form;
    }
  }
  EXPECT_GT(closed_form, 100);
}

TEST(Blend, InvariantToPositiveScalingOfD) {
  std::mt19937_64 rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    const Vector u = testing::random_vector(rng, 4);
    const Vector v = testing::random_vector(rng, 4);
    const Vector d = testing::random_vector(rng, 4);
    const BlendResult a = blend_direction(u, v, d);
    const BlendResult b = blend_direction(u, v, 37.5 * d);
    EXPECT_EQ(a.kind, b.kind);
    if (a.kind == DirectionKind::FallbackDescent) continue;
    EXPECT_TRUE(a.s.isApprox(b.s, 1e-10));
  }
}

TEST(Blend, RejectionPolicies) {
  // alpha* = 2/3 is the cosine minimum (a + alpha* b < 0); the supremum lies along -w
  const Vector u = vec({-1, -1});
  const Vector v = vec({0, 1});
  const Vector d = vec({1, 0.5});
  const BlendResult limit = blend_direction(u, v, d, BlendRejection::LimitDirection);
  EXPECT_EQ(limit.kind, DirectionKind::Blend);
  EXPECT_EQ(limit.s, vec({1, 2}));
  EXPECT_GT(testing::cosine(limit.s, d), testing::grid_best_alpha(u, v, d, -1e4, 1e4, 20000).cos);

  const BlendResult steep = blend_direction(u, v, d, BlendRejection::SteepestDescent);
  EXPECT_EQ(steep.kind, DirectionKind::FallbackDescent);
  EXPECT_EQ(steep.s, d);
}

class LineSearchScalar : public ::testing::Test {
 protected:
  // M = I cancels the smoothing: F~(x) = 2x - 2, merit 2 (x - 1)^2
  LcpProblem problem{Matrix::Identity(1, 1), vec({-2})};
  SmoothingParam p{1e8};
};

TEST_F(LineSearchScalar, AcceptedStepSatisfiesBothConditions) {
  for (InitialStep init : {InitialStep::Unit, InitialStep::QuadraticInterpolation}) {
    SolverConfig c;
    c.initial_step = init;
    const Vector x = vec({0.0});
    const Vector d = hybrid::descent_direction(problem, p, x);
    for (double scale : {1e-4, 0.1, 1.0, 10.0}) {
      const Vector s = scale * d;
      const auto gamma = line_search(problem, p, x, s, d, c);
      ASSERT_TRUE(gamma.has_value());
      const double f0 = merit(problem, p, x);
      const Vector xn = x + *gamma * s;
      EXPECT_LE(merit(problem, p, xn), f0 - *gamma * c.rho * d.dot(s));
      EXPECT_GE(merit_gradient(problem, p, xn).dot(s), -c.sigma * d.dot(s));
    }
  }
}

TEST_F(LineSearchScalar, RejectsAscentDirection) {
  const Vector x = vec({0.0});
  const Vector d = hybrid::descent_direction(problem, p, x);
  EXPECT_THROW(line_search(problem, p, x, -d, d, SolverConfig{}), std::invalid_argument);
}

TEST_F(LineSearchScalar, TrialBudgetExhaustionIsReported) {
  SolverConfig c;
  c.ls_max_trials = 1;
  c.initial_step = InitialStep::Unit;
  const Vector x = vec({0.0});
  const Vector d = hybrid::descent_direction(problem, p, x);
  EXPECT_FALSE(line_search(problem, p, x, 1e-9 * d, d, c).has_value());
}

void expect_hybrid_run_is_well_formed(const LcpProblem& problem, const SolveReport& r,
                                      const SolverConfig& c) {
  const SmoothingParam p(c.p);
  ASSERT_GE(r.records.size(), 2u);
  for (std::size_t i = 0; i < r.records.size(); ++i) {
    const IterationRecord& rec = r.records[i];
    EXPECT_EQ(rec.k, static_cast<int>(i));
    EXPECT_DOUBLE_EQ(rec.merit, merit(problem, p, rec.x));
    if (i >= 2) {
      EXPECT_LT(rec.merit, r.records[i - 1].merit) << "k=" << i;
    }
    if (i >= 1 && i + 1 < r.records.size()) {
      EXPECT_GT(rec.step_length, 0.0);
      if (rec.k % c.kstar == 0) {
        EXPECT_EQ(rec.direction_kind, DirectionKind::SteepestDescent) << "k=" << i;
      } else {
        EXPECT_NE(rec.direction_kind, DirectionKind::SteepestDescent) << "k=" << i;
      }
    }
  }
}

TEST(HybridSolve, ExampleOne) {
  const SolverConfig c;
  const LcpProblem problem = testing::example1();
  const SolveReport r = hybrid::solve(problem, testing::example1_x0(), c);
  ASSERT_EQ(r.status, SolveStatus::Converged);
  EXPECT_LE((r.final_record().z - testing::example1_z()).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_TRUE(r.final_residuals.is_solution(10 * c.eps));
  EXPECT_FALSE(r.contraction_estimate.has_value());
  expect_hybrid_run_is_well_formed(problem, r, c);
}

TEST(HybridSolve, ExampleTwo) {
  const SolverConfig c;
  const LcpProblem problem = testing::example2();
  const SolveReport r = hybrid::solve(problem, testing::example2_x0(), c);
  ASSERT_EQ(r.status, SolveStatus::Converged);
  EXPECT_LE((r.final_record().z - testing::example2_z()).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_TRUE(r.final_residuals.is_solution(10 * c.eps));
  expect_hybrid_run_is_well_formed(problem, r, c);
}

TEST(HybridSolve, SpecFallbackPolicyAlsoConverges) {
  SolverConfig c;
  c.blend_rejection = BlendRejection::SteepestDescent;
  c.initial_step = InitialStep::Unit;
  c.max_iters = 5000;
  for (const auto& [problem, x0, z] :
       {std::tuple{testing::example1(), testing::example1_x0(), testing::example1_z()},
        std::tuple{testing::example2(), testing::example2_x0(), testing::example2_z()}}) {
    const SolveReport r = hybrid::solve(problem, x0, c);
    ASSERT_EQ(r.status, SolveStatus::Converged);
    EXPECT_LE((r.final_record().z - z).cwiseAbs().maxCoeff(), 1e-8);
    expect_hybrid_run_is_well_formed(problem, r, c);
  }
}

TEST(HybridSolve, SecondPointIsRecordedAsIterateOne) {
  const LcpProblem problem = testing::example2();
  const Vector x0 = testing::example2_x0();
  const Vector x1 = hybrid::seed_second_point(problem, SmoothingParam(1e8), x0);
  const SolveReport r = hybrid::solve(problem, x0, x1, SolverConfig{});
  EXPECT_EQ(r.records.at(0).x, x0);
  EXPECT_EQ(r.records.at(1).x, x1);
  EXPECT_EQ(r.records.at(0).direction_kind, DirectionKind::None);
  EXPECT_LE((x1 - x0).norm(), 1e-3 + 1e-15);
}

TEST(HybridSolve, StopsImmediatelyAtARoot) {
  const Vector root = vec({0.5, -0.5, 0.5, -0.5});
  const SolveReport r = hybrid::solve(testing::example1(), vec({0, 0, 0, 0}), root, SolverConfig{});
  EXPECT_EQ(r.status, SolveStatus::Converged);
  EXPECT_EQ(r.iterations(), 1);
}

TEST(HybridSolve, MaxItersIsReported) {
  SolverConfig c;
  c.max_iters = 2;
  const SolveReport r = hybrid::solve(testing::example2(), testing::example2_x0(), c);
  EXPECT_EQ(r.status, SolveStatus::MaxIters);
  EXPECT_EQ(r.iterations(), 3);
}

TEST(HybridSolve, ValidatesInputs) {
  SolverConfig c;
  c.kstar = 0;
  EXPECT_THROW(hybrid::solve(testing::example1(), testing::example1_x0(), c),
               std::invalid_argument);
  c = SolverConfig{};
  c.rho = 0.95;
  EXPECT_THROW(hybrid::solve(testing::example1(), testing::example1_x0(), c),
               std::invalid_argument);
  EXPECT_THROW(hybrid::solve(testing::example1(), Vector::Zero(3), SolverConfig{}),
               DimensionError);
}

TEST(HybridSolve, RandomSpdInstancesConverge) {
  std::mt19937_64 rng(99);
  SolverConfig c;
  c.max_iters = 50000;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 7;
    const LcpProblem problem = testing::random_spd_problem(rng, n);
    const SolveReport r = hybrid::solve(problem, Vector::Zero(n), c);
    ASSERT_EQ(r.status, SolveStatus::Converged) << "trial " << trial;
    EXPECT_TRUE(r.final_residuals.is_solution(1e-7));
    expect_hybrid_run_is_well_formed(problem, r, c);
  }
}

}  // namespace
}  // namespace abslcp
