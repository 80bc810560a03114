#pragma once

#include "abslcp/problem.hpp"

#include <vector>

namespace abslcp::oracle {

struct OracleSolution {
  Vector z;
  std::vector<int> basis;  // 0-based indices where z may be nonzero
};

/// Largest dimension enumerate_solutions accepts (2^n supports).
inline constexpr Eigen::Index kMaxDimension = 20;

/// Every isolated solution of LCP(M, q), found by trying all 2^n complementary
/// supports B: solve M_BB z_B = -q_B and keep z when z_B >= -tol and
/// (Mz + q)_i >= -tol off B. Supports are visited by increasing size; singular
/// principal blocks are skipped. Solutions within tol (inf-norm) of one
/// already found are merged. Throws DimensionError when n > kMaxDimension.
std::vector<OracleSolution> enumerate_solutions(const LcpProblem& problem, double tol = 1e-10);

}  // namespace abslcp::oracle
