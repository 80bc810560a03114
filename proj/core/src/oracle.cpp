#include "abslcp/oracle.hpp"

#include "abslcp/errors.hpp"

#include <Eigen/LU>

#include <string>

namespace abslcp::oracle {

namespace {

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

}  // namespace

std::vector<OracleSolution> enumerate_solutions(const LcpProblem& problem, double tol) {
  const Eigen::Index n = problem.size();
  if (n > kMaxDimension) {
    throw DimensionError("oracle enumeration supports n <= " + std::to_string(kMaxDimension) +
                         ", got " + std::to_string(n));
  }
  const Matrix& M = problem.M();
  const Vector& q = problem.q();

  std::vector<OracleSolution> found;
  auto consider = [&](const std::vector<int>& basis) {
    const auto k = static_cast<Eigen::Index>(basis.size());
    Vector z = Vector::Zero(n);
    if (k > 0) {
      Matrix block(k, k);
      Vector rhs(k);
      for (Eigen::Index r = 0; r < k; ++r) {
        rhs[r] = -q[basis[static_cast<std::size_t>(r)]];
        for (Eigen::Index c = 0; c < k; ++c) {
          block(r, c) = M(basis[static_cast<std::size_t>(r)], basis[static_cast<std::size_t>(c)]);
        }
      }
      Eigen::FullPivLU<Matrix> lu(block);
      if (!lu.isInvertible()) {
        return;
      }
      const Vector zB = lu.solve(rhs);
      for (Eigen::Index r = 0; r < k; ++r) {
        if (!(zB[r] >= -tol)) return;
        z[basis[static_cast<std::size_t>(r)]] = zB[r];
      }
    }
    const Vector w = M * z + q;
    std::vector<bool> in_basis(static_cast<std::size_t>(n), false);
    for (int i : basis) in_basis[static_cast<std::size_t>(i)] = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (!in_basis[static_cast<std::size_t>(i)] && !(w[i] >= -tol)) return;
    }
    for (const OracleSolution& s : found) {
      if ((s.z - z).cwiseAbs().maxCoeff() <= tol) return;
    }
    found.push_back({std::move(z), basis});
  };

  for (int k = 0; k <= static_cast<int>(n); ++k) {
    for_each_subset(static_cast<int>(n), k, consider);
  }
  return found;
}

}  // namespace abslcp::oracle
