#pragma once

#include "commap/linalg.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace commap::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  double value = 0.0;
  VectorXd x;
};

/// maximize c^T x subject to A x = b, x >= 0. Dense two-phase simplex with
/// Bland's rule; meant for the handful of variables a Weyl orbit produces.
inline Solution maximize(const MatrixXd& a, const VectorXd& b, const VectorXd& c, double eps = 1e-11) {
  const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
  // Tableau columns: n structural, m artificial, then the right-hand side.
  MatrixXd t = MatrixXd::Zero(m + 1, n + m + 1);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const double sign = b(i) < 0 ? -1.0 : 1.0;
    t.row(i).head(n) = sign * a.row(i);
    t(i, n + i) = 1.0;
    t(i, n + m) = sign * b(i);
    basis[i] = n + i;
  }

  auto pivot = [&](int r, int col) {
    t.row(r) /= t(r, col);
    for (int i = 0; i <= m; ++i)
      if (i != r && t(i, col) != 0.0) t.row(i) -= t(i, col) * t.row(r);
    basis[r] = col;
  };
  // Objective row holds reduced costs of the minimization form; run until none is negative.
  auto run = [&](int allowed) -> bool {
    for (int guard = 0; guard < 10000; ++guard) {
      int col = -1;
      for (int j = 0; j < allowed; ++j)
        if (t(m, j) < -eps) {
          col = j;
          break;
        }
      if (col < 0) return true;
      int row = -1;
      double best = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i)
        if (t(i, col) > eps) {
          const double ratio = t(i, n + m) / t(i, col);
          if (ratio < best - eps || (std::abs(ratio - best) <= eps && row >= 0 && basis[i] < basis[row])) {
            best = ratio;
            row = i;
          }
        }
      if (row < 0) return false;
      pivot(row, col);
    }
    return false;
  };

  // Phase 1: minimize the sum of artificials.
  for (int i = 0; i < m; ++i) t.row(m) -= t.row(i);
  for (int i = 0; i < m; ++i) t(m, n + i) = 0.0;
  run(n + m);
  Solution out;
  const double scale = 1.0 + b.cwiseAbs().maxCoeff();
  if (t(m, n + m) < -1e-9 * scale) return out;
  // Drive remaining artificials out of the basis where possible.
  for (int i = 0; i < m; ++i)
    if (basis[i] >= n)
      for (int j = 0; j < n; ++j)
        if (std::abs(t(i, j)) > eps) {
          pivot(i, j);
          break;
        }

  // Phase 2: minimize -c^T x over structural columns.
  t.row(m).setZero();
  t.row(m).head(n) = -c.transpose();
  for (int i = 0; i < m; ++i)
    if (basis[i] < n && t(m, basis[i]) != 0.0) t.row(m) -= t(m, basis[i]) * t.row(i);
  if (!run(n)) {
    out.status = Status::Unbounded;
    return out;
  }
  out.status = Status::Optimal;
  out.x = VectorXd::Zero(n);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) out.x(basis[i]) = t(i, n + m);
  out.value = c.dot(out.x);
  return out;
}

/// Largest s such that y = sum_i l_i v_i with sum_i l_i = 1 and every l_i >= s.
/// Non-negative exactly when y lies in the convex hull of the columns of `points`;
/// -infinity if y is outside their affine hull.
inline double hull_membership_slack(const MatrixXd& points, const VectorXd& y) {
  const int r = static_cast<int>(points.rows()), k = static_cast<int>(points.cols());
  // Variables: mu_1..mu_k >= 0, s+ >= 0, s- >= 0, with l_i = mu_i + s+ - s-.
  MatrixXd a(r + 1, k + 2);
  VectorXd b(r + 1), c = VectorXd::Zero(k + 2);
  const VectorXd sum = points.rowwise().sum();
  a.topLeftCorner(r, k) = points;
  a.block(0, k, r, 1) = sum;
  a.block(0, k + 1, r, 1) = -sum;
  a.row(r).head(k).setOnes();
  a(r, k) = k;
  a(r, k + 1) = -k;
  b << y, 1.0;
  c(k) = 1.0;
  c(k + 1) = -1.0;
  const Solution sol = maximize(a, b, c);
  if (sol.status != Status::Optimal) return -std::numeric_limits<double>::infinity();
  return sol.value;
}

}  // namespace commap::lp
