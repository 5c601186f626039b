#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace commap {

using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Numerical knobs shared by every rank or nullspace decision.
struct Tolerances {
  /// Singular values below `rank * sigma_max` (and below `floor`) are treated as zero.
  double rank = 1e-8;
  double floor = 1e-11;
  /// Joint-eigenvalue clustering for restricted roots (relative to the spectral radius).
  double root_cluster = 1e-7;
  /// Duplicate merging for Weyl orbit points.
  double orbit_merge = 1e-8;
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

namespace linalg {

struct SvdSplit {
  MatrixXd range;  // orthonormal columns spanning the column space
  MatrixXd null;   // orthonormal columns spanning the kernel
  VectorXd singular;
  int rank = 0;
};

namespace detail {
inline int count_above(const VectorXd& singular, double rel) {
  const double smax = singular.size() ? singular(0) : 0.0;
  const double cut = std::max(rel * smax, default_tolerances().floor);
  int rank = 0;
  for (Eigen::Index i = 0; i < singular.size(); ++i)
    if (singular(i) > cut) ++rank;
  return rank;
}
}  // namespace detail

/// Column space and kernel of `a` from one SVD; tall inputs are QR-reduced first.
inline SvdSplit split(const MatrixXd& a, double rel = default_tolerances().rank) {
  SvdSplit out;
  const Eigen::Index m = a.rows(), n = a.cols();
  if (n == 0) {
    out.range = MatrixXd(m, 0);
    out.null = MatrixXd(0, 0);
    return out;
  }
  if (m == 0) {
    out.range = MatrixXd(0, 0);
    out.null = MatrixXd::Identity(n, n);
    return out;
  }
  if (m > n) {
    // Kernel of A equals kernel of R; range is Q times range of R.
    Eigen::HouseholderQR<MatrixXd> qr(a);
    MatrixXd r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
    Eigen::JacobiSVD<MatrixXd> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.singular = svd.singularValues();
    const int rank = detail::count_above(out.singular, rel);
    out.rank = rank;
    MatrixXd q = qr.householderQ() * MatrixXd::Identity(m, n);
    out.range = q * svd.matrixU().leftCols(rank);
    out.null = svd.matrixV().rightCols(n - rank);
    return out;
  }
  Eigen::JacobiSVD<MatrixXd> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.singular = svd.singularValues();
  const int rank = detail::count_above(out.singular, rel);
  out.rank = rank;
  out.range = svd.matrixU().leftCols(rank);
  out.null = svd.matrixV().rightCols(n - rank);
  return out;
}

inline MatrixXd range_basis(const MatrixXd& a, double rel = default_tolerances().rank) {
  return split(a, rel).range;
}

inline MatrixXd null_basis(const MatrixXd& a, double rel = default_tolerances().rank) {
  return split(a, rel).null;
}

inline int rank(const MatrixXd& a, double rel = default_tolerances().rank) {
  return split(a, rel).rank;
}

/// Sine of the largest principal angle between two orthonormal frames of equal dimension.
/// Frames of different dimension are reported as a right angle.
inline double max_principal_sine(const MatrixXd& q1, const MatrixXd& q2) {
  if (q1.cols() != q2.cols()) return 1.0;
  if (q1.cols() == 0) return 0.0;
  const MatrixXd residual = q2 - q1 * (q1.transpose() * q2);
  const Eigen::JacobiSVD<MatrixXd> svd(residual);
  return std::min(1.0, svd.singularValues()(0));
}

inline double max_principal_angle(const MatrixXd& q1, const MatrixXd& q2) {
  return std::asin(max_principal_sine(q1, q2));
}

/// Minimum-norm least-squares solution of a x = b.
inline VectorXd min_norm_solve(const MatrixXd& a, const VectorXd& b,
                               double rel = default_tolerances().rank) {
  if (a.cols() == 0) return VectorXd(0);
  // JacobiSVD: BDCSVD with a threshold misbehaves on clustered singular values.
  Eigen::JacobiSVD<MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(rel);
  return svd.solve(b);
}

}  // namespace linalg
}  // namespace commap
