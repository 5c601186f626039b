#pragma once

#include "commap/algebra.hpp"
#include "commap/structure.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace commap {

struct DescentConfig {
  double shrink = 0.5;
  double gradient_tolerance = 1e-12;
  int max_iterations = 5000;
  int restarts = 8;
  std::uint64_t seed = 0x5eed;
  /// Stop once ||pi(X')|| <= target_tolerance * ||X||.
  double target_tolerance = 1e-12;

  void validate() const {
    if (!(shrink > 0 && shrink < 1)) throw Error(ErrorCode::BadInput, "shrink factor must lie in (0, 1)");
    if (!(gradient_tolerance > 0) || !(target_tolerance > 0))
      throw Error(ErrorCode::BadInput, "tolerances must be positive");
    if (max_iterations < 1 || restarts < 0) throw Error(ErrorCode::BadInput, "iteration budget must be positive");
  }
};

struct FlattenResult {
  MatrixXd group;  // orthogonal ambient matrix k with X' = k X k^T
  Element image;
  int iterations = 0;
  int restarts = 0;
  double residual = 0.0;    // ||pi(X')|| / ||X||, Killing-orthogonal projection
  double norm_drift = 0.0;  // largest relative change of ||X|| over accepted steps
};

/// Conjugation k X k^T of an element by an orthogonal ambient matrix.
inline Element conjugate(const MatrixLieAlgebra& g, const MatrixXd& k, const Element& x) {
  return g.from_matrix(k * g.to_matrix(x) * k.transpose());
}

/// Moves X along the orbit of exp(acting) until its projection onto `target`
/// vanishes. Each step is a Gauss-Newton proposal for pi(X + [U, X]) = 0 with
/// U in `acting`, falling back to the gradient of ||pi(X)||^2, both with a
/// halving line search. Critical points that are not minima are escaped by
/// random restarts. Throws ConvergenceError with the best residual on failure.
inline FlattenResult kostant_flatten(const MatrixLieAlgebra& g, const Element& x, const Subspace& acting,
                                     const Subspace& target, const DescentConfig& cfg = {}) {
  cfg.validate();
  g.check(x);
  g.check(acting);
  g.check(target);
  const int n = g.ambient_size();
  FlattenResult out;
  out.group = MatrixXd::Identity(n, n);
  out.image = x;
  const double scale = x.norm();
  if (scale == 0.0 || target.dim() == 0) return out;

  const MatrixXd killing_proj = killing_projector(g, target);
  auto killing_residual = [&](const Element& e) { return (killing_proj * e.coords).norm() / scale; };

  std::vector<MatrixXd> gens;
  for (int i = 0; i < acting.dim(); ++i) gens.push_back(g.to_matrix(g.element(acting.frame.col(i))));
  auto from_local = [&](const VectorXd& u) {
    MatrixXd m = MatrixXd::Zero(n, n);
    for (int i = 0; i < u.size(); ++i) m += u(i) * gens[i];
    return m;
  };

  const MatrixXd x0 = g.to_matrix(x);
  const double goal = cfg.target_tolerance * scale;
  auto objective = [&](const MatrixXd& xm) { return target.local(g.from_matrix(xm).coords).squaredNorm(); };

  Rng rng(cfg.seed);
  std::normal_distribution<double> n01(0.0, 1.0);
  MatrixXd k = MatrixXd::Identity(n, n);
  MatrixXd best_k = k;
  double best_f = objective(x0);
  int total_iterations = 0;

  int attempt = 0;
  for (; attempt <= cfg.restarts; ++attempt) {
    if (attempt > 0) {
      VectorXd u(acting.dim());
      for (int i = 0; i < u.size(); ++i) u(i) = n01(rng);
      k = from_local(u).exp() * best_k;
    }
    MatrixXd xm = k * x0 * k.transpose();
    double f = objective(xm);
    for (int it = 0; it < cfg.max_iterations && std::sqrt(f) > goal; ++it) {
      ++total_iterations;
      const VectorXd proj = target.local(g.from_matrix(xm).coords);
      const MatrixXd h = g.to_matrix(g.element(target.frame * proj));
      const MatrixXd dir = h * xm.transpose() - xm.transpose() * h;
      VectorXd grad(acting.dim());
      for (int i = 0; i < grad.size(); ++i) grad(i) = (gens[i].array() * dir.array()).sum();
      if (grad.norm() <= cfg.gradient_tolerance * std::max(1.0, scale * scale)) break;

      MatrixXd jac(target.dim(), acting.dim());
      for (int i = 0; i < acting.dim(); ++i)
        jac.col(i) = target.local(g.from_matrix(gens[i] * xm - xm * gens[i]).coords);
      const VectorXd gn = linalg::min_norm_solve(jac, -proj);

      bool accepted = false;
      auto try_direction = [&](const VectorXd& u, double armijo) {
        const MatrixXd step = from_local(u);
        double t = 1.0;
        for (int halving = 0; halving < 60; ++halving, t *= cfg.shrink) {
          const MatrixXd cand = (t * step).exp() * k;
          const MatrixXd xc = cand * x0 * cand.transpose();
          const double fc = objective(xc);
          if (fc < f - armijo * t) {
            k = cand;
            out.norm_drift = std::max(out.norm_drift, std::abs(xc.norm() - x0.norm()) / x0.norm());
            xm = xc;
            f = fc;
            return true;
          }
        }
        return false;
      };
      if (gn.allFinite() && gn.norm() > 0) accepted = try_direction(gn, 0.0);
      if (!accepted) accepted = try_direction(-grad, 1e-4 * grad.squaredNorm());
      if (!accepted) break;
    }
    if (f < best_f) {
      best_f = f;
      best_k = k;
    }
    if (std::sqrt(best_f) <= goal) break;
  }
  out.iterations = total_iterations;
  out.restarts = std::min(attempt, cfg.restarts);
  if (std::sqrt(best_f) > goal) {
    // Accept a near-miss; anything worse is a genuine failure.
    const Element img = conjugate(g, best_k, x);
    const double r = killing_residual(img);
    if (r > 1e-10) throw ConvergenceError(g.name() + ": flattening did not converge", r);
  }
  // Re-orthonormalize to remove drift accumulated across steps.
  const Eigen::JacobiSVD<MatrixXd> svd(best_k, Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.group = svd.matrixU() * svd.matrixV().transpose();
  out.image = conjugate(g, out.group, x);
  out.residual = killing_residual(out.image);
  return out;
}

}  // namespace commap
