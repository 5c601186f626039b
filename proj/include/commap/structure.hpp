#pragma once

#include "commap/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

namespace commap {

using Rng = std::mt19937_64;

/// Random element of a subspace with standard normal frame coefficients.
inline Element random_element(const MatrixLieAlgebra& g, const Subspace& s, Rng& rng) {
  g.check(s);
  std::normal_distribution<double> n01(0.0, 1.0);
  VectorXd c(s.dim());
  for (int i = 0; i < s.dim(); ++i) c(i) = n01(rng);
  return g.element(s.frame * c);
}

enum class CentralizerScope { Algebra, P };

/// Regularity proof: dim of the centralizer (in g, or in p) equals the expected rank.
struct RegularCertificate {
  Element element;
  int centralizer_dim = 0;
  int expected_rank = 0;
  CentralizerScope scope = CentralizerScope::Algebra;

  bool valid() const { return centralizer_dim == expected_rank; }
};

inline RegularCertificate certify_regular(const MatrixLieAlgebra& g, const Element& a, int expected_rank,
                                          CentralizerScope scope) {
  const Subspace within = scope == CentralizerScope::P ? g.p() : g.whole();
  return {a, centralizer(g, a, within).dim(), expected_rank, scope};
}

/// k = (+1)-eigenspace and p = (-1)-eigenspace of theta (a coordinate split).
inline std::pair<Subspace, Subspace> cartan_decompose(const MatrixLieAlgebra& g) { return {g.k(), g.p()}; }

/// Maximal abelian subspace of `space` (p, or a compact subalgebra such as m).
/// Tries the diagonal matrices of `space` first, then the centralizer of a generic
/// element; the result is checked for commutativity and maximality.
inline Subspace maximal_abelian(const MatrixLieAlgebra& g, const Subspace& space, std::uint64_t seed,
                                bool try_diagonal = true) {
  g.check(space);
  if (space.dim() == 0) return space;
  auto is_maximal = [&](const Subspace& s) {
    return s.dim() > 0 && is_abelian(g, s) && centralizer(g, s, space).dim() == s.dim();
  };
  if (try_diagonal) {
    // Off-diagonal entries of sum_i x_i b_i must vanish.
    const int n = g.ambient_size();
    MatrixXd cond(n * n, space.dim());
    for (int c = 0; c < space.dim(); ++c) {
      MatrixXd m = g.to_matrix(g.element(space.frame.col(c)));
      m.diagonal().setZero();
      cond.col(c) = Eigen::Map<const VectorXd>(m.data(), n * n);
    }
    const Subspace diag{g.tag(), space.frame * linalg::null_basis(cond)};
    if (is_maximal(diag)) return diag;
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < 16; ++attempt) {
    const Element x = random_element(g, space, rng);
    const Subspace cand = centralizer(g, x, space);
    if (is_maximal(cand)) return cand;
  }
  throw Error(ErrorCode::MaximalityFailure, g.name() + ": no maximal abelian subspace found");
}

inline Subspace maximal_abelian_in_p(const MatrixLieAlgebra& g, const Subspace& p, std::uint64_t seed = 0x5eed) {
  return maximal_abelian(g, p, seed);
}

/// m = z_k(a).
inline Subspace compute_m(const MatrixLieAlgebra& g, const Subspace& k, const Subspace& a) {
  return centralizer(g, a, k);
}

/// Restricted root with its multiplicity; `values` are alpha(a_i) on the frame of a.
struct RestrictedRoot {
  VectorXd values;
  int multiplicity = 0;
};

/// Cartan-structure data of a matrix Lie algebra. Immutable after construction.
struct CartanStructure {
  const MatrixLieAlgebra* algebra = nullptr;
  Subspace k, p, a, m, t, h, c;
  Subspace center_m;  // z(m)

  const MatrixLieAlgebra& g() const { return *algebra; }
};

/// h = t + a, with t maximal abelian in m; checks z(h) = h and dim h = rank.
inline Subspace cartan_subalgebra(const CartanStructure& cs) {
  const MatrixLieAlgebra& g = cs.g();
  Subspace h = subspace_sum(g, cs.t, cs.a);
  if (!is_abelian(g, h))
    throw Error(ErrorCode::MaximalityFailure, g.name() + ": t + a is not abelian");
  if (centralizer(g, h, g.whole()).dim() != h.dim())
    throw Error(ErrorCode::MaximalityFailure, g.name() + ": t + a is not self-centralizing");
  if (h.dim() != g.complex_rank())
    throw Error(ErrorCode::RankMismatch, g.name() + ": dim(t + a) = " + std::to_string(h.dim()) +
                                             " but rank is " + std::to_string(g.complex_rank()));
  return h;
}

inline CartanStructure analyze(const MatrixLieAlgebra& g, std::uint64_t seed = 0x5eed) {
  CartanStructure cs;
  cs.algebra = &g;
  std::tie(cs.k, cs.p) = cartan_decompose(g);
  cs.a = maximal_abelian_in_p(g, cs.p, seed);
  cs.m = compute_m(g, cs.k, cs.a);
  cs.t = maximal_abelian(g, cs.m, seed + 1);
  cs.h = cartan_subalgebra(cs);
  cs.c = centralizer(g, cs.k, cs.k);
  cs.center_m = centralizer(g, cs.m, cs.m);
  return cs;
}

/// Random A in h whose centralizer is exactly h (at most 16 draws). Draws with a
/// tiny spectral gap of ad(A) are passed over when a better-conditioned one exists.
inline std::pair<Element, RegularCertificate> regular_element(const MatrixLieAlgebra& g, const Subspace& h,
                                                              std::uint64_t seed,
                                                              CentralizerScope scope = CentralizerScope::Algebra) {
  g.check(h);
  if (h.dim() == 0) {
    // Only possible for the zero algebra inside p; the zero element is then regular.
    RegularCertificate cert = certify_regular(g, g.zero(), 0, scope);
    if (!cert.valid()) throw Error(ErrorCode::RegularityExhausted, "empty Cartan space but nontrivial centralizer");
    return {g.zero(), cert};
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> mag(0.5, 1.5);
  std::bernoulli_distribution coin(0.5);
  std::optional<std::pair<Element, RegularCertificate>> best;
  double best_gap = -1.0;
  for (int attempt = 0; attempt < 16; ++attempt) {
    VectorXd c(h.dim());
    for (int i = 0; i < h.dim(); ++i) c(i) = (coin(rng) ? 1.0 : -1.0) * mag(rng);
    const Element a = g.element(h.frame * c);
    RegularCertificate cert = certify_regular(g, a, h.dim(), scope);
    if (!cert.valid()) continue;
    const linalg::SvdSplit sv = linalg::split(g.ad(a));
    const double gap = sv.rank > 0 ? sv.singular(sv.rank - 1) / sv.singular(0) : 1.0;
    if (gap > best_gap) {
      best_gap = gap;
      best.emplace(a, cert);
    }
    if (gap > 1e-3) break;
  }
  if (!best) throw Error(ErrorCode::RegularityExhausted, g.name() + ": no regular element after 16 draws");
  return *best;
}

/// Joint eigenvalues of ad(a) on g: nonzero ones are the restricted roots.
inline std::vector<RestrictedRoot> restricted_roots(const CartanStructure& cs, std::uint64_t seed = 0x5eed) {
  const MatrixLieAlgebra& g = cs.g();
  std::vector<RestrictedRoot> roots;
  if (cs.a.dim() == 0) return roots;
  Rng rng(seed);
  const Element generic = random_element(g, cs.a, rng);
  // ad of a symmetric matrix is symmetric for the trace inner product.
  const MatrixXd adh = g.ad(generic);
  const Eigen::SelfAdjointEigenSolver<MatrixXd> eig(0.5 * (adh + adh.transpose()));
  const VectorXd& ev = eig.eigenvalues();
  const double scale = std::max(ev.cwiseAbs().maxCoeff(), 1e-300);
  const double tol = default_tolerances().root_cluster * scale;
  std::vector<MatrixXd> ad_frame;
  for (int i = 0; i < cs.a.dim(); ++i) ad_frame.push_back(g.ad(g.element(cs.a.frame.col(i))));
  Eigen::Index start = 0;
  while (start < ev.size()) {
    Eigen::Index end = start + 1;
    while (end < ev.size() && ev(end) - ev(end - 1) <= tol) ++end;
    const double mean = ev.segment(start, end - start).mean();
    if (std::abs(mean) > tol) {
      const MatrixXd v = eig.eigenvectors().middleCols(start, end - start);
      RestrictedRoot r;
      r.multiplicity = static_cast<int>(end - start);
      r.values.resize(cs.a.dim());
      for (int i = 0; i < cs.a.dim(); ++i) r.values(i) = (v.transpose() * ad_frame[i] * v).trace() / r.multiplicity;
      roots.push_back(std::move(r));
    }
    start = end;
  }
  return roots;
}

struct RestrictedWeylOrbit {
  VectorXd base;                    // a-frame coordinates
  std::vector<VectorXd> points;
  std::vector<MatrixXd> reflections;  // one per restricted root, acting on a-frame coordinates
};

/// Reflections s_alpha for each restricted root, orthogonal for the Killing form on a.
inline std::vector<MatrixXd> weyl_reflections(const CartanStructure& cs, const std::vector<RestrictedRoot>& roots) {
  const MatrixLieAlgebra& g = cs.g();
  const MatrixXd gram = cs.a.frame.transpose() * g.killing() * cs.a.frame;
  const int r = cs.a.dim();
  std::vector<MatrixXd> out;
  for (const auto& root : roots) {
    const VectorXd coroot = gram.ldlt().solve(root.values);
    const double pairing = root.values.dot(coroot);
    if (!(pairing > 0)) throw Error(ErrorCode::ReflectionFailure, "restricted root with non-positive length");
    const MatrixXd s = MatrixXd::Identity(r, r) - (2.0 / pairing) * coroot * root.values.transpose();
    out.push_back(s);
  }
  return out;
}

/// Orbit of a point of a (in a-frame coordinates) under the restricted Weyl group,
/// by closing under root reflections. The search is quadratic in the orbit size,
/// so it refuses to go past `max_points`.
inline RestrictedWeylOrbit weyl_orbit(const CartanStructure& cs, const VectorXd& a_point,
                                      std::size_t max_points = 20000) {
  RestrictedWeylOrbit orbit;
  orbit.base = a_point;
  if (cs.a.dim() == 0) {
    orbit.points.push_back(a_point);
    return orbit;
  }
  orbit.reflections = weyl_reflections(cs, restricted_roots(cs));
  const int r = cs.a.dim();
  double cap = std::pow(2.0, r);
  for (int i = 2; i <= r; ++i) cap *= i;
  const double merge = default_tolerances().orbit_merge * (1.0 + a_point.norm());
  orbit.points.push_back(a_point);
  for (std::size_t next = 0; next < orbit.points.size(); ++next) {
    for (const auto& s : orbit.reflections) {
      const VectorXd y = s * orbit.points[next];
      const bool seen = std::any_of(orbit.points.begin(), orbit.points.end(),
                                    [&](const VectorXd& q) { return (q - y).norm() <= merge; });
      if (!seen) orbit.points.push_back(y);
      if (static_cast<double>(orbit.points.size()) > cap)
        throw Error(ErrorCode::ReflectionFailure, "orbit exceeds the Weyl group size bound");
      if (orbit.points.size() > max_points)
        throw Error(ErrorCode::BadInput, "orbit larger than " + std::to_string(max_points) + " points");
    }
  }
  return orbit;
}

/// Mean of the Weyl orbit of an element of a (in a-frame coordinates); zero for semisimple g.
inline VectorXd weyl_orbit_masscenter(const Element& a_point, const CartanStructure& cs) {
  const VectorXd local = cs.a.local(a_point.coords);
  const RestrictedWeylOrbit orbit = weyl_orbit(cs, local);
  VectorXd mean = VectorXd::Zero(local.size());
  for (const auto& q : orbit.points) mean += q;
  return mean / static_cast<double>(orbit.points.size());
}

}  // namespace commap
