#pragma once

#include "commap/algebra.hpp"
#include "commap/catalog.hpp"
#include "commap/flatten.hpp"
#include "commap/realizations.hpp"
#include "commap/structure.hpp"

#include <cmath>
#include <memory>
#include <optional>
#include <string>

namespace commap {

enum class Method { InP, Split, Compact, General, Inner, Complex, TwoCommutator };

inline const char* to_string(Method m) {
  switch (m) {
    case Method::InP: return "InP";
    case Method::Split: return "Split";
    case Method::Compact: return "Compact";
    case Method::General: return "General";
    case Method::Inner: return "Inner";
    case Method::Complex: return "Complex";
    case Method::TwoCommutator: return "TwoCommutator";
  }
  return "?";
}

enum class Factor { X, Y };

/// Z = [X, Y]. For every method except TwoCommutator one factor is a regular
/// element and carries its certificate.
struct CommutatorWitness {
  Element z, x, y;
  double residual = 0.0;
  std::optional<RegularCertificate> regular_factor;
  Factor regular_which = Factor::Y;
  Method method = Method::General;
};

/// Z = [X1, Y1] - [X2, Y2].
struct TwoCommutatorWitness {
  Element z, x1, y1, x2, y2;
  double residual = 0.0;
};

/// ||Z - [X, Y]|| / max(1, ||Z||) through ambient matrix products.
inline double commutator_residual(const MatrixLieAlgebra& g, const Element& z, const Element& x, const Element& y) {
  const MatrixXd zm = g.to_matrix(z), xm = g.to_matrix(x), ym = g.to_matrix(y);
  return (zm - (xm * ym - ym * xm)).norm() / std::max(1.0, zm.norm());
}

inline double two_commutator_residual(const MatrixLieAlgebra& g, const TwoCommutatorWitness& w) {
  const MatrixXd zm = g.to_matrix(w.z), a = g.to_matrix(w.x1), b = g.to_matrix(w.y1), c = g.to_matrix(w.x2),
                 d = g.to_matrix(w.y2);
  return (zm - (a * b - b * a) + (c * d - d * c)).norm() / std::max(1.0, zm.norm());
}

struct ImAdReport {
  int image_dim = 0;
  int complement_dim = 0;
  double max_angle = 0.0;
  bool pass = true;
};

/// Compares the column space of ad(A) with the Killing complement of z(A).
inline ImAdReport check_im_ad(const MatrixLieAlgebra& g, const Element& a) {
  g.check(a);
  ImAdReport r;
  const MatrixXd image = linalg::range_basis(g.ad(a));
  const Subspace perp = ortho_complement(g, centralizer(g, a, g.whole()), g.whole(), Form::Killing);
  r.image_dim = static_cast<int>(image.cols());
  r.complement_dim = perp.dim();
  r.max_angle = linalg::max_principal_angle(image, perp.frame);
  if (r.image_dim != r.complement_dim) r.max_angle = std::acos(-1.0) / 2;
  r.pass = r.max_angle <= 1e-8;
  return r;
}

struct VerificationReport {
  bool pass = false;
  double residual = 0.0;
  bool certificate_checked = false;
  bool certificate_valid = false;
  int centralizer_dim = 0;
  int expected_rank = 0;
  std::string message;
};

inline constexpr double kWitnessTolerance = 1e-6;

/// Recomputes the residual from the matrices and re-derives the regularity
/// certificate of the regular factor.
inline VerificationReport verify_witness(const MatrixLieAlgebra& g, const CommutatorWitness& w) {
  VerificationReport r;
  r.residual = commutator_residual(g, w.z, w.x, w.y);
  const bool residual_ok = r.residual <= kWitnessTolerance;
  bool cert_ok = true;
  if (w.regular_factor) {
    r.certificate_checked = true;
    const RegularCertificate& c = *w.regular_factor;
    const Element& factor = w.regular_which == Factor::X ? w.x : w.y;
    const int expected = c.scope == CentralizerScope::P ? maximal_abelian_in_p(g, g.p()).dim() : g.complex_rank();
    const RegularCertificate fresh = certify_regular(g, factor, expected, c.scope);
    r.centralizer_dim = fresh.centralizer_dim;
    r.expected_rank = expected;
    const bool same = (c.element.coords - factor.coords).norm() <= 1e-12 * std::max(1.0, factor.norm());
    r.certificate_valid = fresh.valid() && same && c.expected_rank == expected;
    cert_ok = r.certificate_valid;
  } else if (w.method != Method::TwoCommutator) {
    cert_ok = false;
  }
  r.pass = residual_ok && cert_ok;
  if (!residual_ok) r.message = "residual " + std::to_string(r.residual) + " exceeds tolerance";
  else if (!cert_ok) r.message = "regular factor certificate does not hold";
  else r.message = "ok";
  return r;
}

inline VerificationReport verify_witness(const MatrixLieAlgebra& g, const TwoCommutatorWitness& w) {
  VerificationReport r;
  r.residual = two_commutator_residual(g, w);
  r.pass = r.residual <= kWitnessTolerance;
  r.message = r.pass ? "ok" : "residual " + std::to_string(r.residual) + " exceeds tolerance";
  return r;
}

/// Commutator witnesses for one algebra. Holds the Cartan-structure data and,
/// once needed, the complexification; not meant to be shared across threads.
class CommutatorSolver {
 public:
  CommutatorSolver(const MatrixLieAlgebra& g, FormFlags flags, std::uint64_t seed = 0x5eed, DescentConfig cfg = {})
      : g_(&g), flags_(flags), seed_(seed), cfg_(cfg), cs_(analyze(g, seed)) {
    cfg_.validate();
  }

  const MatrixLieAlgebra& algebra() const { return *g_; }
  const CartanStructure& structure() const { return cs_; }
  const FormFlags& flags() const { return flags_; }

  bool m_semisimple() const {
    if (!m_semisimple_) m_semisimple_ = is_semisimple_subalgebra(*g_, cs_.m);
    return *m_semisimple_;
  }

  /// X in p: X = [Y, A] with Y in k and A regular in p.
  CommutatorWitness solve_in_p(const Element& x, std::optional<std::uint64_t> seed = {}) const {
    const MatrixLieAlgebra& g = *g_;
    require_in(x, cs_.p, "solve_in_p expects an element of p");
    const std::uint64_t s = seed.value_or(seed_);
    const FlattenResult f = kostant_flatten(g, x, cs_.k, cs_.a, config(s));
    auto [a, cert] = regular_element(g, cs_.a, s + 17, CentralizerScope::P);
    (void)cert;
    Element w = solve_against(f.image, a);
    w.coords = cs_.k.project(w.coords);
    return finish(x, f.group, w, a, CentralizerScope::P, cs_.a.dim(), Method::InP);
  }

  CommutatorWitness solve_split(const Element& x, std::optional<std::uint64_t> seed = {}) const {
    if (!flags_.split) throw Error(ErrorCode::WrongFlags, g_->name() + " is not split");
    const std::uint64_t s = seed.value_or(seed_);
    const FlattenResult f = kostant_flatten(*g_, part(x, cs_.p), cs_.k, cs_.a, config(s));
    const Element moved = conjugate(*g_, f.group, x);
    auto [a, cert] = regular_element(*g_, cs_.h, s + 17);
    (void)cert;
    const Element w = solve_against(moved, a);
    return finish(x, f.group, w, a, CentralizerScope::Algebra, g_->complex_rank(), Method::Split);
  }

  /// Compact algebra: iX lies in the noncompact part of the complexification,
  /// where solve_in_p gives iX = [Y, iA] with Y, A in the compact algebra.
  CommutatorWitness solve_compact(const Element& x, std::optional<std::uint64_t> seed = {}) const {
    if (!flags_.compact) throw Error(ErrorCode::WrongFlags, g_->name() + " is not compact");
    const std::uint64_t s = seed.value_or(seed_);
    CommutatorSolver& inner = complexified();
    const Complexification& c = *complexification_;
    const Element ix = c.embed(*g_, g_->zero(), x);
    const CommutatorWitness wc = inner.solve_in_p(ix, s);
    const Element y = c.split(*g_, wc.x).first;
    const Element a = c.split(*g_, wc.y).second;
    CommutatorWitness w{x, y, a, 0.0, certify_regular(*g_, a, g_->complex_rank(), CentralizerScope::Algebra),
                        Factor::Y, Method::Compact};
    w.residual = commutator_residual(*g_, x, y, a);
    return check(w);
  }

  /// Requires m semisimple: flatten the p-part by K, then the m-part by M,
  /// and solve against a regular element of t + a.
  CommutatorWitness solve_general(const Element& x, std::optional<std::uint64_t> seed = {}) const {
    const MatrixLieAlgebra& g = *g_;
    if (!m_semisimple())
      throw Error(ErrorCode::OpenCaseUnsupported, g.name() + ": m is not semisimple");
    const std::uint64_t s = seed.value_or(seed_);
    const FlattenResult f1 = kostant_flatten(g, part(x, cs_.p), cs_.k, cs_.a, config(s));
    const Element x1 = conjugate(g, f1.group, x);
    const FlattenResult f2 = kostant_flatten(g, part(x1, cs_.m), cs_.m, cs_.t, config(s + 1));
    const Element x2 = conjugate(g, f2.group, x1);
    auto [a, cert] = regular_element(g, cs_.h, s + 17);
    (void)cert;
    const Element w = solve_against(x2, a);
    const MatrixXd total = f2.group * f1.group;
    return finish(x, total, w, a, CentralizerScope::Algebra, g.complex_rank(), Method::General);
  }

  /// Inner type, X in [k,k] + p: flatten the k-part by K into the complement of
  /// a torus of [k,k], and solve against a regular element of z(k) + torus.
  CommutatorWitness solve_inner(const Element& x, std::optional<std::uint64_t> seed = {}) const {
    const MatrixLieAlgebra& g = *g_;
    if (!flags_.inner_type) throw Error(ErrorCode::WrongFlags, g.name() + " is not of inner type");
    g.check(x);
    if (cs_.c.dim() > 0 && cs_.c.local(x.coords).norm() > 1e-10 * std::max(1.0, x.norm()))
      throw Error(ErrorCode::NotInKKplusP, "element has a component in the center of k");
    const std::uint64_t s = seed.value_or(seed_);
    const InnerData& d = inner_data();
    const FlattenResult f = kostant_flatten(g, part(x, d.kk), d.kk, d.torus, config(s));
    const Element moved = conjugate(g, f.group, x);
    auto [a, cert] = regular_element(g, d.cartan, s + 17);
    (void)cert;
    const Element w = solve_against(moved, a);
    return finish(x, f.group, w, a, CentralizerScope::Algebra, g.complex_rank(), Method::Inner);
  }

  /// Complex algebra: the compact form acts on all of g; flatten into the
  /// complement of the Cartan subalgebra and solve against a regular element.
  CommutatorWitness solve_complex(const Element& x, std::optional<std::uint64_t> seed = {}) const {
    const MatrixLieAlgebra& g = *g_;
    if (!flags_.complex) throw Error(ErrorCode::WrongFlags, g.name() + " is not complex");
    const std::uint64_t s = seed.value_or(seed_);
    const FlattenResult f = kostant_flatten(g, x, cs_.k, cs_.h, config(s));
    auto [a, cert] = regular_element(g, cs_.h, s + 17);
    (void)cert;
    const Element w = solve_against(f.image, a);
    return finish(x, f.group, w, a, CentralizerScope::Algebra, g.complex_rank(), Method::Complex);
  }

  /// Z = [X1 + iX2, Y1 + iY2] in the complexification; the real part gives
  /// Z = [X1, Y1] - [X2, Y2].
  TwoCommutatorWitness solve_two_commutators(const Element& z, std::optional<std::uint64_t> seed = {}) const {
    const MatrixLieAlgebra& g = *g_;
    g.check(z);
    CommutatorSolver& inner = complexified();
    const Complexification& c = *complexification_;
    const CommutatorWitness wc = inner.solve_complex(c.embed(g, z, g.zero()), seed.value_or(seed_));
    const auto [x1, x2] = c.split(g, wc.x);
    const auto [y1, y2] = c.split(g, wc.y);
    TwoCommutatorWitness w{z, x1, y1, x2, y2, 0.0};
    w.residual = two_commutator_residual(g, w);
    if (w.residual > kWitnessTolerance)
      throw Error(ErrorCode::SolveFailure, g.name() + ": two-commutator residual " + std::to_string(w.residual));
    return w;
  }

  /// Picks the method from the flags and the structure of m.
  CommutatorWitness solve(const Element& x, std::optional<std::uint64_t> seed = {}) const {
    if (flags_.complex) return solve_complex(x, seed);
    if (flags_.split) return solve_split(x, seed);
    if (flags_.compact) return solve_compact(x, seed);
    if (m_semisimple()) return solve_general(x, seed);
    if (flags_.inner_type && (cs_.c.dim() == 0 || cs_.c.local(x.coords).norm() <= 1e-10 * std::max(1.0, x.norm())))
      return solve_inner(x, seed);
    throw Error(ErrorCode::OpenCaseUnsupported,
                g_->name() + ": no single-commutator method applies; use two commutators");
  }

 private:
  struct InnerData {
    Subspace kk, torus, cartan;
  };

  const MatrixLieAlgebra* g_;
  FormFlags flags_;
  std::uint64_t seed_;
  DescentConfig cfg_;
  CartanStructure cs_;
  mutable std::optional<bool> m_semisimple_;
  mutable std::optional<InnerData> inner_;
  mutable std::shared_ptr<Complexification> complexification_;
  mutable std::shared_ptr<CommutatorSolver> complex_solver_;

  DescentConfig config(std::uint64_t seed) const {
    DescentConfig c = cfg_;
    c.seed = seed;
    return c;
  }

  void require_in(const Element& x, const Subspace& s, const char* what) const {
    g_->check(x);
    if ((x.coords - s.project(x.coords)).norm() > 1e-10 * std::max(1.0, x.norm()))
      throw Error(ErrorCode::BadInput, what);
  }

  Element part(const Element& x, const Subspace& s) const {
    g_->check(x);
    return g_->element(s.project(x.coords));
  }

  /// W with [W, A] = target, minimum norm (hence orthogonal to z(A)).
  Element solve_against(const Element& target, const Element& a) const {
    const VectorXd w = linalg::min_norm_solve(g_->ad(a), -target.coords);
    return g_->element(w);
  }

  /// Undoes the conjugation k and packages X = [Y, A].
  CommutatorWitness finish(const Element& x, const MatrixXd& k, const Element& w, const Element& a,
                           CentralizerScope scope, int expected, Method method) const {
    const MatrixXd kt = k.transpose();
    const Element y = conjugate(*g_, kt, w);
    const Element reg = conjugate(*g_, kt, a);
    CommutatorWitness out{x, y, reg, 0.0, certify_regular(*g_, reg, expected, scope), Factor::Y, method};
    out.residual = commutator_residual(*g_, x, y, reg);
    return check(out);
  }

  CommutatorWitness check(const CommutatorWitness& w) const {
    if (w.residual > kWitnessTolerance)
      throw Error(ErrorCode::SolveFailure, g_->name() + ": residual " + std::to_string(w.residual));
    if (!w.regular_factor || !w.regular_factor->valid())
      throw Error(ErrorCode::RegularityExhausted, g_->name() + ": regular factor lost regularity");
    return w;
  }

  const InnerData& inner_data() const {
    if (!inner_) {
      const MatrixLieAlgebra& g = *g_;
      InnerData d;
      d.kk = ortho_complement(g, cs_.c, cs_.k, Form::Killing);
      d.torus = maximal_abelian(g, d.kk, seed_ + 3);
      d.cartan = subspace_sum(g, cs_.c, d.torus);
      if (d.cartan.dim() != g.complex_rank() || centralizer(g, d.cartan, g.whole()).dim() != d.cartan.dim())
        throw Error(ErrorCode::RankMismatch, g.name() + ": z(k) + torus of [k,k] is not a Cartan subalgebra");
      inner_ = std::move(d);
    }
    return *inner_;
  }

  CommutatorSolver& complexified() const {
    if (!complex_solver_) {
      complexification_ = std::make_shared<Complexification>(complexify(*g_));
      FormFlags cf;
      cf.complex = true;
      cf.inner_type = true;
      complex_solver_ = std::make_shared<CommutatorSolver>(complexification_->algebra, cf, seed_, cfg_);
    }
    return *complex_solver_;
  }
};

}  // namespace commap
