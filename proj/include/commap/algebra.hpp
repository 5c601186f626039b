#pragma once

#include "commap/errors.hpp"
#include "commap/linalg.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace commap {

/// Coordinates of an algebra element in its basis.
struct Element {
  std::uint64_t algebra = 0;
  VectorXd coords;

  Eigen::Index size() const { return coords.size(); }
  double norm() const { return coords.norm(); }
};

/// Subspace given by an orthonormal frame (columns) in the reference inner product,
/// which in coordinates is the Euclidean one.
struct Subspace {
  std::uint64_t algebra = 0;
  MatrixXd frame;

  int dim() const { return static_cast<int>(frame.cols()); }

  /// Orthogonal projection of coordinates onto the subspace.
  VectorXd project(const VectorXd& x) const { return frame * (frame.transpose() * x); }
  /// Coordinates relative to the frame.
  VectorXd local(const VectorXd& x) const { return frame.transpose() * x; }
};

enum class Form { Killing, Reference };

namespace detail {
inline std::uint64_t next_algebra_tag() {
  static std::atomic<std::uint64_t> counter{1};
  return counter++;
}
}  // namespace detail

/// Real matrix realization of a semisimple Lie algebra. The basis is orthonormal
/// for the trace inner product <X,Y> = tr(X^T Y), lists k (skew matrices) before
/// p (symmetric matrices), so the Cartan involution X -> -X^T is diagonal +-1
/// in coordinates. Immutable after construction.
class MatrixLieAlgebra {
 public:
  MatrixLieAlgebra(std::string name, int complex_rank, std::vector<MatrixXd> k_basis,
                   std::vector<MatrixXd> p_basis,
                   std::optional<MatrixXd> complex_structure = std::nullopt)
      : name_(std::move(name)),
        tag_(detail::next_algebra_tag()),
        complex_rank_(complex_rank),
        dim_k_(static_cast<int>(k_basis.size())),
        complex_structure_(std::move(complex_structure)) {
    basis_ = std::move(k_basis);
    for (auto& b : p_basis) basis_.push_back(std::move(b));
    if (basis_.empty()) throw Error(ErrorCode::BadInput, "empty basis");
    ambient_ = static_cast<int>(basis_.front().rows());
    stacked_.resize(ambient_ * ambient_, dim());
    for (int i = 0; i < dim(); ++i)
      stacked_.col(i) = Eigen::Map<const VectorXd>(basis_[i].data(), ambient_ * ambient_);
    const MatrixXd gram = stacked_.transpose() * stacked_;
    if ((gram - MatrixXd::Identity(dim(), dim())).cwiseAbs().maxCoeff() > 1e-10)
      throw Error(ErrorCode::BadInput, name_ + ": basis is not orthonormal");
    for (int i = 0; i < dim(); ++i) {
      const MatrixXd& b = basis_[i];
      const bool skew = (b + b.transpose()).cwiseAbs().maxCoeff() < 1e-12;
      const bool sym = (b - b.transpose()).cwiseAbs().maxCoeff() < 1e-12;
      if ((i < dim_k_ && !skew) || (i >= dim_k_ && !sym))
        throw Error(ErrorCode::BadInput, name_ + ": basis does not split into k then p");
    }
    build_structure_constants();
    build_killing();
  }

  const std::string& name() const { return name_; }
  std::uint64_t tag() const { return tag_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int dim_k() const { return dim_k_; }
  int dim_p() const { return dim() - dim_k_; }
  int ambient_size() const { return ambient_; }
  /// Rank of the complexification, i.e. the dimension of a Cartan subalgebra.
  int complex_rank() const { return complex_rank_; }
  const std::vector<MatrixXd>& basis() const { return basis_; }
  /// ad(b_i) in coordinates; entry (k, j) is the structure constant c_{ij}^k.
  const std::vector<MatrixXd>& ad_basis() const { return ad_; }
  const MatrixXd& killing() const { return killing_; }
  /// Complex structure commuting with every element, for realified complex algebras.
  const std::optional<MatrixXd>& complex_structure() const { return complex_structure_; }

  Element element(VectorXd coords) const {
    if (coords.size() != dim()) throw Error(ErrorCode::BadInput, "coordinate length mismatch");
    return {tag_, std::move(coords)};
  }
  Element zero() const { return {tag_, VectorXd::Zero(dim())}; }

  MatrixXd to_matrix(const Element& x) const {
    check(x);
    MatrixXd m(ambient_, ambient_);
    Eigen::Map<VectorXd>(m.data(), ambient_ * ambient_) = stacked_ * x.coords;
    return m;
  }

  /// Coordinates of an ambient matrix. `residual`, if given, receives the
  /// Frobenius distance from the algebra.
  Element from_matrix(const MatrixXd& m, double* residual = nullptr) const {
    if (m.rows() != ambient_ || m.cols() != ambient_)
      throw Error(ErrorCode::BadInput, "matrix size differs from ambient size");
    const Eigen::Map<const VectorXd> v(m.data(), ambient_ * ambient_);
    VectorXd c = stacked_.transpose() * v;
    if (residual) *residual = (v - stacked_ * c).norm();
    return {tag_, std::move(c)};
  }

  MatrixXd ad(const Element& x) const {
    check(x);
    MatrixXd out = MatrixXd::Zero(dim(), dim());
    for (int i = 0; i < dim(); ++i)
      if (x.coords(i) != 0.0) out.noalias() += x.coords(i) * ad_[i];
    return out;
  }

  /// [x, y] from the stored structure constants.
  Element bracket(const Element& x, const Element& y) const {
    check(x);
    check(y);
    VectorXd out = VectorXd::Zero(dim());
    for (int i = 0; i < dim(); ++i)
      if (x.coords(i) != 0.0) out.noalias() += x.coords(i) * (ad_[i] * y.coords);
    return {tag_, std::move(out)};
  }

  /// [x, y] through ambient matrix multiplication, re-coordinatized.
  Element matrix_bracket(const Element& x, const Element& y) const {
    const MatrixXd a = to_matrix(x), b = to_matrix(y);
    return from_matrix(a * b - b * a);
  }

  Element theta(const Element& x) const {
    check(x);
    Element out = x;
    out.coords.tail(dim_p()) *= -1.0;
    return out;
  }

  double killing_form(const Element& x, const Element& y) const {
    check(x);
    check(y);
    return x.coords.dot(killing_ * y.coords);
  }

  Subspace whole() const { return {tag_, MatrixXd::Identity(dim(), dim())}; }
  Subspace k() const { return {tag_, MatrixXd::Identity(dim(), dim()).leftCols(dim_k_)}; }
  Subspace p() const { return {tag_, MatrixXd::Identity(dim(), dim()).rightCols(dim_p())}; }
  Subspace span(MatrixXd columns) const {
    if (columns.rows() != dim()) throw Error(ErrorCode::BadInput, "frame row count mismatch");
    return {tag_, linalg::range_basis(columns)};
  }
  Subspace zero_subspace() const { return {tag_, MatrixXd(dim(), 0)}; }

  void check(const Element& x) const {
    if (x.algebra != tag_) throw Error(ErrorCode::MismatchedAlgebras, "element from another algebra");
    if (x.coords.size() != dim()) throw Error(ErrorCode::BadInput, "coordinate length mismatch");
  }
  void check(const Subspace& s) const {
    if (s.algebra != tag_) throw Error(ErrorCode::MismatchedAlgebras, "subspace from another algebra");
  }

 private:
  void build_structure_constants() {
    ad_.assign(dim(), MatrixXd::Zero(dim(), dim()));
    const int n2 = ambient_ * ambient_;
    MatrixXd brackets(n2, dim());
    double worst = 0.0;
    for (int i = 0; i < dim(); ++i) {
      for (int j = 0; j < dim(); ++j) {
        const MatrixXd c = basis_[i] * basis_[j] - basis_[j] * basis_[i];
        brackets.col(j) = Eigen::Map<const VectorXd>(c.data(), n2);
      }
      // Least-squares fit against the orthonormal basis is a projection.
      ad_[i] = stacked_.transpose() * brackets;
      worst = std::max(worst, (brackets - stacked_ * ad_[i]).cwiseAbs().maxCoeff());
    }
    if (worst > 1e-9) throw Error(ErrorCode::NotSubalgebra, name_ + ": basis not closed under bracket");
  }

  void build_killing() {
    const int d = dim();
    MatrixXd rows(d, d * d), rows_t(d, d * d);
    for (int i = 0; i < d; ++i) {
      rows.row(i) = Eigen::Map<const VectorXd>(ad_[i].data(), d * d).transpose();
      const MatrixXd t = ad_[i].transpose();
      rows_t.row(i) = Eigen::Map<const VectorXd>(t.data(), d * d).transpose();
    }
    killing_ = rows * rows_t.transpose();
    killing_ = 0.5 * (killing_ + killing_.transpose()).eval();
  }

  std::string name_;
  std::uint64_t tag_;
  int complex_rank_;
  int dim_k_;
  int ambient_ = 0;
  std::vector<MatrixXd> basis_;
  MatrixXd stacked_;  // column i is vec(b_i)
  std::vector<MatrixXd> ad_;
  MatrixXd killing_;
  std::optional<MatrixXd> complex_structure_;
};

/// {X in within : [X, s] = 0 for every generator s}, as a nullspace.
inline Subspace centralizer(const MatrixLieAlgebra& g, const Subspace& generators,
                            const Subspace& within) {
  g.check(generators);
  g.check(within);
  if (generators.dim() == 0 || within.dim() == 0) return within;
  MatrixXd stacked(g.dim() * generators.dim(), within.dim());
  for (int s = 0; s < generators.dim(); ++s) {
    const MatrixXd ad_s = g.ad(g.element(generators.frame.col(s)));
    stacked.middleRows(s * g.dim(), g.dim()) = ad_s * within.frame;
  }
  const MatrixXd null = linalg::null_basis(stacked);
  return {g.tag(), within.frame * null};
}

inline Subspace centralizer(const MatrixLieAlgebra& g, const Element& a, const Subspace& within) {
  g.check(a);
  if (a.norm() == 0.0) return within;
  return centralizer(g, Subspace{g.tag(), a.coords / a.norm()}, within);
}

/// Complement of v inside `within` for the named form. Throws DegenerateForm
/// if the form restricted to `within` is degenerate.
inline Subspace ortho_complement(const MatrixLieAlgebra& g, const Subspace& v, const Subspace& within,
                                 Form form = Form::Killing) {
  g.check(v);
  g.check(within);
  if (within.dim() == 0) return within;
  const MatrixXd metric =
      form == Form::Killing ? g.killing() : MatrixXd::Identity(g.dim(), g.dim());
  const MatrixXd restricted = within.frame.transpose() * metric * within.frame;
  if (linalg::rank(restricted) < within.dim())
    throw Error(ErrorCode::DegenerateForm, "form is degenerate on the ambient subspace");
  if (v.dim() == 0) return within;
  // Inside `within`: vectors w with v^T metric w = 0.
  const MatrixXd conditions = v.frame.transpose() * metric * within.frame;
  const MatrixXd null = linalg::null_basis(conditions);
  return {g.tag(), linalg::range_basis(within.frame * null)};
}

/// Sum of subspaces (columns concatenated and re-orthonormalized).
inline Subspace subspace_sum(const MatrixLieAlgebra& g, const Subspace& a, const Subspace& b) {
  g.check(a);
  g.check(b);
  MatrixXd cols(g.dim(), a.dim() + b.dim());
  cols << a.frame, b.frame;
  return {g.tag(), linalg::range_basis(cols)};
}

/// Largest bracket of frame vectors that leaves the subspace, relative to scale.
inline double closure_defect(const MatrixLieAlgebra& g, const Subspace& s) {
  double worst = 0.0;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) {
      const VectorXd c = g.bracket(g.element(s.frame.col(i)), g.element(s.frame.col(j))).coords;
      worst = std::max(worst, (c - s.project(c)).norm());
    }
  return worst;
}

inline bool is_abelian(const MatrixLieAlgebra& g, const Subspace& s, double tol = 1e-9) {
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j)
      if (g.bracket(g.element(s.frame.col(i)), g.element(s.frame.col(j))).norm() > tol) return false;
  return true;
}

/// Structure constants of a subalgebra relative to its own frame.
inline std::vector<MatrixXd> sub_ad_basis(const MatrixLieAlgebra& g, const Subspace& s) {
  std::vector<MatrixXd> out(s.dim(), MatrixXd::Zero(s.dim(), s.dim()));
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j)
      out[i].col(j) = s.local(g.bracket(g.element(s.frame.col(i)), g.element(s.frame.col(j))).coords);
  return out;
}

/// Cartan criterion: the subalgebra's own Killing form is non-degenerate.
/// The zero subalgebra counts as semisimple. Throws NotSubalgebra if not closed.
inline bool is_semisimple_subalgebra(const MatrixLieAlgebra& g, const Subspace& s) {
  g.check(s);
  if (s.dim() == 0) return true;
  if (closure_defect(g, s) > 1e-8) throw Error(ErrorCode::NotSubalgebra, "subspace not closed under bracket");
  const auto ad = sub_ad_basis(g, s);
  MatrixXd b(s.dim(), s.dim());
  for (int i = 0; i < s.dim(); ++i)
    for (int j = 0; j < s.dim(); ++j) b(i, j) = (ad[i] * ad[j]).trace();
  const Eigen::SelfAdjointEigenSolver<MatrixXd> eig(0.5 * (b + b.transpose()));
  // Measured against the size of ad on the whole algebra, so that a
  // numerically abelian subalgebra is not mistaken for a well-conditioned one.
  double scale = 0.0;
  for (int i = 0; i < s.dim(); ++i) scale = std::max(scale, g.ad(g.element(s.frame.col(i))).squaredNorm());
  const VectorXd ev = eig.eigenvalues().cwiseAbs();
  return scale > 0 && ev.minCoeff() / scale > 1e-10;
}

/// Killing-orthogonal projector (in coordinates) onto a subspace on which the
/// Killing form is non-degenerate.
inline MatrixXd killing_projector(const MatrixLieAlgebra& g, const Subspace& s) {
  g.check(s);
  if (s.dim() == 0) return MatrixXd::Zero(g.dim(), g.dim());
  const MatrixXd gs = s.frame.transpose() * g.killing() * s.frame;
  return s.frame * gs.fullPivLu().solve(s.frame.transpose() * g.killing());
}

}  // namespace commap
