#pragma once

#include "commap/algebra.hpp"
#include "commap/catalog.hpp"

#include <array>
#include <cmath>
#include <regex>
#include <string>
#include <vector>

namespace commap {

/// Linear conditions cutting a real matrix Lie algebra out of gl(N, R):
/// X commutes with each `commutant`, X^T S + S X = 0 for each form S, and
/// tr(T X) = 0 for each trace functional T. All inputs must be orthogonal
/// (or I, J) so the solution set is transpose-closed.
struct RealizationSpec {
  int ambient = 0;
  std::vector<MatrixXd> commutants;
  std::vector<MatrixXd> forms;
  std::vector<MatrixXd> traces;
  std::optional<MatrixXd> complex_structure;
};

namespace realize {

inline MatrixXd complex_unit() {
  MatrixXd j(2, 2);
  j << 0, -1, 1, 0;
  return j;
}

inline MatrixXd kron(const MatrixXd& a, const MatrixXd& b) {
  MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Left (left=true) or right multiplication by the quaternion unit e_a on R^4 = span(1,i,j,k).
inline MatrixXd quaternion_mult(int a, bool left) {
  // e_x e_y = sign[x][y] e_{index[x][y]}
  static const int index[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  MatrixXd m = MatrixXd::Zero(4, 4);
  for (int b = 0; b < 4; ++b) {
    const int x = left ? a : b, y = left ? b : a;
    m(index[x][y], b) = sign[x][y];
  }
  return m;
}

inline MatrixXd signature(int p, int q) {
  VectorXd d(p + q);
  d.head(p).setConstant(-1.0);
  d.tail(q).setConstant(1.0);
  return d.asDiagonal();
}

inline MatrixXd symplectic(int m) {
  const int n = m / 2;
  MatrixXd o = MatrixXd::Zero(m, m);
  o.topRightCorner(n, n) = MatrixXd::Identity(n, n);
  o.bottomLeftCorner(n, n) = -MatrixXd::Identity(n, n);
  return o;
}

inline MatrixXd conjugation(int n) {
  MatrixXd c = MatrixXd::Zero(2, 2);
  c << 1, 0, 0, -1;
  return kron(MatrixXd::Identity(n, n), c);
}

inline std::vector<MatrixXd> quaternionic(int n) {
  const MatrixXd id = MatrixXd::Identity(n, n);
  return {kron(id, quaternion_mult(1, false)), kron(id, quaternion_mult(2, false))};
}

inline MatrixXd complex_structure(int n) { return kron(MatrixXd::Identity(n, n), complex_unit()); }

/// Orthonormal skew (k) and symmetric (p) bases of the solution space.
inline std::pair<std::vector<MatrixXd>, std::vector<MatrixXd>> solve(const RealizationSpec& spec) {
  const int n = spec.ambient;
  const double s2 = std::sqrt(0.5);
  auto candidates = [&](bool skew) {
    std::vector<MatrixXd> out;
    for (int i = 0; i < n; ++i)
      for (int j = skew ? i + 1 : i; j < n; ++j) {
        MatrixXd e = MatrixXd::Zero(n, n);
        if (i == j) {
          e(i, i) = 1.0;
        } else {
          e(i, j) = s2;
          e(j, i) = skew ? -s2 : s2;
        }
        out.push_back(std::move(e));
      }
    return out;
  };
  auto conditions = [&](const MatrixXd& x) {
    std::vector<double> out;
    auto push = [&](const MatrixXd& m) { out.insert(out.end(), m.data(), m.data() + m.size()); };
    for (const auto& c : spec.commutants) push(x * c - c * x);
    for (const auto& s : spec.forms) push(x.transpose() * s + s * x);
    for (const auto& t : spec.traces) out.push_back((t * x).trace());
    return out;
  };
  auto basis_for = [&](bool skew) {
    const auto cands = candidates(skew);
    std::vector<MatrixXd> result;
    if (cands.empty()) return result;
    const auto first = conditions(cands.front());
    MatrixXd c(static_cast<Eigen::Index>(first.size()), static_cast<Eigen::Index>(cands.size()));
    for (std::size_t k = 0; k < cands.size(); ++k) {
      const auto v = conditions(cands[k]);
      c.col(static_cast<Eigen::Index>(k)) = Eigen::Map<const VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
    }
    const MatrixXd null = c.rows() ? linalg::null_basis(c) : MatrixXd::Identity(c.cols(), c.cols());
    for (Eigen::Index col = 0; col < null.cols(); ++col) {
      MatrixXd b = MatrixXd::Zero(n, n);
      for (std::size_t k = 0; k < cands.size(); ++k) b += null(static_cast<Eigen::Index>(k), col) * cands[k];
      // Clean round-off so the skew/symmetric split is exact.
      b = skew ? MatrixXd(0.5 * (b - b.transpose())) : MatrixXd(0.5 * (b + b.transpose()));
      result.push_back(b / b.norm());
    }
    return result;
  };
  return {basis_for(true), basis_for(false)};
}

inline RealizationSpec spec_for(const std::string& realization, const std::vector<int>& v) {
  RealizationSpec s;
  auto arg = [&](std::size_t i) { return v.at(i); };
  if (realization == "sl_real") {
    s.ambient = arg(0);
    s.traces = {MatrixXd::Identity(s.ambient, s.ambient)};
  } else if (realization == "sl_quaternion") {
    s.ambient = 4 * arg(0);
    s.commutants = quaternionic(arg(0));
    s.traces = {MatrixXd::Identity(s.ambient, s.ambient)};
  } else if (realization == "sl_complex") {
    s.ambient = 2 * arg(0);
    s.commutants = {complex_structure(arg(0))};
    s.traces = {MatrixXd::Identity(s.ambient, s.ambient), complex_structure(arg(0))};
    s.complex_structure = complex_structure(arg(0));
  } else if (realization == "su_indefinite" || realization == "su_compact") {
    const int p = realization == "su_compact" ? 0 : arg(0);
    const int q = realization == "su_compact" ? arg(0) : arg(1);
    s.ambient = 2 * (p + q);
    s.commutants = {complex_structure(p + q)};
    s.forms = {kron(signature(p, q), MatrixXd::Identity(2, 2))};
    s.traces = {MatrixXd::Identity(s.ambient, s.ambient), complex_structure(p + q)};
  } else if (realization == "so_indefinite" || realization == "so_compact") {
    const int p = realization == "so_compact" ? 0 : arg(0);
    const int q = realization == "so_compact" ? arg(0) : arg(1);
    s.ambient = p + q;
    s.forms = {signature(p, q)};
  } else if (realization == "so_complex") {
    s.ambient = 2 * arg(0);
    s.commutants = {complex_structure(arg(0))};
    s.forms = {conjugation(arg(0))};
    s.complex_structure = complex_structure(arg(0));
  } else if (realization == "sp_real") {
    s.ambient = arg(0);
    s.forms = {symplectic(arg(0))};
  } else if (realization == "sp_complex") {
    s.ambient = 2 * arg(0);
    s.commutants = {complex_structure(arg(0))};
    s.forms = {conjugation(arg(0)) * kron(symplectic(arg(0)), MatrixXd::Identity(2, 2))};
    s.complex_structure = complex_structure(arg(0));
  } else if (realization == "sp_indefinite" || realization == "sp_compact") {
    const int p = realization == "sp_compact" ? 0 : arg(0);
    const int q = realization == "sp_compact" ? arg(0) : arg(1);
    s.ambient = 4 * (p + q);
    s.commutants = quaternionic(p + q);
    s.forms = {kron(signature(p, q), MatrixXd::Identity(4, 4))};
  } else if (realization == "so_star") {
    const int n = arg(0) / 2;
    s.ambient = 4 * n;
    s.commutants = quaternionic(n);
    s.forms = {kron(MatrixXd::Identity(n, n), quaternion_mult(2, true))};
  } else {
    throw Error(ErrorCode::UnsupportedRealization, "no realization " + realization);
  }
  if (s.ambient < 2) throw Error(ErrorCode::InvalidParameters, "ambient size too small");
  return s;
}

}  // namespace realize

/// Matrix realization from explicit conditions.
inline MatrixLieAlgebra build_from_spec(const std::string& name, int complex_rank,
                                        const RealizationSpec& spec) {
  auto [k, p] = realize::solve(spec);
  return MatrixLieAlgebra(name, complex_rank, std::move(k), std::move(p), spec.complex_structure);
}

/// Realization of a catalog algebra by name ("su(1,2)", "sl(2,H)", "so(1,3)").
/// Uses the family the name itself parses as, so isomorphic aliases keep their
/// own matrices; exceptional algebras have no realization.
inline MatrixLieAlgebra build_algebra(const std::string& raw_name) {
  const Catalog& cat = load_catalog();
  const RealFormRecord rec = cat.lookup(raw_name);
  const std::string name = Catalog::normalize_name(raw_name);
  for (const auto& f : cat.families()) {
    std::smatch m;
    if (f.realization.empty() || !std::regex_match(name, m, detail::template_regex(f.name_template)))
      continue;
    std::vector<int> params;
    for (std::size_t i = 0; i < f.param_names.size(); ++i) params.push_back(std::stoi(m[i + 1].str()));
    return build_from_spec(name, complex_rank(rec), realize::spec_for(f.realization, params));
  }
  if (rec.realization.empty())
    throw Error(ErrorCode::UnsupportedRealization, rec.name + " has no matrix realization");
  std::vector<int> params;
  for (const auto& [k, v] : rec.params) params.push_back(v);
  return build_from_spec(rec.name, complex_rank(rec), realize::spec_for(rec.realization, params));
}

/// Size of the matrices realizing a catalog record, without building the algebra.
inline int ambient_size(const RealFormRecord& rec) {
  if (rec.realization.empty()) throw Error(ErrorCode::UnsupportedRealization, rec.name + " has no matrix realization");
  std::vector<int> params;
  for (const auto& [k, v] : rec.params) params.push_back(v);
  return realize::spec_for(rec.realization, params).ambient;
}

/// Realified complexification g + ig inside gl(2N, R): X + iY -> X (x) I + Y (x) J.
/// Its Cartan involution is again X -> -X^T, with k = k + ip and p = p + ik.
struct Complexification {
  MatrixLieAlgebra algebra;

  /// Coordinates of x + i y.
  Element embed(const MatrixLieAlgebra& real, const Element& x, const Element& y) const {
    const MatrixXd j = realize::complex_unit();
    const MatrixXd id = MatrixXd::Identity(2, 2);
    return algebra.from_matrix(realize::kron(real.to_matrix(x), id) + realize::kron(real.to_matrix(y), j));
  }

  /// (Re, Im) parts of an element of the complexification, as elements of `real`.
  std::pair<Element, Element> split(const MatrixLieAlgebra& real, const Element& z) const {
    const MatrixXd m = algebra.to_matrix(z);
    const int n = real.ambient_size();
    MatrixXd re(n, n), im(n, n);
    for (int i = 0; i < n; ++i)
      for (int jj = 0; jj < n; ++jj) {
        re(i, jj) = 0.5 * (m(2 * i, 2 * jj) + m(2 * i + 1, 2 * jj + 1));
        im(i, jj) = 0.5 * (m(2 * i + 1, 2 * jj) - m(2 * i, 2 * jj + 1));
      }
    return {real.from_matrix(re), real.from_matrix(im)};
  }
};

inline Complexification complexify(const MatrixLieAlgebra& g) {
  const MatrixXd id = MatrixXd::Identity(2, 2);
  const MatrixXd j = realize::complex_unit();
  const double s = std::sqrt(0.5);
  std::vector<MatrixXd> kc, pc;
  for (int i = 0; i < g.dim(); ++i) {
    const MatrixXd& b = g.basis()[i];
    const bool in_k = i < g.dim_k();
    (in_k ? kc : pc).push_back(s * realize::kron(b, id));
    (in_k ? pc : kc).push_back(s * realize::kron(b, j));
  }
  return {MatrixLieAlgebra(g.name() + "^C", 2 * g.complex_rank(), std::move(kc), std::move(pc),
                           realize::complex_structure(g.ambient_size()))};
}

}  // namespace commap
