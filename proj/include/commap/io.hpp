#pragma once

#include "commap/solver.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace commap {

using json = nlohmann::json;

inline json matrix_to_json(const MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline MatrixXd matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorCode::BadInput, "matrix must be a non-empty array of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const json& row = j.at(i);
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n)
      throw Error(ErrorCode::BadInput, "matrix must be square");
    for (Eigen::Index k = 0; k < n; ++k) {
      if (!row.at(k).is_number()) throw Error(ErrorCode::BadInput, "matrix entries must be numbers");
      m(i, k) = row.at(k).get<double>();
    }
  }
  return m;
}

/// An element's ambient matrix; `g` checks membership to 1e-9 relative.
inline Element element_from_matrix(const MatrixLieAlgebra& g, const MatrixXd& m) {
  double off = 0.0;
  Element x = g.from_matrix(m, &off);
  if (off > 1e-9 * std::max(1.0, m.norm()))
    throw Error(ErrorCode::BadInput, "matrix is not an element of " + g.name());
  return x;
}

inline json element_to_json(const MatrixLieAlgebra& g, const std::string& algebra_name, const Element& x) {
  return {{"schema", "commap.element/1"}, {"algebra", {{"name", algebra_name}}}, {"matrix", matrix_to_json(g.to_matrix(x))}};
}

/// Accepts {"matrix": ...} or {"coords": [...]}. A zero element may be given as
/// {"zero": true}. A named algebra must match `algebra_name` after normalization.
inline Element element_from_json(const MatrixLieAlgebra& g, const std::string& algebra_name, const json& j) {
  if (j.contains("algebra") && j["algebra"].contains("name")) {
    const std::string given = Catalog::normalize_name(j["algebra"]["name"].get<std::string>());
    if (given != Catalog::normalize_name(algebra_name))
      throw Error(ErrorCode::MismatchedAlgebras, "element belongs to " + given + ", not " + algebra_name);
  }
  if (j.value("zero", false)) return g.zero();
  if (j.contains("matrix")) return element_from_matrix(g, matrix_from_json(j["matrix"]));
  if (j.contains("coords")) {
    const auto c = j["coords"].get<std::vector<double>>();
    return g.element(Eigen::Map<const VectorXd>(c.data(), static_cast<Eigen::Index>(c.size())));
  }
  throw Error(ErrorCode::BadInput, "element needs \"matrix\", \"coords\" or \"zero\"");
}

inline const char* to_string(CentralizerScope s) { return s == CentralizerScope::P ? "p" : "g"; }

inline json witness_to_json(const MatrixLieAlgebra& g, const std::string& algebra_name, const CommutatorWitness& w) {
  json j = {{"schema", "commap.witness/1"},
            {"algebra", {{"name", algebra_name}}},
            {"method", to_string(w.method)},
            {"Z", matrix_to_json(g.to_matrix(w.z))},
            {"X", matrix_to_json(g.to_matrix(w.x))},
            {"Y", matrix_to_json(g.to_matrix(w.y))},
            {"residual", w.residual}};
  if (w.regular_factor) {
    const RegularCertificate& c = *w.regular_factor;
    j["regular_factor"] = {{"which", w.regular_which == Factor::X ? "X" : "Y"},
                           {"centralizer_dim", c.centralizer_dim},
                           {"expected_rank", c.expected_rank},
                           {"scope", to_string(c.scope)}};
  } else {
    j["regular_factor"] = nullptr;
  }
  return j;
}

inline json witness_to_json(const MatrixLieAlgebra& g, const std::string& algebra_name,
                            const TwoCommutatorWitness& w) {
  return {{"schema", "commap.two_commutator_witness/1"},
          {"algebra", {{"name", algebra_name}}},
          {"method", "TwoCommutator"},
          {"Z", matrix_to_json(g.to_matrix(w.z))},
          {"X1", matrix_to_json(g.to_matrix(w.x1))},
          {"Y1", matrix_to_json(g.to_matrix(w.y1))},
          {"X2", matrix_to_json(g.to_matrix(w.x2))},
          {"Y2", matrix_to_json(g.to_matrix(w.y2))},
          {"residual", w.residual}};
}

inline Method method_from_string(const std::string& s) {
  for (Method m : {Method::InP, Method::Split, Method::Compact, Method::General, Method::Inner, Method::Complex,
                   Method::TwoCommutator})
    if (s == to_string(m)) return m;
  throw Error(ErrorCode::BadInput, "unknown method " + s);
}

/// Rebuilds a witness; the certificate's recorded dimensions are kept so that
/// verify_witness can compare them with a fresh computation.
inline CommutatorWitness commutator_witness_from_json(const MatrixLieAlgebra& g, const json& j) {
  CommutatorWitness w;
  auto elem = [&](const char* key) { return element_from_matrix(g, matrix_from_json(j.at(key))); };
  w.z = elem("Z");
  w.x = elem("X");
  w.y = elem("Y");
  w.method = method_from_string(j.at("method"));
  w.residual = j.value("residual", 0.0);
  if (j.contains("regular_factor") && !j["regular_factor"].is_null()) {
    const json& r = j["regular_factor"];
    w.regular_which = r.at("which") == "X" ? Factor::X : Factor::Y;
    RegularCertificate c;
    c.element = w.regular_which == Factor::X ? w.x : w.y;
    c.centralizer_dim = r.at("centralizer_dim");
    c.expected_rank = r.at("expected_rank");
    c.scope = r.at("scope") == "p" ? CentralizerScope::P : CentralizerScope::Algebra;
    w.regular_factor = c;
  }
  return w;
}

inline TwoCommutatorWitness two_commutator_witness_from_json(const MatrixLieAlgebra& g, const json& j) {
  auto elem = [&](const char* key) { return element_from_matrix(g, matrix_from_json(j.at(key))); };
  TwoCommutatorWitness w{elem("Z"), elem("X1"), elem("Y1"), elem("X2"), elem("Y2"), j.value("residual", 0.0)};
  return w;
}

inline json to_json(const VerificationReport& r) {
  json j = {{"schema", "commap.verification/1"}, {"pass", r.pass}, {"residual", r.residual}, {"message", r.message}};
  if (r.certificate_checked)
    j["certificate"] = {{"valid", r.certificate_valid},
                        {"centralizer_dim", r.centralizer_dim},
                        {"expected_rank", r.expected_rank}};
  return j;
}

}  // namespace commap
