#pragma once

#include "commap/errors.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace commap {

struct DynkinEdge {
  int i = 0;
  int j = 0;
  int multiplicity = 1;

  friend bool operator==(const DynkinEdge&, const DynkinEdge&) = default;
};

/// Dynkin diagram of the complexification. Nodes are numbered 1..rank (Bourbaki).
/// A complex simple algebra viewed as a real one has two copies of its diagram;
/// nodes rank+1..2*rank mirror nodes 1..rank.
struct DynkinDiagram {
  char series = 'A';
  int simple_rank = 1;  // rank of one component
  bool doubled = false;
  std::vector<DynkinEdge> edges;

  int node_count() const { return doubled ? 2 * simple_rank : simple_rank; }

  std::string type_label() const {
    std::string one = std::string(1, series) + std::to_string(simple_rank);
    return doubled ? one + "+" + one : one;
  }
};

namespace detail {

inline std::vector<DynkinEdge> shape_edges(char series, int l) {
  std::vector<DynkinEdge> e;
  auto path = [&](int last) {
    for (int i = 1; i < last; ++i) e.push_back({i, i + 1, 1});
  };
  switch (series) {
    case 'A':
      if (l < 1) break;
      path(l);
      return e;
    case 'B':
    case 'C':
      if (l < 2) break;
      path(l - 1);
      e.push_back({l - 1, l, 2});
      return e;
    case 'D':
      if (l < 3) break;
      path(l - 1);
      e.push_back({l - 2, l, 1});
      return e;
    case 'E':
      if (l < 6 || l > 8) break;
      e.push_back({1, 3, 1});
      for (int i = 3; i < l; ++i) e.push_back({i, i + 1, 1});
      e.push_back({2, 4, 1});
      return e;
    case 'F':
      if (l != 4) break;
      return {{1, 2, 1}, {2, 3, 2}, {3, 4, 1}};
    case 'G':
      if (l != 2) break;
      return {{1, 2, 3}};
    default:
      break;
  }
  throw Error(ErrorCode::MalformedCatalog,
              "no Dynkin shape " + std::string(1, series) + std::to_string(l));
}

}  // namespace detail

inline DynkinDiagram make_dynkin(char series, int rank, bool doubled = false) {
  DynkinDiagram d;
  d.series = series;
  d.simple_rank = rank;
  d.doubled = doubled;
  d.edges = detail::shape_edges(series, rank);
  if (doubled) {
    const auto base = d.edges;
    for (const auto& e : base) d.edges.push_back({e.i + rank, e.j + rank, e.multiplicity});
  }
  return d;
}

/// Checks that edges match the finite shape named by the label and that each
/// component is connected.
inline void validate(const DynkinDiagram& d) {
  const DynkinDiagram expected = make_dynkin(d.series, d.simple_rank, d.doubled);
  auto key = [](DynkinEdge e) {
    if (e.i > e.j) std::swap(e.i, e.j);
    return std::tuple(e.i, e.j, e.multiplicity);
  };
  std::set<std::tuple<int, int, int>> have, want;
  for (const auto& e : d.edges) {
    if (e.multiplicity < 1 || e.multiplicity > 3)
      throw Error(ErrorCode::MalformedCatalog, "bond multiplicity out of range");
    have.insert(key(e));
  }
  for (const auto& e : expected.edges) want.insert(key(e));
  if (have != want)
    throw Error(ErrorCode::MalformedCatalog, "edges do not match shape " + d.type_label());
}

/// Satake diagram: Dynkin diagram with black (compact) nodes and two-pointed
/// arrows pairing distinct white nodes.
struct SatakeDiagram {
  DynkinDiagram base;
  std::vector<bool> black;                 // index node-1
  std::vector<std::pair<int, int>> arrows;  // unordered pairs, first < second

  int rank() const { return base.node_count(); }

  int black_count() const {
    return static_cast<int>(std::count(black.begin(), black.end(), true));
  }
  int white_count() const { return rank() - black_count(); }

  bool all_white() const { return black_count() == 0; }
  bool all_black() const { return black_count() == rank(); }
};

inline void validate(const SatakeDiagram& s) {
  validate(s.base);
  if (static_cast<int>(s.black.size()) != s.rank())
    throw Error(ErrorCode::MalformedCatalog, "coloring size differs from rank");
  std::set<int> seen;
  for (auto [a, b] : s.arrows) {
    if (a == b) throw Error(ErrorCode::MalformedCatalog, "arrow joins a node to itself");
    if (a < 1 || b < 1 || a > s.rank() || b > s.rank())
      throw Error(ErrorCode::MalformedCatalog, "arrow endpoint out of range");
    if (s.black[a - 1] || s.black[b - 1])
      throw Error(ErrorCode::MalformedCatalog, "arrow endpoint is black");
    if (!seen.insert(a).second || !seen.insert(b).second)
      throw Error(ErrorCode::MalformedCatalog, "arrow set is not an involution");
  }
}

inline SatakeDiagram make_satake(DynkinDiagram base, const std::vector<int>& black_nodes,
                                 std::vector<std::pair<int, int>> arrows) {
  SatakeDiagram s;
  s.base = std::move(base);
  s.black.assign(s.base.node_count(), false);
  for (int n : black_nodes) {
    if (n < 1 || n > s.rank()) throw Error(ErrorCode::MalformedCatalog, "black node out of range");
    s.black[n - 1] = true;
  }
  for (auto& [a, b] : arrows)
    if (a > b) std::swap(a, b);
  std::sort(arrows.begin(), arrows.end());
  s.arrows = std::move(arrows);
  validate(s);
  return s;
}

/// Number of two-pointed arrows; equals dim of the center of m.
inline int arrow_count(const SatakeDiagram& d) { return static_cast<int>(d.arrows.size()); }

namespace diagrams {

/// Split real form: all nodes white, no arrows.
inline SatakeDiagram split(char series, int rank) { return make_satake(make_dynkin(series, rank), {}, {}); }

inline SatakeDiagram compact(char series, int rank) {
  std::vector<int> all(rank);
  for (int i = 0; i < rank; ++i) all[i] = i + 1;
  return make_satake(make_dynkin(series, rank), all, {});
}

/// Realification of a complex simple algebra: two white copies joined node by node.
inline SatakeDiagram complex_form(char series, int rank) {
  std::vector<std::pair<int, int>> arrows;
  for (int i = 1; i <= rank; ++i) arrows.emplace_back(i, i + rank);
  return make_satake(make_dynkin(series, rank, true), {}, arrows);
}

/// sl(n,H): A_{2n-1}, odd nodes black.
inline SatakeDiagram type_AII(int n) {
  const int l = 2 * n - 1;
  std::vector<int> black;
  for (int i = 1; i <= l; i += 2) black.push_back(i);
  return make_satake(make_dynkin('A', l), black, {});
}

/// su(p,q), p <= q: A_{p+q-1}; nodes p < i < q black, arrows i <-> n-i.
inline SatakeDiagram type_AIII(int p, int q) {
  const int n = p + q, l = n - 1;
  std::vector<int> black;
  std::vector<std::pair<int, int>> arrows;
  for (int i = p + 1; i < q; ++i) black.push_back(i);
  for (int i = 1; i <= p && i < n - i; ++i) arrows.emplace_back(i, n - i);
  return make_satake(make_dynkin('A', l), black, arrows);
}

/// so(p,q), p <= q.
inline SatakeDiagram type_BDI(int p, int q) {
  const int n = p + q;
  if (n % 2 == 1) {
    const int l = (n - 1) / 2;
    std::vector<int> black;
    for (int i = p + 1; i <= l; ++i) black.push_back(i);
    return make_satake(make_dynkin('B', l), black, {});
  }
  const int l = n / 2;
  if (p == l) return split('D', l);
  if (p == l - 1) return make_satake(make_dynkin('D', l), {}, {{l - 1, l}});
  std::vector<int> black;
  for (int i = p + 1; i <= l; ++i) black.push_back(i);
  return make_satake(make_dynkin('D', l), black, {});
}

/// sp(p,q), p <= q: C_{p+q}, white nodes alpha_2, alpha_4, ..., alpha_{2p}.
inline SatakeDiagram type_CII(int p, int q) {
  const int l = p + q;
  std::vector<int> black;
  for (int i = 1; i <= l; ++i)
    if (!(i % 2 == 0 && i <= 2 * p)) black.push_back(i);
  return make_satake(make_dynkin('C', l), black, {});
}

/// so*(2n): D_n with odd nodes black; for odd n the fork is an arrow pair.
inline SatakeDiagram type_DIII(int n) {
  std::vector<int> black;
  if (n % 2 == 0) {
    for (int i = 1; i < n; i += 2) black.push_back(i);
    return make_satake(make_dynkin('D', n), black, {});
  }
  for (int i = 1; i <= n - 2; i += 2) black.push_back(i);
  return make_satake(make_dynkin('D', n), black, {{n - 1, n}});
}

}  // namespace diagrams
}  // namespace commap
