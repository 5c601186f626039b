#pragma once

#include "commap/catalog_data.hpp"
#include "commap/diagram.hpp"
#include "commap/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace commap {

using json = nlohmann::json;

struct FormFlags {
  bool split = false;
  bool compact = false;
  bool complex = false;
  bool inner_type = false;
  bool hermitian = false;

  friend bool operator==(const FormFlags&, const FormFlags&) = default;
};

/// One real simple Lie algebra: catalog id, parameters, Satake diagram, flags.
struct RealFormRecord {
  std::string name;                  // instance name, e.g. "su(1,2)"
  std::string family;                // family id, e.g. "su(p,q)"; exceptional: same as name
  std::vector<std::pair<std::string, int>> params;
  SatakeDiagram diagram;
  FormFlags flags;
  bool classical = false;
  std::string realization;           // empty when no matrix realization exists
  std::optional<std::string> canonical;  // isomorphic canonical entry, when aliased

  int param(const std::string& key) const {
    for (const auto& [k, v] : params)
      if (k == key) return v;
    throw Error(ErrorCode::InvalidParameters, "no parameter " + key + " on " + name);
  }
};

enum class Verdict { Surjective, Open };

enum class Justification {
  Complex,
  SplitOrCompact,
  MSemisimple,
  ClassicalList,
  InnerNonHermitian,
  OpenCase,
};

inline const char* to_string(Verdict v) { return v == Verdict::Surjective ? "Surjective" : "Open"; }

inline const char* to_string(Justification j) {
  switch (j) {
    case Justification::Complex: return "Complex";
    case Justification::SplitOrCompact: return "SplitOrCompact";
    case Justification::MSemisimple: return "MSemisimple";
    case Justification::ClassicalList: return "ClassicalList";
    case Justification::InnerNonHermitian: return "InnerNonHermitian";
    case Justification::OpenCase: return "OpenCase";
  }
  return "?";
}

/// Human-readable reason, used by the text renderer.
inline const char* describe(Justification j) {
  switch (j) {
    case Justification::Complex: return "complex algebra, split over C";
    case Justification::SplitOrCompact: return "split or compact";
    case Justification::MSemisimple: return "m semisimple, no two-pointed arrows";
    case Justification::ClassicalList: return "classical, no two-pointed arrows";
    case Justification::InnerNonHermitian: return "inner type, non-Hermitian";
    case Justification::OpenCase: return "open case: arrows present, Hermitian or outer";
  }
  return "?";
}

struct SurjectivityReport {
  std::string name;
  Verdict verdict = Verdict::Open;
  Justification justification = Justification::OpenCase;
  int arrow_count = 0;
  int center_dim_m = 0;

  /// Everything except the name, so aliases can be compared.
  bool same_outcome(const SurjectivityReport& o) const {
    return verdict == o.verdict && justification == o.justification &&
           arrow_count == o.arrow_count && center_dim_m == o.center_dim_m;
  }
};

namespace detail {

using Params = std::map<std::string, int>;

inline int eval_expr(const json& e, const Params& ps) {
  if (e.is_number_integer()) return e.get<int>();
  if (e.is_string()) {
    auto it = ps.find(e.get<std::string>());
    if (it == ps.end()) throw Error(ErrorCode::MalformedCatalog, "unknown parameter " + e.dump());
    return it->second;
  }
  if (e.is_object() && e.size() == 1) {
    const auto& [op, args] = *e.items().begin();
    if (op == "add") {
      int s = 0;
      for (const auto& a : args) s += eval_expr(a, ps);
      return s;
    }
    if (op == "sub" && args.size() == 2) return eval_expr(args[0], ps) - eval_expr(args[1], ps);
  }
  throw Error(ErrorCode::MalformedCatalog, "bad expression " + e.dump());
}

inline bool eval_pred(const json& p, const Params& ps) {
  if (p.is_boolean()) return p.get<bool>();
  if (!p.is_object() || p.size() != 1)
    throw Error(ErrorCode::MalformedCatalog, "bad predicate " + p.dump());
  const auto& [op, args] = *p.items().begin();
  auto bin = [&](auto cmp) {
    if (!args.is_array() || args.size() != 2)
      throw Error(ErrorCode::MalformedCatalog, "binary predicate needs two operands");
    return cmp(eval_expr(args[0], ps), eval_expr(args[1], ps));
  };
  if (op == "eq") return bin([](int a, int b) { return a == b; });
  if (op == "ne") return bin([](int a, int b) { return a != b; });
  if (op == "le") return bin([](int a, int b) { return a <= b; });
  if (op == "lt") return bin([](int a, int b) { return a < b; });
  if (op == "ge") return bin([](int a, int b) { return a >= b; });
  if (op == "gt") return bin([](int a, int b) { return a > b; });
  if (op == "even") return eval_expr(args, ps) % 2 == 0;
  if (op == "odd") return eval_expr(args, ps) % 2 != 0;
  if (op == "not") return !eval_pred(args, ps);
  if (op == "and") {
    for (const auto& a : args)
      if (!eval_pred(a, ps)) return false;
    return true;
  }
  if (op == "or") {
    for (const auto& a : args)
      if (eval_pred(a, ps)) return true;
    return false;
  }
  throw Error(ErrorCode::MalformedCatalog, "unknown predicate " + op);
}

inline SatakeDiagram family_diagram(const std::string& rule, const Params& ps) {
  auto get = [&](const char* k) { return ps.at(k); };
  if (rule == "AI") return diagrams::split('A', get("n") - 1);
  if (rule == "AII") return diagrams::type_AII(get("n"));
  if (rule == "AIII") return diagrams::type_AIII(get("p"), get("q"));
  if (rule == "compact_A") return diagrams::compact('A', get("n") - 1);
  if (rule == "complex_A") return diagrams::complex_form('A', get("n") - 1);
  if (rule == "BDI") return diagrams::type_BDI(get("p"), get("q"));
  if (rule == "compact_BD") {
    const int n = get("n");
    return n % 2 ? diagrams::compact('B', (n - 1) / 2) : diagrams::compact('D', n / 2);
  }
  if (rule == "complex_BD") {
    const int n = get("n");
    return n % 2 ? diagrams::complex_form('B', (n - 1) / 2) : diagrams::complex_form('D', n / 2);
  }
  if (rule == "CI") return diagrams::split('C', get("m") / 2);
  if (rule == "CII") return diagrams::type_CII(get("p"), get("q"));
  if (rule == "compact_C") return diagrams::compact('C', get("n"));
  if (rule == "complex_C") return diagrams::complex_form('C', get("m") / 2);
  if (rule == "DIII") return diagrams::type_DIII(get("m") / 2);
  throw Error(ErrorCode::MalformedCatalog, "unknown diagram rule " + rule);
}

inline FormFlags eval_flags(const json& f, const Params& ps) {
  FormFlags out;
  out.split = eval_pred(f.at("split"), ps);
  out.compact = eval_pred(f.at("compact"), ps);
  out.complex = eval_pred(f.at("complex"), ps);
  out.inner_type = eval_pred(f.at("inner_type"), ps);
  out.hermitian = eval_pred(f.at("hermitian"), ps);
  return out;
}

inline void check_flags(const RealFormRecord& r) {
  const auto& d = r.diagram;
  const bool looks_split = d.all_white() && d.arrows.empty() && !d.base.doubled;
  if (r.flags.split != looks_split)
    throw Error(ErrorCode::MalformedCatalog, r.name + ": split flag disagrees with diagram");
  if (r.flags.compact != d.all_black())
    throw Error(ErrorCode::MalformedCatalog, r.name + ": compact flag disagrees with diagram");
  if (r.flags.complex != d.base.doubled)
    throw Error(ErrorCode::MalformedCatalog, r.name + ": complex flag disagrees with diagram");
  if (r.flags.hermitian && !r.flags.inner_type)
    throw Error(ErrorCode::MalformedCatalog, r.name + ": Hermitian algebras are of inner type");
  if (r.flags.compact && !r.flags.inner_type)
    throw Error(ErrorCode::MalformedCatalog, r.name + ": compact algebras are of inner type");
}

/// Turns "su({p},{q})" into a regex with one capture per parameter.
inline std::regex template_regex(const std::string& tmpl) {
  std::string re;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    const char c = tmpl[i];
    if (c == '{') {
      i = tmpl.find('}', i);
      re += "(\\d+)";
    } else if (std::string_view("()*+?.[]|^$\\").find(c) != std::string_view::npos) {
      re += '\\';
      re += c;
    } else {
      re += c;
    }
  }
  return std::regex("^" + re + "$");
}

inline std::string render_template(const std::string& tmpl, const Params& ps) {
  std::string out;
  for (std::size_t i = 0; i < tmpl.size(); ++i) {
    if (tmpl[i] == '{') {
      const auto close = tmpl.find('}', i);
      out += std::to_string(ps.at(tmpl.substr(i + 1, close - i - 1)));
      i = close;
    } else {
      out += tmpl[i];
    }
  }
  return out;
}

inline std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j)
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] != b[j - 1])});
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

}  // namespace detail

/// Parametrized family entry as stored in the catalog.
struct FamilyEntry {
  std::string family;
  std::vector<std::string> param_names;
  std::string name_template;
  std::string diagram_rule;
  std::string realization;
  bool classical = true;
  json valid;
  json flags;
};

/// Immutable after construction; safe for concurrent reads.
class Catalog {
 public:
  explicit Catalog(const json& doc) { load(doc); }

  const std::vector<FamilyEntry>& families() const { return families_; }
  const std::vector<RealFormRecord>& exceptional() const { return exceptional_; }
  const std::map<std::string, std::string>& aliases() const { return aliases_; }
  const json& document() const { return doc_; }

  /// Record for a parametrized family instance, or nullopt if params are invalid.
  std::optional<RealFormRecord> instantiate(const FamilyEntry& f, const detail::Params& ps) const {
    if (!detail::eval_pred(f.valid, ps)) return std::nullopt;
    RealFormRecord r;
    r.family = f.family;
    r.name = detail::render_template(f.name_template, ps);
    for (const auto& k : f.param_names) r.params.emplace_back(k, ps.at(k));
    r.diagram = detail::family_diagram(f.diagram_rule, ps);
    r.flags = detail::eval_flags(f.flags, ps);
    r.classical = f.classical;
    r.realization = f.realization;
    if (auto it = aliases_.find(r.name); it != aliases_.end()) r.canonical = it->second;
    detail::check_flags(r);
    return r;
  }

  /// Resolves a normalized name ("su(1,2)", "EIII", "so(1,3)") to a record.
  RealFormRecord lookup(const std::string& raw) const {
    const std::string name = normalize_name(raw);
    for (const auto& f : families_) {
      std::smatch m;
      const std::regex re = detail::template_regex(f.name_template);
      if (!std::regex_match(name, m, re)) continue;
      detail::Params ps;
      for (std::size_t i = 0; i < f.param_names.size(); ++i)
        ps[f.param_names[i]] = std::stoi(m[i + 1].str());
      if (auto r = instantiate(f, ps)) return *r;
    }
    for (const auto& e : exceptional_)
      if (e.name == name) return e;
    if (auto it = aliases_.find(name); it != aliases_.end()) {
      RealFormRecord r = lookup(it->second);
      r.canonical = r.name;
      return r;
    }
    if (name == "so(2,2)" || name == "so(4)" || name == "so*(4)" || name == "so(4,C)")
      throw Error(ErrorCode::NotSimple, name + " is semisimple but not simple");
    throw Error(ErrorCode::UnknownAlgebra, raw + " is not in the catalog; nearest: " + nearest(name));
  }

  /// Up to five catalog names closest to `name` by edit distance.
  std::string nearest(const std::string& name) const {
    std::vector<std::pair<std::size_t, std::string>> scored;
    for (const auto& n : sample_names()) scored.emplace_back(detail::edit_distance(name, n), n);
    std::sort(scored.begin(), scored.end());
    std::string out;
    for (std::size_t i = 0; i < std::min<std::size_t>(5, scored.size()); ++i)
      out += (i ? ", " : "") + scored[i].second;
    return out;
  }

  /// Every family instance with rank at most `max_rank`, then all exceptional entries.
  std::vector<RealFormRecord> enumerate(int max_rank) const {
    std::vector<RealFormRecord> out;
    const int bound = 2 * max_rank + 3;
    for (const auto& f : families_) {
      std::vector<int> v(f.param_names.size(), 0);
      while (true) {
        detail::Params ps;
        for (std::size_t i = 0; i < v.size(); ++i) ps[f.param_names[i]] = v[i];
        if (auto r = instantiate(f, ps); r && r->diagram.base.simple_rank <= max_rank)
          out.push_back(*r);
        std::size_t i = 0;
        while (i < v.size() && ++v[i] > bound) v[i++] = 0;
        if (i == v.size()) break;
      }
    }
    out.insert(out.end(), exceptional_.begin(), exceptional_.end());
    return out;
  }

  /// Accepts canonical names and common spellings: "sl_2(H)", "u*(3,H)", "u*_3(H)".
  static std::string normalize_name(std::string s) {
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
            s.end());
    static const std::regex subscript(R"(^([a-z]+\*?)_(\d+)\(([RCH])\)$)");
    std::smatch m;
    if (std::regex_match(s, m, subscript)) s = m[1].str() + "(" + m[2].str() + "," + m[3].str() + ")";
    static const std::regex ustar(R"(^u\*\((\d+),H\)$)");
    if (std::regex_match(s, m, ustar)) s = "so*(" + std::to_string(2 * std::stoi(m[1].str())) + ")";
    return s;
  }

 private:
  std::vector<std::string> sample_names() const {
    std::vector<std::string> names;
    for (const auto& f : families_) names.push_back(f.family);
    for (const auto& e : exceptional_) names.push_back(e.name);
    for (const auto& [a, c] : aliases_) names.push_back(a);
    return names;
  }

  void load(const json& doc) {
    doc_ = doc;
    try {
      if (doc.at("schema") != "commap.catalog" || doc.at("version") != 1)
        throw Error(ErrorCode::MalformedCatalog, "unsupported catalog schema");
      for (const auto& a : doc.at("aliases"))
        aliases_[a.at("name").get<std::string>()] = a.at("canonical").get<std::string>();
      for (const auto& f : doc.at("families")) {
        FamilyEntry e;
        e.family = f.at("family");
        e.param_names = f.at("params").get<std::vector<std::string>>();
        e.name_template = f.at("name");
        e.diagram_rule = f.at("diagram");
        e.realization = f.value("realization", "");
        e.classical = f.value("classical", true);
        e.valid = f.at("valid");
        e.flags = f.at("flags");
        families_.push_back(std::move(e));
      }
      for (const auto& x : doc.at("exceptional")) {
        RealFormRecord r;
        r.name = x.at("name");
        r.family = r.name;
        const std::string series = x.at("series");
        const int rank = x.at("rank");
        if (x.value("complex", false)) {
          r.diagram = diagrams::complex_form(series[0], rank);
        } else if (x.at("black").is_string()) {
          r.diagram = diagrams::compact(series[0], rank);
        } else {
          std::vector<std::pair<int, int>> arrows;
          for (const auto& a : x.at("arrows")) arrows.emplace_back(a.at(0), a.at(1));
          r.diagram = make_satake(make_dynkin(series[0], rank), x.at("black").get<std::vector<int>>(),
                                  arrows);
        }
        r.flags = detail::eval_flags(x.at("flags"), {});
        r.classical = false;
        detail::check_flags(r);
        exceptional_.push_back(std::move(r));
      }
    } catch (const json::exception& e) {
      throw Error(ErrorCode::MalformedCatalog, e.what());
    }
  }

  json doc_;
  std::vector<FamilyEntry> families_;
  std::vector<RealFormRecord> exceptional_;
  std::map<std::string, std::string> aliases_;
};

/// The embedded catalog, parsed once. Malformed data fails at first use.
inline const Catalog& load_catalog() {
  static const Catalog catalog(json::parse(detail::kCatalogJson));
  return catalog;
}

inline int arrow_count(const RealFormRecord& rec) { return arrow_count(rec.diagram); }

/// dim z(m): the number of two-pointed arrows.
inline int center_dim_of_m(const RealFormRecord& rec) { return arrow_count(rec.diagram); }

/// dim a: white nodes minus arrows.
inline int restricted_rank(const RealFormRecord& rec) {
  return rec.diagram.white_count() - arrow_count(rec.diagram);
}

/// Complex rank of the complexification (number of Dynkin nodes).
inline int complex_rank(const RealFormRecord& rec) { return rec.diagram.rank(); }

/// Strongest applicable sufficient condition, in the order
/// Complex, SplitOrCompact, no arrows, inner non-Hermitian.
inline SurjectivityReport surjectivity_status(const RealFormRecord& rec) {
  SurjectivityReport r;
  r.name = rec.name;
  r.arrow_count = arrow_count(rec);
  r.center_dim_m = center_dim_of_m(rec);
  r.verdict = Verdict::Surjective;
  if (rec.flags.complex) {
    r.justification = Justification::Complex;
  } else if (rec.flags.split || rec.flags.compact) {
    r.justification = Justification::SplitOrCompact;
  } else if (r.arrow_count == 0) {
    r.justification = rec.classical ? Justification::ClassicalList : Justification::MSemisimple;
  } else if (rec.flags.inner_type && !rec.flags.hermitian) {
    r.justification = Justification::InnerNonHermitian;
  } else {
    r.verdict = Verdict::Open;
    r.justification = Justification::OpenCase;
  }
  return r;
}

inline json to_json(const SatakeDiagram& d) {
  json nodes = json::array();
  for (int i = 1; i <= d.rank(); ++i) nodes.push_back({{"id", i}, {"color", d.black[i - 1] ? "black" : "white"}});
  json edges = json::array();
  for (const auto& e : d.base.edges) edges.push_back({e.i, e.j, e.multiplicity});
  json arrows = json::array();
  for (auto [a, b] : d.arrows) arrows.push_back({a, b});
  return {{"type", d.base.type_label()}, {"nodes", nodes}, {"edges", edges}, {"arrows", arrows}};
}

inline json to_json(const FormFlags& f) {
  return {{"split", f.split}, {"compact", f.compact}, {"complex", f.complex},
          {"inner_type", f.inner_type}, {"hermitian", f.hermitian}};
}

inline json to_json(const RealFormRecord& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json j = {{"name", r.name},
            {"family", r.family},
            {"params", params},
            {"classical", r.classical},
            {"flags", to_json(r.flags)},
            {"diagram", to_json(r.diagram)},
            {"restricted_rank", restricted_rank(r)},
            {"realization", r.realization.empty() ? json(nullptr) : json(r.realization)}};
  if (r.canonical) j["canonical"] = *r.canonical;
  return j;
}

inline json to_json(const SurjectivityReport& r) {
  return {{"schema", "commap.status/1"},
          {"name", r.name},
          {"verdict", to_string(r.verdict)},
          {"justification", to_string(r.justification)},
          {"arrow_count", r.arrow_count},
          {"center_dim_m", r.center_dim_m}};
}

}  // namespace commap
