#include "commap/commap.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

using namespace commap;

namespace {

// "su 1 2" -> "su(1,2)", "sl2r" -> "sl(2,R)"; anything with parentheses passes through.
std::string algebra_name(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw Error(ErrorCode::BadInput, "no algebra given");
  if (tokens.size() == 1) {
    const std::string& t = tokens.front();
    static const std::regex compact(R"(^([a-z]+\*?)(\d+)([rch])$)", std::regex::icase);
    std::smatch m;
    if (std::regex_match(t, m, compact)) {
      std::string field = m[3].str();
      field[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(field[0])));
      return m[1].str() + "(" + m[2].str() + "," + field + ")";
    }
    static const std::regex bare(R"(^([a-z]+\*?)(\d+)$)");
    if (std::regex_match(t, m, bare)) return m[1].str() + "(" + m[2].str() + ")";
    return t;
  }
  std::string out = tokens.front() + "(";
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    std::string t = tokens[i];
    if (t.size() == 1 && std::isalpha(static_cast<unsigned char>(t[0])))
      t[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(t[0])));
    out += (i > 1 ? "," : "") + t;
  }
  return out + ")";
}

std::vector<std::string> split_params(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::BadInput, "cannot read " + path);
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::BadInput, path + ": " + e.what());
  }
}

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ConvergenceFailure:
    case ErrorCode::SolveFailure:
    case ErrorCode::RegularityExhausted:
      return 1;
    default:
      return 2;
  }
}

std::string status_line(const std::string& requested, const RealFormRecord& rec) {
  const SurjectivityReport r = surjectivity_status(rec);
  std::string head = Catalog::normalize_name(requested);
  if (head != rec.name) head += " = " + rec.name;
  return head + ": " + to_string(r.verdict) + " (" + describe(r.justification) + ")";
}

json status_json(const std::string& requested, const RealFormRecord& rec) {
  json j = to_json(surjectivity_status(rec));
  j["requested"] = Catalog::normalize_name(requested);
  return j;
}

json inspect_json(const RealFormRecord& rec, const MatrixLieAlgebra& g, std::uint64_t seed) {
  const CartanStructure cs = analyze(g, seed);
  const auto roots = restricted_roots(cs, seed);
  std::vector<int> mult;
  for (const auto& r : roots) mult.push_back(r.multiplicity);
  std::sort(mult.begin(), mult.end());
  return {{"schema", "commap.inspect/1"},
          {"record", to_json(rec)},
          {"realized_as", g.name()},
          {"ambient_size", g.ambient_size()},
          {"dims",
           {{"g", g.dim()},
            {"k", cs.k.dim()},
            {"p", cs.p.dim()},
            {"a", cs.a.dim()},
            {"m", cs.m.dim()},
            {"t", cs.t.dim()},
            {"h", cs.h.dim()},
            {"center_k", cs.c.dim()},
            {"center_m", cs.center_m.dim()}}},
          {"m_semisimple", is_semisimple_subalgebra(g, cs.m)},
          {"restricted_root_count", roots.size()},
          {"restricted_root_multiplicities", mult}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commutator witnesses and surjectivity of the commutator map on real simple Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON");

  std::uint64_t seed = 1;
  if (const char* env = std::getenv("COMMAP_SEED")) seed = std::strtoull(env, nullptr, 10);

  auto* catalog_cmd = app.add_subcommand("catalog", "List catalog entries with their verdicts");
  int max_rank = 8;
  catalog_cmd->add_option("--max-rank", max_rank, "Largest rank of family instances")->check(CLI::Range(1, 40));

  auto* status_cmd = app.add_subcommand("status", "Surjectivity verdict for one algebra");
  std::vector<std::string> status_tokens;
  status_cmd->add_option("algebra", status_tokens, "Algebra, e.g. su 1 2 or sl(2,H)")->required();

  auto* inspect_cmd = app.add_subcommand("inspect", "Cartan-structure dimensions of a realized algebra");
  std::vector<std::string> inspect_tokens;
  inspect_cmd->add_option("algebra", inspect_tokens, "Algebra name")->required();
  inspect_cmd->add_option("--seed", seed, "Random seed");

  auto* decompose_cmd = app.add_subcommand("decompose", "Write Z as a commutator; prints witness JSON");
  std::string algebra, params, input, method = "auto";
  bool two = false;
  decompose_cmd->add_option("--algebra", algebra, "Algebra name or family")->required();
  decompose_cmd->add_option("--params", params, "Family parameters, e.g. 1,2");
  decompose_cmd->add_option("--input", input, "Element JSON file, or - for stdin")->required();
  decompose_cmd->add_option("--seed", seed, "Random seed");
  decompose_cmd->add_flag("--two-commutators", two, "Use Z = [X1,Y1] - [X2,Y2]");
  decompose_cmd->add_option("--method", method, "auto, in_p, split, compact, general, inner or complex")
      ->check(CLI::IsMember({"auto", "in_p", "split", "compact", "general", "inner", "complex"}));

  auto* verify_cmd = app.add_subcommand("verify", "Recompute a witness residual and certificate");
  std::string witness_file;
  verify_cmd->add_option("witness", witness_file, "Witness JSON file")->required();

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the invariant suites");
  std::vector<std::string> families;
  int trials = 5;
  selftest_cmd->add_option("--families", families, "Algebra names (default: built-in set)");
  selftest_cmd->add_option("--trials", trials, "Trials per suite")->check(CLI::Range(1, 1000));
  selftest_cmd->add_option("--seed", seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share the exit status of other unsupported requests.
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    const Catalog& cat = load_catalog();
    if (*catalog_cmd) {
      json out = json::array();
      for (const auto& rec : cat.enumerate(max_rank)) {
        if (as_json) {
          json j = to_json(rec);
          j["status"] = to_json(surjectivity_status(rec));
          out.push_back(j);
        } else {
          std::cout << status_line(rec.name, rec) << "\n";
        }
      }
      if (as_json)
        std::cout << json{{"schema", "commap.listing/1"}, {"max_rank", max_rank}, {"entries", out}}.dump(2) << "\n";
      return 0;
    }
    if (*status_cmd) {
      const std::string name = algebra_name(status_tokens);
      const RealFormRecord rec = cat.lookup(name);
      if (as_json) std::cout << status_json(name, rec).dump(2) << "\n";
      else std::cout << status_line(name, rec) << "\n";
      return 0;
    }
    if (*inspect_cmd) {
      const std::string name = algebra_name(inspect_tokens);
      const RealFormRecord rec = cat.lookup(name);
      const MatrixLieAlgebra g = build_algebra(name);
      const json j = inspect_json(rec, g, seed);
      if (as_json) {
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << g.name() << " in gl(" << g.ambient_size() << ",R)\n";
        for (const auto& [k, v] : j["dims"].items()) std::cout << "  dim " << k << " = " << v << "\n";
        std::cout << "  m semisimple: " << (j["m_semisimple"].get<bool>() ? "yes" : "no") << "\n";
        std::cout << "  restricted roots: " << j["restricted_root_count"] << "\n";
        std::cout << "  " << status_line(name, rec) << "\n";
      }
      return 0;
    }
    if (*decompose_cmd) {
      std::vector<std::string> tokens{algebra};
      for (auto& p : split_params(params)) tokens.push_back(p);
      const std::string name = algebra_name(tokens);
      const RealFormRecord rec = cat.lookup(name);
      const MatrixLieAlgebra g = build_algebra(name);
      const Element z = element_from_json(g, g.name(), read_json(input));
      CommutatorSolver solver(g, rec.flags, seed);
      if (two) {
        const TwoCommutatorWitness w = solver.solve_two_commutators(z, seed);
        std::cout << witness_to_json(g, g.name(), w).dump(2) << "\n";
        return verify_witness(g, w).pass ? 0 : 1;
      }
      CommutatorWitness w;
      if (method == "auto") w = solver.solve(z, seed);
      else if (method == "in_p") w = solver.solve_in_p(z, seed);
      else if (method == "split") w = solver.solve_split(z, seed);
      else if (method == "compact") w = solver.solve_compact(z, seed);
      else if (method == "general") w = solver.solve_general(z, seed);
      else if (method == "inner") w = solver.solve_inner(z, seed);
      else w = solver.solve_complex(z, seed);
      std::cout << witness_to_json(g, g.name(), w).dump(2) << "\n";
      return verify_witness(g, w).pass ? 0 : 1;
    }
    if (*verify_cmd) {
      const json j = read_json(witness_file);
      const std::string name = j.at("algebra").at("name");
      const MatrixLieAlgebra g = build_algebra(name);
      const std::string schema = j.value("schema", "");
      VerificationReport r;
      if (schema == "commap.two_commutator_witness/1") r = verify_witness(g, two_commutator_witness_from_json(g, j));
      else if (schema == "commap.witness/1") r = verify_witness(g, commutator_witness_from_json(g, j));
      else throw Error(ErrorCode::BadInput, "unknown witness schema '" + schema + "'");
      if (as_json) std::cout << to_json(r).dump(2) << "\n";
      else std::cout << (r.pass ? "PASS" : "FAIL") << " residual " << r.residual << " (" << r.message << ")\n";
      return r.pass ? 0 : 1;
    }
    if (*selftest_cmd) {
      SelftestOptions opt;
      opt.seed = seed;
      opt.trials = trials;
      opt.algebras = families;
      const json report = run_selftest(opt);
      if (as_json) {
        std::cout << report.dump(2) << "\n";
      } else {
        std::cout << std::left << std::setw(12) << "algebra" << std::setw(20) << "suite" << std::setw(10) << "passed"
                  << "worst\n";
        for (const auto& s : report["suites"])
          std::cout << std::setw(12) << s["algebra"].get<std::string>() << std::setw(20)
                    << s["suite"].get<std::string>() << std::setw(10)
                    << (std::to_string(s["passed"].get<int>()) + "/" + std::to_string(s["trials"].get<int>()))
                    << s["worst"].get<double>() << "\n";
        std::cout << (report["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
      }
      return report["pass"].get<bool>() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return 0;
}
