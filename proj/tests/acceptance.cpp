// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "commap/commap.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

using namespace commap;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << v;
  return s.str();
}

struct Built {
  RealFormRecord rec;
  std::unique_ptr<MatrixLieAlgebra> g;
  std::unique_ptr<CommutatorSolver> solver;
};

// Every realizable catalog entry with matrices of size at most 12.
std::vector<Built>& small_algebras() {
  static std::vector<Built> out = [] {
    std::vector<Built> v;
    for (const RealFormRecord& rec : load_catalog().enumerate(11)) {
      int n = 0;
      try {
        n = ambient_size(rec);
      } catch (const Error&) {
        continue;
      }
      if (n > 12) continue;
      Built b{rec, std::make_unique<MatrixLieAlgebra>(build_algebra(rec.name)), nullptr};
      b.solver = std::make_unique<CommutatorSolver>(*b.g, rec.flags, 0x5eed ^ detail::name_hash(rec.name));
      v.push_back(std::move(b));
    }
    return v;
  }();
  return out;
}

Outcome classification() {
  const auto t0 = Clock::now();
  std::ifstream in(std::string(COMMAP_GOLDEN_DIR) + "/status.txt");
  std::map<std::string, std::string> golden;
  std::string name, verdict;
  while (in >> name >> verdict) golden[name] = verdict;
  int mismatches = 0, checked = 0;
  for (const auto& rec : load_catalog().enumerate(8)) {
    ++checked;
    const auto it = golden.find(rec.name);
    if (it == golden.end() || it->second != to_string(surjectivity_status(rec).verdict)) ++mismatches;
    if (it != golden.end()) golden.erase(it);
  }
  mismatches += static_cast<int>(golden.size());
  const double dt = seconds_since(t0);
  return {checked > 0 && mismatches == 0 && dt < 1.0,
          std::to_string(checked) + " entries, " + std::to_string(mismatches) + " mismatches, " + fmt(dt) + " s"};
}

Outcome center_of_m() {
  const auto t0 = Clock::now();
  const char* names[] = {"su(1,2)", "su(2,2)", "so(2,3)", "so(3,4)", "so(4,6)", "sp(1,1)", "sp(1,2)",
                         "sl(2,R)", "sl(3,R)", "sl(2,H)", "su(1,1)", "so(3,3)", "so(2,4)", "so*(6)",
                         "so*(8)",  "su(2,3)", "so(3,5)"};
  int agree = 0, total = 0;
  std::string bad;
  for (const char* name : names) {
    const MatrixLieAlgebra g = build_algebra(name);
    const int zm = analyze(g).center_m.dim();
    const int arrows = arrow_count(load_catalog().lookup(name));
    ++total;
    if (zm == arrows) ++agree;
    else bad += std::string(" ") + name;
  }
  const double dt = seconds_since(t0);
  return {agree == total && total >= 12 && dt < 30.0,
          std::to_string(agree) + "/" + std::to_string(total) + " agree, " + fmt(dt) + " s" + bad};
}

Outcome image_of_ad() {
  const char* names[] = {"sl(3,R)", "su(1,2)", "so(2,3)", "sp(1,2)", "sl(2,H)", "so*(6)", "su(3)", "sl(2,C)"};
  int passed = 0, total = 0;
  double worst = 0;
  for (const char* name : names) {
    const MatrixLieAlgebra g = build_algebra(name);
    const CartanStructure cs = analyze(g);
    Rng rng(detail::name_hash(name));
    for (int i = 0; i < 25; ++i) {
      // Every third element is drawn from a, where centralizers are larger.
      const Subspace& from = (i % 3 == 2 && cs.a.dim() > 0) ? cs.a : g.whole();
      const ImAdReport r = check_im_ad(g, random_element(g, from, rng));
      ++total;
      if (r.pass) ++passed;
      worst = std::max(worst, r.max_angle);
    }
  }
  return {passed == total && total >= 200,
          std::to_string(passed) + "/" + std::to_string(total) + ", worst angle " + fmt(worst)};
}

Outcome general_witnesses() {
  int passed = 0, total = 0, algebras = 0;
  double worst = 0;
  std::vector<double> times;
  std::string bad;
  for (Built& b : small_algebras()) {
    if (arrow_count(b.rec) != 0) continue;
    ++algebras;
    Rng rng(detail::name_hash(b.rec.name) + 4);
    for (int i = 0; i < 50; ++i) {
      const Element x = random_element(*b.g, b.g->whole(), rng);
      const auto t0 = Clock::now();
      bool ok = false;
      try {
        const CommutatorWitness w = b.solver->solve_general(x, 1000 + i);
        const VerificationReport v = verify_witness(*b.g, w);
        ok = v.pass && v.certificate_valid;
        worst = std::max(worst, v.residual);
      } catch (const Error&) {
      }
      times.push_back(seconds_since(t0));
      ++total;
      if (ok) ++passed;
      else if (bad.size() < 200) bad += " " + b.rec.name;
    }
  }
  std::sort(times.begin(), times.end());
  const double median = times.empty() ? 0.0 : times[times.size() / 2];
  return {total > 0 && passed == total && median < 2.0,
          std::to_string(algebras) + " algebras, " + std::to_string(passed) + "/" + std::to_string(total) +
              ", worst residual " + fmt(worst) + ", median " + fmt(median) + " s" + bad};
}

Outcome in_p_witnesses() {
  int passed = 0, total = 0, algebras = 0;
  double worst = 0;
  std::string bad;
  for (Built& b : small_algebras()) {
    if (b.g->dim_p() == 0) continue;
    ++algebras;
    Rng rng(detail::name_hash(b.rec.name) + 5);
    for (int i = 0; i < 50; ++i) {
      const Element x = random_element(*b.g, b.g->p(), rng);
      bool ok = false;
      try {
        const CommutatorWitness w = b.solver->solve_in_p(x, 2000 + i);
        const VerificationReport v = verify_witness(*b.g, w);
        const bool a_in_p = (w.y.coords - b.g->p().project(w.y.coords)).norm() <= 1e-10 * w.y.norm();
        ok = v.pass && v.certificate_valid && a_in_p;
        worst = std::max(worst, v.residual);
      } catch (const Error&) {
      }
      ++total;
      if (ok) ++passed;
      else if (bad.size() < 200) bad += " " + b.rec.name;
    }
  }
  return {total > 0 && passed == total,
          std::to_string(algebras) + " algebras, " + std::to_string(passed) + "/" + std::to_string(total) +
              ", worst residual " + fmt(worst) + bad};
}

Outcome compact_and_split() {
  int passed = 0, total = 0;
  double worst = 0;
  struct Case {
    const char* name;
    bool compact;
  };
  for (const Case c : {Case{"su(2)", true}, Case{"su(3)", true}, Case{"sl(2,R)", false}, Case{"sl(3,R)", false},
                       Case{"sl(4,R)", false}}) {
    const MatrixLieAlgebra g = build_algebra(c.name);
    const CommutatorSolver solver(g, load_catalog().lookup(c.name).flags);
    Rng rng(detail::name_hash(c.name) + 6);
    for (int i = 0; i < 50; ++i) {
      const Element x = random_element(g, g.whole(), rng);
      bool ok = false;
      try {
        const CommutatorWitness w = c.compact ? solver.solve_compact(x, 3000 + i) : solver.solve_split(x, 3000 + i);
        const VerificationReport v = verify_witness(g, w);
        ok = v.pass && v.certificate_valid;
        worst = std::max(worst, v.residual);
      } catch (const Error&) {
      }
      ++total;
      if (ok) ++passed;
    }
  }
  return {passed == total, std::to_string(passed) + "/" + std::to_string(total) + ", worst residual " + fmt(worst)};
}

Outcome convexity() {
  int passed = 0, total = 0;
  double worst_slack = 1e300, worst_center = 0;
  for (const char* name : {"so(2,3)", "su(1,2)"}) {
    const MatrixLieAlgebra g = build_algebra(name);
    const CartanStructure cs = analyze(g);
    const Subspace p_minus_a = ortho_complement(g, cs.a, cs.p);
    Rng rng(detail::name_hash(name) + 7);
    for (int i = 0; i < 50; ++i) {
      const Element x = random_element(g, cs.p, rng);
      bool ok = false;
      try {
        DescentConfig cfg;
        cfg.seed = 4000 + i;
        const FlattenResult f = kostant_flatten(g, x, cs.k, p_minus_a, cfg);
        const VectorXd lambda = cs.a.local(f.image.coords);
        const RestrictedWeylOrbit orbit = weyl_orbit(cs, lambda);
        MatrixXd pts(lambda.size(), static_cast<Eigen::Index>(orbit.points.size()));
        VectorXd center = VectorXd::Zero(lambda.size());
        for (std::size_t j = 0; j < orbit.points.size(); ++j) {
          pts.col(static_cast<Eigen::Index>(j)) = orbit.points[j];
          center += orbit.points[j];
        }
        center /= static_cast<double>(orbit.points.size());
        const MatrixXd k = g.to_matrix(random_element(g, cs.k, rng)).exp();
        const VectorXd y = cs.a.local(conjugate(g, k, x).coords);
        const double slack = lp::hull_membership_slack(pts, y) / std::max(1.0, lambda.norm());
        worst_slack = std::min(worst_slack, slack);
        worst_center = std::max(worst_center, center.norm());
        ok = slack >= -1e-8 && center.norm() <= 1e-10;
      } catch (const Error&) {
      }
      ++total;
      if (ok) ++passed;
    }
  }
  return {passed == total, std::to_string(passed) + "/" + std::to_string(total) + ", worst slack " +
                               fmt(worst_slack) + ", worst mass center " + fmt(worst_center)};
}

Outcome two_commutators() {
  const MatrixLieAlgebra g = build_algebra("su(1,2)");
  const CommutatorSolver solver(g, load_catalog().lookup("su(1,2)").flags);
  Rng rng(8);
  int passed = 0, total = 0;
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const Element z = random_element(g, g.whole(), rng);
    bool ok = false;
    try {
      const VerificationReport v = verify_witness(g, solver.solve_two_commutators(z, 5000 + i));
      ok = v.pass;
      worst = std::max(worst, v.residual);
    } catch (const Error&) {
    }
    ++total;
    if (ok) ++passed;
  }
  return {passed == total, std::to_string(passed) + "/" + std::to_string(total) + ", worst residual " + fmt(worst)};
}

std::string run_cli(const std::string& args, int* status) {
  std::string out;
  FILE* pipe = popen((std::string("\"") + COMMAP_CLI + "\" " + args).c_str(), "r");
  if (!pipe) {
    *status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  *status = pclose(pipe);
  return out;
}

Outcome determinism() {
  int s1 = 0, s2 = 0;
  const std::string a = run_cli("--json selftest --seed 42", &s1);
  const std::string b = run_cli("--json selftest --seed 42", &s2);
  bool parsed = false, all_pass = false;
  try {
    const json j = json::parse(a);
    parsed = true;
    all_pass = j.at("pass").get<bool>();
  } catch (const std::exception&) {
  }
  const bool same = parsed && a == b && s1 == s2;
  return {same, std::string(same ? "identical" : "different") + " reports, " + std::to_string(a.size()) +
                    " bytes, selftest " + (all_pass ? "passing" : "failing")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"classification", classification},  {"center_of_m", center_of_m},
      {"image_of_ad", image_of_ad},        {"general_witnesses", general_witnesses},
      {"in_p_witnesses", in_p_witnesses},  {"compact_and_split", compact_and_split},
      {"convexity", convexity},            {"two_commutators", two_commutators},
      {"determinism", determinism},
  };
  bool all = true;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index << " " << name << ": " << o.detail << " ["
              << fmt(seconds_since(t0)) << " s]" << std::endl;
  }
  return all ? 0 : 1;
}
