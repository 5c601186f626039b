#include "commap/io.hpp"
#include "commap/realizations.hpp"

#include <gtest/gtest.h>

using namespace commap;

TEST(Io, ElementRoundTrip) {
  const MatrixLieAlgebra g = build_algebra("su(1,2)");
  Rng rng(1);
  const Element x = random_element(g, g.whole(), rng);
  const json j = element_to_json(g, "su(1,2)", x);
  EXPECT_EQ(j["schema"], "commap.element/1");
  const Element back = element_from_json(g, "su(1, 2)", json::parse(j.dump()));
  EXPECT_LT((back.coords - x.coords).norm(), 1e-14);
}

TEST(Io, CoordsAndZero) {
  const MatrixLieAlgebra g = build_algebra("sl(2,R)");
  EXPECT_EQ(element_from_json(g, "sl(2,R)", json::parse(R"({"zero": true})")).norm(), 0.0);
  const Element c = element_from_json(g, "sl(2,R)", json::parse(R"({"coords": [1, 2, 3]})"));
  EXPECT_EQ(c.coords(2), 3.0);
  EXPECT_THROW(element_from_json(g, "sl(2,R)", json::parse(R"({"coords": [1, 2]})")), Error);
  EXPECT_THROW(element_from_json(g, "sl(2,R)", json::parse(R"({})")), Error);
}

TEST(Io, MismatchedAlgebra) {
  const MatrixLieAlgebra g = build_algebra("sl(2,R)");
  const json j = element_to_json(g, "su(1,1)", g.zero());
  try {
    element_from_json(g, "sl(2,R)", j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MismatchedAlgebras);
  }
}

TEST(Io, RejectsNonMemberMatrix) {
  const MatrixLieAlgebra g = build_algebra("sl(2,R)");
  const json j = {{"matrix", {{1.0, 0.0}, {0.0, 1.0}}}};
  try {
    element_from_json(g, "sl(2,R)", j);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BadInput);
  }
  EXPECT_THROW(matrix_from_json(json::parse("[[1, 2], [3]]")), Error);
}

TEST(Io, WitnessRoundTrip) {
  const MatrixLieAlgebra g = build_algebra("sl(3,R)");
  const CommutatorSolver solver(g, load_catalog().lookup("sl(3,R)").flags);
  Rng rng(2);
  const CommutatorWitness w = solver.solve(random_element(g, g.whole(), rng));
  const json j = json::parse(witness_to_json(g, "sl(3,R)", w).dump());
  EXPECT_EQ(j["schema"], "commap.witness/1");
  EXPECT_EQ(j["method"], "Split");
  const CommutatorWitness back = commutator_witness_from_json(g, j);
  EXPECT_EQ(back.method, Method::Split);
  const VerificationReport r = verify_witness(g, back);
  EXPECT_TRUE(r.pass) << r.message;
  EXPECT_TRUE(r.certificate_valid);
  EXPECT_EQ(to_json(r)["schema"], "commap.verification/1");
}

TEST(Io, TwoCommutatorWitnessRoundTrip) {
  const MatrixLieAlgebra g = build_algebra("su(1,1)");
  const CommutatorSolver solver(g, load_catalog().lookup("su(1,1)").flags);
  Rng rng(3);
  const TwoCommutatorWitness w = solver.solve_two_commutators(random_element(g, g.whole(), rng));
  const json j = json::parse(witness_to_json(g, "su(1,1)", w).dump());
  EXPECT_EQ(j["schema"], "commap.two_commutator_witness/1");
  EXPECT_TRUE(verify_witness(g, two_commutator_witness_from_json(g, j)).pass);
}

TEST(Io, MethodNames) {
  for (Method m : {Method::InP, Method::Split, Method::Compact, Method::General, Method::Inner, Method::Complex,
                   Method::TwoCommutator})
    EXPECT_EQ(method_from_string(to_string(m)), m);
  EXPECT_THROW(method_from_string("fourier"), Error);
}
