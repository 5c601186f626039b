#include "commap/catalog.hpp"
#include "commap/realizations.hpp"
#include "commap/structure.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace commap;

namespace {

std::vector<int> multiplicities(const std::vector<RestrictedRoot>& roots) {
  std::vector<int> m;
  for (const auto& r : roots) m.push_back(r.multiplicity);
  std::sort(m.begin(), m.end());
  return m;
}

}  // namespace

TEST(Structure, RealRankMatchesDiagram) {
  for (const char* name : {"sl(3,R)", "su(1,2)", "su(2,3)", "so(2,5)", "so(4,6)", "sp(1,2)", "sp(6,R)", "sl(2,H)",
                           "so*(8)", "so*(10)", "sl(3,C)", "su(4)"}) {
    const MatrixLieAlgebra g = build_algebra(name);
    const CartanStructure cs = analyze(g);
    const RealFormRecord rec = load_catalog().lookup(name);
    EXPECT_EQ(cs.a.dim(), restricted_rank(rec)) << name;
    EXPECT_EQ(cs.h.dim(), g.complex_rank()) << name;
    EXPECT_EQ(cs.center_m.dim(), arrow_count(rec)) << name;
    EXPECT_TRUE(is_abelian(g, cs.a)) << name;
  }
}

TEST(Structure, HermitianMeansCenterInK) {
  for (const char* name : {"su(1,2)", "so(2,5)", "sp(6,R)", "so*(8)", "so(4,6)", "sl(3,R)", "sp(1,2)"}) {
    const MatrixLieAlgebra g = build_algebra(name);
    const bool hermitian = load_catalog().lookup(name).flags.hermitian;
    EXPECT_EQ(analyze(g).c.dim() > 0, hermitian) << name;
  }
}

TEST(Structure, SplitAlgebrasHaveTrivialM) {
  for (const char* name : {"sl(4,R)", "so(3,4)", "sp(4,R)"}) {
    const CartanStructure cs = analyze(build_algebra(name));
    EXPECT_EQ(cs.m.dim(), 0) << name;
  }
}

TEST(Structure, RestrictedRootsOfSmallAlgebras) {
  {
    const MatrixLieAlgebra g = build_algebra("sl(3,R)");
    const auto roots = restricted_roots(analyze(g));
    EXPECT_EQ(multiplicities(roots), std::vector<int>(6, 1));
  }
  {
    // BC1: +-alpha with multiplicity 2, +-2alpha with multiplicity 1.
    const MatrixLieAlgebra g = build_algebra("su(1,2)");
    const auto roots = restricted_roots(analyze(g));
    EXPECT_EQ(multiplicities(roots), (std::vector<int>{1, 1, 2, 2}));
    double small = 1e300, large = 0;
    for (const auto& r : roots) {
      small = std::min(small, std::abs(r.values(0)));
      large = std::max(large, std::abs(r.values(0)));
    }
    EXPECT_NEAR(large / small, 2.0, 1e-9);
  }
  {
    // Root multiplicities account for all of g outside z(a).
    const MatrixLieAlgebra g = build_algebra("sp(1,2)");
    const CartanStructure cs = analyze(g);
    int total = 0;
    for (int m : multiplicities(restricted_roots(cs))) total += m;
    EXPECT_EQ(total, g.dim() - cs.m.dim() - cs.a.dim());
  }
}

TEST(Structure, WeylGroupOrders) {
  struct Case {
    const char* name;
    std::size_t order;
  };
  for (const Case c : {Case{"so(2,3)", 8}, Case{"sl(3,R)", 6}, Case{"sl(4,R)", 24}, Case{"su(1,2)", 2},
                       Case{"so(3,5)", 48}, Case{"su(2,3)", 8}}) {
    const MatrixLieAlgebra g = build_algebra(c.name);
    const CartanStructure cs = analyze(g);
    const VectorXd generic = VectorXd::LinSpaced(cs.a.dim(), 1.0, 1.0 + 0.37 * cs.a.dim());
    const RestrictedWeylOrbit orbit = weyl_orbit(cs, generic);
    EXPECT_EQ(orbit.points.size(), c.order) << c.name;
    const MatrixXd gram = cs.a.frame.transpose() * g.killing() * cs.a.frame;
    for (const auto& q : orbit.points)
      EXPECT_NEAR(q.dot(gram * q), generic.dot(gram * generic), 1e-9 * generic.dot(gram * generic)) << c.name;
  }
}

TEST(Structure, WeylOrbitMassCenterVanishes) {
  {
    const MatrixLieAlgebra g = build_algebra("sl(2,R)");
    const CartanStructure cs = analyze(g);
    const RestrictedWeylOrbit orbit = weyl_orbit(cs, VectorXd::Constant(1, 0.7));
    ASSERT_EQ(orbit.points.size(), 2u);
    EXPECT_NEAR(orbit.points[1](0), -0.7, 1e-14);
  }
  for (const char* name : {"so(2,3)", "su(1,2)", "so(4,6)", "sl(2,C)"}) {
    const MatrixLieAlgebra g = build_algebra(name);
    const CartanStructure cs = analyze(g);
    Rng rng(4);
    const Element x = random_element(g, cs.a, rng);
    EXPECT_LE(weyl_orbit_masscenter(x, cs).norm(), 1e-10) << name;
    EXPECT_LE(weyl_orbit_masscenter(g.zero(), cs).norm(), 0.0) << name;
  }
}

TEST(Structure, RegularElementsAreCertified) {
  for (const char* name : {"sl(3,R)", "su(1,2)", "sp(1,2)", "su(3)"}) {
    const MatrixLieAlgebra g = build_algebra(name);
    const CartanStructure cs = analyze(g);
    const auto [a, cert] = regular_element(g, cs.h, 9);
    EXPECT_TRUE(cert.valid()) << name;
    EXPECT_EQ(centralizer(g, a, g.whole()).dim(), g.complex_rank()) << name;
    const auto [ap, certp] = regular_element(g, cs.a, 9, CentralizerScope::P);
    EXPECT_TRUE(certp.valid()) << name;
  }
  // A singular element of h is rejected by the certificate.
  const MatrixLieAlgebra g = build_algebra("sl(3,R)");
  MatrixXd d = MatrixXd::Zero(3, 3);
  d.diagonal() << 1, 1, -2;
  EXPECT_FALSE(certify_regular(g, g.from_matrix(d), 2, CentralizerScope::Algebra).valid());
}

TEST(Structure, MaximalAbelianFallsBackToGenericElement) {
  // In su(p,q) the maximal abelian subspace of p is not diagonal.
  const MatrixLieAlgebra g = build_algebra("su(2,3)");
  const Subspace a = maximal_abelian_in_p(g, g.p());
  EXPECT_EQ(a.dim(), 2);
  EXPECT_EQ(centralizer(g, a, g.p()).dim(), 2);
}
