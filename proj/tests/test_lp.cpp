#include "commap/lp.hpp"

#include <gtest/gtest.h>

using namespace commap;

TEST(Lp, SmallMaximization) {
  // max x + 2y, x + y + s = 4, x + 3y + t = 6  ->  x = 3, y = 1.
  MatrixXd a(2, 4);
  a << 1, 1, 1, 0, 1, 3, 0, 1;
  VectorXd b(2), c(4);
  b << 4, 6;
  c << 1, 2, 0, 0;
  const lp::Solution s = lp::maximize(a, b, c);
  ASSERT_EQ(s.status, lp::Status::Optimal);
  EXPECT_NEAR(s.value, 5.0, 1e-12);
  EXPECT_NEAR(s.x(0), 3.0, 1e-12);
  EXPECT_NEAR(s.x(1), 1.0, 1e-12);
}

TEST(Lp, Infeasible) {
  MatrixXd a(1, 1);
  a << 1;
  VectorXd b(1), c(1);
  b << -1;
  c << 1;
  EXPECT_EQ(lp::maximize(a, b, c).status, lp::Status::Infeasible);
}

TEST(Lp, Unbounded) {
  MatrixXd a(1, 2);
  a << 1, -1;
  VectorXd b(1), c(2);
  b << 0;
  c << 1, 0;
  EXPECT_EQ(lp::maximize(a, b, c).status, lp::Status::Unbounded);
}

TEST(Lp, HullMembershipSlack) {
  MatrixXd square(2, 4);
  square << 1, -1, -1, 1, 1, 1, -1, -1;
  EXPECT_NEAR(lp::hull_membership_slack(square, VectorXd::Zero(2)), 0.25, 1e-12);
  VectorXd edge(2);
  edge << 1, 0;
  EXPECT_NEAR(lp::hull_membership_slack(square, edge), 0.0, 1e-12);
  VectorXd outside(2);
  outside << 1.5, 0;
  EXPECT_LT(lp::hull_membership_slack(square, outside), -1e-3);
}
