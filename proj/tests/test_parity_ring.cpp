// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include "doctest.h"
#include "qtrep/parity_ring.hpp"

using namespace qtrep;

TEST_CASE("ring arithmetic follows eps^2 = 1") {
  const GradedInt a(2, 3);
  const GradedInt b(5, -1);
  CHECK(a + b == GradedInt(7, 2));
  CHECK(a - b == GradedInt(-3, 4));
  // (2 + 3e)(5 - e) = 10 - 2e + 15e - 3e^2 = 7 + 13e.
  CHECK(a * b == GradedInt(7, 13));
  CHECK(Int(4) * a == GradedInt(8, 12));
}

TEST_CASE("theta powers collapse to 2^{k-1} theta") {
  CHECK(theta_pow(0) == GradedInt(1, 0));
  CHECK(theta_pow(1) == GradedInt(1, 1));
  CHECK(theta_pow(2) == GradedInt(2, 2));
  CHECK(theta_pow(5) == GradedInt(16, 16));
  // Against plain repeated multiplication.
  GradedInt x(1, 0);
  for (int k = 0; k <= 6; ++k) {
    CHECK(x == theta_pow(static_cast<unsigned>(k)));
    x = x * theta();
  }
}

TEST_CASE("the two evaluations and the theta-multiple test") {
  const GradedInt x(5, 3);
  CHECK(eval_plus(x) == 8);
  CHECK(eval_minus(x) == 2);
  CHECK(!is_theta_multiple(x));
  CHECK(is_theta_multiple(GradedInt(4, 4)));
  CHECK(is_theta_multiple(GradedInt(0, 0)));
}

TEST_CASE("division of theta-multiples by theta powers returns the total") {
  // (4 + 4e) / theta^2 has total 8 / 4 = 2.
  CHECK(theta_div_total(GradedInt(4, 4), 2) == 2);
  CHECK(theta_div_total(GradedInt(1, 1), 1) == 1);
  CHECK(theta_div_total(GradedInt(7, 2), 0) == 9);  // k = 0: plain total
  CHECK(theta_div_total(GradedInt(0, 0), 3) == 0);
}

TEST_CASE("failed divisions are hard failures") {
  // Not a theta-multiple.
  CHECK_THROWS_AS(theta_div_total(GradedInt(3, 1), 1), NotThetaDivisible);
  // Theta-multiple but total not divisible by 2^k.
  CHECK_THROWS_AS(theta_div_total(GradedInt(1, 1), 2), NotThetaDivisible);
}

TEST_CASE("text form compacts cleanly") {
  CHECK(to_string(GradedInt(0, 0)) == "0");
  CHECK(to_string(GradedInt(3, 0)) == "3");
  CHECK(to_string(GradedInt(1, 1)) == "1 + eps");
  CHECK(to_string(GradedInt(0, 2)) == "2*eps");
}
