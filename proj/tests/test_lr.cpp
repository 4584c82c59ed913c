// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include <map>

#include "doctest.h"
#include "qtrep/lr.hpp"
#include "qtrep/parity_ring.hpp"
#include "qtrep/partitions.hpp"

using namespace qtrep;

TEST_CASE("single-box products") {
  // Q_1 Q_1 = 2 Q_2 lifts to f((1),(1) -> (2)) = theta.
  const auto table = f_expand(StrictPartition({1}), StrictPartition({1}));
  REQUIRE(table.size() == 1);
  CHECK(table.at(StrictPartition({2})) == GradedInt(2, 2));

  CHECK(f_coeff(StrictPartition({1}), StrictPartition(),
                StrictPartition({1})) == theta());
  CHECK(f_coeff(StrictPartition({1}), StrictPartition({1}),
                StrictPartition({2})) == GradedInt(2, 2));
}

TEST_CASE("a two-row product with both odd and even targets") {
  // Q_21 Q_1 = 2 Q_31: a single target with coefficient theta.
  const auto table = f_expand(StrictPartition({2, 1}), StrictPartition({1}));
  REQUIRE(table.size() == 1);
  CHECK(table.at(StrictPartition({3, 1})) == theta());

  // Q_2 Q_1 = 2 Q_3 + Q_21 lifts to theta^2 at (3) and theta at (2,1):
  // total dimensions 4 and 2 recover the ungraded coefficients 2 and 1
  // after one halving each.
  const auto mixed = f_expand(StrictPartition({2}), StrictPartition({1}));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed.at(StrictPartition({3})) == GradedInt(2, 2));
  CHECK(mixed.at(StrictPartition({2, 1})) == theta());
}

TEST_CASE("coefficients at shapes outside the product vanish") {
  CHECK(f_coeff(StrictPartition({1}), StrictPartition({1}),
                StrictPartition({2, 1})) == GradedInt());
  // Right size, but (4) is not reachable from (2,1) by adding one box.
  CHECK(f_coeff(StrictPartition({2, 1}), StrictPartition({1}),
                StrictPartition({4})) == GradedInt());
}

TEST_CASE("empty factor acts as a graded identity") {
  for (int n = 0; n <= 4; ++n) {
    for (const StrictPartition& lambda : enumerate_strict(n)) {
      for (const StrictPartition& mu : enumerate_strict(n)) {
        const GradedInt f = f_coeff(lambda, StrictPartition(), mu);
        if (lambda == mu) {
          // theta^p(lambda) as a graded value: (1,0) for even shapes,
          // (1,1) for odd ones.
          const GradedInt expected = lambda.parity() == 0
                                         ? GradedInt(1, 0)
                                         : GradedInt(1, 1);
          CHECK(f == expected);
        } else {
          CHECK(f == GradedInt());
        }
      }
    }
  }
}

TEST_CASE("one box added matches the rim rule") {
  // f(nu, (1) -> mu) = theta^{p(nu) p(mu) + 1} when mu grows nu by one box.
  for (int n = 0; n <= 5; ++n) {
    for (const StrictPartition& nu : enumerate_strict(n)) {
      for (const StrictPartition& mu : enumerate_strict(n + 1)) {
        const GradedInt direct = f_coeff(nu, StrictPartition({1}), mu);
        CHECK(direct == pieri_f(nu, mu));
      }
    }
  }

  // Spot values: theta^1 = theta when the parities multiply to zero,
  // theta^2 = (2,2) when both shapes are odd.
  CHECK(pieri_f(StrictPartition({1}), StrictPartition({2})) ==
        GradedInt(2, 2));
  CHECK(pieri_f(StrictPartition({2}), StrictPartition({2, 1})) == theta());
  CHECK(pieri_f(StrictPartition({2}), StrictPartition({3, 1})) ==
        GradedInt());
}

TEST_CASE("a genuinely two-box rim") {
  // f((1),(2) -> (3)) = theta^2 and f((1),(2) -> (2,1)) = theta.
  CHECK(f_coeff(StrictPartition({1}), StrictPartition({2}),
                StrictPartition({3})) == GradedInt(2, 2));
  CHECK(f_coeff(StrictPartition({1}), StrictPartition({2}),
                StrictPartition({2, 1})) == theta());
}

TEST_CASE("symmetry in the two lower shapes") {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (const StrictPartition& lambda : enumerate_strict(a)) {
        for (const StrictPartition& nu : enumerate_strict(b)) {
          for (const StrictPartition& mu : enumerate_strict(a + b)) {
            CHECK(f_coeff(lambda, nu, mu) == f_coeff(nu, lambda, mu));
          }
        }
      }
    }
  }
}

TEST_CASE("every coefficient is consistent with its own table") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (const StrictPartition& lambda : enumerate_strict(a)) {
        for (const StrictPartition& nu : enumerate_strict(b)) {
          const auto table = f_expand(lambda, nu);
          for (const StrictPartition& mu : enumerate_strict(a + b)) {
            const auto it = table.find(mu);
            const GradedInt expected =
                it == table.end() ? GradedInt() : it->second;
            CHECK(f_coeff(lambda, nu, mu) == expected);
            // Tables never store explicit zeros.
            if (it != table.end()) CHECK(!it->second.is_zero());
          }
        }
      }
    }
  }
}
