// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include <map>

#include "doctest.h"
#include "qtrep/symfunc.hpp"

using namespace qtrep;

TEST_CASE("sparse polynomial arithmetic") {
  SymPoly a(2);
  a.add_term({1, 0}, 2);
  a.add_term({0, 1}, 2);  // a = 2x + 2y
  SymPoly b(2);
  b.add_term({1, 0}, 1);
  b.add_term({0, 1}, -1);  // b = x - y
  const SymPoly prod = a * b;  // 2x^2 - 2y^2
  CHECK(prod.coefficient({2, 0}) == 2);
  CHECK(prod.coefficient({0, 2}) == -2);
  CHECK(prod.coefficient({1, 1}) == 0);
  CHECK_THROWS_AS(a.add_term({1, 0, 0}, 1), ShapeMismatch);

  SymPoly c = Int(3) * a;
  CHECK(c.coefficient({1, 0}) == 6);
  c.divide_exact(3);
  CHECK(c == a);
  SymPoly d(2);
  d.add_term({1, 0}, 3);
  CHECK_THROWS_AS(d.divide_exact(2), BasisSolveFailure);
}

TEST_CASE("monomial symmetric polynomials expand full orbits") {
  const SymPoly m21 = monomial_sym(StrictPartition({2, 1}), 3);
  // Orbit of x^2 y in three variables: 6 distinct exponent vectors.
  CHECK(m21.coefficient({2, 1, 0}) == 1);
  CHECK(m21.coefficient({0, 1, 2}) == 1);
  CHECK(m21.coefficient({1, 1, 1}) == 0);
  // Too few variables: the orbit is empty.
  const SymPoly squeezed = monomial_sym(StrictPartition({2, 1}), 1);
  CHECK(squeezed == SymPoly(1));
}

TEST_CASE("one-row generators match their product expansion") {
  // q_1 = 2 m_1, q_2 = 2 m_2 + 4 m_11.
  const SymPoly q1 = q_generator(1, 3);
  CHECK(q1 == Int(2) * monomial_sym(StrictPartition({1}), 3));
  const SymPoly q2 = q_generator(2, 3);
  SymPoly expected = Int(2) * monomial_sym(StrictPartition({2}), 3);
  SymPoly pairs(3);
  pairs.add_term({1, 1, 0}, 4);
  pairs.add_term({1, 0, 1}, 4);
  pairs.add_term({0, 1, 1}, 4);
  expected += pairs;
  CHECK(q2 == expected);
  // q_0 = 1.
  SymPoly one(3);
  one.add_term({0, 0, 0}, 1);
  CHECK(q_generator(0, 3) == one);
}

TEST_CASE("two-row expansion in the monomial basis") {
  // Q_{(2,1)} = 4 m_{21} + 8 m_{111}, and equals q_2 q_1 - 2 q_3.
  const SymPoly q21 = schur_q(StrictPartition({2, 1}), 3);
  SymPoly m111(3);
  m111.add_term({1, 1, 1}, 1);
  const SymPoly direct =
      Int(4) * monomial_sym(StrictPartition({2, 1}), 3) + Int(8) * m111;
  CHECK(q21 == direct);

  const SymPoly via_generators =
      q_generator(2, 3) * q_generator(1, 3) - Int(2) * q_generator(3, 3);
  CHECK(q21 == via_generators);
}

TEST_CASE("leading monomial is 2^length times the shape") {
  for (int n = 1; n <= 5; ++n) {
    for (const StrictPartition& lambda : enumerate_strict(n)) {
      const SymPoly q = schur_q(lambda, n);
      std::vector<int> exps(static_cast<std::size_t>(n), 0);
      for (int i = 0; i < lambda.length(); ++i) {
        exps[static_cast<std::size_t>(i)] =
            lambda.parts()[static_cast<std::size_t>(i)];
      }
      CHECK(q.leading_exponents() == exps);
      CHECK(q.coefficient(exps) ==
            pow2(static_cast<unsigned>(lambda.length())));
    }
  }
}

TEST_CASE("halving gives an integral polynomial") {
  const SymPoly p21 = schur_p(StrictPartition({2, 1}), 3);
  // P_{(2,1)} = Q_{(2,1)} / 4 = m_{21} + 2 m_{111}.
  CHECK(p21.coefficient({2, 1, 0}) == 1);
  CHECK(p21.coefficient({1, 1, 1}) == 2);
}

TEST_CASE("products resolve into structure constants") {
  using Table = std::map<StrictPartition, Int>;

  // Q_1 Q_1 = 2 Q_2.
  const Table square = q_structure_constants(StrictPartition({1}),
                                             StrictPartition({1}));
  CHECK(square == Table{{StrictPartition({2}), Int(2)}});

  // Q_2 Q_1 = 2 Q_3 + Q_21.
  const Table mixed = q_structure_constants(StrictPartition({2}),
                                            StrictPartition({1}));
  CHECK(mixed == Table{{StrictPartition({3}), Int(2)},
                       {StrictPartition({2, 1}), Int(1)}});

  // Q_21 Q_1 = 2 Q_31.
  const Table tall = q_structure_constants(StrictPartition({2, 1}),
                                           StrictPartition({1}));
  CHECK(tall == Table{{StrictPartition({3, 1}), Int(2)}});

  // Multiplying by the empty shape is the identity.
  const Table unit = q_structure_constants(StrictPartition({3, 1}),
                                           StrictPartition());
  CHECK(unit == Table{{StrictPartition({3, 1}), Int(1)}});
}
