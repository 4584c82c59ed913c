// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qtrep/diagrams.hpp"
#include "qtrep/gamma.hpp"
#include "qtrep/oracle.hpp"
#include "qtrep/tensor_space.hpp"

using namespace qtrep;

namespace {

// Image of basis index `in` under m: (output index, coefficient).
std::pair<std::uint64_t, int> image(const BasisMonomialMap& m,
                                    std::uint64_t in) {
  return m.entries.at(static_cast<std::size_t>(in));
}

}  // namespace

TEST_CASE("packing basis tensors") {
  const int n = 3;
  const TensorShape shape{2, 1};
  CHECK(tensor_dim(shape, n) == 216);  // (2n)^3
  for (std::uint64_t idx = 0; idx < 216; ++idx) {
    const std::vector<int> digits = unpack_index(idx, shape.slots(), n);
    CHECK(digits.size() == 3);
    CHECK(pack_index(digits, n) == idx);
  }
  // Slot 1 is most significant.
  CHECK(pack_index({1, 0, 0}, n) == 36);
  CHECK(basis_name(TensorShape{1, 1}, {1, 2}, 2) == "e2(x)fbar1");
  CHECK(basis_name(TensorShape{1, 1}, {3, 0}, 2) == "ebar2(x)f1");
}

TEST_CASE("the cap pairs dual basis vectors") {
  const int n = 2;
  const BasisMonomialMap cap = gamma_eval(Diagram::t(1, 1), n);
  CHECK(cap.in == TensorShape{1, 1});
  CHECK(cap.out == TensorShape{0, 0});
  CHECK(cap.entries.size() == 16);

  // e1 (x) f1 -> 1.
  CHECK(image(cap, pack_index({0, 0}, n)) ==
        std::pair<std::uint64_t, int>{0, 1});
  // ebar1 (x) fbar1 -> -1: both slots odd, so the cap sign fires.
  CHECK(image(cap, pack_index({2, 2}, n)) ==
        std::pair<std::uint64_t, int>{0, -1});
  // Mismatched indices or parities pair to zero.
  CHECK(image(cap, pack_index({0, 1}, n)).second == 0);  // e1 (x) f2
  CHECK(image(cap, pack_index({0, 2}, n)).second == 0);  // e1 (x) fbar1
}

TEST_CASE("the mark applies the odd involution") {
  const int n = 2;
  const BasisMonomialMap mark = gamma_eval(Diagram::o(1, 0, 1), n);
  CHECK(mark.in == TensorShape{1, 0});
  CHECK(mark.out == TensorShape{1, 0});
  // e1 -> ebar1, ebar1 -> -e1.
  CHECK(image(mark, 0) == std::pair<std::uint64_t, int>{2, 1});
  CHECK(image(mark, 2) == std::pair<std::uint64_t, int>{0, -1});

  // The mark squares to -1: stacking two marks gives the unmarked identity
  // diagram, whose realization agrees with the composite up to that sign.
  const Diagram o = Diagram::o(1, 0, 1);
  const BasisMonomialMap twice = compose_maps(mark, mark);
  const BasisMonomialMap of_concat = gamma_eval(concat(o, o), n);
  int sign = 0;
  CHECK(equal_up_to_sign(of_concat, twice, &sign));
  CHECK(sign == -1);
}

TEST_CASE("the crossing swaps with the sign rule") {
  const int n = 2;
  const BasisMonomialMap swap = gamma_eval(Diagram::s(2, 0, 1), n);
  // ebar1 (x) ebar2 -> -ebar2 (x) ebar1 (odd times odd).
  CHECK(image(swap, pack_index({2, 3}, n)) ==
        std::pair<std::uint64_t, int>{pack_index({3, 2}, n), -1});
  // e1 (x) e2 -> e2 (x) e1 (no sign).
  CHECK(image(swap, pack_index({0, 1}, n)) ==
        std::pair<std::uint64_t, int>{pack_index({1, 0}, n), 1});
  // e1 (x) ebar1 -> ebar1 (x) e1 (even times odd, no sign).
  CHECK(image(swap, pack_index({0, 2}, n)) ==
        std::pair<std::uint64_t, int>{pack_index({2, 0}, n), 1});
}

TEST_CASE("realization turns stacking into composition up to sign") {
  const int n = 3;
  for (const Diagram& d1 : enumerate_diagrams(2, 1, 1)) {
    const BasisMonomialMap g1 = gamma_eval(d1, n);
    for (const Diagram& d2 : enumerate_diagrams(1, 0, 0)) {
      const BasisMonomialMap g2 = gamma_eval(d2, n);
      const BasisMonomialMap composite = gamma_eval(concat(d1, d2), n);
      int sign = 0;
      CHECK(equal_up_to_sign(composite, compose_maps(g2, g1), &sign));
      CHECK((sign == 1 || sign == -1));
    }
  }
}

TEST_CASE("realizations of distinct diagrams are independent") {
  int rank = 0;
  CHECK(gamma_rank_check(1, 1, 0, 2, &rank));
  CHECK(rank == 4);
  CHECK(gamma_rank_check(1, 1, 1, 2, &rank));
  CHECK(rank == 2);
  CHECK(gamma_rank_check(2, 1, 1, 3, &rank));
  CHECK(rank == 8);
  CHECK_THROWS_AS(gamma_rank_check(2, 1, 1, 2, nullptr), RankTooSmall);
}
