// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include <set>
#include <vector>

#include "doctest.h"
#include "qtrep/diagrams.hpp"
#include "qtrep/text_io.hpp"

using namespace qtrep;

TEST_CASE("counting formula against brute enumeration") {
  CHECK(diagram_count(1, 1, 0) == 4);
  CHECK(diagram_count(1, 1, 1) == 2);
  CHECK(diagram_count(2, 1, 1) == 8);
  CHECK(diagram_count(3, 1, 2) == 0);  // r > min(p, q)

  for (int p = 0; p <= 2; ++p) {
    for (int q = 0; q <= 2; ++q) {
      for (int r = 0; r <= 3; ++r) {
        const auto all = enumerate_diagrams(p, q, r);
        CHECK(Int(all.size()) == diagram_count(p, q, r));
        const std::set<Diagram> dedup(all.begin(), all.end());
        CHECK(dedup.size() == all.size());
      }
    }
  }
}

TEST_CASE("graded dimensions") {
  CHECK(dim_c(1, 1, 0) == GradedInt(2, 2));
  CHECK(dim_c(2, 2, 2) == GradedInt(4, 4));
  CHECK(dim_c(3, 1, 2) == GradedInt());
  // Total dimension of C(p,q,r) equals the diagram count.
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q <= 3; ++q) {
      for (int r = 0; r <= 3; ++r) {
        CHECK(eval_plus(dim_c(p, q, r)) == diagram_count(p, q, r));
      }
    }
  }

  CHECK(graded_dim_A(1, 0) == GradedInt(3, 2));  // 1 + 2 theta
  CHECK(graded_dim_A(2, 1) == theta());
  CHECK(graded_dim_A(3, 2) == GradedInt());  // r can never exceed (p+q)/2
}

TEST_CASE("layer recursion for the contraction count") {
  // c(p,q,r) = c(p-1,q,r-1) + (p-r) theta c(p-1,q,r): peel off the first
  // white node, which is either paired (r-1 pairs remain) or runs through
  // (choose its bottom target among p-r, marked or not).
  for (int p = 1; p <= 4; ++p) {
    for (int q = 0; q <= 3; ++q) {
      for (int r = 1; r <= std::min(p, q); ++r) {
        const GradedInt lhs = dim_c(p, q, r);
        const GradedInt rhs = dim_c(p - 1, q, r - 1) +
                              Int(p - r) * (theta() * dim_c(p - 1, q, r));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("identity laws for stacking") {
  for (const Diagram& d : enumerate_diagrams(2, 2, 1)) {
    CHECK(concat(Diagram::identity(2, 2), d) == d);
    CHECK(concat(d, Diagram::identity(1, 1)) == d);
  }
}

TEST_CASE("two marks on one strand cancel") {
  const Diagram o = Diagram::o(1, 0, 1);
  CHECK(concat(o, o) == Diagram::identity(1, 0));
}

TEST_CASE("stacking a marked contraction onto a marked identity") {
  // Top diagram: the identity of shape (2,2) with marks on strands 2 and 3.
  const Diagram top(2, 2,
                    {{.top = 1}, {.top = 2, .marked = true}},
                    {{.top = 3, .marked = true}, {.top = 4}},
                    {});
  // Bottom diagram: pair (2,3) unmarked, bottom white 1 from top 1,
  // bottom black 2 from top 4 with a mark.
  const Diagram bottom(2, 2, {{.top = 1}}, {{.top = 4, .marked = true}},
                       {{.white = 2, .black = 3}});
  // Both marks of the top diagram land on the pair path and cancel, so the
  // composite reproduces the bottom diagram exactly.
  const Diagram composite = concat(top, bottom);
  CHECK(composite == bottom);
  CHECK(composite.r() == 1);
  CHECK(concat(composite, Diagram::identity(1, 1)) == composite);
}

TEST_CASE("stacking requires matching interface rows") {
  const Diagram t = Diagram::t(1, 1);  // lands in shape (0, 0)
  CHECK_THROWS_AS(concat(t, Diagram::identity(1, 1)), ShapeMismatch);
}

TEST_CASE("construction rejects malformed data") {
  using Strand = Diagram::Strand;
  using Pair = Diagram::Pair;
  // A white bottom node fed from a black top node.
  CHECK_THROWS_AS(Diagram(1, 1, {Strand{.top = 2}}, {Strand{.top = 2}}, {}),
                  ShapeMismatch);
  // Top node 1 used by two strands.
  CHECK_THROWS_AS(Diagram(2, 1, {Strand{.top = 1}, Strand{.top = 1}},
                          {Strand{.top = 3}}, {}),
                  ShapeMismatch);
  // Wrong strand count for the declared shape.
  CHECK_THROWS_AS(Diagram(2, 1, {Strand{.top = 1}}, {Strand{.top = 3}}, {}),
                  ShapeMismatch);
  // A pair must join white with black.
  CHECK_THROWS_AS(Diagram(2, 0, {}, {}, {Pair{.white = 1, .black = 2}}),
                  ShapeMismatch);
  // s may not cross the color boundary.
  CHECK_THROWS_AS(Diagram::s(2, 1, 2), ShapeMismatch);
  CHECK_NOTHROW(Diagram::s(2, 1, 1));
  CHECK_THROWS_AS(Diagram::t(2, 0), ShapeMismatch);
}

TEST_CASE("normal-order decomposition round-trips") {
  std::vector<Diagram> pool;
  for (const auto& d : enumerate_diagrams(2, 2, 1)) pool.push_back(d);
  for (const auto& d : enumerate_diagrams(2, 1, 1)) pool.push_back(d);
  for (const auto& d : enumerate_diagrams(1, 1, 0)) pool.push_back(d);
  for (const Diagram& d : pool) {
    const auto word = canonical_decomposition(d);
    CHECK(compose_word(d.p(), d.q(), word) == d);
    // Normal order: contractions, then marks with ascending index, then
    // crossings.
    int phase = 0;
    int last_o_index = 0;
    bool ordered = true;
    for (const ElementaryDiagram& f : word) {
      const int k = f.kind == ElementaryDiagram::Kind::T   ? 0
                    : f.kind == ElementaryDiagram::Kind::O ? 1
                                                           : 2;
      if (k < phase) ordered = false;
      if (k == 1) {
        if (phase == 1 && f.i <= last_o_index) ordered = false;
        last_o_index = f.i;
      }
      phase = k;
    }
    CHECK(ordered);
  }
}

TEST_CASE("text form round-trips") {
  for (const Diagram& d : enumerate_diagrams(2, 2, 1)) {
    const std::string text = diagram_to_text(d);
    CHECK(diagram_from_text(text) == d);
  }
  const std::string id_text = diagram_to_text(Diagram::identity(1, 1));
  CHECK(id_text == "1 1 0 | pairs: | through: 1->1 2->2");
  CHECK(diagram_from_text(id_text) == Diagram::identity(1, 1));
  // A bottom label outside the shape is a shape violation...
  CHECK_THROWS_AS(diagram_from_text("1 1 0 | pairs: | through: 1->3 2->2"),
                  ShapeMismatch);
  // ...while a mangled header or section is a syntax error.
  CHECK_THROWS_AS(diagram_from_text("1 1 | pairs: | through: 1->1 2->2"),
                  ParseError);
  CHECK_THROWS_AS(diagram_from_text("nonsense"), ParseError);
}
