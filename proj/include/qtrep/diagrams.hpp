// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qtrep/parity_ring.hpp"

namespace qtrep {

// Marked diagrams: the combinatorial basis D(p,q,r) of the morphism space
// C(p,q,r) from the (p,q) mixed tensor power to the (p-r, q-r) one.
//
// A diagram has a top row of p white and q black nodes (labelled 1..p and
// p+1..p+q) and a bottom row of p-r white and q-r black nodes (labelled
// 1..p-r and p+1-r..p+q-2r).  r disjoint top-top edges pair a white with a
// black node; every bottom node connects to a same-colored top node; every
// edge is marked or unmarked.
//
// Composition stacks the later diagram below the earlier one: the earlier
// diagram's bottom labels coincide with the later one's top labels.  Paths
// are traced through the middle row and an edge of the composite is marked
// iff it passes an odd number of marked edges.
class Diagram {
 public:
  struct Pair {
    int white = 0;  // top label in 1..p
    int black = 0;  // top label in p+1..p+q
    bool marked = false;
    bool operator==(const Pair&) const = default;
    auto operator<=>(const Pair&) const = default;
  };
  struct Strand {
    int top = 0;  // top label; the bottom label is implied by position
    bool marked = false;
    bool operator==(const Strand&) const = default;
    auto operator<=>(const Strand&) const = default;
  };

  // whites[i] is the strand ending at bottom white i+1 (labels 1..p-r);
  // blacks[j] is the strand ending at bottom black p-r+1+j.  Validates all
  // diagram rules; pairs are stored sorted by white label.
  Diagram(int p, int q, std::vector<Strand> whites, std::vector<Strand> blacks,
          std::vector<Pair> pairs);

  int p() const { return p_; }
  int q() const { return q_; }
  int r() const { return static_cast<int>(pairs_.size()); }
  const std::vector<Strand>& whites() const { return whites_; }
  const std::vector<Strand>& blacks() const { return blacks_; }
  const std::vector<Pair>& pairs() const { return pairs_; }

  bool operator==(const Diagram&) const = default;
  auto operator<=>(const Diagram&) const = default;

  std::string to_string() const;

  // Elementary diagrams.  Notation matches the usual presentation of the
  // diagram algebra: s = adjacent transposition, o = single mark,
  // t = contraction of the last white with the first black node.
  static Diagram identity(int p, int q);
  static Diagram s(int p, int q, int i);  // i in 1..p+q-1, i != p
  static Diagram o(int p, int q, int i);  // i in 1..p+q
  static Diagram t(int p, int q);         // requires p, q >= 1

 private:
  int p_;
  int q_;
  std::vector<Strand> whites_;
  std::vector<Strand> blacks_;
  std::vector<Pair> pairs_;
};

// |D(p,q,r)| = 2^{p+q-r} p! q! / r!  (0 when r > min(p,q)).
Int diagram_count(int p, int q, int r);

// Graded dimension of C(p,q,r): theta^{p+q-r} p! q! / r!, and 0 when
// r > min(p,q).
GradedInt dim_c(int p, int q, int r);

// Graded dimension of the degree-r layer of the algebra truncated at
// p+q <= k: the sum of dim_c(p,q,r) over p+q <= k.
GradedInt graded_dim_A(int k, int r);

// All diagrams of D(p,q,r), deterministically ordered.
std::vector<Diagram> enumerate_diagrams(int p, int q, int r);

// Composite of d1 followed by d2 (d2 is stacked below d1); requires
// d2.p == d1.p - d1.r and d2.q == d1.q - d1.r, else throws ShapeMismatch.
Diagram concat(const Diagram& d1, const Diagram& d2);

// One factor of a canonical decomposition.
struct ElementaryDiagram {
  enum class Kind { S, O, T };
  Kind kind;
  int p = 0;
  int q = 0;
  int i = 0;  // strand index for S and O; unused for T

  Diagram to_diagram() const;
  bool operator==(const ElementaryDiagram&) const = default;
};

// Deterministic decomposition of d into elementary diagrams, listed in
// normal order: all T factors first, then O factors (ascending index), then
// S factors.  Factors apply right to left: folding the list from its back
// with concat (earlier-applied on top) reproduces d exactly, marks included.
std::vector<ElementaryDiagram> canonical_decomposition(const Diagram& d);

// Folds a decomposition back into a diagram (right-to-left application);
// used by round-trip checks.  `p`, `q` give the shape of the identity to
// start from when the sequence is empty.
Diagram compose_word(int p, int q, const std::vector<ElementaryDiagram>& word);

}  // namespace qtrep
