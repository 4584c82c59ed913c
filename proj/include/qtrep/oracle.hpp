// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qtrep/linalg.hpp"
#include "qtrep/partitions.hpp"

namespace qtrep {

// Brute-force verification at finite rank n: the queer superalgebra acting
// on tensor powers of its natural 2n-dimensional module by exact integer
// matrices.  Everything here is deliberately independent of the
// symmetric-function route (module lr): no Schur polynomials, no structure
// constants — only weights, raising/lowering operators and exact kernels.

// A homogeneous operator on V_n as a dense (2n)x(2n) integer matrix plus a
// parity tag; column j holds the image of basis vector j.  Basis order:
// e_1..e_n (values 0..n-1, even) then ebar_1..ebar_n (values n..2n-1, odd).
struct FiniteOp {
  int n = 1;
  int parity = 0;
  std::vector<std::vector<int>> mat;  // mat[row][col]

  bool operator==(const FiniteOp&) const = default;
};

// Even generator: e_j -> e_i, ebar_j -> ebar_i (1-based i, j).
FiniteOp even_generator(int n, int i, int j);
// Odd generator: e_j -> ebar_i, ebar_j -> e_i (1-based i, j).
FiniteOp odd_generator(int n, int i, int j);

// a b - (-1)^{p(a)p(b)} b a, with the parity of the result tagged p(a)+p(b).
FiniteOp supercommutator(const FiniteOp& a, const FiniteOp& b);

// Koszul-sign lift of `op` to V^{(x)slots}, applied to a sparse vector over
// packed tensor indices: an odd operator passing slot s picks up the sign
// (-1)^{p(u_1)+...+p(u_{s-1})}.
SparseVec apply_lifted(const FiniteOp& op, const SparseVec& v, int slots);

// Weight of a basis tensor: occurrence counts of each of the n weight
// directions (a barred vector weighs the same as its unbarred partner).
std::vector<int> weight_of(std::uint64_t index, int slots, int n);

// The lambda-isotypic component of V^{(x)|lambda|}: the submodule generated
// by the highest-weight (singular) vectors of weight lambda, stored as one
// echelon basis per weight.
struct Isotypic {
  StrictPartition lambda;
  int n = 1;
  int slots = 0;
  int singular_dim = 0;  // dim of the weight-lambda singular space
  int copies = 0;        // singular_dim / 2^{ceil(l/2)} (checked exact)
  std::map<std::vector<int>, EchelonBasis> weight_spaces;

  int total_dim() const;
};

// Computes (and memoizes per (lambda, n)) the isotypic component via
// breadth-first closure of the singular space under the simple lowering
// operators.  Throws Error when the copy count fails to divide out — that
// would contradict the highest-weight theory this oracle rests on.
std::shared_ptr<const Isotypic> isotypic_component(
    const StrictPartition& lambda, int n);

// Basis of the singular (highest-weight) vectors of the given weight inside
// V^{(x)slots}: the joint kernel of the simple raising operators on the
// weight space.  `weight` is indexed 1..n by position (padded with zeros).
std::vector<SparseVec> singular_vectors(const std::vector<int>& weight,
                                        int slots, int n);

// Total multiplicity of the simple labelled mu inside the tensor product of
// the simples labelled lambda and nu, measured by exact kernel computation
// at rank n:
//   #singular vectors of weight mu in Iso(lambda) (x) Iso(nu),
// divided by 2^{floor(l(mu)/2)} * copies(lambda) * copies(nu).
// Requires n >= |lambda| + |nu| (throws RankTooSmall); divisions are checked
// exact (Error on contradiction).
Int singular_mult(const StrictPartition& lambda, const StrictPartition& nu,
                  const StrictPartition& mu, int n);

// Dimension bookkeeping of the tensor-power decomposition at degree r:
// every strict partition of r contributes its isotypic component, the
// quotients copies = singular/2^{ceil(l/2)} and dim = total/copies must be
// integers, and the isotypic dimensions must add up to (2n)^r.
struct SergeevRow {
  StrictPartition lambda;
  Int isotypic_dim;
  Int module_dim;    // isotypic_dim / copies
  Int copies;
  Int mult_space_dim;  // copies * 2^{p(lambda)}
};
struct SergeevReport {
  int r = 0;
  int n = 1;
  bool pass = false;
  std::vector<SergeevRow> rows;
  std::string detail;  // human-readable failure description, empty on pass
};
SergeevReport sergeev_dim_check(int r, int n);

// True iff the realizations gamma_eval(d, n), d in D(p,q,r), are linearly
// independent over the rationals; rank_out (optional) receives the exact
// rank.  Requires n >= p+q (throws RankTooSmall).
bool gamma_rank_check(int p, int q, int r, int n, int* rank_out = nullptr);

}  // namespace qtrep
