// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qtrep/bigint.hpp"

namespace qtrep {

// Sparse vector over the rationals, indexed by an abstract coordinate space
// (e.g. flattened tensor-product basis indices).  Zero coefficients are
// never stored.
using SparseVec = std::map<std::uint64_t, Rat>;

SparseVec& axpy(SparseVec& y, const Rat& a, const SparseVec& x);  // y += a*x

// A row-echelon family of sparse vectors over Q, each normalized to pivot
// coefficient 1, pivot = smallest nonzero index.  Supports incremental
// insertion (Gram-Schmidt-free exact elimination), which is all the rank and
// span bookkeeping in this project needs.
class EchelonBasis {
 public:
  // Reduces v against the current rows (eliminating every pivot index).
  SparseVec reduce(SparseVec v) const;

  // Reduces and, if the result is nonzero, normalizes and stores it.
  // Returns true when the vector enlarged the span.
  bool insert(SparseVec v);

  // Like insert, but hands back the stored normalized row (nullptr when the
  // vector was already in the span).  The pointer stays valid while the
  // basis lives.
  const SparseVec* insert_and_get(SparseVec v);

  bool contains(SparseVec v) const { return reduce(std::move(v)).empty(); }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::map<std::uint64_t, SparseVec>& rows() const { return rows_; }

 private:
  std::map<std::uint64_t, SparseVec> rows_;  // pivot index -> row
};

// Rank of the span of the given sparse vectors.
int rank_of(const std::vector<SparseVec>& vectors);

// Basis of the nullspace {c in Q^ncols : M c = 0} for a dense rational
// matrix given by rows.  Rows may be of any count; every row must have
// exactly ncols entries.  Plain Gaussian elimination over Q.
std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> rows,
                                           int ncols);

}  // namespace qtrep
