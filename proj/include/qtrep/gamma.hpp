// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "qtrep/diagrams.hpp"
#include "qtrep/tensor_space.hpp"

namespace qtrep {

// A linear map between mixed tensor powers that sends every basis tensor to
// an integer multiple of a single basis tensor (or to zero).  All diagram
// realizations have this form, which keeps composition and comparison exact
// and cheap.
struct BasisMonomialMap {
  TensorShape in;
  TensorShape out;
  int n = 1;
  // entries[k] describes the image of input basis index k: (output index,
  // coefficient); coefficient 0 means the basis vector is annihilated.
  std::vector<std::pair<std::uint64_t, int>> entries;

  bool operator==(const BasisMonomialMap&) const = default;
};

// The numeric realization of a diagram at finite rank n >= 1: the operator
// from T^{p,q} to T^{p-r,q-r} obtained by composing the elementary operators
// of the canonical decomposition, right to left:
//   s-swap:  u_i (x) u_{i+1}  ->  (-1)^{p(u_i)p(u_{i+1})} u_{i+1} (x) u_i
//   o-mark:  apply P at slot i with prefix sign (-1)^{p(u_1)+...+p(u_{i-1})},
//            where P e = ebar, P ebar = -e, P f = fbar, P fbar = f
//   t-cap:   pair slot p with slot p+1 via (f_i, e_j) = (fbar_i, ebar_j) =
//            delta_ij with sign (-1)^{p(u_p)p(u_{p+1})}, dropping both slots.
BasisMonomialMap gamma_eval(const Diagram& d, int n);

// Standard composition: (second after first); shapes and ranks must agree.
BasisMonomialMap compose_maps(const BasisMonomialMap& second,
                              const BasisMonomialMap& first);

// True when a == b or a == -b entrywise, with one global sign; sets `sign`
// to +1 or -1 when true (and +1 when both maps vanish identically).
bool equal_up_to_sign(const BasisMonomialMap& a, const BasisMonomialMap& b,
                      int* sign);

}  // namespace qtrep
