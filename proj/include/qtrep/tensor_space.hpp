// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtrep {

// Finite-rank model at rank n: the natural module V_n has homogeneous basis
// e_1..e_n (even), ebar_1..ebar_n (odd); its twisted dual W_n has f_1..f_n
// (even), fbar_1..fbar_n (odd).  A slot value in 0..2n-1 encodes e_{v+1}
// (resp. f_{v+1}) for v < n and ebar_{v-n+1} (resp. fbar) for v >= n.
//
// Mixed tensor powers T^{p,q} = V^{(x)p} (x) W^{(x)q} use the first p slots
// for V and the last q for W.  Basis indices are packed base 2n with slot 1
// most significant.
struct TensorShape {
  int p = 0;
  int q = 0;
  int slots() const { return p + q; }
  bool operator==(const TensorShape&) const = default;
};

inline int value_parity(int v, int n) { return v >= n ? 1 : 0; }

std::uint64_t tensor_dim(const TensorShape& shape, int n);
std::uint64_t pack_index(const std::vector<int>& digits, int n);
std::vector<int> unpack_index(std::uint64_t index, int slots, int n);

// Human-readable basis tensor, e.g. "e2(x)fbar1".
std::string basis_name(const TensorShape& shape, const std::vector<int>& digits,
                       int n);

}  // namespace qtrep
