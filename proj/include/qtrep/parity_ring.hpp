// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "qtrep/bigint.hpp"
#include "qtrep/errors.hpp"

namespace qtrep {

// An element a + b*eps of the parity ring Z[eps]/(eps^2 - 1).
//
// Dimensions and multiplicities of super vector spaces live in this ring: a
// space with even part of dimension a and odd part of dimension b has graded
// dimension a + b*eps.  The distinguished element theta = 1 + eps is the
// graded dimension of the rank-one Clifford algebra; it satisfies
// theta^2 = 2*theta, so theta^k = 2^{k-1}*theta for k >= 1.
//
// The two ring homomorphisms to Z are
//   eval_plus (eps -> 1):  total dimension,
//   eval_minus(eps -> -1): superdimension (even minus odd).
// x is a multiple of theta iff eval_minus(x) = 0, iff a = b.
//
// Multiplication by theta is NOT injective (theta * 1 = theta * eps), so
// "division by theta^k" cannot return a graded value.  What the formulas of
// this library need is only the total dimension of the quotient, which is
// well defined: theta_div_total(x, k) = eval_plus(x) / 2^k.
struct GradedInt {
  Int one;  // coefficient of 1
  Int eps;  // coefficient of eps

  GradedInt() : one(0), eps(0) {}
  GradedInt(Int a, Int b) : one(std::move(a)), eps(std::move(b)) {}
  explicit GradedInt(long a) : one(a), eps(0) {}

  bool operator==(const GradedInt& o) const = default;

  bool is_zero() const { return one == 0 && eps == 0; }

  GradedInt& operator+=(const GradedInt& o) {
    one += o.one;
    eps += o.eps;
    return *this;
  }
  GradedInt& operator-=(const GradedInt& o) {
    one -= o.one;
    eps -= o.eps;
    return *this;
  }

  friend GradedInt operator+(GradedInt a, const GradedInt& b) { return a += b; }
  friend GradedInt operator-(GradedInt a, const GradedInt& b) { return a -= b; }

  // (a + b eps)(c + d eps) = (ac + bd) + (ad + bc) eps.
  friend GradedInt operator*(const GradedInt& a, const GradedInt& b) {
    return GradedInt(a.one * b.one + a.eps * b.eps,
                     a.one * b.eps + a.eps * b.one);
  }
  friend GradedInt operator*(const Int& c, const GradedInt& a) {
    return GradedInt(c * a.one, c * a.eps);
  }
};

inline GradedInt theta() { return GradedInt(1, 1); }

// theta^k: 1 for k = 0, 2^{k-1} * (1 + eps) for k >= 1.
GradedInt theta_pow(unsigned k);

inline Int eval_plus(const GradedInt& x) { return x.one + x.eps; }
inline Int eval_minus(const GradedInt& x) { return x.one - x.eps; }
inline bool is_theta_multiple(const GradedInt& x) { return x.one == x.eps; }

// Total dimension of x / theta^k.
//
// Preconditions (hard failures, NotThetaDivisible):
//   * k >= 1 requires eval_minus(x) = 0 (x must be a theta-multiple);
//   * 2^k must divide eval_plus(x).
// For k = 0 this is just eval_plus(x).
Int theta_div_total(const GradedInt& x, unsigned k);

// Text form "a + b*eps" (compactified: "0", "3", "2*eps", "1 + eps", ...).
std::string to_string(const GradedInt& x);
std::ostream& operator<<(std::ostream& os, const GradedInt& x);

}  // namespace qtrep
