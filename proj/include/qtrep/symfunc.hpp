// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtrep/bigint.hpp"
#include "qtrep/errors.hpp"
#include "qtrep/partitions.hpp"

namespace qtrep {

// A polynomial in a fixed number of variables with exact integer
// coefficients, stored sparsely as {exponent vector -> coefficient}.
// Exponent vectors always have length nvars().
//
// This is deliberately a plain dense-exponent representation: every
// symmetric-function computation here runs at desk scale (degree <= ~8),
// where transparency beats asymptotics.
class SymPoly {
 public:
  using Exponents = std::vector<int>;

  explicit SymPoly(int nvars) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Int>& terms() const { return terms_; }

  Int coefficient(const Exponents& e) const;
  void add_term(const Exponents& e, const Int& c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator*(const Int& c, SymPoly p);
  bool operator==(const SymPoly&) const = default;

  // The lexicographically greatest exponent vector (throws on zero).
  const Exponents& leading_exponents() const;

  // Divides every coefficient by d; throws BasisSolveFailure when any
  // coefficient is not divisible.
  void divide_exact(const Int& d);

  std::string to_string() const;

 private:
  int nvars_;
  std::map<Exponents, Int> terms_;  // std::map orders exponent vectors lex
};

// The monomial symmetric polynomial m_mu in nvars variables (sum of all
// distinct permutations of the exponent vector mu).  Used by tests to pin
// down small expansions exactly.
SymPoly monomial_sym(const StrictPartition& mu, int nvars);

// q_r in nvars variables: the degree-r slice of
//   prod_i (1 + x_i t) / (1 - x_i t)
//     = prod_i (1 + 2 sum_{k>=1} x_i^k t^k).
// q_0 = 1, q_r = 0 for r < 0.
SymPoly q_generator(int r, int nvars);

// Schur Q polynomial Q_lambda in nvars variables.
//
//   Q_() = 1,   Q_(a) = q_a,
//   Q_(a,b) = q_a q_b + 2 sum_{i=1}^{b} (-1)^i q_{a+i} q_{b-i},
// and for length >= 3 the Pfaffian expansion along the first row:
//   Q_lambda = sum_{j=2}^{m} (-1)^j Q_(lambda_1, lambda_j)
//                            Q_(lambda minus rows 1 and j),
// where m = l(lambda) if even, else m = l(lambda)+1 with an appended zero
// part and Q_(a,0) = q_a.
//
// Antisymmetry in two rows (Q_(a,b) = -Q_(b,a)) makes the expansion
// well defined.  Results are cached per (lambda, nvars).
SymPoly schur_q(const StrictPartition& lambda, int nvars);

// Schur P polynomial: P_lambda = Q_lambda / 2^{l(lambda)} (always exact).
SymPoly schur_p(const StrictPartition& lambda, int nvars);

// Expands Q_lambda * Q_nu in the Q-basis:
//   Q_lambda Q_nu = sum_mu e(mu) Q_mu,  |mu| = |lambda| + |nu|, mu strict.
//
// Solved by triangular elimination in nvars = |lambda| + |nu| variables:
// the lex-greatest monomial of Q_mu is 2^{l(mu)} x^mu, and every monomial of
// Q_mu is lex-at-most x^mu, so repeatedly stripping the residual's leading
// term determines each coefficient.  Throws BasisSolveFailure if the
// residual ever fails to lead with a strict-partition exponent or an exact
// power-of-two division.
std::map<StrictPartition, Int> q_structure_constants(
    const StrictPartition& lambda, const StrictPartition& nu);

}  // namespace qtrep
