// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>

#include "qtrep/parity_ring.hpp"
#include "qtrep/partitions.hpp"

namespace qtrep {

// Littlewood-Richardson coefficients of type Q, valued in the parity ring.
//
// f(lambda, nu; mu) is the multiplicity, as a Z[eps]/(eps^2 - 1) value, of
// the simple labelled mu inside the tensor product of the simples labelled
// lambda and nu.  It is supported on |mu| = |lambda| + |nu|.
//
// The total dimension is pinned to the Schur Q structure constants
//   Q_lambda Q_nu = sum_mu b(mu) Q_mu
// by
//   eval_plus(f) = b(mu) * 2^E,
//   E = ceil(l(mu)/2) - floor(l(lambda)/2) - floor(l(nu)/2).
// E may be negative, in which case the division is always exact here; a
// failed division signals a broken invariant and throws.
//
// The graded value is determined by parity: whenever any of l(lambda),
// l(nu), l(mu) is odd the value is a multiple of theta = 1 + eps, i.e.
// (t/2) * theta with t the total above; when all three are even the value is
// concentrated in the even component, (t, 0).
GradedInt f_coeff(const StrictPartition& lambda, const StrictPartition& nu,
                  const StrictPartition& mu);

// The full expansion {mu -> f(lambda, nu; mu)} over all mu with nonzero
// coefficient (all of size |lambda| + |nu|).  Cached per (lambda, nu).
std::map<StrictPartition, GradedInt> f_expand(const StrictPartition& lambda,
                                              const StrictPartition& nu);

// Closed form of the box-adding special case f(nu, (1); mu):
//   0 unless mu is nu plus one box, and otherwise
//   theta^{p(nu) p(mu) + 1}.
// Kept as an independent formula so tests can cross-check it against
// f_coeff computed through the symmetric-function route.
GradedInt pieri_f(const StrictPartition& nu, const StrictPartition& mu);

}  // namespace qtrep
