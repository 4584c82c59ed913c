// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace qtrep {

// All counting in this library is exact.  Diagram-algebra dimensions grow
// factorially (p! q! 2^{p+q-r} / r!) and structure constants are products of
// such numbers, so machine integers are not an option anywhere a count can
// compound.  cpp_int is header-only and plenty fast at the scales we target.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// 2^k for k >= 0.
inline Int pow2(unsigned k) { return Int(1) << k; }

}  // namespace qtrep
