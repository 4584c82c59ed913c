// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qtrep {

// Base class for all library errors.
//
// Errors split into two families:
//  * usage errors (malformed input, out-of-domain request) — the caller's
//    fault, mapped to exit code 2 by the CLI;
//  * hard computational failures (an identity that must hold exactly did
//    not) — these falsify an assumption of the implementation and are mapped
//    to exit code 1.  They always carry the contradicted statement.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A value that must have been a multiple of theta = 1 + eps (or divisible by
// the required power of two in total dimension) was not.  Every occurrence
// contradicts an exactness statement, so this is a hard failure.
class NotThetaDivisible : public Error {
 public:
  explicit NotThetaDivisible(const std::string& what) : Error(what) {}
};

// Dominance comparison between partitions of different sizes.
class SizeMismatch : public Error {
 public:
  explicit SizeMismatch(const std::string& what) : Error(what) {}
};

// Diagram concatenation with incompatible interface rows.
class ShapeMismatch : public Error {
 public:
  explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

// The triangular change of basis from a symmetric polynomial to the Schur Q
// basis did not terminate with a zero remainder (or hit a non-divisible
// leading coefficient).  Hard failure: the Q_mu are a basis in the exact
// degree we expand in, so a nonzero remainder means a computational bug.
class BasisSolveFailure : public Error {
 public:
  explicit BasisSolveFailure(const std::string& what) : Error(what) {}
};

// The finite-rank oracle was asked a question at a rank too small for the
// stable answer (n < |lambda| + |nu|).
class RankTooSmall : public Error {
 public:
  explicit RankTooSmall(const std::string& what) : Error(what) {}
};

// Malformed textual input (partition / bipartition / diagram syntax).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace qtrep
