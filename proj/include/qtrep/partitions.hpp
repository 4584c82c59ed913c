// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "qtrep/errors.hpp"

namespace qtrep {

// A strict partition: a strictly decreasing sequence of positive integers.
// The empty partition is valid (size 0, length 0, even parity).
//
// Strict partitions index the simple polynomial representations; the parity
// p(lambda) = length mod 2 decides whether the corresponding simple is of
// M-type (even) or Q-type (odd).
class StrictPartition {
 public:
  StrictPartition() = default;

  // Validates strict decrease and positivity; throws ParseError otherwise.
  explicit StrictPartition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }                       // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }  // l(lambda)
  int parity() const { return length() % 2; }              // p(lambda)
  bool empty() const { return parts_.empty(); }

  int part(int i) const { return i < length() ? parts_[i] : 0; }  // 0-based

  bool operator==(const StrictPartition&) const = default;
  // Arbitrary strict total order (lexicographic) usable as a map key.
  std::strong_ordering operator<=>(const StrictPartition& o) const {
    return parts_ <=> o.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

using PartitionList = std::vector<StrictPartition>;

// All strict partitions of n, ordered reverse-lexicographically (largest
// first part first); the counts match the generating function
// prod_k (1 + x^k).
PartitionList enumerate_strict(int n);

// All strict partitions lambda' obtained from lambda by adding one box
// (|lambda'| = |lambda| + 1, lambda' strict, lambda' differs in one row or
// has one extra row).  Result is sorted.
PartitionList add_box(const StrictPartition& lambda);

// All strict partitions obtained by removing one box; adjoint to add_box:
// mu in add_box(lambda)  iff  lambda in remove_box(mu).
PartitionList remove_box(const StrictPartition& lambda);

// Dominance order on strict partitions of equal size:
// a <= b iff sum_{i<=k} a_i <= sum_{i<=k} b_i for every k.
// Throws SizeMismatch if |a| != |b|.
bool dominance_leq(const StrictPartition& a, const StrictPartition& b);

// A pair of strict partitions (lambda | mu), the label of a simple object.
struct Bipartition {
  StrictPartition lambda;
  StrictPartition mu;

  bool operator==(const Bipartition&) const = default;
  std::strong_ordering operator<=>(const Bipartition&) const = default;

  int parity() const { return (lambda.parity() + mu.parity()) % 2; }
  // Degree used by the Koszul grading: d(lambda, mu) = min(|lambda|, |mu|).
  int koszul_degree() const { return std::min(lambda.size(), mu.size()); }
};

enum class SimpleType { M, Q };

// The simple labelled by (lambda | mu) is of Q-type iff the combined parity
// is odd, and of M-type otherwise.
inline SimpleType simple_type(const Bipartition& bp) {
  return bp.parity() == 1 ? SimpleType::Q : SimpleType::M;
}

// Text syntax: "3,1" is the partition (3,1); "-" is the empty partition;
// "3,1|2" is the bipartition ((3,1) | (2)).
StrictPartition parse_partition(const std::string& text);
Bipartition parse_bipartition(const std::string& text);
std::string to_string(const StrictPartition& p);
std::string to_string(const Bipartition& bp);
std::ostream& operator<<(std::ostream& os, const StrictPartition& p);
std::ostream& operator<<(std::ostream& os, const Bipartition& bp);

}  // namespace qtrep
