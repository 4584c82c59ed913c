// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include "qtrep/tensor_space.hpp"

#include <sstream>

#include "qtrep/errors.hpp"

namespace qtrep {

std::uint64_t tensor_dim(const TensorShape& shape, int n) {
  std::uint64_t out = 1;
  for (int i = 0; i < shape.slots(); ++i) out *= static_cast<std::uint64_t>(2 * n);
  return out;
}

std::uint64_t pack_index(const std::vector<int>& digits, int n) {
  std::uint64_t out = 0;
  for (const int d : digits) {
    if (d < 0 || d >= 2 * n) {
      throw ShapeMismatch("tensor slot value out of range for rank " +
                          std::to_string(n));
    }
    out = out * static_cast<std::uint64_t>(2 * n) + static_cast<std::uint64_t>(d);
  }
  return out;
}

std::vector<int> unpack_index(std::uint64_t index, int slots, int n) {
  std::vector<int> digits(slots, 0);
  for (int i = slots - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(index % static_cast<std::uint64_t>(2 * n));
    index /= static_cast<std::uint64_t>(2 * n);
  }
  return digits;
}

std::string basis_name(const TensorShape& shape, const std::vector<int>& digits,
                       int n) {
  std::ostringstream os;
  if (digits.empty()) return "1";
  for (int i = 0; i < shape.slots(); ++i) {
    if (i) os << "(x)";
    const bool white = i < shape.p;
    const int v = digits[i];
    if (v < n) {
      os << (white ? "e" : "f") << (v + 1);
    } else {
      os << (white ? "ebar" : "fbar") << (v - n + 1);
    }
  }
  return os.str();
}

}  // namespace qtrep
