// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include "qtrep/gamma.hpp"

#include "qtrep/errors.hpp"

namespace qtrep {

namespace {

// Applies one elementary operator in place.  `digits` holds the current slot
// values, `white_count` how many leading slots are V slots.  Returns false
// when the vector is annihilated (t-cap pairing zero).
bool apply_elementary(const ElementaryDiagram& e, int n,
                      std::vector<int>& digits, int& white_count, int& sign) {
  switch (e.kind) {
    case ElementaryDiagram::Kind::S: {
      const int i = e.i - 1;  // 0-based left slot
      if (value_parity(digits[i], n) && value_parity(digits[i + 1], n)) {
        sign = -sign;
      }
      std::swap(digits[i], digits[i + 1]);
      return true;
    }
    case ElementaryDiagram::Kind::O: {
      const int i = e.i - 1;
      int prefix = 0;
      for (int s = 0; s < i; ++s) prefix += value_parity(digits[s], n);
      if (prefix % 2) sign = -sign;
      const bool white = i < white_count;
      if (digits[i] < n) {
        digits[i] += n;  // e -> ebar, f -> fbar
      } else {
        digits[i] -= n;  // ebar -> -e, fbar -> f
        if (white) sign = -sign;
      }
      return true;
    }
    case ElementaryDiagram::Kind::T: {
      const int i = white_count - 1;  // 0-based V slot of the cap
      if (digits[i] != digits[i + 1]) return false;
      if (value_parity(digits[i], n)) sign = -sign;
      digits.erase(digits.begin() + i, digits.begin() + i + 2);
      --white_count;
      return true;
    }
  }
  throw ShapeMismatch("unknown elementary diagram kind");
}

}  // namespace

BasisMonomialMap gamma_eval(const Diagram& d, int n) {
  if (n < 1) throw ShapeMismatch("finite rank must be at least 1");
  const auto word = canonical_decomposition(d);
  BasisMonomialMap map;
  map.in = {d.p(), d.q()};
  map.out = {d.p() - d.r(), d.q() - d.r()};
  map.n = n;
  const std::uint64_t dim_in = tensor_dim(map.in, n);
  map.entries.assign(dim_in, {0, 0});

  std::vector<int> digits;
  for (std::uint64_t k = 0; k < dim_in; ++k) {
    digits = unpack_index(k, map.in.slots(), n);
    int sign = 1;
    int white_count = d.p();
    bool alive = true;
    for (auto it = word.rbegin(); alive && it != word.rend(); ++it) {
      alive = apply_elementary(*it, n, digits, white_count, sign);
    }
    if (alive) {
      map.entries[k] = {pack_index(digits, n), sign};
    }
  }
  return map;
}

BasisMonomialMap compose_maps(const BasisMonomialMap& second,
                              const BasisMonomialMap& first) {
  if (!(first.out == second.in) || first.n != second.n) {
    throw ShapeMismatch("cannot compose maps: inner shapes or ranks differ");
  }
  BasisMonomialMap out;
  out.in = first.in;
  out.out = second.out;
  out.n = first.n;
  out.entries.assign(first.entries.size(), {0, 0});
  for (std::size_t k = 0; k < first.entries.size(); ++k) {
    const auto& [mid, c1] = first.entries[k];
    if (c1 == 0) continue;
    const auto& [end, c2] = second.entries[mid];
    if (c2 == 0) continue;
    out.entries[k] = {end, c1 * c2};
  }
  return out;
}

bool equal_up_to_sign(const BasisMonomialMap& a, const BasisMonomialMap& b,
                      int* sign) {
  if (!(a.in == b.in) || !(a.out == b.out) || a.n != b.n ||
      a.entries.size() != b.entries.size()) {
    return false;
  }
  int s = 0;  // undetermined until the first nonzero entry
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    const auto& [ia, ca] = a.entries[k];
    const auto& [ib, cb] = b.entries[k];
    if ((ca == 0) != (cb == 0)) return false;
    if (ca == 0) continue;
    if (ia != ib) return false;
    if (s == 0) {
      if (ca != cb && ca != -cb) return false;
      s = (ca == cb) ? 1 : -1;
    } else if (ca != s * cb) {
      return false;
    }
  }
  if (sign != nullptr) *sign = (s == 0) ? 1 : s;
  return true;
}

}  // namespace qtrep
