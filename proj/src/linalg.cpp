// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include "qtrep/linalg.hpp"

#include <utility>

#include "qtrep/errors.hpp"

namespace qtrep {

SparseVec& axpy(SparseVec& y, const Rat& a, const SparseVec& x) {
  if (a == 0) return y;
  for (const auto& [i, c] : x) {
    auto [it, inserted] = y.try_emplace(i, Rat(a * c));
    if (!inserted) {
      it->second += a * c;
      if (it->second == 0) y.erase(it);
    }
  }
  return y;
}

SparseVec EchelonBasis::reduce(SparseVec v) const {
  // Entries migrate to `out` once their index is smaller than every pivot
  // that could still act: a row's pivot is its smallest index, so a row
  // subtracted later never disturbs indices already settled.
  SparseVec out;
  while (!v.empty()) {
    const auto idx = v.begin()->first;
    const auto row = rows_.find(idx);
    if (row == rows_.end()) {
      out.insert(out.end(), *v.begin());
      v.erase(v.begin());
    } else {
      const Rat c = v.begin()->second;
      axpy(v, -c, row->second);
    }
  }
  return out;
}

bool EchelonBasis::insert(SparseVec v) {
  return insert_and_get(std::move(v)) != nullptr;
}

const SparseVec* EchelonBasis::insert_and_get(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return nullptr;
  const Rat inv = Rat(1) / v.begin()->second;
  for (auto& [i, c] : v) c *= inv;
  const auto pivot = v.begin()->first;
  return &rows_.emplace(pivot, std::move(v)).first->second;
}

int rank_of(const std::vector<SparseVec>& vectors) {
  EchelonBasis basis;
  for (const auto& v : vectors) basis.insert(v);
  return basis.dim();
}

std::vector<std::vector<Rat>> kernel_basis(std::vector<std::vector<Rat>> rows,
                                           int ncols) {
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != ncols) {
      throw ShapeMismatch("kernel_basis row width does not match ncols");
    }
  }
  // Forward elimination with column pivot tracking.
  std::vector<int> pivot_col;  // pivot column of each used row, in order
  size_t used = 0;
  for (int col = 0; col < ncols && used < rows.size(); ++col) {
    size_t sel = used;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[used], rows[sel]);
    const Rat inv = Rat(1) / rows[used][col];
    for (int j = col; j < ncols; ++j) rows[used][j] *= inv;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == used || rows[r][col] == 0) continue;
      const Rat f = rows[r][col];
      for (int j = col; j < ncols; ++j) rows[r][j] -= f * rows[used][j];
    }
    pivot_col.push_back(col);
    ++used;
  }

  std::vector<bool> is_pivot(ncols, false);
  for (const int c : pivot_col) is_pivot[c] = true;

  std::vector<std::vector<Rat>> kernel;
  for (int free_col = 0; free_col < ncols; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<Rat> v(ncols, Rat(0));
    v[free_col] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) {
      v[pivot_col[r]] = -rows[r][free_col];
    }
    kernel.push_back(std::move(v));
  }
  return kernel;
}

}  // namespace qtrep
