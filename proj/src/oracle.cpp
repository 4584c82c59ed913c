// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include "qtrep/oracle.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <utility>

#include "qtrep/errors.hpp"
#include "qtrep/gamma.hpp"
#include "qtrep/parity_ring.hpp"
#include "qtrep/tensor_space.hpp"

namespace qtrep {

namespace {

FiniteOp zero_op(int n, int parity) {
  FiniteOp op;
  op.n = n;
  op.parity = parity;
  op.mat.assign(2 * n, std::vector<int>(2 * n, 0));
  return op;
}

}  // namespace

FiniteOp even_generator(int n, int i, int j) {
  FiniteOp op = zero_op(n, 0);
  op.mat[i - 1][j - 1] = 1;          // e_j -> e_i
  op.mat[n + i - 1][n + j - 1] = 1;  // ebar_j -> ebar_i
  return op;
}

FiniteOp odd_generator(int n, int i, int j) {
  FiniteOp op = zero_op(n, 1);
  op.mat[n + i - 1][j - 1] = 1;  // e_j -> ebar_i
  op.mat[i - 1][n + j - 1] = 1;  // ebar_j -> e_i
  return op;
}

FiniteOp supercommutator(const FiniteOp& a, const FiniteOp& b) {
  if (a.n != b.n) throw ShapeMismatch("supercommutator of different ranks");
  const int m = 2 * a.n;
  FiniteOp out = zero_op(a.n, (a.parity + b.parity) % 2);
  const int sign = (a.parity && b.parity) ? -1 : 1;
  for (int r = 0; r < m; ++r) {
    for (int c = 0; c < m; ++c) {
      int v = 0;
      for (int k = 0; k < m; ++k) {
        v += a.mat[r][k] * b.mat[k][c] - sign * b.mat[r][k] * a.mat[k][c];
      }
      out.mat[r][c] = v;
    }
  }
  return out;
}

SparseVec apply_lifted(const FiniteOp& op, const SparseVec& v, int slots) {
  const int n = op.n;
  SparseVec out;
  std::vector<int> digits;
  for (const auto& [index, coeff] : v) {
    digits = unpack_index(index, slots, n);
    int prefix_sign = 1;
    for (int s = 0; s < slots; ++s) {
      const int col = digits[s];
      for (int row = 0; row < 2 * n; ++row) {
        const int entry = op.mat[row][col];
        if (entry == 0) continue;
        const int keep = digits[s];
        digits[s] = row;
        const Rat contribution = coeff * Rat(entry * prefix_sign);
        const std::uint64_t target = pack_index(digits, n);
        digits[s] = keep;
        auto [it, inserted] = out.try_emplace(target, contribution);
        if (!inserted) {
          it->second += contribution;
          if (it->second == 0) out.erase(it);
        }
      }
      if (op.parity == 1 && value_parity(digits[s], n)) {
        prefix_sign = -prefix_sign;
      }
    }
  }
  return out;
}

std::vector<int> weight_of(std::uint64_t index, int slots, int n) {
  std::vector<int> w(n, 0);
  const auto digits = unpack_index(index, slots, n);
  for (const int d : digits) ++w[d % n];
  return w;
}

namespace {

std::vector<FiniteOp> simple_raising_ops(int n) {
  std::vector<FiniteOp> ops;
  for (int i = 1; i < n; ++i) {
    ops.push_back(even_generator(n, i, i + 1));
    ops.push_back(odd_generator(n, i, i + 1));
  }
  return ops;
}

std::vector<FiniteOp> simple_lowering_ops(int n) {
  std::vector<FiniteOp> ops;
  for (int i = 1; i < n; ++i) {
    ops.push_back(even_generator(n, i + 1, i));
    ops.push_back(odd_generator(n, i + 1, i));
  }
  return ops;
}

// Dimension (and optionally a basis) of the joint kernel of the simple
// raising operators on the span of the given independent columns.
std::vector<std::vector<Rat>> raising_kernel(const std::vector<SparseVec>& cols,
                                             int slots, int n) {
  if (cols.empty()) return {};
  const auto raising = simple_raising_ops(n);
  // Row space: one row per (operator, ambient coordinate) with a nonzero
  // entry in some image.
  std::vector<std::vector<Rat>> rows;
  std::map<std::pair<std::size_t, std::uint64_t>, std::size_t> row_of;
  for (std::size_t g = 0; g < raising.size(); ++g) {
    for (std::size_t t = 0; t < cols.size(); ++t) {
      const SparseVec image = apply_lifted(raising[g], cols[t], slots);
      for (const auto& [idx, c] : image) {
        const auto key = std::make_pair(g, idx);
        auto it = row_of.find(key);
        if (it == row_of.end()) {
          it = row_of.emplace(key, rows.size()).first;
          rows.emplace_back(cols.size(), Rat(0));
        }
        rows[it->second][t] = c;
      }
    }
  }
  return kernel_basis(std::move(rows), static_cast<int>(cols.size()));
}

}  // namespace

std::vector<SparseVec> singular_vectors(const std::vector<int>& weight,
                                        int slots, int n) {
  std::vector<int> target(weight);
  target.resize(n, 0);
  std::vector<std::uint64_t> indices;
  const std::uint64_t dim = tensor_dim({slots, 0}, n);
  for (std::uint64_t k = 0; k < dim; ++k) {
    if (weight_of(k, slots, n) == target) indices.push_back(k);
  }
  std::vector<SparseVec> cols(indices.size());
  for (std::size_t t = 0; t < indices.size(); ++t) cols[t] = {{indices[t], 1}};
  const auto kernel = raising_kernel(cols, slots, n);
  std::vector<SparseVec> out;
  for (const auto& c : kernel) {
    SparseVec v;
    for (std::size_t t = 0; t < indices.size(); ++t) {
      if (c[t] != 0) v[indices[t]] = c[t];
    }
    out.push_back(std::move(v));
  }
  return out;
}

int Isotypic::total_dim() const {
  int out = 0;
  for (const auto& [w, basis] : weight_spaces) out += basis.dim();
  return out;
}

std::shared_ptr<const Isotypic> isotypic_component(
    const StrictPartition& lambda, int n) {
  static std::mutex cache_mu;
  static std::map<std::pair<std::vector<int>, int>,
                  std::shared_ptr<const Isotypic>>
      cache;
  const auto key = std::make_pair(lambda.parts(), n);
  {
    std::scoped_lock lock(cache_mu);
    const auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  if (lambda.length() > n) {
    throw RankTooSmall("partition has more rows than the finite rank " +
                       std::to_string(n));
  }

  auto iso = std::make_shared<Isotypic>();
  iso->lambda = lambda;
  iso->n = n;
  iso->slots = lambda.size();

  const auto sing = singular_vectors(lambda.parts(), iso->slots, n);
  iso->singular_dim = static_cast<int>(sing.size());
  const Int clifford = pow2(static_cast<unsigned>((lambda.length() + 1) / 2));
  if (iso->singular_dim % clifford != 0) {
    throw Error("singular space of weight " + to_string(lambda) + " at rank " +
                std::to_string(n) + " has dimension " +
                std::to_string(iso->singular_dim) +
                ", not a multiple of the highest-weight Clifford module size " +
                clifford.str());
  }
  iso->copies = (Int(iso->singular_dim) / clifford).convert_to<int>();

  const auto lowering = simple_lowering_ops(n);
  std::deque<const SparseVec*> queue;
  for (const auto& v : sing) {
    if (v.empty()) continue;
    auto& basis = iso->weight_spaces[weight_of(v.begin()->first, iso->slots, n)];
    if (const SparseVec* stored = basis.insert_and_get(v)) {
      queue.push_back(stored);
    }
  }
  while (!queue.empty()) {
    const SparseVec* v = queue.front();
    queue.pop_front();
    for (const auto& g : lowering) {
      SparseVec image = apply_lifted(g, *v, iso->slots);
      if (image.empty()) continue;
      auto& basis =
          iso->weight_spaces[weight_of(image.begin()->first, iso->slots, n)];
      if (const SparseVec* stored = basis.insert_and_get(std::move(image))) {
        queue.push_back(stored);
      }
    }
  }

  std::scoped_lock lock(cache_mu);
  return cache.try_emplace(key, std::move(iso)).first->second;
}

Int singular_mult(const StrictPartition& lambda, const StrictPartition& nu,
                  const StrictPartition& mu, int n) {
  if (n < lambda.size() + nu.size()) {
    throw RankTooSmall("singular_mult requires rank n >= |lambda| + |nu|; got n = " +
                       std::to_string(n) + " for sizes " +
                       std::to_string(lambda.size()) + " + " +
                       std::to_string(nu.size()));
  }
  if (mu.size() != lambda.size() + nu.size()) return 0;
  const auto iso_l = isotypic_component(lambda, n);
  const auto iso_r = isotypic_component(nu, n);
  const int slots_l = iso_l->slots;
  const int slots_r = iso_r->slots;
  const int slots = slots_l + slots_r;
  const std::uint64_t shift = tensor_dim({slots_r, 0}, n);

  std::vector<int> target(mu.parts());
  target.resize(n, 0);

  // Columns: products x (x) y over weight splittings w + (mu - w).
  std::vector<SparseVec> cols;
  for (const auto& [w1, basis1] : iso_l->weight_spaces) {
    std::vector<int> w2(n);
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      w2[i] = target[i] - w1[i];
      if (w2[i] < 0) ok = false;
    }
    if (!ok) continue;
    const auto it2 = iso_r->weight_spaces.find(w2);
    if (it2 == iso_r->weight_spaces.end()) continue;
    for (const auto& [piv1, x] : basis1.rows()) {
      for (const auto& [piv2, y] : it2->second.rows()) {
        SparseVec prod;
        for (const auto& [ix, cx] : x) {
          for (const auto& [iy, cy] : y) {
            prod.emplace(ix * shift + iy, cx * cy);
          }
        }
        cols.push_back(std::move(prod));
      }
    }
  }
  if (cols.empty()) return 0;

  const auto kernel = raising_kernel(cols, slots, n);
  const Int raw(static_cast<long>(kernel.size()));
  if (raw == 0) return 0;

  const Int denom = pow2(static_cast<unsigned>(mu.length() / 2)) *
                    Int(iso_l->copies) * Int(iso_r->copies);
  if (raw % denom != 0) {
    throw Error("singular count " + raw.str() + " for weight " + to_string(mu) +
                " is not divisible by " + denom.str() +
                "; the multiplicity normalization is contradicted");
  }
  return raw / denom;
}

SergeevReport sergeev_dim_check(int r, int n) {
  SergeevReport report;
  report.r = r;
  report.n = n;
  report.pass = true;
  std::ostringstream detail;
  Int total = 0;
  try {
    for (const auto& lambda : enumerate_strict(r)) {
      const auto iso = isotypic_component(lambda, n);
      SergeevRow row;
      row.lambda = lambda;
      row.isotypic_dim = iso->total_dim();
      row.copies = iso->copies;
      if (row.copies == 0 || row.isotypic_dim % row.copies != 0) {
        report.pass = false;
        detail << "isotypic dimension " << row.isotypic_dim.str()
               << " not divisible by copy count " << row.copies.str()
               << " at lambda = " << to_string(lambda) << "; ";
        row.module_dim = 0;
      } else {
        row.module_dim = row.isotypic_dim / row.copies;
      }
      row.mult_space_dim =
          row.copies * pow2(static_cast<unsigned>(lambda.parity()));
      total += row.isotypic_dim;
      report.rows.push_back(std::move(row));
    }
  } catch (const Error& e) {
    report.pass = false;
    detail << e.what() << "; ";
  }
  Int expected = 1;
  for (int i = 0; i < r; ++i) expected *= 2 * n;
  if (total != expected) {
    report.pass = false;
    detail << "isotypic dimensions sum to " << total.str() << ", expected (2n)^r = "
           << expected.str() << "; ";
  }
  report.detail = detail.str();
  return report;
}

bool gamma_rank_check(int p, int q, int r, int n, int* rank_out) {
  if (n < p + q) {
    throw RankTooSmall("gamma_rank_check requires n >= p+q");
  }
  const auto diagrams = enumerate_diagrams(p, q, r);
  std::vector<SparseVec> vectors;
  vectors.reserve(diagrams.size());
  for (const auto& d : diagrams) {
    const auto map = gamma_eval(d, n);
    const std::uint64_t out_dim = tensor_dim(map.out, n);
    SparseVec v;
    for (std::uint64_t k = 0; k < map.entries.size(); ++k) {
      const auto& [target, coeff] = map.entries[k];
      if (coeff != 0) v[k * out_dim + target] = coeff;
    }
    vectors.push_back(std::move(v));
  }
  const int rank = rank_of(vectors);
  if (rank_out != nullptr) *rank_out = rank;
  return rank == static_cast<int>(diagrams.size());
}

}  // namespace qtrep
