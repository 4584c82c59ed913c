// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include "qtrep/lr.hpp"

#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "qtrep/cache.hpp"
#include "qtrep/symfunc.hpp"

namespace qtrep {

namespace {

GradedInt graded_from_total(const Int& total, bool any_odd_length) {
  if (total == 0) return GradedInt{};
  if (any_odd_length) {
    // The value is a theta-multiple; theta-multiples are determined by their
    // total, and the total of (t/2)(1 + eps) is t.
    if (total % 2 != 0) {
      throw Error("odd-parity multiplicity total " + total.str() +
                  " is not even; cannot be a theta-multiple");
    }
    const Int half = total / 2;
    return GradedInt{half, half};
  }
  // All lengths even: the multiplicity is concentrated in the even component.
  return GradedInt{total, 0};
}

struct ExpandCache {
  std::mutex mu;
  std::map<std::pair<std::vector<int>, std::vector<int>>,
           std::map<StrictPartition, GradedInt>>
      values;
};

ExpandCache& expand_cache() {
  static ExpandCache cache;
  return cache;
}

std::string persistent_key(const StrictPartition& lambda,
                           const StrictPartition& nu) {
  return to_string(lambda) + ";" + to_string(nu);
}

// A persisted table is trusted only when its completeness marker is present;
// absent coefficients then genuinely mean zero.
std::optional<std::map<StrictPartition, GradedInt>> load_persistent(
    Cache& cache, const StrictPartition& lambda, const StrictPartition& nu) {
  const std::string base = persistent_key(lambda, nu);
  if (!cache.get(Cache::kLrTableComplete, base)) return std::nullopt;
  std::map<StrictPartition, GradedInt> out;
  for (const StrictPartition& mu : enumerate_strict(lambda.size() + nu.size())) {
    auto v = cache.get(Cache::kLrCoefficient, base + ";" + to_string(mu));
    if (v && !v->is_zero()) out.emplace(mu, *v);
  }
  return out;
}

void store_persistent(Cache& cache, const StrictPartition& lambda,
                      const StrictPartition& nu,
                      const std::map<StrictPartition, GradedInt>& table) {
  const std::string base = persistent_key(lambda, nu);
  for (const auto& [mu, value] : table) {
    cache.put(Cache::kLrCoefficient, base + ";" + to_string(mu), value);
  }
  // Written last so an interrupted run is recomputed, never half-read.
  cache.put(Cache::kLrTableComplete, base, GradedInt(Int(1), Int(0)));
}

}  // namespace

std::map<StrictPartition, GradedInt> f_expand(const StrictPartition& lambda,
                                              const StrictPartition& nu) {
  const std::pair<std::vector<int>, std::vector<int>> key{lambda.parts(),
                                                          nu.parts()};
  {
    auto& cache = expand_cache();
    std::scoped_lock lock(cache.mu);
    const auto it = cache.values.find(key);
    if (it != cache.values.end()) return it->second;
  }

  if (auto persistent = bound_lr_cache()) {
    if (auto table = load_persistent(*persistent, lambda, nu)) {
      auto& cache = expand_cache();
      std::scoped_lock lock(cache.mu);
      return cache.values.try_emplace(key, std::move(*table)).first->second;
    }
  }

  const auto b = q_structure_constants(lambda, nu);
  std::map<StrictPartition, GradedInt> out;
  const int floor_l = lambda.length() / 2;
  const int floor_n = nu.length() / 2;
  for (const auto& [mu, bmu] : b) {
    const int ceil_m = (mu.length() + 1) / 2;
    const int e = ceil_m - floor_l - floor_n;
    Int total;
    if (e >= 0) {
      total = bmu * pow2(static_cast<unsigned>(e));
    } else {
      const Int denom = pow2(static_cast<unsigned>(-e));
      if (bmu % denom != 0) {
        throw Error("structure constant " + bmu.str() + " at mu = " +
                    to_string(mu) + " is not divisible by 2^" +
                    std::to_string(-e) +
                    "; the multiplicity law is contradicted");
      }
      total = bmu / denom;
    }
    const bool any_odd =
        lambda.parity() == 1 || nu.parity() == 1 || mu.parity() == 1;
    out[mu] = graded_from_total(total, any_odd);
  }

  if (auto persistent = bound_lr_cache()) {
    store_persistent(*persistent, lambda, nu, out);
  }

  auto& cache = expand_cache();
  std::scoped_lock lock(cache.mu);
  return cache.values.try_emplace(key, std::move(out)).first->second;
}

GradedInt f_coeff(const StrictPartition& lambda, const StrictPartition& nu,
                  const StrictPartition& mu) {
  if (mu.size() != lambda.size() + nu.size()) return GradedInt{};
  const auto& table = f_expand(lambda, nu);
  const auto it = table.find(mu);
  return it == table.end() ? GradedInt{} : it->second;
}

GradedInt pieri_f(const StrictPartition& nu, const StrictPartition& mu) {
  const auto grown = add_box(nu);
  bool found = false;
  for (const auto& g : grown) {
    if (g == mu) {
      found = true;
      break;
    }
  }
  if (!found) return GradedInt{};
  return theta_pow(static_cast<unsigned>(nu.parity() * mu.parity()) + 1);
}

}  // namespace qtrep
