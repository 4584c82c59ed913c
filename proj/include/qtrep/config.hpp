// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace qtrep {

// Runtime configuration shared by the CLI commands.
struct Config {
  enum class Output { kTable, kJson };

  std::string cache_path;  // empty: no persistent cache
  int max_size = 4;        // truncation bound for sweep commands
  int num_threads = 0;     // 0: use hardware concurrency
  Output output = Output::kTable;
};

// Desk-scale caps.  Sweeps walk every bipartition label inside the bound and
// expand symmetric functions in |lambda|+|mu| variables, so cost grows
// steeply; bounds above this are rejected as usage errors rather than left
// to run for hours.  The finite-rank oracle is similarly capped: its tensor
// spaces have dimension (2n)^(p+q).
inline constexpr int kMaxSizeBound = 6;
inline constexpr int kMaxOracleSlots = 4;  // p + q for matrix realizations
inline constexpr int kMaxOracleRank = 6;   // n in q(n)

// Cache path resolution: an explicit --cache value wins, otherwise the
// QTREP_CACHE environment variable, otherwise disabled (empty).
std::string resolve_cache_path(const std::string& flag_value);

// Thread count resolution: a positive request is honored; 0 means hardware
// concurrency (at least 1).
int resolve_threads(int requested);

}  // namespace qtrep
