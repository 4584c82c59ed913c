// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "qtrep/parity_ring.hpp"

namespace qtrep {

// Persistent store of parity-ring values keyed by (kind tag, key string).
//
// On-disk format (little-endian):
//   header:  magic "QTREP1", u32 format version (currently 1)
//   record:  u8 kind | u32 key length | key bytes
//            | u32 value length | value bytes ("one|eps" in decimal)
//            | u64 FNV-1a checksum of everything before it in the record
// Records are append-only.  Loading keeps the longest valid prefix; a
// corrupted tail is discarded with a warning and the file is rewritten from
// the valid records, so a torn write never poisons later runs.  A file with
// the right magic but an unknown version is rejected (hard failure), never
// silently rebuilt.
//
// Concurrency: one writer per file, enforced with an advisory lock taken at
// open.  If the lock is unavailable the cache still loads and serves reads,
// but new values stay in memory only.
class Cache {
 public:
  // Record kinds used by the library.
  static constexpr std::uint8_t kLrCoefficient = 1;  // key "lambda;nu;mu"
  static constexpr std::uint8_t kLrTableComplete = 2;  // key "lambda;nu"

  explicit Cache(std::string path);
  ~Cache();

  Cache(const Cache&) = delete;
  Cache& operator=(const Cache&) = delete;

  std::optional<GradedInt> get(std::uint8_t kind, const std::string& key) const;
  void put(std::uint8_t kind, const std::string& key, const GradedInt& value);

  const std::string& path() const { return path_; }
  bool writable() const { return writable_; }
  std::size_t record_count() const;

 private:
  void load();
  void rewrite_all_locked();
  void append_locked(std::uint8_t kind, const std::string& key,
                     const GradedInt& value);

  std::string path_;
  int fd_ = -1;
  bool writable_ = false;
  std::uint64_t end_offset_ = 0;
  mutable std::mutex mutex_;
  std::map<std::pair<std::uint8_t, std::string>, GradedInt> entries_;
};

// Global binding consulted by the f-table memoizer: when set, f_expand
// reads and writes kind-1/kind-2 records here.  A table is trusted from the
// cache only once its completeness marker (kind 2) is present, so a run
// interrupted mid-write is recomputed rather than half-read.
void bind_lr_cache(std::shared_ptr<Cache> cache);
std::shared_ptr<Cache> bound_lr_cache();

}  // namespace qtrep
