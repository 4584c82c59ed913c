// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include <unistd.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>

#include "doctest.h"
#include "qtrep/cache.hpp"
#include "qtrep/errors.hpp"
#include "qtrep/lr.hpp"
#include "qtrep/parity_ring.hpp"
#include "qtrep/partitions.hpp"

using namespace qtrep;

namespace {

namespace fs = std::filesystem;

std::string temp_cache_path(const std::string& tag) {
  return (fs::temp_directory_path() /
          ("qtrep_test_" + std::to_string(::getpid()) + "_" + tag + ".qc"))
      .string();
}

// Test-local re-encoding of the on-disk format, kept deliberately separate
// from the library's serializer: these bytes are the compatibility contract.
void append_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

void append_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (char c : bytes) {
    h ^= static_cast<std::uint8_t>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::string file_header() {
  std::string out = "QTREP1";
  append_u32(out, 1);
  return out;
}

std::string record(std::uint8_t kind, const std::string& key,
                   const std::string& value) {
  std::string body;
  body.push_back(static_cast<char>(kind));
  append_u32(body, static_cast<std::uint32_t>(key.size()));
  body += key;
  append_u32(body, static_cast<std::uint32_t>(value.size()));
  body += value;
  append_u64(body, fnv1a64(body));
  return body;
}

void write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

void append_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::app);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

struct BindGuard {
  explicit BindGuard(std::shared_ptr<Cache> c) { bind_lr_cache(std::move(c)); }
  ~BindGuard() { bind_lr_cache(nullptr); }
};

}  // namespace

TEST_CASE("values round-trip through a reopened cache") {
  const std::string path = temp_cache_path("roundtrip");
  fs::remove(path);
  {
    Cache cache(path);
    CHECK(cache.writable());
    cache.put(Cache::kLrCoefficient, "a;b;c", GradedInt(3, 1));
    cache.put(Cache::kLrTableComplete, "a;b", GradedInt(1, 0));
    // The two kinds are separate key spaces.
    CHECK(cache.get(Cache::kLrCoefficient, "a;b") == std::nullopt);
    CHECK(cache.get(Cache::kLrCoefficient, "a;b;c") == GradedInt(3, 1));
    CHECK(cache.record_count() == 2);
    // Updating in place: the latest value wins after reload.
    cache.put(Cache::kLrCoefficient, "a;b;c", GradedInt(5, 5));
    CHECK(cache.record_count() == 2);
  }
  {
    Cache reopened(path);
    CHECK(reopened.record_count() == 2);
    CHECK(reopened.get(Cache::kLrCoefficient, "a;b;c") == GradedInt(5, 5));
    CHECK(reopened.get(Cache::kLrTableComplete, "a;b") == GradedInt(1, 0));
    CHECK(reopened.get(Cache::kLrCoefficient, "missing") == std::nullopt);
  }
  fs::remove(path);
}

TEST_CASE("a corrupted tail is dropped and the file rebuilt") {
  const std::string path = temp_cache_path("tail");
  fs::remove(path);
  {
    Cache cache(path);
    cache.put(Cache::kLrCoefficient, "x", GradedInt(2, 2));
    cache.put(Cache::kLrCoefficient, "y", GradedInt(4, 0));
  }
  const auto clean_size = fs::file_size(path);
  append_file(path, "torn-write-garbage");
  {
    Cache recovered(path);  // warns on stderr, keeps the valid prefix
    CHECK(recovered.record_count() == 2);
    CHECK(recovered.get(Cache::kLrCoefficient, "x") == GradedInt(2, 2));
    CHECK(recovered.get(Cache::kLrCoefficient, "y") == GradedInt(4, 0));
  }
  // The rebuild truncated the garbage away.
  CHECK(fs::file_size(path) == clean_size);
  {
    Cache clean(path);
    CHECK(clean.record_count() == 2);
  }
  fs::remove(path);
}

TEST_CASE("corruption in the middle discards everything after it") {
  const std::string path = temp_cache_path("prefix");
  fs::remove(path);
  std::string bytes = file_header();
  bytes += record(Cache::kLrCoefficient, "first", "1|1");
  const std::size_t flip_at = bytes.size() - 3;  // inside the first checksum
  bytes += record(Cache::kLrCoefficient, "second", "2|0");
  bytes[flip_at] = static_cast<char>(bytes[flip_at] ^ 0x40);
  write_file(path, bytes);
  Cache cache(path);
  CHECK(cache.record_count() == 0);
  CHECK(cache.get(Cache::kLrCoefficient, "first") == std::nullopt);
  CHECK(cache.get(Cache::kLrCoefficient, "second") == std::nullopt);
  fs::remove(path);
}

TEST_CASE("foreign files and future versions are rejected") {
  const std::string path = temp_cache_path("reject");
  write_file(path, "definitely not a cache file");
  CHECK_THROWS_AS(Cache{path}, Error);

  std::string future = "QTREP1";
  append_u32(future, 2);
  write_file(path, future);
  CHECK_THROWS_AS(Cache{path}, Error);
  fs::remove(path);
}

TEST_CASE("a second opener falls back to read-only") {
  const std::string path = temp_cache_path("lock");
  fs::remove(path);
  Cache first(path);
  CHECK(first.writable());
  {
    Cache second(path);  // warns on stderr
    CHECK(!second.writable());
    second.put(Cache::kLrCoefficient, "volatile", GradedInt(1, 1));
    CHECK(second.get(Cache::kLrCoefficient, "volatile") == GradedInt(1, 1));
  }
  Cache third(path);
  CHECK(!third.writable());  // `first` still holds the lock
  CHECK(third.get(Cache::kLrCoefficient, "volatile") == std::nullopt);
  fs::remove(path);
}

TEST_CASE("preseeded complete tables are served without recomputation") {
  // The pair ((4),(2)) is reserved for this test: no other in-process user
  // expands it, so the memo cannot shadow the store.  The stored value is
  // impossible for a genuine computation, proving it came from the file.
  const std::string path = temp_cache_path("preseed");
  std::string bytes = file_header();
  bytes += record(Cache::kLrCoefficient, "4;2;6", "7|0");
  bytes += record(Cache::kLrTableComplete, "4;2", "1|0");
  write_file(path, bytes);
  {
    BindGuard guard(std::make_shared<Cache>(path));
    const auto table = f_expand(StrictPartition({4}), StrictPartition({2}));
    REQUIRE(table.size() == 1);
    CHECK(table.at(StrictPartition({6})) == GradedInt(7, 0));
  }
  fs::remove(path);
}

TEST_CASE("computed tables are persisted under a completeness marker") {
  // The pair ((4,1),(2)) is likewise reserved for this test.
  const std::string path = temp_cache_path("store");
  fs::remove(path);
  std::map<StrictPartition, GradedInt> table;
  {
    BindGuard guard(std::make_shared<Cache>(path));
    table = f_expand(StrictPartition({4, 1}), StrictPartition({2}));
    CHECK(!table.empty());
  }
  Cache readback(path);
  CHECK(readback.get(Cache::kLrTableComplete, "4,1;2").has_value());
  for (const auto& [mu, value] : table) {
    CHECK(readback.get(Cache::kLrCoefficient, "4,1;2;" + to_string(mu)) ==
          value);
  }
  CHECK(readback.record_count() == table.size() + 1);
  fs::remove(path);
}
