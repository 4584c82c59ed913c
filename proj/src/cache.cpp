// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include "qtrep/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <iostream>
#include <vector>

#include "qtrep/errors.hpp"

namespace qtrep {

namespace {

constexpr char kMagic[6] = {'Q', 'T', 'R', 'E', 'P', '1'};
constexpr std::uint32_t kFormatVersion = 1;

std::uint64_t fnv1a(const std::uint8_t* data, std::size_t n,
                    std::uint64_t h = 14695981039346656037ULL) {
  for (std::size_t i = 0; i < n; ++i) {
    h ^= data[i];
    h *= 1099511628211ULL;
  }
  return h;
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back((v >> (8 * i)) & 0xff);
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back((v >> (8 * i)) & 0xff);
}

std::uint32_t get_u32(const std::uint8_t* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= std::uint32_t(p[i]) << (8 * i);
  return v;
}

std::uint64_t get_u64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= std::uint64_t(p[i]) << (8 * i);
  return v;
}

std::string encode_value(const GradedInt& v) {
  return v.one.str() + "|" + v.eps.str();
}

bool decode_value(const std::string& text, GradedInt* out) {
  std::size_t bar = text.find('|');
  if (bar == std::string::npos) return false;
  try {
    out->one = Int(text.substr(0, bar));
    out->eps = Int(text.substr(bar + 1));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

std::vector<std::uint8_t> serialize_record(std::uint8_t kind,
                                           const std::string& key,
                                           const GradedInt& value) {
  std::string val = encode_value(value);
  std::vector<std::uint8_t> out;
  out.reserve(1 + 4 + key.size() + 4 + val.size() + 8);
  out.push_back(kind);
  put_u32(out, static_cast<std::uint32_t>(key.size()));
  out.insert(out.end(), key.begin(), key.end());
  put_u32(out, static_cast<std::uint32_t>(val.size()));
  out.insert(out.end(), val.begin(), val.end());
  put_u64(out, fnv1a(out.data(), out.size()));
  return out;
}

constexpr std::size_t kMaxFieldLen = 1u << 20;  // sanity cap on lengths

}  // namespace

Cache::Cache(std::string path) : path_(std::move(path)) {
  fd_ = ::open(path_.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
  if (fd_ < 0) {
    throw Error("cannot open cache file '" + path_ +
                "': " + std::strerror(errno));
  }
  if (::flock(fd_, LOCK_EX | LOCK_NB) == 0) {
    writable_ = true;
  } else {
    std::cerr << "qtrep: cache '" << path_
              << "' is locked by another process; running read-only\n";
  }
  load();
}

Cache::~Cache() {
  if (fd_ >= 0) {
    if (writable_) ::fsync(fd_);
    ::close(fd_);
  }
}

void Cache::load() {
  std::lock_guard<std::mutex> lock(mutex_);

  off_t size = ::lseek(fd_, 0, SEEK_END);
  if (size < 0) throw Error("cannot stat cache file '" + path_ + "'");
  std::vector<std::uint8_t> buf(static_cast<std::size_t>(size));
  std::size_t got = 0;
  while (got < buf.size()) {
    ssize_t n = ::pread(fd_, buf.data() + got, buf.size() - got,
                        static_cast<off_t>(got));
    if (n <= 0) throw Error("cannot read cache file '" + path_ + "'");
    got += static_cast<std::size_t>(n);
  }

  const std::size_t header_len = sizeof(kMagic) + 4;
  if (buf.empty()) {
    // Fresh file: write the header now (if we can).
    if (writable_) {
      std::vector<std::uint8_t> header(kMagic, kMagic + sizeof(kMagic));
      put_u32(header, kFormatVersion);
      if (::pwrite(fd_, header.data(), header.size(), 0) !=
          static_cast<ssize_t>(header.size())) {
        throw Error("cannot initialize cache file '" + path_ + "'");
      }
      end_offset_ = header.size();
    }
    return;
  }
  if (buf.size() < header_len ||
      std::memcmp(buf.data(), kMagic, sizeof(kMagic)) != 0) {
    throw Error("'" + path_ + "' is not a qtrep cache file");
  }
  std::uint32_t version = get_u32(buf.data() + sizeof(kMagic));
  if (version != kFormatVersion) {
    throw Error("cache file '" + path_ + "' has unsupported format version " +
                std::to_string(version));
  }

  std::size_t pos = header_len;
  std::size_t valid_end = pos;
  bool corrupt = false;
  while (pos < buf.size()) {
    // kind(1) keylen(4) key vallen(4) val checksum(8)
    std::size_t p = pos;
    if (buf.size() - p < 1 + 4) break;
    std::uint8_t kind = buf[p];
    std::uint32_t keylen = get_u32(buf.data() + p + 1);
    p += 5;
    if (keylen > kMaxFieldLen || buf.size() - p < keylen + 4) break;
    std::string key(reinterpret_cast<const char*>(buf.data() + p), keylen);
    p += keylen;
    std::uint32_t vallen = get_u32(buf.data() + p);
    p += 4;
    if (vallen > kMaxFieldLen || buf.size() - p < vallen + 8) break;
    std::string val(reinterpret_cast<const char*>(buf.data() + p), vallen);
    p += vallen;
    std::uint64_t stored = get_u64(buf.data() + p);
    p += 8;
    std::uint64_t computed = fnv1a(buf.data() + pos, p - pos - 8);
    GradedInt value;
    if (stored != computed || !decode_value(val, &value)) {
      corrupt = true;
      break;
    }
    entries_[{kind, key}] = value;
    pos = p;
    valid_end = pos;
  }
  if (pos < buf.size() && valid_end <= buf.size()) corrupt = true;

  end_offset_ = valid_end;
  if (corrupt) {
    std::cerr << "qtrep: cache '" << path_ << "' has a corrupted tail; keeping "
              << entries_.size() << " valid record(s) and rebuilding\n";
    if (writable_) rewrite_all_locked();
  }
}

void Cache::rewrite_all_locked() {
  std::vector<std::uint8_t> out(kMagic, kMagic + sizeof(kMagic));
  put_u32(out, kFormatVersion);
  for (const auto& [k, v] : entries_) {
    std::vector<std::uint8_t> rec = serialize_record(k.first, k.second, v);
    out.insert(out.end(), rec.begin(), rec.end());
  }
  if (::ftruncate(fd_, 0) != 0 ||
      ::pwrite(fd_, out.data(), out.size(), 0) !=
          static_cast<ssize_t>(out.size())) {
    throw Error("cannot rewrite cache file '" + path_ + "'");
  }
  end_offset_ = out.size();
}

void Cache::append_locked(std::uint8_t kind, const std::string& key,
                          const GradedInt& value) {
  std::vector<std::uint8_t> rec = serialize_record(kind, key, value);
  if (::pwrite(fd_, rec.data(), rec.size(),
               static_cast<off_t>(end_offset_)) !=
      static_cast<ssize_t>(rec.size())) {
    throw Error("cannot append to cache file '" + path_ + "'");
  }
  end_offset_ += rec.size();
}

std::optional<GradedInt> Cache::get(std::uint8_t kind,
                                    const std::string& key) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find({kind, key});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void Cache::put(std::uint8_t kind, const std::string& key,
                const GradedInt& value) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = entries_.emplace(std::make_pair(kind, key), value);
  if (!inserted) {
    if (it->second == value) return;  // already stored, nothing to do
    it->second = value;
  }
  if (writable_) append_locked(kind, key, value);
}

std::size_t Cache::record_count() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return entries_.size();
}

namespace {
std::mutex g_binding_mutex;
std::shared_ptr<Cache> g_lr_cache;
}  // namespace

void bind_lr_cache(std::shared_ptr<Cache> cache) {
  std::lock_guard<std::mutex> lock(g_binding_mutex);
  g_lr_cache = std::move(cache);
}

std::shared_ptr<Cache> bound_lr_cache() {
  std::lock_guard<std::mutex> lock(g_binding_mutex);
  return g_lr_cache;
}

}  // namespace qtrep
