// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include "qtrep/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace qtrep {

StrictPartition::StrictPartition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw ParseError("partition parts must be positive");
    }
    if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1]) {
      throw ParseError("partition parts must be strictly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

void enumerate_strict_rec(int remaining, int max_part, std::vector<int>& stack,
                          PartitionList& out) {
  if (remaining == 0) {
    out.emplace_back(stack);
    return;
  }
  for (int next = std::min(remaining, max_part); next >= 1; --next) {
    // Strictness: the parts below `next` can sum to at most
    // (next-1) + (next-2) + ... which always suffices for small inputs;
    // recursion prunes naturally when remaining > 0 and next == 0.
    stack.push_back(next);
    enumerate_strict_rec(remaining - next, next - 1, stack, out);
    stack.pop_back();
  }
}

}  // namespace

PartitionList enumerate_strict(int n) {
  PartitionList out;
  if (n < 0) return out;
  std::vector<int> stack;
  enumerate_strict_rec(n, n, stack, out);
  return out;
}

PartitionList add_box(const StrictPartition& lambda) {
  PartitionList out;
  const auto& p = lambda.parts();
  const int l = lambda.length();
  for (int i = 0; i < l; ++i) {
    // Grow row i by one; stays strict iff row i-1 is strictly larger after.
    if (i == 0 || p[i - 1] > p[i] + 1) {
      auto q = p;
      q[i] += 1;
      out.emplace_back(std::move(q));
    }
  }
  // Append a new row of size 1; valid iff the last row is > 1 (or empty).
  if (l == 0 || p[l - 1] > 1) {
    auto q = p;
    q.push_back(1);
    out.emplace_back(std::move(q));
  }
  std::sort(out.begin(), out.end());
  return out;
}

PartitionList remove_box(const StrictPartition& lambda) {
  PartitionList out;
  const auto& p = lambda.parts();
  const int l = lambda.length();
  for (int i = 0; i < l; ++i) {
    if (p[i] == 1) {
      // Only the last row can be 1 in a strict partition; drop it.
      auto q = p;
      q.pop_back();
      out.emplace_back(std::move(q));
    } else if (i + 1 == l || p[i] - 1 > p[i + 1]) {
      auto q = p;
      q[i] -= 1;
      out.emplace_back(std::move(q));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool dominance_leq(const StrictPartition& a, const StrictPartition& b) {
  if (a.size() != b.size()) {
    throw SizeMismatch("dominance order compares partitions of equal size; got " +
                       std::to_string(a.size()) + " and " +
                       std::to_string(b.size()));
  }
  int sa = 0;
  int sb = 0;
  const int rows = std::max(a.length(), b.length());
  for (int i = 0; i < rows; ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa > sb) return false;
  }
  return true;
}

StrictPartition parse_partition(const std::string& text) {
  std::string s = text;
  // Trim surrounding whitespace.
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw ParseError("empty partition text; use \"-\" for the empty partition");
  }
  s = s.substr(first, last - first + 1);
  if (s == "-") return StrictPartition{};
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      while (pos < tok.size() && (tok[pos] == ' ' || tok[pos] == '\t')) ++pos;
      if (pos != tok.size()) throw ParseError("");
      parts.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("cannot parse partition part '" + tok + "' in '" + text +
                       "'");
    }
  }
  return StrictPartition(std::move(parts));
}

Bipartition parse_bipartition(const std::string& text) {
  const auto bar = text.find('|');
  if (bar == std::string::npos) {
    throw ParseError("bipartition text must contain '|', e.g. \"3,1|2\" or \"-|-\"; got '" +
                     text + "'");
  }
  return Bipartition{parse_partition(text.substr(0, bar)),
                     parse_partition(text.substr(bar + 1))};
}

std::string to_string(const StrictPartition& p) {
  if (p.empty()) return "-";
  std::string out;
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

std::string to_string(const Bipartition& bp) {
  return to_string(bp.lambda) + "|" + to_string(bp.mu);
}

std::ostream& operator<<(std::ostream& os, const StrictPartition& p) {
  return os << to_string(p);
}

std::ostream& operator<<(std::ostream& os, const Bipartition& bp) {
  return os << to_string(bp);
}

}  // namespace qtrep
