// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include "qtrep/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace qtrep {

Int SymPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Int(0) : it->second;
}

void SymPoly::add_term(const Exponents& e, const Int& c) {
  if (static_cast<int>(e.size()) != nvars_) {
    throw ShapeMismatch("exponent vector length does not match variable count");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  if (o.nvars_ != nvars_) {
    throw ShapeMismatch("adding polynomials over different variable counts");
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  if (o.nvars_ != nvars_) {
    throw ShapeMismatch("subtracting polynomials over different variable counts");
  }
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  if (a.nvars_ != b.nvars_) {
    throw ShapeMismatch("multiplying polynomials over different variable counts");
  }
  SymPoly out(a.nvars_);
  SymPoly::Exponents e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

SymPoly operator*(const Int& c, SymPoly p) {
  if (c == 0) return SymPoly(p.nvars());
  for (auto& [e, coeff] : p.terms_) coeff *= c;
  return p;
}

const SymPoly::Exponents& SymPoly::leading_exponents() const {
  if (terms_.empty()) {
    throw ShapeMismatch("zero polynomial has no leading term");
  }
  return terms_.rbegin()->first;
}

void SymPoly::divide_exact(const Int& d) {
  for (auto& [e, c] : terms_) {
    if (c % d != 0) {
      throw BasisSolveFailure("coefficient " + c.str() +
                              " is not divisible by " + d.str());
    }
    c /= d;
  }
}

std::string SymPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Print lex-descending so the leading term comes first.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Int& c = it->second;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    const Int a = abs(c);
    bool printed = false;
    if (a != 1) {
      os << a.str();
      printed = true;
    }
    for (size_t i = 0; i < it->first.size(); ++i) {
      const int p = it->first[i];
      if (p == 0) continue;
      if (printed) os << "*";
      os << "x" << (i + 1);
      if (p > 1) os << "^" << p;
      printed = true;
    }
    if (!printed) os << "1";
  }
  return os.str();
}

SymPoly monomial_sym(const StrictPartition& mu, int nvars) {
  SymPoly out(nvars);
  if (mu.length() > nvars) return out;  // m_mu vanishes with too few variables
  SymPoly::Exponents e(nvars, 0);
  for (int i = 0; i < mu.length(); ++i) e[i] = mu.parts()[i];
  std::sort(e.begin(), e.end());
  do {
    out.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

namespace {

// Degree slices of prod_i (1 + 2 sum_{k>=1} x_i^k t^k) up to t^max_deg:
// slice[d] is the coefficient of t^d, a homogeneous polynomial of degree d.
std::vector<SymPoly> q_series(int max_deg, int nvars) {
  std::vector<SymPoly> slice(static_cast<size_t>(max_deg) + 1, SymPoly(nvars));
  slice[0].add_term(SymPoly::Exponents(nvars, 0), 1);
  for (int var = 0; var < nvars; ++var) {
    std::vector<SymPoly> next(static_cast<size_t>(max_deg) + 1, SymPoly(nvars));
    for (int d = 0; d <= max_deg; ++d) {
      // Factor term of degree k in this variable: 1 for k = 0, 2 x_var^k else.
      for (int k = 0; k <= d; ++k) {
        const SymPoly& src = slice[d - k];
        if (src.is_zero()) continue;
        if (k == 0) {
          next[d] += src;
          continue;
        }
        for (const auto& [e, c] : src.terms()) {
          auto e2 = e;
          e2[var] += k;
          next[d].add_term(e2, 2 * c);
        }
      }
    }
    slice = std::move(next);
  }
  return slice;
}

struct QGenCache {
  std::mutex mu;
  // Keyed by nvars; value holds slices 0..max computed so far.
  std::map<int, std::vector<SymPoly>> slices;
};

QGenCache& q_gen_cache() {
  static QGenCache cache;
  return cache;
}

}  // namespace

SymPoly q_generator(int r, int nvars) {
  if (r < 0) return SymPoly(nvars);
  auto& cache = q_gen_cache();
  std::scoped_lock lock(cache.mu);
  auto& stored = cache.slices[nvars];
  if (static_cast<int>(stored.size()) <= r) {
    stored = q_series(r, nvars);
  }
  return stored[r];
}

namespace {

// Q for a two-row label (a, b) with a > b >= 0; Q_(a,0) = q_a.
SymPoly schur_q_two_row(int a, int b, int nvars) {
  if (b == 0) return q_generator(a, nvars);
  SymPoly out = q_generator(a, nvars) * q_generator(b, nvars);
  for (int i = 1; i <= b; ++i) {
    SymPoly term = q_generator(a + i, nvars) * q_generator(b - i, nvars);
    const Int sign = (i % 2 == 0) ? 2 : -2;
    out += sign * std::move(term);
  }
  return out;
}

struct SchurQCache {
  std::mutex mu;
  std::map<std::pair<std::vector<int>, int>, SymPoly> values;
};

SchurQCache& schur_q_cache() {
  static SchurQCache cache;
  return cache;
}

SymPoly schur_q_impl(const std::vector<int>& parts, int nvars);

// Pfaffian expansion along the first row for length >= 3.
SymPoly schur_q_expand(const std::vector<int>& parts, int nvars) {
  // Pad to even length with a zero part; Q_(a,0) = q_a keeps this consistent.
  std::vector<int> p = parts;
  if (p.size() % 2 != 0) p.push_back(0);
  const int m = static_cast<int>(p.size());
  SymPoly out(nvars);
  for (int j = 2; j <= m; ++j) {
    SymPoly pair = schur_q_two_row(p[0], p[j - 1], nvars);
    std::vector<int> rest;
    for (int i = 1; i < m; ++i) {
      if (i != j - 1 && p[i] > 0) rest.push_back(p[i]);
    }
    SymPoly term = pair * schur_q_impl(rest, nvars);
    if (j % 2 == 0) {
      out += term;
    } else {
      out -= term;
    }
  }
  return out;
}

SymPoly schur_q_impl(const std::vector<int>& parts, int nvars) {
  {
    auto& cache = schur_q_cache();
    std::scoped_lock lock(cache.mu);
    const auto it = cache.values.find({parts, nvars});
    if (it != cache.values.end()) return it->second;
  }
  SymPoly out(nvars);
  if (parts.empty()) {
    out.add_term(SymPoly::Exponents(nvars, 0), 1);
  } else if (parts.size() == 1) {
    out = q_generator(parts[0], nvars);
  } else if (parts.size() == 2) {
    out = schur_q_two_row(parts[0], parts[1], nvars);
  } else {
    out = schur_q_expand(parts, nvars);
  }
  auto& cache = schur_q_cache();
  std::scoped_lock lock(cache.mu);
  return cache.values.try_emplace({parts, nvars}, std::move(out))
      .first->second;
}

}  // namespace

SymPoly schur_q(const StrictPartition& lambda, int nvars) {
  return schur_q_impl(lambda.parts(), nvars);
}

SymPoly schur_p(const StrictPartition& lambda, int nvars) {
  SymPoly out = schur_q(lambda, nvars);
  out.divide_exact(pow2(static_cast<unsigned>(lambda.length())));
  return out;
}

std::map<StrictPartition, Int> q_structure_constants(
    const StrictPartition& lambda, const StrictPartition& nu) {
  const int total = lambda.size() + nu.size();
  // Enough variables to keep every Q_mu with |mu| = total linearly
  // independent and to expose the leading monomial x^mu of each.
  const int nvars = std::max(total, 1);
  SymPoly residual = schur_q(lambda, nvars) * schur_q(nu, nvars);

  std::map<StrictPartition, Int> out;
  while (!residual.is_zero()) {
    const auto& lead = residual.leading_exponents();
    // The leading exponent of the residual must be a strict partition: every
    // Q_mu contributing has lex-leading monomial 2^{l(mu)} x^mu.
    std::vector<int> parts;
    for (const int e : lead) {
      if (e == 0) break;
      parts.push_back(e);
    }
    for (size_t i = parts.size(); i < lead.size(); ++i) {
      if (lead[i] != 0) {
        throw BasisSolveFailure(
            "leading monomial is not a partition exponent vector");
      }
    }
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
      if (parts[i] <= parts[i + 1]) {
        throw BasisSolveFailure(
            "leading monomial is not strictly decreasing; residual cannot lie "
            "in the span of the Schur Q basis");
      }
    }
    const StrictPartition mu{parts};
    const Int denom = pow2(static_cast<unsigned>(mu.length()));
    const Int c = residual.coefficient(lead);
    if (c % denom != 0) {
      throw BasisSolveFailure("leading coefficient " + c.str() +
                              " is not divisible by 2^l(mu) = " + denom.str());
    }
    const Int e = c / denom;
    residual -= e * schur_q(mu, nvars);
    out[mu] = e;
  }
  return out;
}

}  // namespace qtrep
