// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include "qtrep/trep.hpp"

#include <algorithm>
#include <sstream>

#include "qtrep/lr.hpp"

namespace qtrep {

namespace {

// The shared layer sum
//   N = sum_{|gamma|=r} theta^{1-p(gamma)}
//         f(dst.lambda, gamma; src.lambda) * f(dst.mu, gamma; src.mu),
// which is theta times the actual (pre-prefactor) value.  Every term is a
// theta-multiple: the factor theta is explicit for even gamma, and for odd
// gamma both f's involve an odd length and are theta-multiples themselves.
//
// When every nonzero term has even gamma, the pre-prefactor value
// sum_{gamma even} f1*f2 is exact; it is reported in `even_sum` with
// `odd_contrib` false.
struct LayerSum {
  GradedInt numerator;  // N above
  GradedInt even_sum;   // sum over even gamma of f1*f2
  bool odd_contrib = false;
};

LayerSum layer_sum(const Bipartition& src, const Bipartition& dst, int r) {
  LayerSum out;
  for (const StrictPartition& gamma : enumerate_strict(r)) {
    GradedInt f1 = f_coeff(dst.lambda, gamma, src.lambda);
    if (f1.is_zero()) continue;
    GradedInt f2 = f_coeff(dst.mu, gamma, src.mu);
    if (f2.is_zero()) continue;
    GradedInt prod = f1 * f2;
    if (gamma.parity() == 0) {
      out.numerator += theta() * prod;
      out.even_sum += prod;
    } else {
      out.numerator += prod;
      out.odd_contrib = true;
    }
  }
  return out;
}

Mult zero_mult() { return Mult{0, GradedInt{}, false}; }

// Divide the layer sum by theta^{1+k0} and package the result.  The grading
// survives exactly when no genuine theta-division happened: k0 = 0 and no
// odd-gamma term contributed.
Mult finish_layer(const LayerSum& s, unsigned k0) {
  if (s.numerator.is_zero()) return zero_mult();
  if (k0 == 0 && !s.odd_contrib) {
    return Mult{eval_plus(s.even_sum), s.even_sum, false};
  }
  return Mult{theta_div_total(s.numerator, 1 + k0), std::nullopt, true};
}

unsigned hom_prefactor_exponent(const Bipartition& src, const Bipartition& dst) {
  return static_cast<unsigned>(src.lambda.parity() * src.mu.parity() +
                               dst.lambda.parity() * dst.mu.parity());
}

bool contains(const PartitionList& list, const StrictPartition& p) {
  return std::find(list.begin(), list.end(), p) != list.end();
}

}  // namespace

Mult hom_dim_Z(const Bipartition& src, const Bipartition& dst) {
  int r = src.lambda.size() - dst.lambda.size();
  if (r < 0 || src.mu.size() - dst.mu.size() != r) return zero_mult();
  return finish_layer(layer_sum(src, dst, r), hom_prefactor_exponent(src, dst));
}

Mult socle_mult(const Bipartition& bp, const Bipartition& sub, int r) {
  // Hom(-, E) over an injective hull E counts every occurrence of its socle
  // anywhere in the argument, and the size grading pins all occurrences of
  // V(sub) inside Z(bp) to the single layer where both sizes drop by r.  So
  // the layer multiplicity, in the same Hom-valued normalization used
  // everywhere else (a Q-type copy counts theta), is the hom dimension
  // gated on the layer index.
  if (r < 0) return zero_mult();
  if (bp.lambda.size() - sub.lambda.size() != r ||
      bp.mu.size() - sub.mu.size() != r) {
    return zero_mult();
  }
  return finish_layer(layer_sum(bp, sub, r), hom_prefactor_exponent(bp, sub));
}

Mult ext_dim(int i, const Bipartition& src, const Bipartition& dst) {
  if (i < 0) return zero_mult();
  return socle_mult(dst, src, i);
}

Ext1Result ext1_nonzero(const Bipartition& src, const Bipartition& dst) {
  Ext1Result out;
  out.case_tag = 1 + (simple_type(src) == SimpleType::Q ? 1 : 0) +
                 (simple_type(dst) == SimpleType::Q ? 2 : 0);
  out.nonzero = contains(add_box(src.lambda), dst.lambda) &&
                contains(add_box(src.mu), dst.mu);
  return out;
}

int block_of(const Bipartition& bp) { return bp.lambda.size() - bp.mu.size(); }

std::vector<Bipartition> labels_up_to(int bound) {
  std::vector<Bipartition> out;
  for (int a = 0; a <= bound; ++a) {
    for (const StrictPartition& lambda : enumerate_strict(a)) {
      for (int b = 0; b <= bound; ++b) {
        for (const StrictPartition& mu : enumerate_strict(b)) {
          out.push_back(Bipartition{lambda, mu});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Bipartition>> block_components(int bound) {
  // An ext^1-edge adds a box to both coordinates, so connecting two labels
  // of the window may require passing through labels one box larger.  Build
  // the graph with that margin, then restrict to the window.
  const int margin = bound + 1;
  std::vector<Bipartition> labels = labels_up_to(margin);
  std::map<Bipartition, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    index.emplace(labels[i], i);
  }

  std::vector<int> parent(labels.size());
  for (int i = 0; i < static_cast<int>(parent.size()); ++i) parent[i] = i;
  auto find = [&parent](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    const Bipartition& src = labels[i];
    for (const StrictPartition& lambda2 : add_box(src.lambda)) {
      for (const StrictPartition& mu2 : add_box(src.mu)) {
        auto it = index.find(Bipartition{lambda2, mu2});
        if (it != index.end()) unite(i, it->second);
      }
    }
  }

  std::map<int, std::vector<Bipartition>> groups;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) {
    const Bipartition& bp = labels[i];
    if (bp.lambda.size() > bound || bp.mu.size() > bound) continue;
    groups[find(i)].push_back(bp);
  }
  std::vector<std::vector<Bipartition>> out;
  out.reserve(groups.size());
  for (auto& [root, members] : groups) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::map<Bipartition, Mult> tensor_ZZ(const Bipartition& a,
                                      const Bipartition& b) {
  unsigned base = static_cast<unsigned>(a.lambda.parity() * a.mu.parity() +
                                        b.lambda.parity() * b.mu.parity());
  std::map<Bipartition, Mult> out;
  for (const auto& [lambda2, f1] : f_expand(a.lambda, b.lambda)) {
    for (const auto& [mu2, f2] : f_expand(a.mu, b.mu)) {
      unsigned pl = static_cast<unsigned>(lambda2.parity());
      unsigned pm = static_cast<unsigned>(mu2.parity());
      GradedInt numerator = theta_pow(pl * pm) * f1 * f2;
      unsigned k = base + pl + pm;
      Mult value;
      if (k == 0) {
        value = Mult{eval_plus(numerator), numerator, false};
      } else {
        value = Mult{theta_div_total(numerator, k), std::nullopt, true};
      }
      if (!value.is_zero()) out.emplace(Bipartition{lambda2, mu2}, value);
    }
  }
  return out;
}

GradedInt u_mult(const StrictPartition& grown, const StrictPartition& base,
                 const StrictPartition& other) {
  int p_base = (base.parity() + other.parity()) % 2;
  int p_grown = (grown.parity() + other.parity()) % 2;
  if (p_base == 0 && p_grown == 1) return GradedInt(Int(1), Int(0));
  return theta();
}

std::map<Bipartition, GradedInt> tensor_Z_V(const Bipartition& bp) {
  std::map<Bipartition, GradedInt> out;
  for (const StrictPartition& lambda2 : add_box(bp.lambda)) {
    out.emplace(Bipartition{lambda2, bp.mu},
                u_mult(lambda2, bp.lambda, bp.mu));
  }
  return out;
}

std::map<Bipartition, GradedInt> tensor_Z_W(const Bipartition& bp) {
  std::map<Bipartition, GradedInt> out;
  for (const StrictPartition& mu2 : add_box(bp.mu)) {
    out.emplace(Bipartition{bp.lambda, mu2}, u_mult(mu2, bp.mu, bp.lambda));
  }
  return out;
}

TranslationSocle translation_socle(const Bipartition& bp, Direction dir) {
  TranslationSocle out;
  if (dir == Direction::V) {
    for (const StrictPartition& lambda2 : add_box(bp.lambda)) {
      out.soc.emplace(Bipartition{lambda2, bp.mu},
                      u_mult(lambda2, bp.lambda, bp.mu));
    }
    for (const StrictPartition& mu2 : remove_box(bp.mu)) {
      out.soc2.emplace(Bipartition{bp.lambda, mu2},
                       u_mult(bp.mu, mu2, bp.lambda));
    }
  } else {
    for (const StrictPartition& mu2 : add_box(bp.mu)) {
      out.soc.emplace(Bipartition{bp.lambda, mu2},
                      u_mult(mu2, bp.mu, bp.lambda));
    }
    for (const StrictPartition& lambda2 : remove_box(bp.lambda)) {
      out.soc2.emplace(Bipartition{lambda2, bp.mu},
                       u_mult(bp.lambda, lambda2, bp.mu));
    }
  }
  return out;
}

KoszulReport koszul_validate(const std::vector<KoszulEntry>& entries) {
  KoszulReport report;
  report.pass = true;
  for (const KoszulEntry& e : entries) {
    if (e.total == 0) continue;
    ++report.entries_checked;
    auto fail = [&](const std::string& reason) {
      report.pass = false;
      std::ostringstream os;
      os << "soc_" << e.layer << " Z(" << to_string(e.big) << ") contains V("
         << to_string(e.sub) << ") with multiplicity total " << e.total
         << " but " << reason;
      report.counterexamples.push_back(os.str());
    };
    int drop_l = e.big.lambda.size() - e.sub.lambda.size();
    int drop_m = e.big.mu.size() - e.sub.mu.size();
    if (drop_l != e.layer || drop_m != e.layer) {
      fail("the sizes drop by (" + std::to_string(drop_l) + ", " +
           std::to_string(drop_m) + "), not by the layer index");
      continue;
    }
    int degree_drop = e.big.koszul_degree() - e.sub.koszul_degree();
    if (degree_drop != e.layer) {
      fail("the degree min(|lambda|, |mu|) drops by " +
           std::to_string(degree_drop) + ", not by the layer index");
      continue;
    }
    if (e.layer + 1 > e.big.koszul_degree() + 1) {
      fail("the layer exceeds the resolution-length bound min(|lambda|, |mu|)");
    }
  }
  return report;
}

KoszulReport koszul_check(int bound) {
  std::vector<KoszulEntry> entries;
  std::vector<Bipartition> labels = labels_up_to(bound);
  for (const Bipartition& big : labels) {
    for (const Bipartition& sub : labels) {
      int r = big.lambda.size() - sub.lambda.size();
      if (r < 0 || big.mu.size() - sub.mu.size() != r) continue;
      Mult m = socle_mult(big, sub, r);
      if (m.is_zero()) continue;
      entries.push_back(KoszulEntry{big, sub, r, m.total});
    }
  }
  return koszul_validate(entries);
}

}  // namespace qtrep
