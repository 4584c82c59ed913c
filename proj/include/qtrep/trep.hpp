// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtrep/parity_ring.hpp"
#include "qtrep/partitions.hpp"

namespace qtrep {

// A multiplicity valued in the parity ring whose even/odd split may have
// been destroyed by a theta-division.  `graded` is present exactly when no
// division occurred (the value is then fully known); `total` always holds
// the evaluation at eps = 1.  Divisions are performed once, on a fully
// assembled numerator, via theta_div_total.
struct Mult {
  Int total = 0;
  std::optional<GradedInt> graded = GradedInt{};
  bool parity_ambiguous = false;

  bool operator==(const Mult&) const = default;
  bool is_zero() const { return total == 0; }
};

// dim Hom(Z(src), Z(dst)) in the parity ring (total; graded when exact).
// Zero unless |src.lambda| - |dst.lambda| = |src.mu| - |dst.mu| = r >= 0;
// otherwise
//   (1/theta^{k0}) * sum_{|gamma|=r} theta^{-p(gamma)}
//        f(dst.lambda, gamma; src.lambda) * f(dst.mu, gamma; src.mu),
// k0 = p(src.lambda)p(src.mu) + p(dst.lambda)p(dst.mu).
// A failed division contradicts the Hom-dimension theorem and propagates
// NotThetaDivisible as a hard failure.
Mult hom_dim_Z(const Bipartition& src, const Bipartition& dst);

// Multiplicity [soc_r Z(bp) : V(sub)] in the Hom-valued normalization (a
// Q-type copy counts theta): the size grading pins every occurrence of
// V(sub) to one layer, so this is the hom dimension gated on the layer.
// Zero when the sizes do not drop by exactly r in both coordinates.
Mult socle_mult(const Bipartition& bp, const Bipartition& sub, int r);

// dim ext^i(V(src), V(dst)), read off the socle layers of Z(dst):
// delegates to socle_mult(dst, src, i).
Mult ext_dim(int i, const Bipartition& src, const Bipartition& dst);

// ext^1(V(src), V(dst)) is nonzero iff dst is obtained from src by adding
// one box to each coordinate.  The case tag classifies the (type of src,
// type of dst) pattern: 1 = (M,M), 2 = (Q,M), 3 = (M,Q), 4 = (Q,Q).
struct Ext1Result {
  bool nonzero = false;
  int case_tag = 0;
};
Ext1Result ext1_nonzero(const Bipartition& src, const Bipartition& dst);

// Block index of a label: |lambda| - |mu|.  Ext-connectivity never leaves a
// fiber of this map.
int block_of(const Bipartition& bp);

// Connected components of the ext^1-graph on labels with |lambda|, |mu| <=
// bound (edges where ext1_nonzero holds in either direction).  Because an
// edge always grows both coordinates, paths between small labels may pass
// through labels one box larger than the bound; the graph is therefore
// built with a one-box working margin and the resulting components are
// restricted back to the requested window.  Components are sorted and each
// component's labels are sorted.
std::vector<std::vector<Bipartition>> block_components(int bound);

// Decomposition of Z(a) (x) Z(b) into injectives Z(c):
//   mult(c) = (1/theta^k) theta^{p(c.lambda)p(c.mu)}
//             f(a.lambda, b.lambda; c.lambda) f(a.mu, b.mu; c.mu),
//   k = p(a.lambda)p(a.mu) + p(b.lambda)p(b.mu) + p(c.lambda) + p(c.mu).
// Supported on |c.lambda| = |a.lambda|+|b.lambda|, |c.mu| = |a.mu|+|b.mu|;
// only nonzero multiplicities are returned.
std::map<Bipartition, Mult> tensor_ZZ(const Bipartition& a,
                                      const Bipartition& b);

// u(grown, base, other): 1 if p(base, other) = 0 and p(grown, other) = 1,
// else theta.  The multiplicity pattern of one-box translations.
GradedInt u_mult(const StrictPartition& grown, const StrictPartition& base,
                 const StrictPartition& other);

// Z(bp) (x) V = direct sum over lambda' in lambda+box of
// Z(lambda',mu)^{u(lambda',lambda,mu)}; mirror in mu for (x) W.  The
// u-values are exact, so these return plain parity-ring values.
std::map<Bipartition, GradedInt> tensor_Z_V(const Bipartition& bp);
std::map<Bipartition, GradedInt> tensor_Z_W(const Bipartition& bp);

// The two socle layers of V(bp) (x) V (direction V) or V(bp) (x) W
// (direction W); translation functors have Loewy length at most 2.
//   V: soc  = {(lambda',mu) : lambda' in lambda+box} with u(lambda',lambda,mu),
//      soc2 = {(lambda,mu') : mu' in mu-box} with u(mu,mu',lambda);
//   W: soc  = {(lambda,mu') : mu' in mu+box} with u(mu',mu,lambda),
//      soc2 = {(lambda',mu) : lambda' in lambda-box} with u(lambda,lambda',mu).
enum class Direction { V, W };
struct TranslationSocle {
  std::map<Bipartition, GradedInt> soc;
  std::map<Bipartition, GradedInt> soc2;
};
TranslationSocle translation_socle(const Bipartition& bp, Direction dir);

// One nonzero socle-layer multiplicity, as fed to the Koszul validator.
struct KoszulEntry {
  Bipartition big;   // the injective Z(big)
  Bipartition sub;   // the simple V(sub)
  int layer = 0;     // r
  Int total = 0;
};

struct KoszulReport {
  bool pass = false;
  long entries_checked = 0;
  std::vector<std::string> counterexamples;
};

// Validates the Koszul-grading conditions on a table of nonzero layers:
// every entry must satisfy the size-drop condition in both coordinates,
// the degree condition d(big) = d(sub) + layer with d = min(|lambda|,|mu|),
// and the resolution-length bound layer + 1 <= min(|lambda|,|mu|) + 1.
// Exposed separately so tests can feed synthetic counterexample tables.
KoszulReport koszul_validate(const std::vector<KoszulEntry>& entries);

// Computes all nonzero socle layers over |lambda|, |mu| <= bound and
// validates them.
KoszulReport koszul_check(int bound);

// All bipartitions with |lambda| <= bound and |mu| <= bound, sorted.
std::vector<Bipartition> labels_up_to(int bound);

}  // namespace qtrep
