// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "qtrep/partitions.hpp"
#include "qtrep/trep.hpp"

using namespace qtrep;

namespace {

Bipartition bp(const std::string& text) { return parse_bipartition(text); }

}  // namespace

TEST_CASE("hom dimensions from injective to injective") {
  // One theta-division each: totals are exact, the grading is not.
  const Mult down = hom_dim_Z(bp("1|1"), bp("-|-"));
  CHECK(down.total == 1);
  CHECK(down.parity_ambiguous);
  CHECK(!down.graded.has_value());

  const Mult endo = hom_dim_Z(bp("1|1"), bp("1|1"));
  CHECK(endo.total == 1);
  CHECK(endo.parity_ambiguous);

  // Sizes may only drop.
  const Mult up = hom_dim_Z(bp("-|-"), bp("1|1"));
  CHECK(up.is_zero());
  CHECK(up.graded == GradedInt());
  CHECK(!up.parity_ambiguous);

  // Unequal drops in the two coordinates also vanish.
  CHECK(hom_dim_Z(bp("2|1"), bp("-|-")).is_zero());
}

TEST_CASE("maps to the unit injective detect the diagonal") {
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      for (const StrictPartition& lambda : enumerate_strict(a)) {
        for (const StrictPartition& mu : enumerate_strict(b)) {
          const Mult m = hom_dim_Z(Bipartition{lambda, mu}, bp("-|-"));
          CHECK(m.total == (lambda == mu ? 1 : 0));
        }
      }
    }
  }
}

TEST_CASE("division-free endomorphisms keep their grading") {
  const Mult unit = hom_dim_Z(bp("-|-"), bp("-|-"));
  CHECK(unit.total == 1);
  CHECK(unit.graded == GradedInt(1, 0));
  CHECK(!unit.parity_ambiguous);

  // Both coordinates of even length: no prefactor, no odd layer, so the
  // computation never divides and the grading survives.
  const Mult even = hom_dim_Z(bp("2,1|2,1"), bp("2,1|2,1"));
  CHECK(even.total == 1);
  CHECK(even.graded == GradedInt(1, 0));
  CHECK(!even.parity_ambiguous);
}

TEST_CASE("socle layers of the one-box injective") {
  const Mult top = socle_mult(bp("1|1"), bp("1|1"), 0);
  CHECK(top.total == 1);
  const Mult deep = socle_mult(bp("1|1"), bp("-|-"), 1);
  CHECK(deep.total == 1);
  // The drop must match the requested layer exactly.
  CHECK(socle_mult(bp("1|1"), bp("-|-"), 0).is_zero());
  CHECK(socle_mult(bp("1|1"), bp("-|-"), 2).is_zero());
}

TEST_CASE("ext dimensions read off socle layers") {
  CHECK(ext_dim(0, bp("1|1"), bp("1|1")).total == 1);
  CHECK(ext_dim(1, bp("-|-"), bp("1|1")).total == 1);
  CHECK(ext_dim(2, bp("-|-"), bp("1|1")).is_zero());
  CHECK(ext_dim(0, bp("-|-"), bp("1|1")).is_zero());
}

TEST_CASE("first extensions live on double one-box growth") {
  const Ext1Result mm = ext1_nonzero(bp("-|-"), bp("1|1"));
  CHECK(mm.nonzero);
  CHECK(mm.case_tag == 1);  // M source, M target

  const Ext1Result qm = ext1_nonzero(bp("1|-"), bp("2|1"));
  CHECK(qm.nonzero);
  CHECK(qm.case_tag == 2);  // Q source, M target

  const Ext1Result mq = ext1_nonzero(bp("2|1"), bp("2,1|2"));
  CHECK(mq.nonzero);
  CHECK(mq.case_tag == 3);  // M source, Q target

  const Ext1Result qq = ext1_nonzero(bp("2|-"), bp("2,1|1"));
  CHECK(qq.nonzero);
  CHECK(qq.case_tag == 4);  // Q source, Q target

  // Growing only one coordinate, or growing by two boxes, gives nothing.
  CHECK(!ext1_nonzero(bp("-|-"), bp("1|-")).nonzero);
  CHECK(!ext1_nonzero(bp("-|-"), bp("2|1")).nonzero);
  CHECK(!ext1_nonzero(bp("1|1"), bp("-|-")).nonzero);
}

TEST_CASE("blocks are the fibers of the size difference") {
  CHECK(block_of(bp("2|1")) == 1);
  CHECK(block_of(bp("-|-")) == 0);
  CHECK(block_of(bp("-|3")) == -3);

  std::map<int, std::vector<Bipartition>> fibers;
  for (const Bipartition& label : labels_up_to(2)) {
    fibers[block_of(label)].push_back(label);
  }
  std::vector<std::vector<Bipartition>> expected;
  for (auto& [index, labels] : fibers) {
    std::sort(labels.begin(), labels.end());
    expected.push_back(labels);
  }
  std::sort(expected.begin(), expected.end());

  std::vector<std::vector<Bipartition>> got = block_components(2);
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

TEST_CASE("labels up to a bound") {
  CHECK(labels_up_to(1).size() == 4);
  const auto labels = labels_up_to(2);
  CHECK(labels.size() == 9);  // three shapes of size <= 2 per coordinate
  CHECK(std::is_sorted(labels.begin(), labels.end()));
}

TEST_CASE("tensoring with the unit injective changes nothing") {
  for (const Bipartition& label : labels_up_to(2)) {
    const auto table = tensor_ZZ(bp("-|-"), label);
    REQUIRE(table.size() == 1);
    CHECK(table.begin()->first == label);
    CHECK(table.begin()->second.total == 1);
  }
  // At the unit itself nothing is divided, so the grading is exact.
  const auto unit = tensor_ZZ(bp("-|-"), bp("-|-"));
  CHECK(unit.at(bp("-|-")).graded == GradedInt(1, 0));
}

TEST_CASE("one-box translation multiplicities") {
  // u(grown, base, other) is 1 exactly when the parities step from even
  // combined to odd combined.
  CHECK(u_mult(StrictPartition({1}), StrictPartition(), StrictPartition()) ==
        GradedInt(1, 0));
  CHECK(u_mult(StrictPartition({2}), StrictPartition({1}),
               StrictPartition()) == theta());

  const auto from_unit = tensor_Z_V(bp("-|-"));
  REQUIRE(from_unit.size() == 1);
  CHECK(from_unit.at(bp("1|-")) == GradedInt(1, 0));

  const auto one_box = tensor_Z_V(bp("1|-"));
  REQUIRE(one_box.size() == 1);
  CHECK(one_box.at(bp("2|-")) == theta());

  // The W-direction mirrors in the second coordinate.
  const auto mirrored = tensor_Z_W(bp("-|1"));
  REQUIRE(mirrored.size() == 1);
  CHECK(mirrored.at(bp("-|2")) == theta());
}

TEST_CASE("translation socle layers") {
  const TranslationSocle start = translation_socle(bp("-|-"), Direction::V);
  REQUIRE(start.soc.size() == 1);
  CHECK(start.soc.at(bp("1|-")) == GradedInt(1, 0));
  CHECK(start.soc2.empty());

  const TranslationSocle mid = translation_socle(bp("1|1"), Direction::V);
  REQUIRE(mid.soc.size() == 1);
  CHECK(mid.soc.at(bp("2|1")) == theta());
  REQUIRE(mid.soc2.size() == 1);
  CHECK(mid.soc2.at(bp("1|-")) == theta());

  const TranslationSocle wdir = translation_socle(bp("1|1"), Direction::W);
  REQUIRE(wdir.soc.size() == 1);
  CHECK(wdir.soc.at(bp("1|2")) == theta());
  REQUIRE(wdir.soc2.size() == 1);
  CHECK(wdir.soc2.at(bp("-|1")) == theta());
}

TEST_CASE("the grading validator flags a degree violation") {
  // A synthetic table entry whose layer disagrees with the size drop.
  KoszulEntry bad;
  bad.big = bp("2|2");
  bad.sub = bp("-|-");
  bad.layer = 1;
  bad.total = 1;
  const KoszulReport report = koszul_validate({bad});
  CHECK(!report.pass);
  REQUIRE(report.counterexamples.size() == 1);
  CHECK(report.counterexamples[0].find("soc_1") != std::string::npos);

  KoszulEntry good;
  good.big = bp("1|1");
  good.sub = bp("-|-");
  good.layer = 1;
  good.total = 1;
  const KoszulReport fine = koszul_validate({good});
  CHECK(fine.pass);
  CHECK(fine.entries_checked == 1);
  CHECK(fine.counterexamples.empty());
}

TEST_CASE("socle tables satisfy the grading conditions") {
  const KoszulReport report = koszul_check(3);
  CHECK(report.pass);
  CHECK(report.entries_checked > 0);
  CHECK(report.counterexamples.empty());
}
