// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace qtrep {

// Cross-checking suites shared by `qtrep verify` and the acceptance binary.
//
// Every suite pits two independent routes to the same numbers against each
// other (closed formula vs enumeration, recursion vs tableaux, category
// formulas vs finite-rank matrix kernels, ...).  The checking code
// deliberately recomputes its reference values inline instead of calling the
// code path under test.

struct CheckContext {
  int num_threads = 1;
};

struct CheckResult {
  bool pass = false;
  std::string detail;  // short human-readable summary or first failures
};

struct CheckCase {
  std::string name;
  CheckResult (*run)(const CheckContext&);
};

// The full battery, in its canonical order.
const std::vector<CheckCase>& acceptance_checks();

// Named sub-suites for `qtrep verify`: "diagrams", "lr", "trep", "symfunc",
// "all".  Unknown names yield an empty list.
std::vector<CheckCase> verify_suite(const std::string& name);
std::vector<std::string> verify_suite_names();

}  // namespace qtrep
