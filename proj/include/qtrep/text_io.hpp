// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qtrep/diagrams.hpp"
#include "qtrep/parity_ring.hpp"
#include "qtrep/trep.hpp"

namespace qtrep {

// JSON conventions: exact integers appear as JSON numbers when they fit in
// 64 bits and as decimal strings otherwise; GradedInt is {"one": a, "eps": b};
// a report is {"query": ..., "entries": [{"src", "dst", "layer", "total",
// "graded" (object or null), "parity_ambiguous"}, ...]}.

nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

nlohmann::json graded_to_json(const GradedInt& v);
GradedInt graded_from_json(const nlohmann::json& j);

nlohmann::json mult_to_json(const Mult& m);
Mult mult_from_json(const nlohmann::json& j);

// One row of a report.  Fields that do not apply to a command (e.g. `layer`
// for a plain tensor decomposition) are omitted from the JSON object.
struct ReportEntry {
  std::optional<std::string> src;
  std::optional<std::string> dst;
  std::optional<int> layer;
  Mult value;
};

nlohmann::json make_report(const std::string& query,
                           const std::vector<ReportEntry>& entries);

// Text form of a marked diagram:
//   "p q r | pairs: (w,b)m? ... | through: t->u m? ..."
// where (w,b) is a top-top pair (white label w, black label b), t->u is a
// through strand from top label t to bottom label u, and a trailing `m`
// marks the edge.  Through strands are listed in bottom order (whites, then
// blacks).  Example: "2 2 1 | pairs: (2,3) | through: 1->1 4->2m".
std::string diagram_to_text(const Diagram& d);

// Inverse of diagram_to_text; throws ParseError on malformed input and
// ShapeMismatch when the edge data is inconsistent with (p, q, r).
Diagram diagram_from_text(const std::string& text);

}  // namespace qtrep
