// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include "qtrep/text_io.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "qtrep/errors.hpp"

namespace qtrep {

namespace {

constexpr std::int64_t kMaxExact = 9007199254740992LL;  // also JS-safe

}  // namespace

nlohmann::json int_to_json(const Int& v) {
  if (v >= -Int(kMaxExact) && v <= Int(kMaxExact)) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Int int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw ParseError("expected an integer or decimal string in JSON, got " +
                   j.dump());
}

nlohmann::json graded_to_json(const GradedInt& v) {
  return nlohmann::json{{"one", int_to_json(v.one)},
                        {"eps", int_to_json(v.eps)}};
}

GradedInt graded_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("one") || !j.contains("eps")) {
    throw ParseError("expected {\"one\": ..., \"eps\": ...}, got " + j.dump());
  }
  return GradedInt(int_from_json(j.at("one")), int_from_json(j.at("eps")));
}

nlohmann::json mult_to_json(const Mult& m) {
  nlohmann::json out;
  out["total"] = int_to_json(m.total);
  out["graded"] = m.graded ? graded_to_json(*m.graded) : nlohmann::json();
  out["parity_ambiguous"] = m.parity_ambiguous;
  return out;
}

Mult mult_from_json(const nlohmann::json& j) {
  Mult out;
  out.total = int_from_json(j.at("total"));
  if (j.at("graded").is_null()) {
    out.graded = std::nullopt;
  } else {
    out.graded = graded_from_json(j.at("graded"));
  }
  out.parity_ambiguous = j.at("parity_ambiguous").get<bool>();
  return out;
}

nlohmann::json make_report(const std::string& query,
                           const std::vector<ReportEntry>& entries) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ReportEntry& e : entries) {
    nlohmann::json row = mult_to_json(e.value);
    if (e.src) row["src"] = *e.src;
    if (e.dst) row["dst"] = *e.dst;
    if (e.layer) row["layer"] = *e.layer;
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"query", query}, {"entries", std::move(rows)}};
}

std::string diagram_to_text(const Diagram& d) {
  std::ostringstream os;
  os << d.p() << ' ' << d.q() << ' ' << d.r() << " | pairs:";
  for (const Diagram::Pair& pr : d.pairs()) {
    os << " (" << pr.white << ',' << pr.black << ')';
    if (pr.marked) os << 'm';
  }
  os << " | through:";
  const int bottom_whites = d.p() - d.r();
  for (int i = 0; i < bottom_whites; ++i) {
    const Diagram::Strand& s = d.whites()[i];
    os << ' ' << s.top << "->" << (i + 1);
    if (s.marked) os << 'm';
  }
  for (int j = 0; j < static_cast<int>(d.blacks().size()); ++j) {
    const Diagram::Strand& s = d.blacks()[j];
    os << ' ' << s.top << "->" << (bottom_whites + 1 + j);
    if (s.marked) os << 'm';
  }
  return os.str();
}

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<std::string> tokens_of(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer, got '" + text + "'");
  }
  if (used != text.size()) {
    throw ParseError("trailing characters after integer in '" + text + "'");
  }
  return v;
}

// Strips one trailing 'm' (mark flag) if present.
bool strip_mark(std::string& tok) {
  if (!tok.empty() && tok.back() == 'm') {
    tok.pop_back();
    return true;
  }
  return false;
}

}  // namespace

Diagram diagram_from_text(const std::string& text) {
  std::vector<std::string> sections = split(text, '|');
  if (sections.size() != 3) {
    throw ParseError("diagram text needs 3 '|'-separated sections, got '" +
                     text + "'");
  }
  std::vector<std::string> head = tokens_of(sections[0]);
  if (head.size() != 3) {
    throw ParseError("diagram header must be 'p q r', got '" + sections[0] +
                     "'");
  }
  const int p = parse_int(head[0]);
  const int q = parse_int(head[1]);
  const int r = parse_int(head[2]);

  std::vector<std::string> pair_toks = tokens_of(sections[1]);
  if (pair_toks.empty() || pair_toks[0] != "pairs:") {
    throw ParseError("second diagram section must start with 'pairs:'");
  }
  std::vector<Diagram::Pair> pairs;
  for (std::size_t i = 1; i < pair_toks.size(); ++i) {
    std::string tok = pair_toks[i];
    bool marked = strip_mark(tok);
    if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')') {
      throw ParseError("expected a pair '(w,b)', got '" + pair_toks[i] + "'");
    }
    std::vector<std::string> nums = split(tok.substr(1, tok.size() - 2), ',');
    if (nums.size() != 2) {
      throw ParseError("expected a pair '(w,b)', got '" + pair_toks[i] + "'");
    }
    pairs.push_back(
        Diagram::Pair{parse_int(nums[0]), parse_int(nums[1]), marked});
  }

  std::vector<std::string> through_toks = tokens_of(sections[2]);
  if (through_toks.empty() || through_toks[0] != "through:") {
    throw ParseError("third diagram section must start with 'through:'");
  }
  const int bottom_whites = p - r;
  const int bottom_total = (p - r) + (q - r);
  std::vector<Diagram::Strand> whites(
      bottom_whites >= 0 ? static_cast<std::size_t>(bottom_whites) : 0);
  std::vector<Diagram::Strand> blacks(
      q - r >= 0 ? static_cast<std::size_t>(q - r) : 0);
  std::vector<bool> seen(static_cast<std::size_t>(std::max(bottom_total, 0)),
                         false);
  for (std::size_t i = 1; i < through_toks.size(); ++i) {
    std::string tok = through_toks[i];
    bool marked = strip_mark(tok);
    std::size_t arrow = tok.find("->");
    if (arrow == std::string::npos) {
      throw ParseError("expected a strand 't->u', got '" + through_toks[i] +
                       "'");
    }
    const int top = parse_int(tok.substr(0, arrow));
    const int bottom = parse_int(tok.substr(arrow + 2));
    if (bottom < 1 || bottom > bottom_total) {
      throw ShapeMismatch("bottom label " + std::to_string(bottom) +
                          " out of range for the given (p, q, r)");
    }
    if (seen[static_cast<std::size_t>(bottom - 1)]) {
      throw ShapeMismatch("bottom label " + std::to_string(bottom) +
                          " used twice");
    }
    seen[static_cast<std::size_t>(bottom - 1)] = true;
    if (bottom <= bottom_whites) {
      whites[static_cast<std::size_t>(bottom - 1)] =
          Diagram::Strand{top, marked};
    } else {
      blacks[static_cast<std::size_t>(bottom - bottom_whites - 1)] =
          Diagram::Strand{top, marked};
    }
  }
  for (int b = 0; b < bottom_total; ++b) {
    if (!seen[static_cast<std::size_t>(b)]) {
      throw ShapeMismatch("bottom label " + std::to_string(b + 1) +
                          " has no strand");
    }
  }
  if (static_cast<int>(pairs.size()) != r) {
    throw ShapeMismatch("header says r = " + std::to_string(r) + " but " +
                        std::to_string(pairs.size()) + " pair(s) are listed");
  }
  return Diagram(p, q, std::move(whites), std::move(blacks), std::move(pairs));
}

}  // namespace qtrep
