// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include "qtrep/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qtrep/errors.hpp"

namespace qtrep {

namespace {

Int factorial(int n) {
  Int out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

}  // namespace

Diagram::Diagram(int p, int q, std::vector<Strand> whites,
                 std::vector<Strand> blacks, std::vector<Pair> pairs)
    : p_(p), q_(q), whites_(std::move(whites)), blacks_(std::move(blacks)),
      pairs_(std::move(pairs)) {
  const int r = static_cast<int>(pairs_.size());
  if (p_ < 0 || q_ < 0 || r > std::min(p_, q_)) {
    throw ShapeMismatch("diagram shape (" + std::to_string(p_) + "," +
                        std::to_string(q_) + ") cannot host " +
                        std::to_string(r) + " top pairs");
  }
  if (static_cast<int>(whites_.size()) != p_ - r ||
      static_cast<int>(blacks_.size()) != q_ - r) {
    throw ShapeMismatch("diagram strand counts do not match p-r / q-r");
  }
  std::sort(pairs_.begin(), pairs_.end());
  // Every top node must be used exactly once, with colors respected.
  std::vector<int> used(p_ + q_ + 1, 0);
  for (const auto& s : whites_) {
    if (s.top < 1 || s.top > p_) {
      throw ShapeMismatch("white through strand must end at a white top node");
    }
    ++used[s.top];
  }
  for (const auto& s : blacks_) {
    if (s.top <= p_ || s.top > p_ + q_) {
      throw ShapeMismatch("black through strand must end at a black top node");
    }
    ++used[s.top];
  }
  for (const auto& pr : pairs_) {
    if (pr.white < 1 || pr.white > p_ || pr.black <= p_ ||
        pr.black > p_ + q_) {
      throw ShapeMismatch("top pair must join a white with a black node");
    }
    ++used[pr.white];
    ++used[pr.black];
  }
  for (int v = 1; v <= p_ + q_; ++v) {
    if (used[v] != 1) {
      throw ShapeMismatch("top node " + std::to_string(v) +
                          " is used " + std::to_string(used[v]) +
                          " times; diagrams require a perfect pairing");
    }
  }
}

std::string Diagram::to_string() const {
  std::ostringstream os;
  os << "D(" << p_ << "," << q_ << "," << r() << "){";
  bool first = true;
  for (const auto& pr : pairs_) {
    if (!first) os << " ";
    first = false;
    os << "(" << pr.white << "," << pr.black << ")" << (pr.marked ? "*" : "");
  }
  for (size_t i = 0; i < whites_.size(); ++i) {
    if (!first) os << " ";
    first = false;
    os << (i + 1) << "<-" << whites_[i].top << (whites_[i].marked ? "*" : "");
  }
  const int r_ = r();
  for (size_t j = 0; j < blacks_.size(); ++j) {
    if (!first) os << " ";
    first = false;
    os << (p_ - r_ + 1 + static_cast<int>(j)) << "<-" << blacks_[j].top
       << (blacks_[j].marked ? "*" : "");
  }
  os << "}";
  return os.str();
}

Diagram Diagram::identity(int p, int q) {
  std::vector<Strand> whites(p);
  std::vector<Strand> blacks(q);
  for (int i = 0; i < p; ++i) whites[i] = {i + 1, false};
  for (int j = 0; j < q; ++j) blacks[j] = {p + 1 + j, false};
  return Diagram(p, q, std::move(whites), std::move(blacks), {});
}

Diagram Diagram::s(int p, int q, int i) {
  if (i < 1 || i >= p + q || i == p) {
    throw ShapeMismatch("s(" + std::to_string(p) + "," + std::to_string(q) +
                        "," + std::to_string(i) +
                        ") is not defined: transpositions stay within a color");
  }
  Diagram d = identity(p, q);
  if (i < p) {
    std::swap(d.whites_[i - 1].top, d.whites_[i].top);
  } else {
    std::swap(d.blacks_[i - p - 1].top, d.blacks_[i - p].top);
  }
  return d;
}

Diagram Diagram::o(int p, int q, int i) {
  if (i < 1 || i > p + q) {
    throw ShapeMismatch("o strand index out of range");
  }
  Diagram d = identity(p, q);
  if (i <= p) {
    d.whites_[i - 1].marked = true;
  } else {
    d.blacks_[i - p - 1].marked = true;
  }
  return d;
}

Diagram Diagram::t(int p, int q) {
  if (p < 1 || q < 1) {
    throw ShapeMismatch("t(p,q) requires at least one node of each color");
  }
  std::vector<Strand> whites(p - 1);
  std::vector<Strand> blacks(q - 1);
  for (int i = 0; i < p - 1; ++i) whites[i] = {i + 1, false};
  // Bottom blacks are labelled p..p+q-2 and connect straight up two steps.
  for (int j = 0; j < q - 1; ++j) blacks[j] = {p + 2 + j, false};
  return Diagram(p, q, std::move(whites), std::move(blacks),
                 {{p, p + 1, false}});
}

Int diagram_count(int p, int q, int r) {
  if (r < 0 || r > std::min(p, q)) return 0;
  return (pow2(static_cast<unsigned>(p + q - r)) * factorial(p) *
          factorial(q)) /
         factorial(r);
}

GradedInt dim_c(int p, int q, int r) {
  if (r < 0 || r > std::min(p, q)) return GradedInt{};
  const Int scalar = factorial(p) * factorial(q) / factorial(r);
  return scalar * theta_pow(static_cast<unsigned>(p + q - r));
}

GradedInt graded_dim_A(int k, int r) {
  GradedInt out;
  for (int p = 0; p <= k; ++p) {
    for (int q = 0; p + q <= k; ++q) {
      out += dim_c(p, q, r);
    }
  }
  return out;
}

std::vector<Diagram> enumerate_diagrams(int p, int q, int r) {
  std::vector<Diagram> out;
  if (r < 0 || r > std::min(p, q)) return out;

  // Sorted r-subsets of {1..m}, as index lists.
  const auto subsets = [](int m, int k) {
    std::vector<std::vector<int>> all;
    std::vector<int> cur;
    const auto rec = [&](auto&& self, int next) -> void {
      if (static_cast<int>(cur.size()) == k) {
        all.push_back(cur);
        return;
      }
      for (int v = next; v <= m; ++v) {
        cur.push_back(v);
        self(self, v + 1);
        cur.pop_back();
      }
    };
    rec(rec, 1);
    return all;
  };

  const auto white_sets = subsets(p, r);
  const auto black_sets = subsets(q, r);
  for (const auto& ws : white_sets) {
    for (const auto& bs : black_sets) {
      // Matchings: permutations of bs assigned to ws in order.
      std::vector<int> match(bs);
      std::sort(match.begin(), match.end());
      do {
        // Through tops are the complements, in every order.
        std::vector<int> wfree;
        for (int v = 1; v <= p; ++v) {
          if (!std::binary_search(ws.begin(), ws.end(), v)) wfree.push_back(v);
        }
        std::vector<int> bfree;
        for (int v = 1; v <= q; ++v) {
          if (!std::binary_search(bs.begin(), bs.end(), v)) bfree.push_back(v);
        }
        std::vector<int> wperm(wfree);
        do {
          std::vector<int> bperm(bfree);
          do {
            // Mark bits: r pair marks, p-r white marks, q-r black marks.
            const int bits = p + q - r;
            for (long mask = 0; mask < (1L << bits); ++mask) {
              std::vector<Diagram::Pair> pairs(r);
              for (int j = 0; j < r; ++j) {
                pairs[j] = {ws[j], p + match[j], (mask >> j & 1) != 0};
              }
              std::vector<Diagram::Strand> whites(p - r);
              for (int i = 0; i < p - r; ++i) {
                whites[i] = {wperm[i], (mask >> (r + i) & 1) != 0};
              }
              std::vector<Diagram::Strand> blacks(q - r);
              for (int j = 0; j < q - r; ++j) {
                blacks[j] = {p + bperm[j], (mask >> (p + j) & 1) != 0};
              }
              out.emplace_back(p, q, std::move(whites), std::move(blacks),
                               std::move(pairs));
            }
          } while (std::next_permutation(bperm.begin(), bperm.end()));
        } while (std::next_permutation(wperm.begin(), wperm.end()));
      } while (std::next_permutation(match.begin(), match.end()));
    }
  }
  return out;
}

Diagram concat(const Diagram& d1, const Diagram& d2) {
  const int p = d1.p();
  const int q = d1.q();
  const int r1 = d1.r();
  if (d2.p() != p - r1 || d2.q() != q - r1) {
    throw ShapeMismatch("cannot concatenate: bottom of the first diagram is (" +
                        std::to_string(p - r1) + "," + std::to_string(q - r1) +
                        ") but top of the second is (" +
                        std::to_string(d2.p()) + "," + std::to_string(d2.q()) +
                        ")");
  }

  // Lookup of d1's strand by its bottom label (= d2's top label).
  const auto trace_up = [&](int label) -> std::pair<int, bool> {
    if (label <= p - r1) {
      const auto& s = d1.whites()[label - 1];
      return {s.top, s.marked};
    }
    const auto& s = d1.blacks()[label - (p - r1 + 1)];
    return {s.top, s.marked};
  };

  std::vector<Diagram::Pair> pairs = d1.pairs();
  for (const auto& pr : d2.pairs()) {
    const auto [wt, wm] = trace_up(pr.white);
    // d2's black top labels already live in the composite's middle-row
    // coordinates because bottom labels of d1 and top labels of d2 agree.
    const auto [bt, bm] = trace_up(pr.black);
    pairs.push_back({wt, bt, pr.marked != (wm != bm)});
  }
  std::vector<Diagram::Strand> whites(d2.whites().size());
  for (size_t i = 0; i < d2.whites().size(); ++i) {
    const auto [top, m] = trace_up(d2.whites()[i].top);
    whites[i] = {top, d2.whites()[i].marked != m};
  }
  std::vector<Diagram::Strand> blacks(d2.blacks().size());
  for (size_t j = 0; j < d2.blacks().size(); ++j) {
    const auto [top, m] = trace_up(d2.blacks()[j].top);
    blacks[j] = {top, d2.blacks()[j].marked != m};
  }
  return Diagram(p, q, std::move(whites), std::move(blacks), std::move(pairs));
}

Diagram ElementaryDiagram::to_diagram() const {
  switch (kind) {
    case Kind::S:
      return Diagram::s(p, q, i);
    case Kind::O:
      return Diagram::o(p, q, i);
    case Kind::T:
      return Diagram::t(p, q);
  }
  throw ShapeMismatch("unknown elementary diagram kind");
}

std::vector<ElementaryDiagram> canonical_decomposition(const Diagram& d) {
  const int p = d.p();
  const int q = d.q();
  const int r = d.r();

  // sigma maps intermediate slot -> top label, chosen so that the nested
  // contractions t(p,q), t(p-1,q-1), ... consume exactly the top pairs:
  // slots 1..p-r hold the white through tops in bottom order, slot p-j+1
  // holds the white of the j-th pair (sorted by white label), slot p+j its
  // black partner, and slots p+r+1..p+q the black through tops.
  std::vector<int> sigma(p + q + 1, 0);
  std::vector<bool> marked_slot(p + q + 1, false);
  for (int i = 1; i <= p - r; ++i) {
    sigma[i] = d.whites()[i - 1].top;
    marked_slot[i] = d.whites()[i - 1].marked;
  }
  for (int j = 1; j <= r; ++j) {
    const auto& pr = d.pairs()[j - 1];
    sigma[p - j + 1] = pr.white;
    sigma[p + j] = pr.black;
    marked_slot[p - j + 1] = pr.marked;  // a pair's mark rides its white slot
  }
  for (int j = 1; j <= q - r; ++j) {
    sigma[p + r + j] = d.blacks()[j - 1].top;
    marked_slot[p + r + j] = d.blacks()[j - 1].marked;
  }

  std::vector<ElementaryDiagram> word;
  for (int j = 0; j < r; ++j) {
    word.push_back({ElementaryDiagram::Kind::T, p - j, q - j, 0});
  }
  // Normal order lists T factors with shrinking shape left to right as
  // (p-r+1, q-r+1), ..., (p, q); the loop above produced the reverse.
  std::reverse(word.begin(), word.end());
  for (int i = 1; i <= p + q; ++i) {
    if (marked_slot[i]) {
      word.push_back({ElementaryDiagram::Kind::O, p, q, i});
    }
  }
  // Bubble-sort sigma to the identity within each color block, recording the
  // swap positions; the recorded sequence, applied right to left, rebuilds
  // the permutation part.
  std::vector<int> a(sigma.begin() + 1, sigma.end());  // 0-based contents
  const auto sort_block = [&](int lo, int hi) {        // 0-based inclusive
    for (int end = hi; end > lo; --end) {
      for (int j = lo; j < end; ++j) {
        if (a[j] > a[j + 1]) {
          std::swap(a[j], a[j + 1]);
          word.push_back({ElementaryDiagram::Kind::S, p, q, j + 1});
        }
      }
    }
  };
  sort_block(0, p - 1);
  sort_block(p, p + q - 1);
  return word;
}

Diagram compose_word(int p, int q, const std::vector<ElementaryDiagram>& word) {
  Diagram cur = Diagram::identity(p, q);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    cur = concat(cur, it->to_diagram());
  }
  return cur;
}

}  // namespace qtrep
