// qtrep — exact computations in a stable tensor category of the queer Lie superalgebra
//
// Copyright 2026 The qtrep authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qtrep/cache.hpp"
#include "qtrep/checks.hpp"
#include "qtrep/config.hpp"
#include "qtrep/diagrams.hpp"
#include "qtrep/lr.hpp"
#include "qtrep/text_io.hpp"
#include "qtrep/trep.hpp"

namespace {

using namespace qtrep;

constexpr int kExitHardFailure = 1;
constexpr int kExitUsage = 2;

// Partitions beyond this total size put symmetric-function expansions past
// desk scale (the polynomials live in |lambda|+|nu| variables).
constexpr int kMaxTotalSize = 2 * kMaxSizeBound;

void ensure_desk_scale(int total, const std::string& what) {
  if (total > kMaxTotalSize) {
    throw qtrep::ParseError(what + " has total size " + std::to_string(total) +
                            ", beyond the desk-scale cap of " +
                            std::to_string(kMaxTotalSize));
  }
}

std::string mult_text(const Mult& m) {
  if (m.graded) return to_string(*m.graded);
  return m.total.str() + " (total; parity not separable)";
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// lr
// ---------------------------------------------------------------------------
int cmd_lr(const Config& cfg, const std::string& lambda_text,
           const std::string& nu_text, const std::string& mu_text) {
  const StrictPartition lambda = parse_partition(lambda_text);
  const StrictPartition nu = parse_partition(nu_text);
  ensure_desk_scale(lambda.size() + nu.size(),
                    "the product " + to_string(lambda) + " * " + to_string(nu));

  std::vector<std::pair<StrictPartition, GradedInt>> rows;
  if (!mu_text.empty()) {
    const StrictPartition mu = parse_partition(mu_text);
    rows.emplace_back(mu, f_coeff(lambda, nu, mu));
  } else {
    for (const auto& [mu, value] : f_expand(lambda, nu)) {
      rows.emplace_back(mu, value);
    }
  }

  const std::string query =
      "lr " + to_string(lambda) + " " + to_string(nu) +
      (mu_text.empty() ? "" : " " + mu_text);
  if (cfg.output == Config::Output::kJson) {
    std::vector<ReportEntry> entries;
    for (const auto& [mu, value] : rows) {
      entries.push_back(ReportEntry{std::nullopt, to_string(mu), std::nullopt,
                                    Mult{eval_plus(value), value, false}});
    }
    print_json(make_report(query, entries));
    return 0;
  }
  if (!mu_text.empty()) {
    std::cout << "f(" << to_string(lambda) << ", " << to_string(nu) << "; "
              << to_string(rows.front().first)
              << ") = " << to_string(rows.front().second) << "\n";
    return 0;
  }
  std::cout << "f(" << to_string(lambda) << ", " << to_string(nu)
            << "; mu) over |mu| = " << lambda.size() + nu.size() << ":\n";
  for (const auto& [mu, value] : rows) {
    std::cout << "  " << std::left << std::setw(12) << to_string(mu)
              << to_string(value) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// homdim
// ---------------------------------------------------------------------------
int cmd_homdim(const Config& cfg, const std::string& src_text,
               const std::string& dst_text) {
  const Bipartition src = parse_bipartition(src_text);
  const Bipartition dst = parse_bipartition(dst_text);
  ensure_desk_scale(src.lambda.size() + src.mu.size(), "the source label");
  const Mult m = hom_dim_Z(src, dst);

  if (cfg.output == Config::Output::kJson) {
    print_json(make_report(
        "homdim " + to_string(src) + " -> " + to_string(dst),
        {ReportEntry{to_string(src), to_string(dst), std::nullopt, m}}));
    return 0;
  }
  std::cout << "dim Hom(Z(" << to_string(src) << "), Z(" << to_string(dst)
            << ")) = " << mult_text(m) << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// socle
// ---------------------------------------------------------------------------
int cmd_socle(const Config& cfg, const std::string& bp_text, int depth) {
  const Bipartition bp = parse_bipartition(bp_text);
  ensure_desk_scale(bp.lambda.size() + bp.mu.size(), "the label");
  const int max_layer = depth >= 0 ? depth : bp.koszul_degree();

  std::vector<ReportEntry> entries;
  for (int r = 0; r <= max_layer; ++r) {
    const int a = bp.lambda.size() - r;
    const int b = bp.mu.size() - r;
    if (a < 0 || b < 0) break;
    for (const StrictPartition& lambda2 : enumerate_strict(a)) {
      for (const StrictPartition& mu2 : enumerate_strict(b)) {
        const Bipartition sub{lambda2, mu2};
        const Mult m = socle_mult(bp, sub, r);
        if (m.is_zero()) continue;
        entries.push_back(
            ReportEntry{to_string(bp), to_string(sub), r, m});
      }
    }
  }

  if (cfg.output == Config::Output::kJson) {
    print_json(make_report("socle " + to_string(bp), entries));
    return 0;
  }
  std::cout << "socle layers of Z(" << to_string(bp) << "):\n";
  for (const ReportEntry& e : entries) {
    std::cout << "  layer " << *e.layer << ": V(" << *e.dst << ") x "
              << mult_text(e.value) << "\n";
  }
  if (entries.empty()) std::cout << "  (none up to the requested depth)\n";
  return 0;
}

// ---------------------------------------------------------------------------
// tensor
// ---------------------------------------------------------------------------
int cmd_tensor(const Config& cfg, const std::string& a_text,
               const std::string& b_text) {
  const Bipartition a = parse_bipartition(a_text);
  const Bipartition b = parse_bipartition(b_text);
  ensure_desk_scale(a.lambda.size() + b.lambda.size(),
                    "the first coordinates");
  ensure_desk_scale(a.mu.size() + b.mu.size(), "the second coordinates");
  const auto decomposition = tensor_ZZ(a, b);

  std::vector<ReportEntry> entries;
  for (const auto& [dst, m] : decomposition) {
    entries.push_back(ReportEntry{std::nullopt, to_string(dst), std::nullopt, m});
  }
  if (cfg.output == Config::Output::kJson) {
    print_json(make_report(
        "tensor " + to_string(a) + " (x) " + to_string(b), entries));
    return 0;
  }
  std::cout << "Z(" << to_string(a) << ") (x) Z(" << to_string(b) << ") =\n";
  for (const ReportEntry& e : entries) {
    std::cout << "  Z(" << *e.dst << ") x " << mult_text(e.value) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// blocks
// ---------------------------------------------------------------------------
int cmd_blocks(const Config& cfg, int bound) {
  auto components = block_components(bound);
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) {
              return block_of(a.front()) < block_of(b.front());
            });

  if (cfg.output == Config::Output::kJson) {
    nlohmann::json out;
    out["query"] = "blocks " + std::to_string(bound);
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& component : components) {
      nlohmann::json one;
      one["block"] = block_of(component.front());
      nlohmann::json labels = nlohmann::json::array();
      for (const Bipartition& bp : component) labels.push_back(to_string(bp));
      one["labels"] = std::move(labels);
      comps.push_back(std::move(one));
    }
    out["components"] = std::move(comps);
    print_json(out);
    return 0;
  }
  std::cout << "ext-components on labels with sizes <= " << bound << ":\n";
  for (const auto& component : components) {
    std::cout << "  block " << std::setw(3) << block_of(component.front())
              << " (" << component.size()
              << (component.size() == 1 ? " label):" : " labels):");
    for (const Bipartition& bp : component) {
      std::cout << " (" << to_string(bp) << ")";
    }
    std::cout << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// koszul
// ---------------------------------------------------------------------------
int cmd_koszul(const Config& cfg, int bound) {
  const KoszulReport report = koszul_check(bound);

  if (cfg.output == Config::Output::kJson) {
    nlohmann::json out;
    out["query"] = "koszul " + std::to_string(bound);
    out["pass"] = report.pass;
    out["entries_checked"] = report.entries_checked;
    out["counterexamples"] = report.counterexamples;
    print_json(out);
  } else {
    std::cout << "koszul grading on sizes <= " << bound << ": "
              << (report.pass ? "holds" : "VIOLATED") << " ("
              << report.entries_checked << " nonzero layers)\n";
    for (const std::string& line : report.counterexamples) {
      std::cout << "  " << line << "\n";
    }
  }
  return report.pass ? 0 : kExitHardFailure;
}

// ---------------------------------------------------------------------------
// diagrams
// ---------------------------------------------------------------------------
int cmd_diagrams(const Config& cfg, int p, int q, int r) {
  if (p < 0 || q < 0 || r < 0 || p + q > 2 * kMaxSizeBound) {
    throw qtrep::ParseError("diagram shape (" + std::to_string(p) + ", " +
                            std::to_string(q) + ", " + std::to_string(r) +
                            ") is out of desk scale");
  }
  const Int count = diagram_count(p, q, r);
  const GradedInt dim = dim_c(p, q, r);
  const Int kListingCap = 1000;
  const bool list = count <= kListingCap;
  std::vector<Diagram> diagrams;
  if (list && r <= std::min(p, q)) diagrams = enumerate_diagrams(p, q, r);

  if (cfg.output == Config::Output::kJson) {
    nlohmann::json out;
    out["query"] = "diagrams " + std::to_string(p) + " " + std::to_string(q) +
                   " " + std::to_string(r);
    out["count"] = int_to_json(count);
    out["dim"] = graded_to_json(dim);
    if (list) {
      nlohmann::json rows = nlohmann::json::array();
      for (const Diagram& d : diagrams) rows.push_back(diagram_to_text(d));
      out["diagrams"] = std::move(rows);
    }
    print_json(out);
    return 0;
  }
  std::cout << "|D(" << p << "," << q << "," << r << ")| = " << count
            << ", graded dimension " << to_string(dim) << "\n";
  if (!list) {
    std::cout << "  (listing suppressed beyond " << kListingCap
              << " diagrams)\n";
    return 0;
  }
  for (const Diagram& d : diagrams) {
    std::cout << "  " << diagram_to_text(d) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------
int cmd_verify(const Config& cfg, const std::string& suite_name) {
  const std::vector<CheckCase> suite = verify_suite(suite_name);
  if (suite.empty()) {
    std::string names;
    for (const std::string& n : verify_suite_names()) {
      names += names.empty() ? n : (", " + n);
    }
    throw qtrep::ParseError("unknown suite '" + suite_name + "' (available: " +
                            names + ")");
  }
  CheckContext ctx;
  ctx.num_threads = resolve_threads(cfg.num_threads);

  bool all_pass = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const CheckCase& c : suite) {
    const CheckResult result = c.run(ctx);
    all_pass = all_pass && result.pass;
    if (cfg.output == Config::Output::kJson) {
      rows.push_back(nlohmann::json{{"name", c.name},
                                    {"pass", result.pass},
                                    {"detail", result.detail}});
    } else {
      std::cout << (result.pass ? "PASS" : "FAIL") << "  " << c.name << " — "
                << result.detail << "\n";
    }
  }
  if (cfg.output == Config::Output::kJson) {
    print_json(nlohmann::json{{"query", "verify " + suite_name},
                              {"pass", all_pass},
                              {"checks", std::move(rows)}});
  } else {
    std::cout << (all_pass ? "all checks passed" : "CHECKS FAILED") << "\n";
  }
  return all_pass ? 0 : kExitHardFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qtrep — exact computations in a stable tensor category of the queer "
      "Lie superalgebra"};
  app.require_subcommand(1);
  app.footer(
      "Labels whose first component is empty start with '-' (for example the "
      "unit -|-);\nput them after a '--' separator so they are not read as "
      "options.");

  Config cfg;
  std::string cache_flag;
  bool json_flag = false;
  app.add_option("--size-bound", cfg.max_size,
                 "truncation bound for sweep commands")
      ->check(CLI::Range(0, kMaxSizeBound))
      ->capture_default_str();
  app.add_option("--threads", cfg.num_threads,
                 "worker threads (0 = hardware concurrency)")
      ->check(CLI::Range(0, 256));
  app.add_flag("--json", json_flag, "emit JSON instead of tables");
  app.add_option("--cache", cache_flag,
                 "persistent structure-constant cache file "
                 "(QTREP_CACHE overrides the default)");

  std::string lambda_text, nu_text, mu_text;
  CLI::App* lr = app.add_subcommand("lr", "type-Q product coefficients");
  lr->add_option("lambda", lambda_text, "first strict partition")->required();
  lr->add_option("nu", nu_text, "second strict partition")->required();
  lr->add_option("mu", mu_text, "optional target partition");

  std::string src_text, dst_text;
  CLI::App* homdim =
      app.add_subcommand("homdim", "hom dimension between injectives");
  homdim->add_option("src", src_text, "source label lambda|mu")->required();
  homdim->add_option("dst", dst_text, "target label lambda|mu")->required();

  std::string socle_bp;
  int socle_depth = -1;
  CLI::App* socle = app.add_subcommand("socle", "socle layers of an injective");
  socle->add_option("label", socle_bp, "label lambda|mu")->required();
  socle->add_option("--depth", socle_depth,
                    "largest layer to print (default: the full filtration)");

  std::string tensor_a, tensor_b;
  CLI::App* tensor =
      app.add_subcommand("tensor", "decompose a tensor product of injectives");
  tensor->add_option("a", tensor_a, "first label lambda|mu")->required();
  tensor->add_option("b", tensor_b, "second label lambda|mu")->required();

  int blocks_bound = -1;
  CLI::App* blocks = app.add_subcommand("blocks", "ext-graph components");
  blocks->add_option("bound", blocks_bound, "size bound (default --size-bound)")
      ->check(CLI::Range(0, kMaxSizeBound));

  int koszul_bound = -1;
  CLI::App* koszul =
      app.add_subcommand("koszul", "validate the degree grading of the socles");
  koszul->add_option("bound", koszul_bound, "size bound (default --size-bound)")
      ->check(CLI::Range(0, kMaxSizeBound));

  int dia_p = 0, dia_q = 0, dia_r = 0;
  CLI::App* diagrams = app.add_subcommand("diagrams", "list marked diagrams");
  diagrams->add_option("p", dia_p, "white nodes")->required();
  diagrams->add_option("q", dia_q, "black nodes")->required();
  diagrams->add_option("r", dia_r, "contractions")->required();

  std::string suite_name = "all";
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_name,
                     "diagrams, lr, trep, symfunc or all");

  // Let the global flags (--json, --cache, ...) appear after the subcommand.
  for (CLI::App* sub :
       {lr, homdim, socle, tensor, blocks, koszul, diagrams, verify}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  cfg.output = json_flag ? Config::Output::kJson : Config::Output::kTable;

  std::shared_ptr<Cache> cache;
  try {
    const std::string cache_path = resolve_cache_path(cache_flag);
    if (!cache_path.empty()) {
      cache = std::make_shared<Cache>(cache_path);
      bind_lr_cache(cache);
    }

    int code = 0;
    if (lr->parsed()) {
      code = cmd_lr(cfg, lambda_text, nu_text, mu_text);
    } else if (homdim->parsed()) {
      code = cmd_homdim(cfg, src_text, dst_text);
    } else if (socle->parsed()) {
      code = cmd_socle(cfg, socle_bp, socle_depth);
    } else if (tensor->parsed()) {
      code = cmd_tensor(cfg, tensor_a, tensor_b);
    } else if (blocks->parsed()) {
      code = cmd_blocks(cfg, blocks_bound >= 0 ? blocks_bound : cfg.max_size);
    } else if (koszul->parsed()) {
      code = cmd_koszul(cfg, koszul_bound >= 0 ? koszul_bound : cfg.max_size);
    } else if (diagrams->parsed()) {
      code = cmd_diagrams(cfg, dia_p, dia_q, dia_r);
    } else if (verify->parsed()) {
      code = cmd_verify(cfg, suite_name);
    }
    bind_lr_cache(nullptr);
    return code;
  } catch (const qtrep::ParseError& e) {
    bind_lr_cache(nullptr);
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const qtrep::Error& e) {
    bind_lr_cache(nullptr);
    std::cerr << "hard failure: " << e.what() << "\n";
    return kExitHardFailure;
  } catch (const std::exception& e) {
    bind_lr_cache(nullptr);
    std::cerr << "error: " << e.what() << "\n";
    return kExitHardFailure;
  }
}
