#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rgtc/multiclique.hpp"
#include "rgtc/rational.hpp"

namespace rgtc {

enum class ExperimentKind { Window, MultiClique, Tcs, Expectation };

ExperimentKind parse_kind(std::string_view s);
std::string_view to_string(ExperimentKind k);

/// Declarative description of a Monte Carlo run. Results are a pure function
/// of every field except thread_hint.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Window;
  std::uint64_t n = 0;
  Rational p{1, 2};
  Rational epsilon{1, 2};
  std::size_t s = 1;
  std::optional<std::size_t> r_override;
  std::uint64_t samples = 1;
  std::uint64_t master_seed = 0;
  Strategy strategy = Strategy::Exact;
  unsigned thread_hint = 1;
  std::uint64_t node_budget = 0;  // per-sample search budget, 0 = unlimited

  void validate() const;
};

/// Parses the `key = value` config format ('#' starts a comment). Keys:
/// kind, n, p, eps, s, r, samples, seed, strategy, threads, node_budget.
/// When `expected` is given the result takes that kind, and a conflicting
/// `kind` key is an error.
ExperimentConfig parse_config(std::string_view text, std::optional<ExperimentKind> expected = std::nullopt);
ExperimentConfig load_config_file(const std::string& path, std::optional<ExperimentKind> expected = std::nullopt);

/// splitmix64 finalizer applied to master + (index + 1) * 0x9E3779B97F4A7C15.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index);

struct SampleRecord {
  std::uint64_t index = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> error;  // budget errors are recorded, not fatal
  double elapsed_seconds = 0;

  // window
  std::size_t omega = 0;
  bool in_window = false;
  // multiclique
  std::size_t r = 0;
  bool found = false;
  // tcs: certified interval [tcs_lo, tcs_hi]
  std::size_t tcs_lo = 0, tcs_hi = 0;
  bool tcs_is_exact = false;
  bool in_window_thm14 = false;
  bool in_window_cor34 = false;
  // expectation
  BigInt count = 0;
  Rational weight = 0;  // exhaustive mode: probability of this graph
};

struct Estimate {
  double value = 0;
  double ci_low = 0;
  double ci_high = 0;
};

/// Normal-approximation 95% interval: p ± 1.96 sqrt(p(1-p)/N), clamped to [0,1].
Estimate proportion_estimate(std::size_t successes, std::size_t trials);

struct Summary {
  ExperimentKind kind = ExperimentKind::Window;
  std::size_t samples = 0;
  std::size_t errors = 0;
  std::optional<long long> window_lo, window_hi;  // floor(z-eps), floor(z+eps)
  std::size_t r = 0;
  Estimate probability;  // window / multiclique / tcs (s-scaled clique window)
  std::optional<Estimate> probability_cor34;  // tcs only
  bool lower_bound_only = false;  // greedy multiclique
  // expectation
  bool exhaustive = false;
  Estimate mean;
  std::optional<Rational> exact_mean;
  std::optional<Rational> formula;
};

struct ExperimentResult {
  Summary summary;
  std::vector<SampleRecord> records;  // sorted by index
};

ExperimentResult run_window(const ExperimentConfig& config);
ExperimentResult run_multiclique(const ExperimentConfig& config);
ExperimentResult run_tcs(const ExperimentConfig& config);
ExperimentResult estimate_expectation(const ExperimentConfig& config);
ExperimentResult run_experiment(const ExperimentConfig& config);

/// floor(z - eps), floor(z + eps) without the r >= 1 requirement.
std::pair<long long, long long> window_bounds(std::uint64_t n, const Rational& p, const Rational& epsilon);

std::string records_csv(const ExperimentConfig& config, const std::vector<SampleRecord>& records);
std::string summary_json(const ExperimentConfig& config, const Summary& summary);

}  // namespace rgtc
