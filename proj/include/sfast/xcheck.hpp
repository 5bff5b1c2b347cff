#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sfast/reduce.hpp"

namespace sfast {

struct XcheckConfig {
  int n_max = 9;
  int k_max = 3;
  int trials = 300;
  std::uint64_t seed = 7;
  std::vector<ProviderKind> providers{ProviderKind::kHeuristic, ProviderKind::kExact};
};

/// Seed of trial `index`; depends only on the master seed and the index.
std::uint64_t trial_seed(std::uint64_t master, int index);

/// The instance examined by trial `index`: 1 <= n <= n_max, 0 <= k <= k_max,
/// uniform or planted model, random terminal fraction.
Instance trial_instance(const XcheckConfig& config, int index);

/// YES/NO by the subset oracle for small instances, by bounded branching above.
bool oracle_answer(const Instance& inst);

struct TrialResult {
  int index = 0;
  int n = 0;
  int k = 0;
  bool yes = false;
  std::array<int, 7> firings{};  // indexed by rule id
  int reduced = 0;               // providers ending in a reduced kernel
  int rule6_false_no = 0;
  std::vector<std::string> answer_changes;   // rule or pipeline altered the answer
  std::vector<std::string> disagreements;    // independent solvers disagree
  std::vector<std::string> invariant_failures;
};

/// Runs every check of one trial.
TrialResult run_trial(const XcheckConfig& config, int index);

struct XcheckReport {
  int trials = 0;
  int yes_instances = 0;
  int reduced_outputs = 0;
  std::array<int, 7> firings{};
  int answer_changes = 0;
  int disagreements = 0;
  int invariant_failures = 0;
  int rule6_false_no = 0;
  std::vector<std::string> messages;  // "trial <i>: ..." in trial order

  /// 0 consistent, 2 invariant violation, 3 oracle disagreement or answer change.
  int exit_code() const;
  std::string summary() const;
  bool operator==(const XcheckReport&) const = default;
};

XcheckReport aggregate(const std::vector<TrialResult>& results);

XcheckReport run_xcheck(const XcheckConfig& config);
/// Same report as run_xcheck, trials spread over OpenMP threads.
XcheckReport run_xcheck_parallel(const XcheckConfig& config);

}  // namespace sfast
