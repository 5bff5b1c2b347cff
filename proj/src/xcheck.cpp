#include "sfast/xcheck.hpp"

#include <algorithm>
#include <sstream>

#include "sfast/io.hpp"
#include "sfast/regular.hpp"
#include "sfast/solve.hpp"

namespace sfast {

std::uint64_t trial_seed(std::uint64_t master, int index) {
  SplitMix64 mix(master ^ (0xd1b54a32d192ed03ULL * (static_cast<std::uint64_t>(index) + 1)));
  return mix.next();
}

Instance trial_instance(const XcheckConfig& config, int index) {
  if (config.n_max < 1 || config.k_max < 0) throw BadParameters("xcheck needs n_max >= 1 and k_max >= 0");
  SplitMix64 rng(trial_seed(config.seed, index));
  GenParams p;
  p.n = 1 + static_cast<int>(rng.below(config.n_max));
  p.k = static_cast<int>(rng.below(config.k_max + 1));
  p.model = rng.below(2) == 0 ? Model::kUniform : Model::kPlanted;
  p.terminal_fraction = 0.1 + 0.9 * rng.unit();
  const int pairs = p.n * (p.n - 1) / 2;
  p.reversals = static_cast<int>(rng.below(std::min(pairs, p.n + 2) + 1));
  p.seed = rng.next();
  return generate(p);
}

bool oracle_answer(const Instance& inst) {
  if (inst.budget < 0) return false;
  if (inst.size() <= 12) return exact_subset(inst, inst.budget).has_value();
  return branch_decides_yes(inst);
}

namespace {

const char* yes_no(bool b) { return b ? "YES" : "NO"; }

std::string provider_label(ProviderKind k) { return k == ProviderKind::kExact ? "exact" : "heuristic"; }

void check_provider(const Instance& inst, ProviderKind kind, TrialResult& tr) {
  const std::string tag = provider_label(kind) + ": ";
  KernelOptions opts;
  opts.keep_snapshots = true;
  const KernelResult res = kernelize(inst, kind, opts);

  bool before = tr.yes;
  int budget = inst.budget;
  for (std::size_t i = 0; i < res.trace.size(); ++i) {
    const RuleApplication& app = res.trace[i];
    ++tr.firings[static_cast<int>(app.rule)];
    if (app.budget_after > budget) tr.invariant_failures.push_back(tag + "budget increased");
    budget = app.budget_after;

    bool after = before;
    switch (app.rule) {
      case RuleId::kTrivialNo:
      case RuleId::kSizeNo:
        after = false;
        break;
      case RuleId::kTrivialYes:
        after = true;
        break;
      default:
        after = oracle_answer(res.snapshots[i]);
        break;
    }
    if (after != before) {
      tr.answer_changes.push_back(tag + rule_name(app.rule) + " turned " + yes_no(before) + " into " + yes_no(after));
      if (app.rule == RuleId::kSizeNo) ++tr.rule6_false_no;
    }
    before = after;
  }

  const Instance out = output_instance(res);
  if (oracle_answer(out) != tr.yes) tr.answer_changes.push_back(tag + "kernel changed the answer");

  const std::string canonical = serialize_instance(out);
  try {
    if (serialize_instance(replay_trace(inst, res.trace)) != canonical)
      tr.invariant_failures.push_back(tag + "trace replay differs from output");
    const ParsedTrace parsed = parse_trace(serialize_trace(inst, res, provider_label(kind)));
    if (parsed.status != res.status || serialize_instance(replay_trace(inst, parsed.records)) != canonical)
      tr.invariant_failures.push_back(tag + "serialized trace does not replay");
  } catch (const Error& e) {
    tr.invariant_failures.push_back(tag + "replay failed: " + e.what());
  }

  if (res.status != KernelStatus::kReduced) return;
  ++tr.reduced;
  const BoundSet& b = *res.final_bounds;
  const VertexOrder& order = *res.final_order;
  if (res.instance.size() > b.N_max) tr.invariant_failures.push_back(tag + "kernel exceeds N_max");
  if (b.k != res.instance.budget) tr.invariant_failures.push_back(tag + "bounds use a stale budget");
  if (!is_regular(res.instance, order)) tr.invariant_failures.push_back(tag + "final order not regular");
  if (cost(res.instance, order) != b.B) tr.invariant_failures.push_back(tag + "B differs from final order cost");
  if (!terminal_location_violations(res.instance, order, b).empty())
    tr.invariant_failures.push_back(tag + "terminal far inside an affected span");
  if (!unaffected_neighbourhood_violations(res.instance, order).empty())
    tr.invariant_failures.push_back(tag + "unaffected vertex with a wrong-side neighbour");
}

}  // namespace

TrialResult run_trial(const XcheckConfig& config, int index) {
  TrialResult tr;
  tr.index = index;
  const Instance inst = trial_instance(config, index);
  tr.n = inst.size();
  tr.k = inst.budget;
  tr.yes = oracle_answer(inst);

  if (branch_decides_yes(inst) != tr.yes) tr.disagreements.push_back("subset and branch oracles disagree");
  if (inst.size() <= 7) {
    const int by_order = exact_order(inst).optimum;
    const int by_branch = exact_branch(inst).optimum;
    if (by_order != by_branch) tr.disagreements.push_back("order and branch optima disagree");
    if ((by_order <= inst.budget) != tr.yes) tr.disagreements.push_back("order optimum contradicts oracle");
  }

  for (ProviderKind kind : config.providers) {
    try {
      check_provider(inst, kind, tr);
    } catch (const Error& e) {
      tr.invariant_failures.push_back(provider_label(kind) + ": " + e.what());
    }
  }
  return tr;
}

XcheckReport aggregate(const std::vector<TrialResult>& results) {
  XcheckReport r;
  for (const TrialResult& tr : results) {
    ++r.trials;
    if (tr.yes) ++r.yes_instances;
    r.reduced_outputs += tr.reduced;
    for (int i = 0; i < 7; ++i) r.firings[i] += tr.firings[i];
    r.answer_changes += static_cast<int>(tr.answer_changes.size());
    r.disagreements += static_cast<int>(tr.disagreements.size());
    r.invariant_failures += static_cast<int>(tr.invariant_failures.size());
    r.rule6_false_no += tr.rule6_false_no;
    const std::string prefix = "trial " + std::to_string(tr.index) + " (n=" + std::to_string(tr.n) +
                               ", k=" + std::to_string(tr.k) + "): ";
    for (const auto& m : tr.answer_changes) r.messages.push_back(prefix + m);
    for (const auto& m : tr.disagreements) r.messages.push_back(prefix + m);
    for (const auto& m : tr.invariant_failures) r.messages.push_back(prefix + m);
  }
  return r;
}

int XcheckReport::exit_code() const {
  if (answer_changes > 0 || disagreements > 0) return 3;
  if (invariant_failures > 0) return 2;
  return 0;
}

std::string XcheckReport::summary() const {
  std::ostringstream out;
  out << "trials " << trials << ", yes " << yes_instances << ", reduced outputs " << reduced_outputs << '\n';
  out << "firings";
  for (int i = 1; i <= 6; ++i) out << ' ' << rule_name(static_cast<RuleId>(i)) << '=' << firings[i];
  out << '\n';
  out << "answer changes " << answer_changes << ", oracle disagreements " << disagreements
      << ", invariant failures " << invariant_failures << '\n';
  for (const auto& m : messages) out << m << '\n';
  out << (exit_code() == 0 ? "PASS" : "FAIL") << '\n';
  return out.str();
}

namespace {

void validate(const XcheckConfig& config) {
  if (config.n_max < 1 || config.k_max < 0 || config.trials < 0)
    throw BadParameters("xcheck needs n_max >= 1, k_max >= 0 and trials >= 0");
}

}  // namespace

XcheckReport run_xcheck(const XcheckConfig& config) {
  validate(config);
  std::vector<TrialResult> results;
  results.reserve(config.trials);
  for (int i = 0; i < config.trials; ++i) results.push_back(run_trial(config, i));
  return aggregate(results);
}

XcheckReport run_xcheck_parallel(const XcheckConfig& config) {
  validate(config);
  std::vector<TrialResult> results(config.trials);
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < config.trials; ++i) results[i] = run_trial(config, i);
  return aggregate(results);
}

}  // namespace sfast
