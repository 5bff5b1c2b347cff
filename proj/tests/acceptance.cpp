#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "sfast/io.hpp"
#include "sfast/reduce.hpp"
#include "sfast/regular.hpp"
#include "sfast/solve.hpp"
#include "support.hpp"

using namespace sfast;
using namespace sfast::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Verdict {
  bool done = false;
  bool ok = false;
  std::string detail;
};

Verdict verdicts[11];

void report(int id, bool ok, const std::string& detail) { verdicts[id] = {true, ok, detail}; }

Instance corpus_instance(SplitMix64& rng, int n_max, int k_max) {
  GenParams p;
  p.n = 1 + static_cast<int>(rng.below(n_max));
  p.k = static_cast<int>(rng.below(k_max + 1));
  p.model = rng.below(2) == 0 ? Model::kUniform : Model::kPlanted;
  p.terminal_fraction = rng.unit();
  const int pairs = p.n * (p.n - 1) / 2;
  p.reversals = static_cast<int>(rng.below(std::min(pairs, p.n + 1) + 1));
  p.seed = rng.next();
  return generate(p);
}

bool yes(const Instance& inst) { return inst.budget >= 0 && exact_subset(inst, inst.budget).has_value(); }

// Whole-graph check written against the definitions, not the library audits.
bool terminals_near_span_ends(const Instance& inst, const VertexOrder& o, std::int64_t ell_loc) {
  const int n = o.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!inst.tournament.beats(o.at(j), o.at(i))) continue;
      for (int p = i; p <= j; ++p)
        if (inst.is_terminal(o.at(p)) && p - i > ell_loc && j - p > ell_loc) return false;
    }
  return true;
}

bool unaffected_between_sides(const Instance& inst, const VertexOrder& o) {
  const int n = o.size();
  std::vector<char> affected(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (!inst.tournament.beats(o.at(j), o.at(i))) continue;
      bool covers = false;
      for (int p = i; p <= j; ++p) covers = covers || inst.is_terminal(o.at(p));
      if (covers) affected[o.at(i)] = affected[o.at(j)] = 1;
    }
  for (int p = 0; p < n; ++p) {
    if (inst.is_terminal(o.at(p)) || affected[o.at(p)]) continue;
    int first = p, last = p;
    while (first > 0 && !inst.is_terminal(o.at(first - 1))) --first;
    while (last + 1 < n && !inst.is_terminal(o.at(last + 1))) ++last;
    for (int q = 0; q < first; ++q)
      if (!inst.tournament.beats(o.at(q), o.at(p))) return false;
    for (int q = last + 1; q < n; ++q)
      if (!inst.tournament.beats(o.at(p), o.at(q))) return false;
  }
  return true;
}

bool regular_by_definition(const Instance& inst, const VertexOrder& o) {
  const int n = o.size();
  for (int l = 0; l < n; ++l)
    for (int r = l; r < n && !inst.is_terminal(o.at(r)); ++r) {
      if (inst.is_terminal(o.at(l))) break;
      int out = 0, in = 0;
      for (int p = l; p <= r; ++p) {
        out += inst.tournament.beats(o.at(l), o.at(p)) ? 1 : 0;
        in += inst.tournament.beats(o.at(p), o.at(r)) ? 1 : 0;
      }
      if (out < (r - l + 1) / 2 || in < (r - l + 1) / 2) return false;
    }
  return true;
}

struct ReducedSample {
  Instance instance;
  VertexOrder order;
  BoundSet bounds;
};

void criterion_1() {
  const auto t0 = Clock::now();
  const Instance f = parse_instance(read_file(fixture_path("sample15.sfast")));
  const VertexOrder id = VertexOrder::identity(15);
  const int c = cost(f, id);
  const ArcSet affected = affected_arcs(f, id);
  const auto intervals = maximal_nonterminal_intervals(f, id);
  const double ms = seconds_since(t0) * 1e3;

  const ArcSet want{{4, 2}, {10, 0}, {14, 5}};
  const std::vector<RankInterval> want_iv{{1, 3}, {5, 9}, {12, 14}};
  const bool ok = c == 3 && affected == want && intervals == want_iv && ms < 1.0;
  report(1, ok, "cost " + std::to_string(c) + ", " + std::to_string(affected.size()) + " affected arcs, " +
                    std::to_string(intervals.size()) + " intervals, " + std::to_string(ms) + " ms");
}

void criteria_2_3() {
  const auto t0 = Clock::now();
  SplitMix64 rng(20240607);
  int order_vs_subset = 0, triple = 0;
  for (int i = 0; i < 500; ++i) {
    const Instance inst = corpus_instance(rng, 7, 3);
    const int m = inst.size() * (inst.size() - 1) / 2;
    const int by_subset = exact_subset(inst, m)->optimum;
    const int by_order = exact_order(inst).optimum;
    const int by_order_par = exact_order_parallel(inst).optimum;
    const int by_branch = exact_branch(inst).optimum;
    const int by_bnb = exact_branch(inst, BranchMode::kBranchAndBound).optimum;
    if (by_order != by_subset) ++order_vs_subset;
    if (by_branch != by_subset || by_order_par != by_subset || by_bnb != by_subset) ++triple;
  }
  const double s = seconds_since(t0);
  report(2, order_vs_subset == 0 && s <= 120.0,
         "500 instances, " + std::to_string(order_vs_subset) + " order/subset mismatches, " + std::to_string(s) +
             " s");
  report(3, triple == 0, "500 instances, " + std::to_string(triple) + " solver disagreements");
}

std::vector<ReducedSample> criteria_4_8_10() {
  const auto t0 = Clock::now();
  SplitMix64 rng(777);
  std::vector<ReducedSample> reduced;
  int rule_checks = 0, rule_violations = 0, pipeline_violations = 0, over_size = 0, rule6_lies = 0;
  int firings[7] = {};
  for (int i = 0; i < 300; ++i) {
    const Instance inst = corpus_instance(rng, 10, 3);
    const bool answer = yes(inst);
    for (ProviderKind kind : {ProviderKind::kHeuristic, ProviderKind::kExact}) {
      KernelOptions opts;
      opts.keep_snapshots = true;
      const KernelResult res = kernelize(inst, kind, opts);
      const Instance* before = &inst;
      for (std::size_t r = 0; r < res.trace.size(); ++r) {
        const RuleId rule = res.trace[r].rule;
        ++firings[static_cast<int>(rule)];
        const bool b = yes(*before);
        bool a = b;
        if (rule == RuleId::kTrivialNo || rule == RuleId::kSizeNo) a = false;
        else if (rule == RuleId::kTrivialYes) a = true;
        else a = yes(res.snapshots[r]);
        ++rule_checks;
        if (a != b) {
          ++rule_violations;
          if (rule == RuleId::kSizeNo) ++rule6_lies;
        }
        before = &res.snapshots[r];
      }
      if (yes(output_instance(res)) != answer) ++pipeline_violations;

      if (res.status == KernelStatus::kReduced) {
        const ParsedTrace trace = parse_trace(serialize_trace(inst, res, "acceptance"));
        if (!trace.final_bounds || res.instance.size() > trace.final_bounds->N_max) ++over_size;
        reduced.push_back({res.instance, *res.final_order, *res.final_bounds});
      }
    }
  }
  const double s = seconds_since(t0);
  std::string fired;
  for (int r = 1; r <= 6; ++r) fired += " " + std::to_string(firings[r]);
  report(4, rule_violations == 0 && pipeline_violations == 0 && s <= 600.0,
         std::to_string(rule_checks) + " rule firings (by rule:" + fired + "), " +
             std::to_string(rule_violations) + " answer changes, " + std::to_string(pipeline_violations) +
             " pipeline mismatches, " + std::to_string(s) + " s");
  report(8, over_size == 0 && !reduced.empty(),
         std::to_string(reduced.size()) + " reduced kernels, " + std::to_string(over_size) + " above N_max");
  report(10, rule6_lies == 0,
         std::to_string(firings[6]) + " size-bound NO answers, " + std::to_string(rule6_lies) + " on YES instances");
  return reduced;
}

void criteria_5_6() {
  SplitMix64 rng(5);
  int contract = 0, counts = 0, intervals_checked = 0;
  for (int i = 0; i < 200; ++i) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const int k = static_cast<int>(rng.below(4));
    const Instance inst = random_instance(rng, n, k, 0.5 * rng.unit());
    const VertexOrder o = random_order(rng, n);
    const RegularizationReport rep = regularize(inst, o);
    const VertexOrder& r = rep.result;

    bool ok = is_regular(inst, r) && regular_by_definition(inst, r) && cost(inst, r) == cost(inst, o);
    for (int p = 0; p < n; ++p)
      if (inst.is_terminal(o.at(p)) && r.at(p) != o.at(p)) ok = false;
    const int before = backward_count(inst.tournament, o);
    if (backward_count(inst.tournament, r) > before || rep.moves > before) ok = false;
    if (!ok) ++contract;

    const BoundSet b = BoundSet::from(cost(inst, r), k);
    const auto parts = classify_rich(inst, r, b);
    for (const RichPartition& part : parts) {
      ++intervals_checked;
      const int len = part.interval.length();
      int rich = 0, in_rich = 0, out_rich = 0;
      for (int p = part.interval.first; p <= part.interval.last; ++p) {
        int out = 0, in = 0;
        for (int q = part.interval.first; q <= part.interval.last; ++q) {
          out += inst.tournament.beats(r.at(p), r.at(q)) ? 1 : 0;
          in += inst.tournament.beats(r.at(q), r.at(p)) ? 1 : 0;
        }
        if (out < b.d) ++in_rich;
        if (in < b.d) ++out_rich;
        if (out >= b.d && in >= b.d) ++rich;
      }
      const bool agree = static_cast<int>(part.rich.size()) == rich &&
                         static_cast<int>(part.in_rich.size() + part.out_rich.size()) == len - rich;
      if (!agree || rich < len - 4 * b.d || in_rich > 2 * b.d || out_rich > 2 * b.d) ++counts;
    }
  }
  report(5, contract == 0, "200 pairs, " + std::to_string(contract) + " contract violations");
  report(6, counts == 0,
         std::to_string(intervals_checked) + " intervals, " + std::to_string(counts) + " count violations");
}

void criterion_7(const std::vector<ReducedSample>& reduced) {
  int bad = 0;
  for (const ReducedSample& s : reduced) {
    if (!terminals_near_span_ends(s.instance, s.order, s.bounds.ell_loc)) ++bad;
    if (!unaffected_between_sides(s.instance, s.order)) ++bad;
  }
  report(7, bad == 0 && !reduced.empty(),
         std::to_string(reduced.size()) + " reduced instances, " + std::to_string(bad) + " structural violations");
}

void criterion_9() {
  SplitMix64 rng(9);
  int compared = 0, mismatches = 0, instances = 0;
  while (instances < 100) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const Instance inst = random_instance(rng, n, 0, 0.5);
    const VertexOrder o = random_order(rng, n);
    const ArcSet affected = affected_arcs(inst, o);
    if (affected.empty()) continue;
    ++instances;
    for (const Arc& e : affected)
      for (int p = o.rank_of(e.head); p <= o.rank_of(e.tail); ++p) {
        const Vertex t = o.at(p);
        if (!inst.is_terminal(t)) continue;
        ++compared;
        if (forward_flow(inst, o, e, t) != brute_forward_packing(inst, o, e, t)) ++mismatches;
      }
  }
  report(9, mismatches == 0,
         "100 instances, " + std::to_string(compared) + " (arc, terminal) pairs, " + std::to_string(mismatches) +
             " mismatches");
}

}  // namespace

int main() {
  criterion_1();
  criteria_2_3();
  const auto reduced = criteria_4_8_10();
  criteria_5_6();
  criterion_7(reduced);
  criterion_9();
  int failures = 0;
  for (int id = 1; id <= 10; ++id) {
    const Verdict& v = verdicts[id];
    const bool ok = v.done && v.ok;
    std::printf("criterion %2d %s  %s\n", id, ok ? "PASS" : "FAIL", v.detail.c_str());
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
