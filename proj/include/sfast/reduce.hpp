#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfast/core.hpp"

namespace sfast {

/// Size parameters derived from B (cost of the working regular order) and k.
/// B stands where an approximation bound alpha*k would: every rule stays
/// answer-preserving for any B that bounds the working order's cost, only the
/// final kernel size depends on how small B is.
struct BoundSet {
  std::int64_t B = 0;
  std::int64_t k = 0;
  std::int64_t d = 0;        // rich threshold: B + 2k + 1
  std::int64_t ell_loc = 0;  // terminal location radius: 2B + 2k + 2
  std::int64_t ell_new = 0;  // vertices inserted by rich replacement: 2d + k + 1
  std::int64_t L_max = 0;    // interval length after replacement: 4d + B + ell_new
  std::int64_t N_max = 0;    // (2B + 1) L_max + B (2 ell_loc + 2)

  static BoundSet from(std::int64_t B, std::int64_t k);
};

/// Split of one maximal non-terminal interval I at threshold d.
/// in_rich: at most d-1 out-neighbours in I; out_rich: at most d-1 in-neighbours
/// in I; rich: at least d of each. A vertex short on both sides (only possible
/// when |I| < 2d) is filed as in-rich so the three lists still partition I.
struct RichPartition {
  RankInterval interval;
  std::vector<Vertex> rich;
  std::vector<Vertex> in_rich;
  std::vector<Vertex> out_rich;
  std::vector<Vertex> affected_rich;
};

/// Throws OrderNotRegular when `order` is not regular.
std::vector<RichPartition> classify_rich(const Instance& inst, const VertexOrder& order, const BoundSet& bounds);

enum class RuleId : int {
  kTrivialNo = 1,
  kTrivialYes = 2,
  kDeleteBypassed = 3,
  kForceArc = 4,
  kRichReplace = 5,
  kSizeNo = 6,
};

std::string rule_name(RuleId id);

// ---- Rules 1-3 -------------------------------------------------------------

/// k <= 0 and a T-cycle exists.
bool rule1_trivial_no(const Instance& inst);

/// k >= 0 and no T-cycle exists.
bool rule2_trivial_yes(const Instance& inst);

/// Deletes every vertex on no T-cycle in one step; nullopt when there is none.
std::optional<Deletion> rule3_delete_bypassed(const Instance& inst);

// ---- Rule 4 ----------------------------------------------------------------

/// Maximum number of arc-disjoint paths head(e) ~> t ~> tail(e) made of arcs
/// that are forward w.r.t. `order`: min of the two unit-capacity max flows
/// (a half collapses when t is an endpoint of the span).
/// Throws NotAnArc, NotBackward, TerminalNotInSpan.
int forward_flow(const Instance& inst, const VertexOrder& order, Arc e, Vertex t);

/// Unit-capacity max flow from s to t over forward arcs of `order`.
int forward_max_flow(const Tournament& tour, const VertexOrder& order, Vertex s, Vertex t);

struct ForcedArc {
  Instance instance;
  Arc reversed;
  Vertex terminal = 0;
  int flow = 0;
};

/// First affected arc (by (tail, head)) and terminal under it (by id) whose
/// forward flow reaches k + 1; reverses it and lowers k by one.
std::optional<ForcedArc> rule4_force_arc(const Instance& inst, const VertexOrder& order);

// ---- Rule 5 ----------------------------------------------------------------

/// Everything needed to rebuild the output of one rich replacement.
/// Vertex ids refer to the instance the plan was made for.
struct RichReplacementPlan {
  std::int64_t d = 0;
  std::int64_t ell = 0;
  RankInterval interval;
  std::vector<Vertex> left;                      // I_L
  std::vector<Vertex> right;                     // I_R
  std::vector<std::pair<Vertex, int>> out_rich;  // (u, deleted in-neighbours x)
  std::vector<std::pair<Vertex, int>> in_rich;   // (w, deleted out-neighbours y)
  std::vector<Vertex> affected_rich;
  std::vector<Vertex> deleted;                   // unaffected rich vertices
};

struct RichReplacement {
  Instance instance;
  VertexOrder order;
  RichReplacementPlan plan;
  std::vector<Vertex> old_of_new;  // -1 for inserted vertices
};

/// Builds the plan for interval `interval` of a regular order.
/// Throws PreconditionViolated if the interval is not a maximal non-terminal
/// interval of length > L_max, or OrderNotRegular.
RichReplacementPlan plan_rich_replacement(const Instance& inst, const VertexOrder& order, const BoundSet& bounds,
                                          RankInterval interval);

/// Deletes plan.deleted and appends ell fresh non-terminals v_1..v_ell:
///   v_i -> v_j for i < j;
///   out-rich u: u -> v_i except v_{d+1..d+x} -> u;
///   in-rich w:  v_i -> w except w -> v_{d+1..d+y};
///   affected rich v': v_{1..d} -> v' -> v_{d+1..ell};
///   I_L -> v_i -> I_R.
/// Survivors keep their relative id order; new vertices get the top ids.
/// With `order`, the returned order puts v_1..v_ell where the first deleted
/// vertex stood. Throws PreconditionViolated if the plan does not cover
/// every survivor.
RichReplacement apply_rich_replacement(const Instance& inst, const RichReplacementPlan& plan,
                                       const VertexOrder* order = nullptr);

/// Fires on the leftmost maximal non-terminal interval longer than L_max.
/// Throws PreconditionViolated when Rules 1-4 still apply, OrderNotRegular
/// when `order` is not regular.
std::optional<RichReplacement> rule5_rich_replace(const Instance& inst, const VertexOrder& order,
                                                  const BoundSet& bounds);

// ---- Rule 6 ----------------------------------------------------------------

/// n > N_max. Throws PreconditionViolated unless Rules 1-5 are exhausted for
/// `order`, which must be regular with cost <= B.
bool rule6_size_no(const Instance& inst, const VertexOrder& order, const BoundSet& bounds);

// ---- Pipeline --------------------------------------------------------------

struct RuleApplication {
  RuleId rule = RuleId::kTrivialYes;
  int n_before = 0;
  int n_after = 0;
  int budget_before = 0;
  int budget_after = 0;
  std::optional<BoundSet> bounds;         // rules 4-6
  std::vector<Vertex> deleted;            // rule 3
  std::optional<Arc> reversed;            // rule 4
  Vertex terminal = -1;                   // rule 4
  int flow = 0;                           // rule 4
  std::optional<RichReplacementPlan> replacement;  // rule 5
};

enum class KernelStatus { kTrivialYes, kTrivialNo, kReduced };

std::string status_name(KernelStatus s);

struct KernelResult {
  KernelStatus status = KernelStatus::kTrivialYes;
  Instance instance;  // working instance at termination
  std::vector<RuleApplication> trace;
  /// For each vertex of `instance`: 0-based id in the input, or -1 if inserted.
  std::vector<Vertex> origin;
  /// Regular working order and bounds of the last round (status kReduced only).
  std::optional<VertexOrder> final_order;
  std::optional<BoundSet> final_bounds;
  /// Instance after each trace entry, filled when KernelOptions::keep_snapshots.
  std::vector<Instance> snapshots;
};

/// Canonical answer-equivalent instance for the result: the reduced instance,
/// a single vertex with k = 0 (YES), or a terminal 3-cycle with k = 0 (NO).
Instance output_instance(const KernelResult& r);

enum class ProviderKind { kHeuristic, kExact };

/// Any order source; the result is validated and may be arbitrarily poor.
using OrderProvider = std::function<std::vector<Vertex>(const Instance&)>;

OrderProvider make_provider(ProviderKind kind);

struct KernelOptions {
  bool keep_snapshots = false;
};

/// Rules 1-3, then a provider order, regularized, drives Rules 4, 5 and 6;
/// any mutation restarts the round. Throws ProviderFailure on a non-permutation,
/// BadParameters on a negative budget.
KernelResult kernelize(const Instance& inst, const OrderProvider& provider, const KernelOptions& options = {});
KernelResult kernelize(const Instance& inst, ProviderKind kind, const KernelOptions& options = {});

/// Re-applies a trace to its input instance.
Instance replay_trace(const Instance& input, const std::vector<RuleApplication>& trace);

// ---- Structural audits -----------------------------------------------------

/// Terminals under an affected span farther than ell_loc from both ends.
/// Returns (arc, terminal) pairs; empty on a reduced instance with regular order.
std::vector<std::pair<Arc, Vertex>> terminal_location_violations(const Instance& inst, const VertexOrder& order,
                                                                 const BoundSet& bounds);

/// Unaffected interval vertices with an I_L out-neighbour or an I_R in-neighbour.
std::vector<Vertex> unaffected_neighbourhood_violations(const Instance& inst, const VertexOrder& order);

}  // namespace sfast
