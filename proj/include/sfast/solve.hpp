#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "sfast/core.hpp"

namespace sfast {

struct SolveOutcome {
  int optimum = 0;
  ArcSet witness;
  std::uint64_t nodes_explored = 0;
};

/// Brute force over arc subsets by increasing size, at most `cap` arcs.
/// Returns the first subset whose removal leaves no T-cycle, or nullopt.
/// The instance budget is ignored.
std::optional<SolveOutcome> exact_subset(const Instance& inst, int cap);

/// T-triangle t -> a -> b -> t with t a terminal.
struct TTriangle {
  Vertex t = 0;
  Vertex a = 0;
  Vertex b = 0;
};

/// Lexicographically smallest (t, a, b), or nullopt when there is no T-triangle.
std::optional<TTriangle> find_t_triangle(const Digraph& g, const VertexSet& terminals);

enum class BranchMode {
  kIterativeDeepening,
  kBranchAndBound,  // single DFS bounded only by a feasible upper bound
};

/// Branches on reversing each arc of the smallest T-triangle (t's out-arc,
/// then the third arc, then t's in-arc). Returns the optimum and the reversed
/// arcs as witness. The budget of `inst` is ignored.
SolveOutcome exact_branch(const Instance& inst, BranchMode mode = BranchMode::kIterativeDeepening);

/// Decision variant: is there a T-feedback arc set of size <= inst.budget?
bool branch_decides_yes(const Instance& inst);

inline constexpr int kExactOrderLimit = 8;

/// Minimum cost over all n! orders; ties resolved to the lexicographically
/// smallest order. Throws TooLarge when n > limit.
SolveOutcome exact_order(const Instance& inst, int limit = kExactOrderLimit);

/// OpenMP version of exact_order; same result, split on the first vertex.
SolveOutcome exact_order_parallel(const Instance& inst, int limit = kExactOrderLimit);

/// Order attaining exact_order's optimum (same tie-breaking).
VertexOrder best_order(const Instance& inst, int limit = kExactOrderLimit);

/// In-degree sort (ties by id) followed by single-vertex relocation
/// hill-climbing on cost. No quality guarantee.
VertexOrder heuristic_order(const Instance& inst);

/// Optimal order obtained from exact_branch's witness.
VertexOrder exact_provider_order(const Instance& inst);

}  // namespace sfast
