#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sfast/tournament.hpp"

namespace sfast {

/// Inclusive rank range [first, last]; empty when first > last.
struct RankInterval {
  int first = 0;
  int last = -1;

  int length() const { return last >= first ? last - first + 1 : 0; }
  bool empty() const { return last < first; }
  bool contains(int rank) const { return first <= rank && rank <= last; }

  friend bool operator==(const RankInterval&, const RankInterval&) = default;
};

/// (I_L, I, I_R) around a maximal non-terminal interval I.
struct IntervalPartition {
  RankInterval left;
  RankInterval middle;
  RankInterval right;
};

/// Validates `arcs` (0-based) into a tournament on n vertices.
/// Throws MalformedTournament on self-loops, duplicates, missing pairs, or out-of-range ids.
Tournament build_tournament(int n, std::span<const Arc> arcs);

/// Arcs whose head precedes their tail in `order`.
ArcSet backward_arcs(const Tournament& t, const VertexOrder& order);
int backward_count(const Tournament& t, const VertexOrder& order);

/// Backward arcs whose inclusive span contains a terminal.
ArcSet affected_arcs(const Instance& inst, const VertexOrder& order);

/// Number of affected arcs.
int cost(const Instance& inst, const VertexOrder& order);

/// Endpoints of affected arcs.
VertexSet affected_vertices(const Instance& inst, const VertexOrder& order);

/// Rank-maximal terminal-free runs, left to right.
std::vector<RankInterval> maximal_nonterminal_intervals(const Instance& inst, const VertexOrder& order);

IntervalPartition partition_around(const VertexOrder& order, RankInterval middle);

/// Vertices occupying the ranks of `interval`.
VertexSet vertices_in(const VertexOrder& order, RankInterval interval);

/// Strongly connected components in reverse topological order (sinks first).
std::vector<std::vector<Vertex>> strong_components(const Digraph& g);

/// True iff some strong component of size >= 2 meets `terminals`.
bool has_t_cycle(const Digraph& g, const VertexSet& terminals);
bool has_t_cycle(const Instance& inst);

/// Vertices lying on at least one T-cycle. In a tournament this is exactly
/// the union of non-trivial strong components that contain a terminal.
VertexSet vertices_on_t_cycles(const Instance& inst);
bool in_t_cycle(const Instance& inst, Vertex v);

/// The affected arcs of `order`; always a T-feedback arc set of size cost(order).
ArcSet solution_from_order(const Instance& inst, const VertexOrder& order);

/// Topological order of the strong components of D - s (ties by vertex id).
/// Throws NotAFeedbackSet if D - s still contains a T-cycle, NotAnArc if s has a non-arc.
VertexOrder order_from_solution(const Instance& inst, const ArcSet& s);

/// Same tournament with `e` flipped. Throws NotAnArc.
Tournament reverse_arc(const Tournament& t, Arc e);

/// |s| <= k, every member is an arc, and D - s has no T-cycle.
bool verify_solution(const Instance& inst, const ArcSet& s);

/// Result of deleting vertices: survivors are renumbered by increasing old id.
struct Deletion {
  Instance instance;
  std::vector<Vertex> old_of_new;
  std::vector<Vertex> new_of_old;  // -1 for deleted vertices
};

Deletion delete_vertices(const Instance& inst, const VertexSet& doomed);

}  // namespace sfast
