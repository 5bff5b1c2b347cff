#include "sfast/solve.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sfast {

std::optional<SolveOutcome> exact_subset(const Instance& inst, int cap) {
  const std::vector<Arc> arcs = inst.tournament.arcs();
  const int m = static_cast<int>(arcs.size());
  const Digraph& base = inst.tournament.graph();
  SolveOutcome out;

  for (int size = 0; size <= std::min(cap, m); ++size) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      ++out.nodes_explored;
      Digraph g = base;
      for (int i : pick) g.remove_arc(arcs[i].tail, arcs[i].head);
      if (!has_t_cycle(g, inst.terminals)) {
        out.optimum = size;
        for (int i : pick) out.witness.push_back(arcs[i]);
        out.witness = make_arc_set(std::move(out.witness));
        return out;
      }
      // next combination in lexicographic order
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

std::optional<TTriangle> find_t_triangle(const Digraph& g, const VertexSet& terminals) {
  std::optional<TTriangle> found;
  terminals.for_each([&](Vertex t) {
    if (found) return;
    g.out(t).for_each([&](Vertex a) {
      if (found) return;
      const Vertex b = g.out(a).first_common(g.in(t));
      if (b != -1) found = TTriangle{t, a, b};
    });
  });
  return found;
}

namespace {

void flip(Digraph& g, Arc e) {
  g.remove_arc(e.tail, e.head);
  g.add_arc(e.head, e.tail);
}

std::array<Arc, 3> branch_choices(const TTriangle& tri) {
  return {Arc{tri.t, tri.a}, Arc{tri.a, tri.b}, Arc{tri.b, tri.t}};
}

// Depth-first search for at most `budget` reversals, explicit stack.
// Returns the reversal path on success.
std::optional<ArcSet> bounded_search(const Instance& inst, int budget, std::uint64_t& nodes) {
  Digraph g = inst.tournament.graph();
  ++nodes;
  auto tri = find_t_triangle(g, inst.terminals);
  if (!tri) return ArcSet{};
  if (budget <= 0) return std::nullopt;

  struct Frame {
    std::array<Arc, 3> choices;
    int next = 0;
  };
  std::vector<Frame> stack{{branch_choices(*tri), 0}};
  ArcSet path;

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next > 0) {
      const Arc undo = path.back();
      path.pop_back();
      flip(g, {undo.head, undo.tail});
    }
    if (f.next == 3) {
      stack.pop_back();
      continue;
    }
    const Arc e = f.choices[f.next++];
    flip(g, e);
    path.push_back(e);
    ++nodes;
    tri = find_t_triangle(g, inst.terminals);
    if (!tri) return make_arc_set(path);
    if (static_cast<int>(stack.size()) < budget) stack.push_back({branch_choices(*tri), 0});
  }
  return std::nullopt;
}

// Single DFS keeping the best solution; `best` starts as any feasible size.
void branch_and_bound(const Instance& inst, SolveOutcome& best) {
  Digraph g = inst.tournament.graph();
  ++best.nodes_explored;
  auto tri = find_t_triangle(g, inst.terminals);
  if (!tri) {
    best.optimum = 0;
    best.witness.clear();
    return;
  }
  struct Frame {
    std::array<Arc, 3> choices;
    int next = 0;
  };
  std::vector<Frame> stack{{branch_choices(*tri), 0}};
  ArcSet path;

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next > 0) {
      const Arc undo = path.back();
      path.pop_back();
      flip(g, {undo.head, undo.tail});
    }
    // a child at depth stack.size() only helps if it can beat `best`
    if (f.next == 3 || static_cast<int>(stack.size()) >= best.optimum) {
      stack.pop_back();
      continue;
    }
    const Arc e = f.choices[f.next++];
    flip(g, e);
    path.push_back(e);
    ++best.nodes_explored;
    tri = find_t_triangle(g, inst.terminals);
    const int depth = static_cast<int>(path.size());
    if (!tri) {
      best.optimum = depth;
      best.witness = make_arc_set(path);
      continue;
    }
    if (depth + 1 < best.optimum) stack.push_back({branch_choices(*tri), 0});
  }
}

}  // namespace

SolveOutcome exact_branch(const Instance& inst, BranchMode mode) {
  SolveOutcome out;
  if (mode == BranchMode::kBranchAndBound) {
    // identity order gives a feasible upper bound
    out.witness = solution_from_order(inst, VertexOrder::identity(inst.size()));
    out.optimum = static_cast<int>(out.witness.size());
    branch_and_bound(inst, out);
    return out;
  }
  for (int budget = 0;; ++budget) {
    if (auto path = bounded_search(inst, budget, out.nodes_explored)) {
      out.optimum = budget;
      out.witness = std::move(*path);
      return out;
    }
  }
}

bool branch_decides_yes(const Instance& inst) {
  if (inst.budget < 0) return false;
  std::uint64_t nodes = 0;
  return bounded_search(inst, inst.budget, nodes).has_value();
}

namespace {

int order_cost(const Instance& inst, const std::vector<Vertex>& seq, std::vector<int>& prefix) {
  const int n = static_cast<int>(seq.size());
  prefix[0] = 0;
  for (int r = 0; r < n; ++r) prefix[r + 1] = prefix[r] + (inst.is_terminal(seq[r]) ? 1 : 0);
  int c = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (prefix[j + 1] != prefix[i] && inst.tournament.beats(seq[j], seq[i])) ++c;
  return c;
}

struct OrderSearch {
  int best_cost = INT_MAX;
  std::vector<Vertex> best;
  std::uint64_t nodes = 0;

  void offer(int c, const std::vector<Vertex>& seq) {
    if (c < best_cost || (c == best_cost && seq < best)) {
      best_cost = c;
      best = seq;
    }
  }
};

// All orders with seq[0] == first (or all orders when first < 0).
OrderSearch enumerate_orders(const Instance& inst, Vertex first) {
  const int n = inst.size();
  OrderSearch s;
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  auto tail_begin = seq.begin();
  if (first >= 0) {
    std::rotate(seq.begin(), seq.begin() + first, seq.begin() + first + 1);
    tail_begin = seq.begin() + 1;
  }
  std::vector<int> prefix(n + 1);
  do {
    ++s.nodes;
    s.offer(order_cost(inst, seq, prefix), seq);
  } while (std::next_permutation(tail_begin, seq.end()));
  return s;
}

void check_limit(const Instance& inst, int limit) {
  if (inst.size() > limit)
    throw TooLarge("exact_order: n = " + std::to_string(inst.size()) + " exceeds limit " + std::to_string(limit));
}

SolveOutcome outcome_of(const Instance& inst, const OrderSearch& s) {
  SolveOutcome out;
  out.nodes_explored = s.nodes;
  out.witness = solution_from_order(inst, VertexOrder(s.best));
  out.optimum = static_cast<int>(out.witness.size());
  return out;
}

}  // namespace

SolveOutcome exact_order(const Instance& inst, int limit) {
  check_limit(inst, limit);
  return outcome_of(inst, enumerate_orders(inst, -1));
}

SolveOutcome exact_order_parallel(const Instance& inst, int limit) {
  check_limit(inst, limit);
  const int n = inst.size();
  if (n <= 1) return exact_order(inst, limit);
  std::vector<OrderSearch> parts(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 0; first < n; ++first) parts[first] = enumerate_orders(inst, first);

  OrderSearch merged;
  for (const auto& p : parts) {
    merged.nodes += p.nodes;
    merged.offer(p.best_cost, p.best);
  }
  return outcome_of(inst, merged);
}

VertexOrder best_order(const Instance& inst, int limit) {
  check_limit(inst, limit);
  return VertexOrder(enumerate_orders(inst, -1).best);
}

VertexOrder heuristic_order(const Instance& inst) {
  const int n = inst.size();
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  std::stable_sort(seq.begin(), seq.end(), [&](Vertex a, Vertex b) {
    return inst.tournament.in(a).count() < inst.tournament.in(b).count();
  });

  std::vector<int> prefix(n + 1);
  int current = order_cost(inst, seq, prefix);
  bool improved = true;
  while (improved && current > 0) {
    improved = false;
    for (int from = 0; from < n && !improved; ++from) {
      int best_cost = current;
      int best_to = -1;
      std::vector<Vertex> trial = seq;
      const Vertex v = trial[from];
      trial.erase(trial.begin() + from);
      for (int to = 0; to < n; ++to) {
        if (to == from) continue;
        std::vector<Vertex> candidate = trial;
        candidate.insert(candidate.begin() + to, v);
        const int c = order_cost(inst, candidate, prefix);
        if (c < best_cost) {
          best_cost = c;
          best_to = to;
        }
      }
      if (best_to >= 0) {
        seq = std::move(trial);
        seq.insert(seq.begin() + best_to, v);
        current = best_cost;
        improved = true;
      }
    }
  }
  return VertexOrder(std::move(seq));
}

VertexOrder exact_provider_order(const Instance& inst) {
  return order_from_solution(inst, exact_branch(inst).witness);
}

}  // namespace sfast
