#include "sfast/core.hpp"

#include <algorithm>
#include <string>

namespace sfast {

Tournament build_tournament(int n, std::span<const Arc> arcs) {
  if (n < 0) throw MalformedTournament("negative vertex count");
  Digraph g(n);
  for (const Arc& a : arcs) {
    if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
      throw MalformedTournament("arc endpoint out of range");
    if (a.tail == a.head) throw MalformedTournament("self-loop at vertex " + std::to_string(a.tail + 1));
    if (g.has_arc(a.tail, a.head))
      throw MalformedTournament("duplicate arc " + std::to_string(a.tail + 1) + "->" + std::to_string(a.head + 1));
    g.add_arc(a.tail, a.head);
  }
  return Tournament(std::move(g));
}

ArcSet backward_arcs(const Tournament& t, const VertexOrder& order) {
  ArcSet result;
  const int n = t.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (t.beats(order.at(j), order.at(i))) result.push_back({order.at(j), order.at(i)});
  return make_arc_set(std::move(result));
}

int backward_count(const Tournament& t, const VertexOrder& order) {
  int c = 0;
  const int n = t.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) c += t.beats(order.at(j), order.at(i)) ? 1 : 0;
  return c;
}

namespace {

// terminal_prefix[r] = number of terminals at ranks < r
std::vector<int> terminal_prefix(const Instance& inst, const VertexOrder& order) {
  const int n = inst.size();
  std::vector<int> prefix(n + 1, 0);
  for (int r = 0; r < n; ++r) prefix[r + 1] = prefix[r] + (inst.is_terminal(order.at(r)) ? 1 : 0);
  return prefix;
}

}  // namespace

ArcSet affected_arcs(const Instance& inst, const VertexOrder& order) {
  const auto prefix = terminal_prefix(inst, order);
  ArcSet result;
  const int n = inst.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (prefix[j + 1] - prefix[i] > 0 && inst.tournament.beats(order.at(j), order.at(i)))
        result.push_back({order.at(j), order.at(i)});
  return make_arc_set(std::move(result));
}

int cost(const Instance& inst, const VertexOrder& order) {
  const auto prefix = terminal_prefix(inst, order);
  int c = 0;
  const int n = inst.size();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (prefix[j + 1] - prefix[i] > 0 && inst.tournament.beats(order.at(j), order.at(i))) ++c;
  return c;
}

VertexSet affected_vertices(const Instance& inst, const VertexOrder& order) {
  VertexSet s(inst.size());
  for (const Arc& a : affected_arcs(inst, order)) {
    s.set(a.tail);
    s.set(a.head);
  }
  return s;
}

std::vector<RankInterval> maximal_nonterminal_intervals(const Instance& inst, const VertexOrder& order) {
  std::vector<RankInterval> runs;
  const int n = inst.size();
  int r = 0;
  while (r < n) {
    if (inst.is_terminal(order.at(r))) {
      ++r;
      continue;
    }
    const int first = r;
    while (r < n && !inst.is_terminal(order.at(r))) ++r;
    runs.push_back({first, r - 1});
  }
  return runs;
}

IntervalPartition partition_around(const VertexOrder& order, RankInterval middle) {
  return {{0, middle.first - 1}, middle, {middle.last + 1, order.size() - 1}};
}

VertexSet vertices_in(const VertexOrder& order, RankInterval interval) {
  VertexSet s(order.size());
  for (int r = interval.first; r <= interval.last; ++r) s.set(order.at(r));
  return s;
}

std::vector<std::vector<Vertex>> strong_components(const Digraph& g) {
  // Iterative Tarjan; each frame remembers the next successor to try.
  const int n = g.size();
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, Vertex>> frames;  // (vertex, last successor tried)
  std::vector<std::vector<Vertex>> components;
  int counter = 0;

  auto next_successor = [&](Vertex v, Vertex after) -> Vertex {
    for (Vertex w = after + 1; w < n; ++w)
      if (g.has_arc(v, w)) return w;
    return -1;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    frames.push_back({root, -1});

    while (!frames.empty()) {
      auto& [v, cursor] = frames.back();
      const Vertex w = next_successor(v, cursor);
      if (w != -1) {
        cursor = w;
        if (index[w] == -1) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          frames.push_back({w, -1});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<Vertex> comp;
        Vertex x;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[x] = 0;
          comp.push_back(x);
        } while (x != done);
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
      }
    }
  }
  return components;
}

bool has_t_cycle(const Digraph& g, const VertexSet& terminals) {
  for (const auto& comp : strong_components(g)) {
    if (comp.size() < 2) continue;
    for (Vertex v : comp)
      if (terminals.test(v)) return true;
  }
  return false;
}

bool has_t_cycle(const Instance& inst) { return has_t_cycle(inst.tournament.graph(), inst.terminals); }

VertexSet vertices_on_t_cycles(const Instance& inst) {
  VertexSet on(inst.size());
  for (const auto& comp : strong_components(inst.tournament.graph())) {
    if (comp.size() < 2) continue;
    if (std::none_of(comp.begin(), comp.end(), [&](Vertex v) { return inst.is_terminal(v); })) continue;
    for (Vertex v : comp) on.set(v);
  }
  return on;
}

bool in_t_cycle(const Instance& inst, Vertex v) { return vertices_on_t_cycles(inst).test(v); }

ArcSet solution_from_order(const Instance& inst, const VertexOrder& order) { return affected_arcs(inst, order); }

namespace {

Digraph remove_arcs(const Tournament& t, const ArcSet& s) {
  Digraph g = t.graph();
  for (const Arc& a : s) {
    if (a.tail < 0 || a.tail >= t.size() || a.head < 0 || a.head >= t.size() || !t.beats(a.tail, a.head))
      throw NotAnArc("(" + std::to_string(a.tail + 1) + "," + std::to_string(a.head + 1) + ") is not an arc");
    g.remove_arc(a.tail, a.head);
  }
  return g;
}

}  // namespace

VertexOrder order_from_solution(const Instance& inst, const ArcSet& s) {
  const Digraph g = remove_arcs(inst.tournament, s);
  auto comps = strong_components(g);
  std::vector<Vertex> seq;
  seq.reserve(inst.size());
  // Tarjan emits sinks first; reverse for a topological order of the condensation.
  for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
    if (it->size() >= 2 && std::any_of(it->begin(), it->end(), [&](Vertex v) { return inst.is_terminal(v); }))
      throw NotAFeedbackSet("removing the arc set leaves a T-cycle");
    seq.insert(seq.end(), it->begin(), it->end());
  }
  return VertexOrder(std::move(seq));
}

Tournament reverse_arc(const Tournament& t, Arc e) {
  if (e.tail < 0 || e.tail >= t.size() || e.head < 0 || e.head >= t.size() || !t.beats(e.tail, e.head))
    throw NotAnArc("(" + std::to_string(e.tail + 1) + "," + std::to_string(e.head + 1) + ") is not an arc");
  Digraph g = t.graph();
  g.remove_arc(e.tail, e.head);
  g.add_arc(e.head, e.tail);
  return Tournament(std::move(g));
}

bool verify_solution(const Instance& inst, const ArcSet& s) {
  if (static_cast<int>(s.size()) > inst.budget) return false;
  try {
    return !has_t_cycle(remove_arcs(inst.tournament, s), inst.terminals);
  } catch (const NotAnArc&) {
    return false;
  }
}

Deletion delete_vertices(const Instance& inst, const VertexSet& doomed) {
  const int n = inst.size();
  Deletion d;
  d.new_of_old.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) {
    if (doomed.test(v)) continue;
    d.new_of_old[v] = static_cast<Vertex>(d.old_of_new.size());
    d.old_of_new.push_back(v);
  }
  const int m = static_cast<int>(d.old_of_new.size());
  Digraph g(m);
  VertexSet terms(m);
  for (Vertex a = 0; a < m; ++a) {
    if (inst.is_terminal(d.old_of_new[a])) terms.set(a);
    for (Vertex b = 0; b < m; ++b)
      if (inst.tournament.beats(d.old_of_new[a], d.old_of_new[b])) g.add_arc(a, b);
  }
  d.instance = Instance(Tournament(std::move(g)), std::move(terms), inst.budget);
  return d;
}

}  // namespace sfast
