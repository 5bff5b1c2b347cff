#include "support.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

namespace sfast::testing {

std::string fixture_path(const std::string& name) { return std::string(SFAST_FIXTURE_DIR) + "/" + name; }

Instance sample15() { return parse_instance(read_file(fixture_path("sample15.sfast"))); }

Tournament tour(int n, std::vector<Arc> one_based) {
  for (Arc& a : one_based) {
    --a.tail;
    --a.head;
  }
  return build_tournament(n, one_based);
}

Instance three_cycle(std::vector<Vertex> one_based_terminals, int k) {
  for (Vertex& v : one_based_terminals) --v;
  return Instance(tour(3, {{1, 2}, {2, 3}, {3, 1}}), one_based_terminals, k);
}

Instance random_instance(SplitMix64& rng, int n, int k, double terminal_fraction) {
  Digraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.unit() < 0.5) {
        g.add_arc(u, v);
      } else {
        g.add_arc(v, u);
      }
    }
  std::vector<Vertex> terms;
  for (Vertex v = 0; v < n; ++v)
    if (rng.unit() < terminal_fraction) terms.push_back(v);
  return Instance(Tournament(std::move(g)), terms, k);
}

VertexOrder random_order(SplitMix64& rng, int n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(seq[i], seq[rng.below(i + 1)]);
  return VertexOrder(std::move(seq));
}

VertexSet brute_t_cycle_vertices(const Instance& inst) {
  const int n = inst.size();
  VertexSet on(n);
  std::vector<Vertex> path;
  std::vector<char> used(n, 0);
  // cycles are enumerated from their smallest vertex
  std::function<void(Vertex, Vertex)> extend = [&](Vertex start, Vertex v) {
    for (Vertex w = start; w < n; ++w) {
      if (!inst.tournament.beats(v, w)) continue;
      if (w == start) {
        if (std::any_of(path.begin(), path.end(), [&](Vertex x) { return inst.is_terminal(x); }))
          for (Vertex x : path) on.set(x);
        continue;
      }
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      extend(start, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    used[s] = 1;
    path = {s};
    extend(s, s);
    used[s] = 0;
  }
  return on;
}

int brute_forward_packing(const Instance& inst, const VertexOrder& order, Arc e, Vertex t) {
  const Vertex from = e.head;
  const Vertex to = e.tail;
  std::vector<std::vector<Arc>> paths;
  std::vector<Arc> cur;
  std::function<void(Vertex, bool)> walk = [&](Vertex v, bool seen_t) {
    seen_t = seen_t || v == t;
    if (v == to) {
      if (seen_t) paths.push_back(cur);
      return;
    }
    for (Vertex w = 0; w < inst.size(); ++w) {
      if (!inst.tournament.beats(v, w) || order.rank_of(w) <= order.rank_of(v)) continue;
      cur.push_back({v, w});
      walk(w, seen_t);
      cur.pop_back();
    }
  };
  walk(from, false);

  int best = 0;
  std::vector<Arc> taken;
  std::function<void(std::size_t, int)> pack = [&](std::size_t i, int count) {
    best = std::max(best, count);
    if (count + static_cast<int>(paths.size() - i) <= best) return;
    for (std::size_t j = i; j < paths.size(); ++j) {
      bool clash = false;
      for (const Arc& a : paths[j])
        if (std::find(taken.begin(), taken.end(), a) != taken.end()) clash = true;
      if (clash) continue;
      taken.insert(taken.end(), paths[j].begin(), paths[j].end());
      pack(j + 1, count + 1);
      taken.resize(taken.size() - paths[j].size());
    }
  };
  pack(0, 0);
  return best;
}

int brute_optimum(const Instance& inst) {
  const std::vector<Arc> arcs = inst.tournament.arcs();
  const int m = static_cast<int>(arcs.size());
  int best = m;
  // every subset as a bitmask; only used on instances with few arcs
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    const int size = std::popcount(mask);
    if (size >= best) continue;
    Digraph g = inst.tournament.graph();
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1u) g.remove_arc(arcs[i].tail, arcs[i].head);
    bool cyclic = false;
    std::vector<char> seen(inst.size());
    inst.terminals.for_each([&](Vertex s) {
      if (cyclic) return;
      std::fill(seen.begin(), seen.end(), 0);
      std::vector<Vertex> stack{s};
      while (!stack.empty() && !cyclic) {
        const Vertex v = stack.back();
        stack.pop_back();
        g.out(v).for_each([&](Vertex w) {
          if (w == s) cyclic = true;
          if (!seen[w]) {
            seen[w] = 1;
            stack.push_back(w);
          }
        });
      }
    });
    if (!cyclic) best = size;
  }
  return best;
}

}  // namespace sfast::testing
