#include "sfast/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace sfast {

ArcSet make_arc_set(std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return arcs;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.set(v);
  return s;
}

VertexSet VertexSet::of(int universe, std::span<const Vertex> members) {
  VertexSet s(universe);
  for (Vertex v : members) s.set(v);
  return s;
}

int VertexSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int VertexSet::count_common(const VertexSet& other) const {
  int c = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & other.words_[i]);
  return c;
}

Vertex VertexSet::first_common(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i] & other.words_[i];
    if (w != 0) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
  }
  return -1;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Digraph::Digraph(int n) : out_(n, VertexSet(n)), in_(n, VertexSet(n)) {}

void Digraph::add_arc(Vertex u, Vertex v) {
  out_[u].set(v);
  in_[v].set(u);
}

void Digraph::remove_arc(Vertex u, Vertex v) {
  out_[u].reset(v);
  in_[v].reset(u);
}

Tournament::Tournament(Digraph g) : graph_(std::move(g)) {
  const int n = graph_.size();
  for (Vertex u = 0; u < n; ++u) {
    if (graph_.has_arc(u, u)) throw MalformedTournament("self-loop at vertex " + std::to_string(u + 1));
    for (Vertex v = u + 1; v < n; ++v) {
      const bool uv = graph_.has_arc(u, v);
      const bool vu = graph_.has_arc(v, u);
      if (uv == vu) {
        throw MalformedTournament((uv ? "both orientations present for pair {" : "missing pair {") +
                                  std::to_string(u + 1) + "," + std::to_string(v + 1) + "}");
      }
    }
  }
}

Tournament Tournament::transitive(int n) {
  Digraph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_arc(u, v);
  return Tournament(std::move(g));
}

std::vector<Arc> Tournament::arcs() const {
  std::vector<Arc> result;
  const int n = size();
  result.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  for (Vertex u = 0; u < n; ++u) out(u).for_each([&](Vertex v) { result.push_back({u, v}); });
  return result;
}

Instance::Instance(Tournament t, VertexSet terms, int k)
    : tournament(std::move(t)), terminals(std::move(terms)), budget(k) {
  if (terminals.universe() != tournament.size()) throw BadParameters("terminal set universe does not match n");
}

Instance::Instance(Tournament t, std::span<const Vertex> terms, int k) : tournament(std::move(t)), budget(k) {
  const int n = tournament.size();
  terminals = VertexSet(n);
  for (Vertex v : terms) {
    if (v < 0 || v >= n) throw BadParameters("terminal " + std::to_string(v) + " out of range");
    terminals.set(v);
  }
}

VertexOrder::VertexOrder(std::vector<Vertex> sequence) : sequence_(std::move(sequence)) {
  const int n = size();
  position_.assign(n, -1);
  for (int r = 0; r < n; ++r) {
    const Vertex v = sequence_[r];
    if (v < 0 || v >= n || position_[v] != -1) throw InvalidOrder("sequence is not a permutation of 0.." + std::to_string(n - 1));
    position_[v] = r;
  }
}

VertexOrder VertexOrder::identity(int n) {
  std::vector<Vertex> seq(n);
  std::iota(seq.begin(), seq.end(), 0);
  return VertexOrder(std::move(seq));
}

}  // namespace sfast
