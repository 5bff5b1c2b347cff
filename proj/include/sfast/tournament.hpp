#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "sfast/errors.hpp"

namespace sfast {

/// Dense vertex id, 0..n-1. Files use 1-based ids; see io.hpp.
using Vertex = int;

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Sorted, duplicate-free list of arcs.
using ArcSet = std::vector<Arc>;

ArcSet make_arc_set(std::vector<Arc> arcs);

/// Fixed-universe bitset over vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}

  static VertexSet full(int universe);
  static VertexSet of(int universe, std::span<const Vertex> members);

  int universe() const { return universe_; }

  bool test(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1u; }
  void set(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void assign(Vertex v, bool value) { value ? set(v) : reset(v); }

  int count() const;
  bool empty() const;
  /// |*this ∩ other|
  int count_common(const VertexSet& other) const;
  /// Smallest member of *this ∩ other, or -1.
  Vertex first_common(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);

  std::vector<Vertex> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  static std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple digraph stored as out- and in-neighbourhood bitsets.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);

  int size() const { return static_cast<int>(out_.size()); }
  bool has_arc(Vertex u, Vertex v) const { return out_[u].test(v); }
  void add_arc(Vertex u, Vertex v);
  void remove_arc(Vertex u, Vertex v);

  const VertexSet& out(Vertex v) const { return out_[v]; }
  const VertexSet& in(Vertex v) const { return in_[v]; }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

/// Complete orientation on n vertices: exactly one arc per unordered pair.
/// Immutable after construction; mutation helpers return new values.
class Tournament {
 public:
  Tournament() = default;

  /// Validates irreflexivity and completeness; throws MalformedTournament.
  explicit Tournament(Digraph g);

  /// Transitive tournament with i -> j for all i < j.
  static Tournament transitive(int n);

  int size() const { return graph_.size(); }
  bool beats(Vertex u, Vertex v) const { return graph_.has_arc(u, v); }
  const VertexSet& out(Vertex v) const { return graph_.out(v); }
  const VertexSet& in(Vertex v) const { return graph_.in(v); }
  const Digraph& graph() const { return graph_; }

  /// All n(n-1)/2 arcs sorted by (tail, head).
  std::vector<Arc> arcs() const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  Digraph graph_;
};

/// Tournament, terminal set T and budget k.
struct Instance {
  Tournament tournament;
  VertexSet terminals;
  int budget = 0;

  Instance() = default;
  Instance(Tournament t, VertexSet terms, int k);
  Instance(Tournament t, std::span<const Vertex> terms, int k);

  int size() const { return tournament.size(); }
  bool is_terminal(Vertex v) const { return terminals.test(v); }
  std::vector<Vertex> terminal_list() const { return terminals.members(); }

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Permutation of the vertex set together with its inverse.
class VertexOrder {
 public:
  VertexOrder() = default;
  /// Throws InvalidOrder unless `sequence` is a permutation of 0..n-1.
  explicit VertexOrder(std::vector<Vertex> sequence);

  static VertexOrder identity(int n);

  int size() const { return static_cast<int>(sequence_.size()); }
  Vertex at(int rank) const { return sequence_[rank]; }
  int rank_of(Vertex v) const { return position_[v]; }
  const std::vector<Vertex>& sequence() const { return sequence_; }

  friend bool operator==(const VertexOrder& a, const VertexOrder& b) { return a.sequence_ == b.sequence_; }

 private:
  std::vector<Vertex> sequence_;
  std::vector<int> position_;
};

}  // namespace sfast
