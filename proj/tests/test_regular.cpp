#include <gtest/gtest.h>

#include "sfast/regular.hpp"
#include "support.hpp"

using namespace sfast;
using namespace sfast::testing;

namespace {

// Definition check written out independently of the library.
bool regular_by_definition(const Instance& inst, const VertexOrder& o) {
  const int n = o.size();
  for (int l = 0; l < n; ++l) {
    for (int r = l; r < n; ++r) {
      if (inst.is_terminal(o.at(r))) break;
      const int need = (r - l + 1) / 2;
      int left_out = 0, right_in = 0;
      for (int p = l; p <= r; ++p) {
        if (inst.tournament.beats(o.at(l), o.at(p))) ++left_out;
        if (inst.tournament.beats(o.at(p), o.at(r))) ++right_in;
      }
      if (left_out < need || right_in < need) return false;
    }
  }
  return true;
}

Instance abc() {
  // a=0, b=1, c=2, no terminals
  return Instance(tour(3, {{2, 1}, {3, 1}, {2, 3}}), std::vector<Vertex>{}, 0);
}

}  // namespace

TEST(IsRegular, TransitiveIdentity) {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(10));
    Instance inst = random_instance(rng, n, 0, rng.unit());
    inst.tournament = Tournament::transitive(n);
    EXPECT_TRUE(is_regular(inst, VertexOrder::identity(n)));
  }
}

TEST(IsRegular, LeftEndWithoutOutNeighbours) {
  EXPECT_FALSE(is_regular(abc(), VertexOrder::identity(3)));
}

TEST(IsRegular, SingletonIntervals) {
  // terminals at every other rank leave only singleton runs
  SplitMix64 rng(8);
  Instance inst = random_instance(rng, 9, 0, 0.0);
  inst.terminals = VertexSet::of(9, std::vector<Vertex>{0, 2, 4, 6, 8});
  EXPECT_TRUE(is_regular(inst, VertexOrder::identity(9)));
}

TEST(IsRegular, MatchesDefinition) {
  SplitMix64 rng(99);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(9));
    const Instance inst = random_instance(rng, n, 0, 0.4 * rng.unit());
    const VertexOrder o = random_order(rng, n);
    ASSERT_EQ(is_regular(inst, o), regular_by_definition(inst, o));
  }
}

TEST(Regularize, FixpointOnRegularInput) {
  const Instance inst(Tournament::transitive(6), std::vector<Vertex>{2}, 0);
  const RegularizationReport r = regularize(inst, VertexOrder::identity(6));
  EXPECT_EQ(r.result, VertexOrder::identity(6));
  EXPECT_EQ(r.moves, 0);
}

TEST(Regularize, SmallExample) {
  const RegularizationReport r = regularize(abc(), VertexOrder::identity(3));
  EXPECT_EQ(r.result, VertexOrder({1, 2, 0}));
  EXPECT_GE(r.moves, 1);
  EXPECT_EQ(r.backward_before, 2);
  EXPECT_EQ(r.backward_after, 0);
  EXPECT_TRUE(regular_by_definition(abc(), r.result));
}

TEST(Regularize, Sample15) {
  const Instance f = sample15();
  const RegularizationReport r = regularize(f, VertexOrder::identity(15));
  EXPECT_TRUE(regular_by_definition(f, r.result));
  EXPECT_EQ(cost(f, r.result), 3);
  for (int rank : {0, 4, 10, 11}) EXPECT_EQ(r.result.at(rank), rank);
}

TEST(Regularize, Contract) {
  SplitMix64 rng(31337);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const Instance inst = random_instance(rng, n, 0, 0.5 * rng.unit());
    const VertexOrder o = random_order(rng, n);
    const RegularizationReport r = regularize(inst, o);
    ASSERT_TRUE(regular_by_definition(inst, r.result));
    ASSERT_EQ(cost(inst, r.result), cost(inst, o));
    ASSERT_EQ(affected_arcs(inst, r.result), affected_arcs(inst, o));
    for (int p = 0; p < n; ++p)
      if (inst.is_terminal(o.at(p))) ASSERT_EQ(r.result.at(p), o.at(p));
    ASSERT_EQ(r.backward_before, backward_count(inst.tournament, o));
    ASSERT_EQ(r.backward_after, backward_count(inst.tournament, r.result));
    ASSERT_LE(r.backward_after, r.backward_before);
    ASSERT_LE(r.moves, r.backward_before);
    ASSERT_LE(r.moves, r.backward_before - r.backward_after);
  }
}
