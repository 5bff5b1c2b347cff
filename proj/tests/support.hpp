#pragma once

#include <string>
#include <vector>

#include "sfast/core.hpp"
#include "sfast/io.hpp"

namespace sfast::testing {

std::string fixture_path(const std::string& name);
Instance sample15();

/// 1-based arc list, e.g. {{1, 2}, {2, 3}}.
Tournament tour(int n, std::vector<Arc> one_based);
Instance three_cycle(std::vector<Vertex> one_based_terminals, int k);

Instance random_instance(SplitMix64& rng, int n, int k, double terminal_fraction);
VertexOrder random_order(SplitMix64& rng, int n);

/// Vertices on some simple cycle through a terminal, by explicit cycle enumeration.
VertexSet brute_t_cycle_vertices(const Instance& inst);

/// Maximum number of pairwise arc-disjoint forward paths head(e) ~> t ~> tail(e),
/// by enumerating all such paths and searching for the largest packing.
int brute_forward_packing(const Instance& inst, const VertexOrder& order, Arc e, Vertex t);

/// Smallest T-feedback arc set size by counting arc subsets from scratch.
int brute_optimum(const Instance& inst);

}  // namespace sfast::testing
