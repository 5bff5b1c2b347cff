#pragma once

#include "sfast/core.hpp"

namespace sfast {

struct RegularizationReport {
  VertexOrder result;
  int moves = 0;
  int backward_before = 0;
  int backward_after = 0;
};

/// An order is regular when, for every terminal-free rank range [l, r]
/// (maximal or not), the vertex at rank l beats at least ceil((r-l)/2) of the
/// range and the vertex at rank r loses to at least ceil((r-l)/2) of it.
bool is_regular(const Instance& inst, const VertexOrder& order);

/// Local search towards a regular order. A step picks the first terminal-free
/// range [l, r] (by l, then by length) whose left end has fewer out- than
/// in-neighbours inside the range and moves it just right of rank r; failing
/// that, a right end with fewer in- than out-neighbours moves just left of l.
///
/// Every step lowers the backward-arc count by at least one and only permutes
/// non-terminals inside one terminal-free range, so the affected arc set, the
/// cost and every terminal's rank are unchanged.
RegularizationReport regularize(const Instance& inst, const VertexOrder& order);

}  // namespace sfast
