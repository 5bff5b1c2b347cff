#include "sfast/regular.hpp"

#include <algorithm>

namespace sfast {

namespace {

// in_before[v][p] = number of in-neighbours of v among ranks < p.
std::vector<std::vector<int>> in_prefix(const Tournament& t, const std::vector<Vertex>& seq) {
  const int n = static_cast<int>(seq.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n + 1, 0));
  for (Vertex v = 0; v < n; ++v) {
    auto& row = table[v];
    for (int p = 0; p < n; ++p) row[p + 1] = row[p] + (t.beats(seq[p], v) ? 1 : 0);
  }
  return table;
}

}  // namespace

bool is_regular(const Instance& inst, const VertexOrder& order) {
  const Tournament& t = inst.tournament;
  const int n = inst.size();
  for (int l = 0; l < n; ++l) {
    const Vertex left = order.at(l);
    if (inst.is_terminal(left)) continue;
    int left_out = 0;
    for (int r = l + 1; r < n && !inst.is_terminal(order.at(r)); ++r) {
      const Vertex right = order.at(r);
      if (t.beats(left, right)) ++left_out;
      int right_in = 0;
      for (int p = l; p < r; ++p) right_in += t.beats(order.at(p), right) ? 1 : 0;
      const int need = (r - l + 1) / 2;
      if (left_out < need || right_in < need) return false;
    }
  }
  return true;
}

RegularizationReport regularize(const Instance& inst, const VertexOrder& order) {
  const Tournament& t = inst.tournament;
  const int n = inst.size();
  std::vector<Vertex> seq = order.sequence();

  RegularizationReport report;
  report.backward_before = backward_count(t, order);

  for (;;) {
    const auto in_before = in_prefix(t, seq);
    bool moved = false;
    for (int l = 0; l < n && !moved; ++l) {
      const Vertex left = seq[l];
      if (inst.is_terminal(left)) continue;
      for (int r = l + 1; r < n && !inst.is_terminal(seq[r]); ++r) {
        const int span = r - l;
        const int left_in = in_before[left][r + 1] - in_before[left][l + 1];
        const int left_out = span - left_in;
        if (left_out < left_in) {
          std::rotate(seq.begin() + l, seq.begin() + l + 1, seq.begin() + r + 1);
          moved = true;
          break;
        }
        const Vertex right = seq[r];
        const int right_in = in_before[right][r] - in_before[right][l];
        const int right_out = span - right_in;
        if (right_in < right_out) {
          std::rotate(seq.begin() + l, seq.begin() + r, seq.begin() + r + 1);
          moved = true;
          break;
        }
      }
    }
    if (!moved) break;
    ++report.moves;
  }

  report.result = VertexOrder(std::move(seq));
  report.backward_after = backward_count(t, report.result);
  return report;
}

}  // namespace sfast
