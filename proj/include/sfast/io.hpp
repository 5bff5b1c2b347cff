#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sfast/reduce.hpp"

namespace sfast {

// Instance text format (1-based ids):
//
//   p sfast <n> <k>
//   t <terminal> ...            sorted; may be empty
//   a <u> <v>                   n(n-1)/2 lines, arc u -> v, sorted by pair
//   c ...                       comment, ignored
//
// Every line, including the last, ends in '\n'.

/// Throws ParseError (with line number) or MalformedTournament.
Instance parse_instance(std::string_view text);

/// Canonical form: no comments, pairs in lexicographic order.
std::string serialize_instance(const Instance& inst);

/// Witness files hold `a <u> <v>` lines and comments.
ArcSet parse_witness(std::string_view text);
std::string serialize_witness(const ArcSet& arcs);

enum class Model { kUniform, kPlanted };

struct GenParams {
  Model model = Model::kUniform;
  int n = 0;
  int k = 0;
  double terminal_fraction = 0.0;
  int reversals = 0;  // planted model only
  std::uint64_t seed = 0;
};

/// uniform: each pair oriented by a fair coin. planted: transitive tournament on
/// a random labelling with `reversals` distinct arcs flipped, so the optimum is
/// at most `reversals`. round(terminal_fraction * n) terminals chosen uniformly.
/// Throws BadParameters.
Instance generate(const GenParams& params);

/// Small portable PRNG helpers (identical streams on every platform).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  double unit();

 private:
  std::uint64_t state_;
};

// ---- Trace -----------------------------------------------------------------
//
// JSON lines: a header object, one object per rule application, and a result
// object. Vertex ids are 1-based ids of the instance current at that record.

inline constexpr int kTraceVersion = 1;

std::string serialize_trace(const Instance& input, const KernelResult& result, std::string_view provider);

struct ParsedTrace {
  int version = 0;
  int n = 0;
  int k = 0;
  std::vector<RuleApplication> records;
  KernelStatus status = KernelStatus::kTrivialYes;
  std::optional<BoundSet> final_bounds;
};

/// Throws ParseError.
ParsedTrace parse_trace(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace sfast
