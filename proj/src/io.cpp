#include "sfast/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace sfast {

using nlohmann::json;

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

// Calls f(line_number, tokens) for every non-comment, non-blank line.
template <typename F>
void for_each_line(std::string_view text, F&& f) {
  if (!text.empty() && text.back() != '\n') throw ParseError(0, "missing final newline");
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto toks = split_ws(line);
    if (toks.empty() || toks[0] == "c") continue;
    f(line_no, toks);
  }
}

Arc parse_arc(const std::vector<std::string_view>& toks, std::size_t line, long long n) {
  if (toks.size() != 3) throw ParseError(line, "arc line needs exactly two endpoints");
  const long long u = to_int(toks[1], line);
  const long long v = to_int(toks[2], line);
  if (n >= 0 && (u < 1 || u > n || v < 1 || v > n)) throw ParseError(line, "arc endpoint out of range");
  if (u < 1 || v < 1) throw ParseError(line, "vertex ids are 1-based");
  return {static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)};
}

}  // namespace

Instance parse_instance(std::string_view text) {
  long long n = -1;
  long long k = 0;
  bool seen_t = false;
  std::vector<Vertex> terminals;
  std::vector<Arc> arcs;
  std::set<Arc> seen_arcs;

  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& toks) {
    if (toks[0] == "p") {
      if (n >= 0) throw ParseError(line, "duplicate problem line");
      if (toks.size() != 4 || toks[1] != "sfast") throw ParseError(line, "expected 'p sfast <n> <k>'");
      n = to_int(toks[2], line);
      k = to_int(toks[3], line);
      if (n < 0 || k < 0) throw ParseError(line, "n and k must be non-negative");
      if (n > 100000) throw ParseError(line, "n too large");
      return;
    }
    if (n < 0) throw ParseError(line, "problem line must come first");
    if (toks[0] == "t") {
      if (seen_t) throw ParseError(line, "duplicate terminal line");
      seen_t = true;
      for (std::size_t i = 1; i < toks.size(); ++i) {
        const long long t = to_int(toks[i], line);
        if (t < 1 || t > n) throw ParseError(line, "terminal out of range");
        terminals.push_back(static_cast<Vertex>(t - 1));
      }
      std::vector<Vertex> sorted = terminals;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ParseError(line, "duplicate terminal");
      return;
    }
    if (toks[0] == "a") {
      const Arc a = parse_arc(toks, line, n);
      if (!seen_arcs.insert(a).second) throw ParseError(line, "duplicate arc line");
      arcs.push_back(a);
      return;
    }
    throw ParseError(line, "unknown line type '" + std::string(toks[0]) + "'");
  });

  if (n < 0) throw ParseError(0, "missing problem line");
  if (!seen_t) throw ParseError(0, "missing terminal line");
  Tournament t = build_tournament(static_cast<int>(n), arcs);
  return Instance(std::move(t), terminals, static_cast<int>(k));
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  const int n = inst.size();
  out << "p sfast " << n << ' ' << inst.budget << '\n';
  out << 't';
  inst.terminals.for_each([&](Vertex v) { out << ' ' << v + 1; });
  out << '\n';
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (inst.tournament.beats(u, v)) {
        out << "a " << u + 1 << ' ' << v + 1 << '\n';
      } else {
        out << "a " << v + 1 << ' ' << u + 1 << '\n';
      }
    }
  return out.str();
}

ArcSet parse_witness(std::string_view text) {
  std::vector<Arc> arcs;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string_view>& toks) {
    if (toks[0] != "a") throw ParseError(line, "witness files contain only 'a' and 'c' lines");
    arcs.push_back(parse_arc(toks, line, -1));
  });
  return make_arc_set(std::move(arcs));
}

std::string serialize_witness(const ArcSet& arcs) {
  std::ostringstream out;
  for (const Arc& a : arcs) out << "a " << a.tail + 1 << ' ' << a.head + 1 << '\n';
  return out.str();
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // rejection sampling keeps the stream unbiased and platform independent
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Instance generate(const GenParams& p) {
  if (p.n < 0) throw BadParameters("n must be non-negative");
  if (p.k < 0) throw BadParameters("k must be non-negative");
  if (!(p.terminal_fraction >= 0.0 && p.terminal_fraction <= 1.0))
    throw BadParameters("terminal fraction must lie in [0, 1]");
  const long long pairs = static_cast<long long>(p.n) * (p.n - 1) / 2;
  if (p.model == Model::kPlanted && (p.reversals < 0 || p.reversals > pairs))
    throw BadParameters("reversal count must lie in [0, n(n-1)/2]");

  SplitMix64 rng(p.seed);
  const int n = p.n;
  Digraph g(n);

  if (p.model == Model::kUniform) {
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        if (rng.below(2) == 0) {
          g.add_arc(u, v);
        } else {
          g.add_arc(v, u);
        }
      }
  } else {
    std::vector<Vertex> label(n);
    for (int i = 0; i < n; ++i) label[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(label[i], label[rng.below(i + 1)]);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) g.add_arc(label[i], label[j]);

    // s distinct pairs via a partial shuffle of pair indices
    std::vector<std::pair<Vertex, Vertex>> all;
    all.reserve(pairs);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) all.emplace_back(u, v);
    for (int i = 0; i < p.reversals; ++i) {
      const auto j = i + static_cast<std::size_t>(rng.below(all.size() - i));
      std::swap(all[i], all[j]);
      auto [u, v] = all[i];
      if (g.has_arc(v, u)) std::swap(u, v);
      g.remove_arc(u, v);
      g.add_arc(v, u);
    }
  }

  const int term_count = static_cast<int>(std::llround(p.terminal_fraction * n));
  std::vector<Vertex> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < term_count; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
  std::vector<Vertex> terms(pool.begin(), pool.begin() + term_count);
  return Instance(Tournament(std::move(g)), terms, p.k);
}

namespace {

json ids(const std::vector<Vertex>& vs) {
  json a = json::array();
  for (Vertex v : vs) a.push_back(v + 1);
  return a;
}

std::vector<Vertex> ids_from(const json& a) {
  std::vector<Vertex> out;
  for (const auto& x : a) out.push_back(x.get<int>() - 1);
  return out;
}

json bounds_json(const BoundSet& b) {
  return json{{"B", b.B},         {"k", b.k},         {"d", b.d},         {"ell_loc", b.ell_loc},
              {"ell_new", b.ell_new}, {"L_max", b.L_max}, {"N_max", b.N_max}};
}

BoundSet bounds_from(const json& j) {
  BoundSet b = BoundSet::from(j.at("B").get<std::int64_t>(), j.at("k").get<std::int64_t>());
  if (b.d != j.at("d").get<std::int64_t>() || b.L_max != j.at("L_max").get<std::int64_t>() ||
      b.N_max != j.at("N_max").get<std::int64_t>())
    throw std::runtime_error("bounds are inconsistent with B and k");
  return b;
}

json record_json(const RuleApplication& a) {
  json j{{"rule", static_cast<int>(a.rule)},
         {"name", rule_name(a.rule)},
         {"n_before", a.n_before},
         {"n_after", a.n_after},
         {"k_before", a.budget_before},
         {"k_after", a.budget_after}};
  if (a.bounds) j["bounds"] = bounds_json(*a.bounds);
  switch (a.rule) {
    case RuleId::kDeleteBypassed:
      j["deleted"] = ids(a.deleted);
      break;
    case RuleId::kForceArc:
      j["arc"] = {a.reversed->tail + 1, a.reversed->head + 1};
      j["terminal"] = a.terminal + 1;
      j["flow"] = a.flow;
      break;
    case RuleId::kRichReplace: {
      const RichReplacementPlan& p = *a.replacement;
      json out_rich = json::array(), in_rich = json::array();
      for (auto [u, x] : p.out_rich) out_rich.push_back({u + 1, x});
      for (auto [w, y] : p.in_rich) in_rich.push_back({w + 1, y});
      j["d"] = p.d;
      j["ell"] = p.ell;
      j["interval"] = {p.interval.first + 1, p.interval.last + 1};
      j["left"] = ids(p.left);
      j["right"] = ids(p.right);
      j["out_rich"] = out_rich;
      j["in_rich"] = in_rich;
      j["affected_rich"] = ids(p.affected_rich);
      j["deleted"] = ids(p.deleted);
      break;
    }
    default:
      break;
  }
  return j;
}

RuleApplication record_from(const json& j) {
  RuleApplication a;
  const int rule = j.at("rule").get<int>();
  if (rule < 1 || rule > 6) throw std::runtime_error("unknown rule id");
  a.rule = static_cast<RuleId>(rule);
  a.n_before = j.at("n_before").get<int>();
  a.n_after = j.at("n_after").get<int>();
  a.budget_before = j.at("k_before").get<int>();
  a.budget_after = j.at("k_after").get<int>();
  if (j.contains("bounds")) a.bounds = bounds_from(j.at("bounds"));
  switch (a.rule) {
    case RuleId::kDeleteBypassed:
      a.deleted = ids_from(j.at("deleted"));
      break;
    case RuleId::kForceArc: {
      const auto& arc = j.at("arc");
      a.reversed = Arc{arc.at(0).get<int>() - 1, arc.at(1).get<int>() - 1};
      a.terminal = j.at("terminal").get<int>() - 1;
      a.flow = j.at("flow").get<int>();
      break;
    }
    case RuleId::kRichReplace: {
      RichReplacementPlan p;
      p.d = j.at("d").get<std::int64_t>();
      p.ell = j.at("ell").get<std::int64_t>();
      p.interval = {j.at("interval").at(0).get<int>() - 1, j.at("interval").at(1).get<int>() - 1};
      p.left = ids_from(j.at("left"));
      p.right = ids_from(j.at("right"));
      for (const auto& e : j.at("out_rich")) p.out_rich.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>());
      for (const auto& e : j.at("in_rich")) p.in_rich.emplace_back(e.at(0).get<int>() - 1, e.at(1).get<int>());
      p.affected_rich = ids_from(j.at("affected_rich"));
      p.deleted = ids_from(j.at("deleted"));
      a.replacement = std::move(p);
      break;
    }
    default:
      break;
  }
  return a;
}

}  // namespace

std::string serialize_trace(const Instance& input, const KernelResult& result, std::string_view provider) {
  std::ostringstream out;
  out << json{{"schema", "sfast-trace"},
              {"version", kTraceVersion},
              {"provider", provider},
              {"n", input.size()},
              {"k", input.budget}}
             .dump()
      << '\n';
  for (const auto& rec : result.trace) out << record_json(rec).dump() << '\n';

  const Instance final_inst = output_instance(result);
  json tail{{"result", status_name(result.status)}, {"n", final_inst.size()}, {"k", final_inst.budget}};
  if (result.final_bounds) tail["bounds"] = bounds_json(*result.final_bounds);
  if (result.status == KernelStatus::kReduced) {
    // 1-based input id per output vertex, 0 for inserted vertices
    json origin = json::array();
    for (Vertex v : result.origin) origin.push_back(v + 1);
    tail["origin"] = origin;
  }
  out << tail.dump() << '\n';
  return out.str();
}

ParsedTrace parse_trace(std::string_view text) {
  ParsedTrace t;
  if (!text.empty() && text.back() != '\n') throw ParseError(0, "missing final newline");
  std::size_t pos = 0, line_no = 0;
  bool have_header = false, have_result = false;
  while (pos < text.size()) {
    const std::size_t end = text.find('\n', pos);
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    if (have_result) throw ParseError(line_no, "data after result record");
    try {
      const json j = json::parse(line);
      if (!have_header) {
        if (j.value("schema", "") != "sfast-trace") throw std::runtime_error("not an sfast trace header");
        t.version = j.at("version").get<int>();
        if (t.version != kTraceVersion) throw std::runtime_error("unsupported trace version");
        t.n = j.at("n").get<int>();
        t.k = j.at("k").get<int>();
        have_header = true;
      } else if (j.contains("result")) {
        const std::string r = j.at("result").get<std::string>();
        if (r == "reduced") {
          t.status = KernelStatus::kReduced;
        } else if (r == "trivial_yes") {
          t.status = KernelStatus::kTrivialYes;
        } else if (r == "trivial_no") {
          t.status = KernelStatus::kTrivialNo;
        } else {
          throw std::runtime_error("unknown result '" + r + "'");
        }
        if (j.contains("bounds")) t.final_bounds = bounds_from(j.at("bounds"));
        have_result = true;
      } else {
        t.records.push_back(record_from(j));
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!have_header) throw ParseError(0, "missing trace header");
  if (!have_result) throw ParseError(0, "missing result record");
  return t;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileError("cannot write '" + path + "'");
  out << content;
}

}  // namespace sfast
