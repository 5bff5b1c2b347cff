#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sfast/io.hpp"
#include "sfast/reduce.hpp"
#include "sfast/solve.hpp"
#include "sfast/xcheck.hpp"

using namespace sfast;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kInvariant = 2;

struct GenArgs {
  std::string model = "uniform";
  int n = 0;
  int k = 0;
  double tfrac = 1.0;
  int s = 0;
  std::uint64_t seed = 1;
  std::string out;
};

struct KernelizeArgs {
  std::string in, provider = "heuristic", trace, out;
};

struct SolveArgs {
  std::string in, method = "branch";
  int cap = -1;
};

struct VerifyArgs {
  std::string in, witness;
};

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

int cmd_gen(const GenArgs& a) {
  GenParams p;
  p.model = a.model == "planted" ? Model::kPlanted : Model::kUniform;
  p.n = a.n;
  p.k = a.k;
  p.terminal_fraction = a.tfrac;
  p.reversals = a.s;
  p.seed = a.seed;
  emit(a.out, serialize_instance(generate(p)));
  return kOk;
}

int cmd_kernelize(const KernelizeArgs& a) {
  const Instance inst = parse_instance(read_file(a.in));
  const ProviderKind kind = a.provider == "exact" ? ProviderKind::kExact : ProviderKind::kHeuristic;
  const KernelResult res = kernelize(inst, kind);
  const Instance out = output_instance(res);
  const std::string canonical = serialize_instance(out);

  if (serialize_instance(replay_trace(inst, res.trace)) != canonical) {
    std::cerr << "error: trace does not reproduce the kernel\n";
    return kInvariant;
  }
  if (res.final_bounds && out.size() > res.final_bounds->N_max) {
    std::cerr << "error: kernel larger than N_max\n";
    return kInvariant;
  }
  if (!a.trace.empty()) write_file(a.trace, serialize_trace(inst, res, a.provider));
  emit(a.out, canonical);

  std::cerr << "status " << status_name(res.status) << ", n " << inst.size() << " -> " << out.size() << ", k "
            << inst.budget << " -> " << out.budget << ", rules applied " << res.trace.size() << '\n';
  return kOk;
}

int cmd_solve(const SolveArgs& a) {
  const Instance inst = parse_instance(read_file(a.in));
  SolveOutcome sol;
  if (a.method == "subset") {
    const int cap = a.cap >= 0 ? a.cap : static_cast<int>(inst.tournament.arcs().size());
    auto r = exact_subset(inst, cap);
    if (!r) {
      std::cout << "optimum > " << cap << "\nanswer NO\n";
      return kOk;
    }
    sol = std::move(*r);
  } else if (a.method == "order") {
    sol = exact_order_parallel(inst);
  } else {
    sol = exact_branch(inst, BranchMode::kBranchAndBound);
  }
  if (!verify_solution(Instance(inst.tournament, inst.terminals, sol.optimum), sol.witness)) {
    std::cerr << "error: solver produced an invalid witness\n";
    return kInvariant;
  }
  std::cout << "optimum " << sol.optimum << '\n';
  std::cout << "answer " << (sol.optimum <= inst.budget ? "YES" : "NO") << '\n';
  std::cout << serialize_witness(sol.witness);
  return kOk;
}

int cmd_verify(const VerifyArgs& a) {
  const Instance inst = parse_instance(read_file(a.in));
  const ArcSet w = parse_witness(read_file(a.witness));
  if (verify_solution(inst, w)) {
    std::cout << "accept\n";
    return kOk;
  }
  std::cout << "reject\n";
  return kInvariant;
}

int cmd_xcheck(const XcheckConfig& c, bool serial) {
  const XcheckReport r = serial ? run_xcheck(c) : run_xcheck_parallel(c);
  std::cout << r.summary();
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernelization and exact solvers for subset feedback arc set in tournaments"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "generate a random instance");
  g->add_option("--model", gen.model)->check(CLI::IsMember({"uniform", "planted"}));
  g->add_option("--n", gen.n)->required()->check(CLI::NonNegativeNumber);
  g->add_option("--k", gen.k)->check(CLI::NonNegativeNumber);
  g->add_option("--tfrac", gen.tfrac)->check(CLI::Range(0.0, 1.0));
  g->add_option("--s", gen.s, "arc reversals of the planted model")->check(CLI::NonNegativeNumber);
  g->add_option("--seed", gen.seed);
  g->add_option("--out", gen.out);

  KernelizeArgs ker;
  auto* k = app.add_subcommand("kernelize", "reduce an instance to a kernel");
  k->add_option("--in", ker.in)->required();
  k->add_option("--provider", ker.provider)->check(CLI::IsMember({"heuristic", "exact"}));
  k->add_option("--trace", ker.trace);
  k->add_option("--out", ker.out);

  SolveArgs sol;
  auto* s = app.add_subcommand("solve", "compute the optimum and a witness");
  s->add_option("--in", sol.in)->required();
  s->add_option("--method", sol.method)->check(CLI::IsMember({"subset", "branch", "order"}));
  s->add_option("--cap", sol.cap, "largest subset size tried by the subset method");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "check a witness against an instance");
  v->add_option("--in", ver.in)->required();
  v->add_option("--witness", ver.witness)->required();

  XcheckConfig xc;
  bool serial = false;
  auto* x = app.add_subcommand("xcheck", "randomized safety suite against the oracles");
  x->add_option("--n-max", xc.n_max)->check(CLI::PositiveNumber);
  x->add_option("--k-max", xc.k_max)->check(CLI::NonNegativeNumber);
  x->add_option("--trials", xc.trials)->check(CLI::NonNegativeNumber);
  x->add_option("--seed", xc.seed);
  x->add_flag("--serial", serial, "run trials on one thread");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*g) return cmd_gen(gen);
    if (*k) return cmd_kernelize(ker);
    if (*s) return cmd_solve(sol);
    if (*v) return cmd_verify(ver);
    if (*x) return cmd_xcheck(xc, serial);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const MalformedTournament& e) {
    std::cerr << "malformed tournament: " << e.what() << '\n';
    return kUsage;
  } catch (const BadParameters& e) {
    std::cerr << "bad parameters: " << e.what() << '\n';
    return kUsage;
  } catch (const FileError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const TooLarge& e) {
    std::cerr << "too large: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}
