#include "sfast/reduce.hpp"

#include <algorithm>
#include <climits>
#include <deque>

#include "sfast/regular.hpp"
#include "sfast/solve.hpp"

namespace sfast {

BoundSet BoundSet::from(std::int64_t B, std::int64_t k) {
  BoundSet b;
  b.B = B;
  b.k = k;
  b.d = B + 2 * k + 1;
  b.ell_loc = 2 * B + 2 * k + 2;
  b.ell_new = 2 * b.d + k + 1;
  b.L_max = 4 * b.d + B + b.ell_new;
  b.N_max = (2 * B + 1) * b.L_max + B * (2 * b.ell_loc + 2);
  return b;
}

std::string rule_name(RuleId id) {
  switch (id) {
    case RuleId::kTrivialNo: return "trivial_no";
    case RuleId::kTrivialYes: return "trivial_yes";
    case RuleId::kDeleteBypassed: return "delete_bypassed";
    case RuleId::kForceArc: return "force_arc";
    case RuleId::kRichReplace: return "rich_replace";
    case RuleId::kSizeNo: return "size_no";
  }
  return "unknown";
}

std::string status_name(KernelStatus s) {
  switch (s) {
    case KernelStatus::kTrivialYes: return "trivial_yes";
    case KernelStatus::kTrivialNo: return "trivial_no";
    case KernelStatus::kReduced: return "reduced";
  }
  return "unknown";
}

std::vector<RichPartition> classify_rich(const Instance& inst, const VertexOrder& order, const BoundSet& bounds) {
  if (!is_regular(inst, order)) throw OrderNotRegular("classify_rich needs a regular order");
  const VertexSet affected = affected_vertices(inst, order);
  std::vector<RichPartition> parts;
  for (const RankInterval& iv : maximal_nonterminal_intervals(inst, order)) {
    const VertexSet members = vertices_in(order, iv);
    RichPartition p;
    p.interval = iv;
    for (int r = iv.first; r <= iv.last; ++r) {
      const Vertex v = order.at(r);
      const int out = inst.tournament.out(v).count_common(members);
      const int in = inst.tournament.in(v).count_common(members);
      if (out <= bounds.d - 1) {
        p.in_rich.push_back(v);
      } else if (in <= bounds.d - 1) {
        p.out_rich.push_back(v);
      } else {
        p.rich.push_back(v);
        if (affected.test(v)) p.affected_rich.push_back(v);
      }
    }
    parts.push_back(std::move(p));
  }
  return parts;
}

bool rule1_trivial_no(const Instance& inst) { return inst.budget <= 0 && has_t_cycle(inst); }

bool rule2_trivial_yes(const Instance& inst) { return inst.budget >= 0 && !has_t_cycle(inst); }

std::optional<Deletion> rule3_delete_bypassed(const Instance& inst) {
  const VertexSet on = vertices_on_t_cycles(inst);
  if (on.count() == inst.size()) return std::nullopt;
  VertexSet doomed(inst.size());
  for (Vertex v = 0; v < inst.size(); ++v)
    if (!on.test(v)) doomed.set(v);
  return delete_vertices(inst, doomed);
}

int forward_max_flow(const Tournament& tour, const VertexOrder& order, Vertex s, Vertex t) {
  const int n = tour.size();
  if (s == t) return INT_MAX;
  std::vector<std::vector<char>> residual(n, std::vector<char>(n, 0));
  for (Vertex u = 0; u < n; ++u)
    tour.out(u).for_each([&](Vertex v) {
      if (order.rank_of(u) < order.rank_of(v)) residual[u][v] = 1;
    });

  int flow = 0;
  std::vector<Vertex> parent(n);
  for (;;) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[s] = s;
    std::deque<Vertex> queue{s};
    while (!queue.empty() && parent[t] == -1) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v = 0; v < n; ++v) {
        if (residual[u][v] > 0 && parent[v] == -1) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (parent[t] == -1) break;
    for (Vertex v = t; v != s; v = parent[v]) {
      --residual[parent[v]][v];
      ++residual[v][parent[v]];
    }
    ++flow;
  }
  return flow;
}

int forward_flow(const Instance& inst, const VertexOrder& order, Arc e, Vertex t) {
  const Tournament& tour = inst.tournament;
  const int n = tour.size();
  if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n || !tour.beats(e.tail, e.head))
    throw NotAnArc("forward_flow: not an arc");
  const int l = order.rank_of(e.head);
  const int r = order.rank_of(e.tail);
  if (l > r) throw NotBackward("forward_flow: arc is forward in the order");
  if (t < 0 || t >= n || !inst.is_terminal(t) || order.rank_of(t) < l || order.rank_of(t) > r)
    throw TerminalNotInSpan("forward_flow: terminal is not under the arc");
  if (t == e.head || t == e.tail) return forward_max_flow(tour, order, e.head, e.tail);
  return std::min(forward_max_flow(tour, order, e.head, t), forward_max_flow(tour, order, t, e.tail));
}

std::optional<ForcedArc> rule4_force_arc(const Instance& inst, const VertexOrder& order) {
  for (const Arc& e : affected_arcs(inst, order)) {
    const int l = order.rank_of(e.head);
    const int r = order.rank_of(e.tail);
    std::vector<Vertex> under;
    for (int p = l; p <= r; ++p)
      if (inst.is_terminal(order.at(p))) under.push_back(order.at(p));
    std::sort(under.begin(), under.end());
    for (Vertex t : under) {
      const int f = forward_flow(inst, order, e, t);
      if (f >= inst.budget + 1) {
        return ForcedArc{Instance(reverse_arc(inst.tournament, e), inst.terminals, inst.budget - 1), e, t, f};
      }
    }
  }
  return std::nullopt;
}

RichReplacementPlan plan_rich_replacement(const Instance& inst, const VertexOrder& order, const BoundSet& bounds,
                                          RankInterval interval) {
  const auto intervals = maximal_nonterminal_intervals(inst, order);
  if (std::find(intervals.begin(), intervals.end(), interval) == intervals.end())
    throw PreconditionViolated("rich replacement: not a maximal non-terminal interval");
  if (interval.length() <= bounds.L_max)
    throw PreconditionViolated("rich replacement: interval length " + std::to_string(interval.length()) +
                               " does not exceed L_max = " + std::to_string(bounds.L_max));

  const auto parts = classify_rich(inst, order, bounds);
  const RichPartition& part =
      *std::find_if(parts.begin(), parts.end(), [&](const RichPartition& p) { return p.interval == interval; });

  RichReplacementPlan plan;
  plan.d = bounds.d;
  plan.ell = bounds.ell_new;
  plan.interval = interval;
  plan.affected_rich = part.affected_rich;
  std::sort(plan.affected_rich.begin(), plan.affected_rich.end());

  VertexSet unaffected_rich(inst.size());
  for (Vertex v : part.rich)
    if (!std::binary_search(plan.affected_rich.begin(), plan.affected_rich.end(), v)) unaffected_rich.set(v);
  plan.deleted = unaffected_rich.members();

  for (int r = 0; r < interval.first; ++r) plan.left.push_back(order.at(r));
  for (int r = interval.last + 1; r < order.size(); ++r) plan.right.push_back(order.at(r));
  std::sort(plan.left.begin(), plan.left.end());
  std::sort(plan.right.begin(), plan.right.end());

  for (Vertex u : part.out_rich) plan.out_rich.emplace_back(u, inst.tournament.in(u).count_common(unaffected_rich));
  for (Vertex w : part.in_rich) plan.in_rich.emplace_back(w, inst.tournament.out(w).count_common(unaffected_rich));
  std::sort(plan.out_rich.begin(), plan.out_rich.end());
  std::sort(plan.in_rich.begin(), plan.in_rich.end());
  return plan;
}

RichReplacement apply_rich_replacement(const Instance& inst, const RichReplacementPlan& plan,
                                       const VertexOrder* order) {
  const int n = inst.size();
  const VertexSet doomed = VertexSet::of(n, plan.deleted);
  Deletion del = delete_vertices(inst, doomed);
  const int m = del.instance.size();
  const int ell = static_cast<int>(plan.ell);
  const int d = static_cast<int>(plan.d);
  const int total = m + ell;
  if (ell < d) throw PreconditionViolated("rich replacement: ell < d");

  // role of each survivor: 0 unset, 1 left, 2 right, 3 out-rich, 4 in-rich, 5 affected rich
  std::vector<int> role(n, 0);
  std::vector<int> count(n, 0);
  auto assign = [&](Vertex v, int r, int c) {
    if (v < 0 || v >= n || doomed.test(v) || role[v] != 0)
      throw PreconditionViolated("rich replacement: inconsistent plan at vertex " + std::to_string(v + 1));
    if (c < 0 || c > ell - d) throw PreconditionViolated("rich replacement: reversal count out of range");
    role[v] = r;
    count[v] = c;
  };
  for (Vertex v : plan.left) assign(v, 1, 0);
  for (Vertex v : plan.right) assign(v, 2, 0);
  for (auto [u, x] : plan.out_rich) assign(u, 3, x);
  for (auto [w, y] : plan.in_rich) assign(w, 4, y);
  for (Vertex v : plan.affected_rich) assign(v, 5, 0);

  Digraph g(total);
  for (Vertex a = 0; a < m; ++a)
    del.instance.tournament.out(a).for_each([&](Vertex b) { g.add_arc(a, b); });
  for (int i = 0; i < ell; ++i)
    for (int j = i + 1; j < ell; ++j) g.add_arc(m + i, m + j);

  for (Vertex s = 0; s < m; ++s) {
    const Vertex old = del.old_of_new[s];
    for (int i = 1; i <= ell; ++i) {
      const Vertex vi = m + i - 1;
      bool survivor_wins = false;
      switch (role[old]) {
        case 1: survivor_wins = true; break;
        case 2: survivor_wins = false; break;
        case 3: survivor_wins = !(i > d && i <= d + count[old]); break;
        case 4: survivor_wins = (i > d && i <= d + count[old]); break;
        case 5: survivor_wins = i > d; break;
        default:
          throw PreconditionViolated("rich replacement: plan does not cover vertex " + std::to_string(old + 1));
      }
      if (survivor_wins) {
        g.add_arc(s, vi);
      } else {
        g.add_arc(vi, s);
      }
    }
  }

  VertexSet terms(total);
  del.instance.terminals.for_each([&](Vertex v) { terms.set(v); });

  RichReplacement out;
  out.instance = Instance(Tournament(std::move(g)), std::move(terms), inst.budget);
  out.plan = plan;
  out.old_of_new = del.old_of_new;
  out.old_of_new.resize(total, -1);

  if (order != nullptr) {
    int insert_rank = plan.interval.first;
    if (!plan.deleted.empty()) {
      insert_rank = n;
      for (Vertex v : plan.deleted) insert_rank = std::min(insert_rank, order->rank_of(v));
    }
    std::vector<Vertex> seq;
    seq.reserve(total);
    for (int r = 0; r <= n; ++r) {
      if (r == insert_rank)
        for (int i = 0; i < ell; ++i) seq.push_back(m + i);
      if (r == n) break;
      const Vertex v = order->at(r);
      if (!doomed.test(v)) seq.push_back(del.new_of_old[v]);
    }
    out.order = VertexOrder(std::move(seq));
  }
  return out;
}

namespace {

void require_reduced_1_to_4(const Instance& inst, const VertexOrder& order, const BoundSet& bounds,
                            const char* who) {
  const std::string prefix = std::string(who) + ": ";
  if (order.size() != inst.size()) throw PreconditionViolated(prefix + "order size mismatch");
  if (bounds.k != inst.budget) throw PreconditionViolated(prefix + "bounds built for a different budget");
  if (rule1_trivial_no(inst) || rule2_trivial_yes(inst)) throw PreconditionViolated(prefix + "Rule 1 or 2 applies");
  if (vertices_on_t_cycles(inst).count() != inst.size()) throw PreconditionViolated(prefix + "Rule 3 applies");
  if (!is_regular(inst, order)) throw OrderNotRegular(prefix + "order is not regular");
  if (cost(inst, order) > bounds.B) throw PreconditionViolated(prefix + "order cost exceeds B");
  if (rule4_force_arc(inst, order)) throw PreconditionViolated(prefix + "Rule 4 applies");
}

}  // namespace

std::optional<RichReplacement> rule5_rich_replace(const Instance& inst, const VertexOrder& order,
                                                  const BoundSet& bounds) {
  require_reduced_1_to_4(inst, order, bounds, "rule 5");
  for (const RankInterval& iv : maximal_nonterminal_intervals(inst, order)) {
    if (iv.length() > bounds.L_max) {
      const auto plan = plan_rich_replacement(inst, order, bounds, iv);
      return apply_rich_replacement(inst, plan, &order);
    }
  }
  return std::nullopt;
}

bool rule6_size_no(const Instance& inst, const VertexOrder& order, const BoundSet& bounds) {
  require_reduced_1_to_4(inst, order, bounds, "rule 6");
  for (const RankInterval& iv : maximal_nonterminal_intervals(inst, order))
    if (iv.length() > bounds.L_max) throw PreconditionViolated("rule 6: Rule 5 applies");
  return inst.size() > bounds.N_max;
}

namespace {

Instance trivial_yes_instance() { return Instance(Tournament::transitive(1), VertexSet(1), 0); }

Instance trivial_no_instance() {
  const std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}};
  const std::vector<Vertex> terms{0};
  return Instance(build_tournament(3, arcs), terms, 0);
}

}  // namespace

Instance output_instance(const KernelResult& r) {
  switch (r.status) {
    case KernelStatus::kTrivialYes: return trivial_yes_instance();
    case KernelStatus::kTrivialNo: return trivial_no_instance();
    case KernelStatus::kReduced: return r.instance;
  }
  return r.instance;
}

OrderProvider make_provider(ProviderKind kind) {
  if (kind == ProviderKind::kExact) return [](const Instance& i) { return exact_provider_order(i).sequence(); };
  return [](const Instance& i) { return heuristic_order(i).sequence(); };
}

KernelResult kernelize(const Instance& inst, ProviderKind kind, const KernelOptions& options) {
  return kernelize(inst, make_provider(kind), options);
}

KernelResult kernelize(const Instance& inst, const OrderProvider& provider, const KernelOptions& options) {
  if (inst.budget < 0) throw BadParameters("kernelize: negative budget");
  KernelResult res;
  Instance cur = inst;
  res.origin.resize(inst.size());
  for (Vertex v = 0; v < inst.size(); ++v) res.origin[v] = v;

  auto record = [&](RuleApplication app, const Instance& after) {
    app.n_after = after.size();
    app.budget_after = after.budget;
    res.trace.push_back(std::move(app));
    if (options.keep_snapshots) res.snapshots.push_back(after);
  };
  auto start = [&](RuleId id) {
    RuleApplication app;
    app.rule = id;
    app.n_before = cur.size();
    app.budget_before = cur.budget;
    return app;
  };
  auto finish = [&](KernelStatus status) {
    res.status = status;
    res.instance = cur;
    return res;
  };

  for (;;) {
    if (rule1_trivial_no(cur)) {
      record(start(RuleId::kTrivialNo), cur);
      return finish(KernelStatus::kTrivialNo);
    }
    if (rule2_trivial_yes(cur)) {
      record(start(RuleId::kTrivialYes), cur);
      return finish(KernelStatus::kTrivialYes);
    }
    if (auto del = rule3_delete_bypassed(cur)) {
      RuleApplication app = start(RuleId::kDeleteBypassed);
      for (Vertex v = 0; v < cur.size(); ++v)
        if (del->new_of_old[v] == -1) app.deleted.push_back(v);
      std::vector<Vertex> origin;
      for (Vertex old : del->old_of_new) origin.push_back(res.origin[old]);
      res.origin = std::move(origin);
      cur = std::move(del->instance);
      record(std::move(app), cur);
      continue;
    }

    std::vector<Vertex> seq = provider(cur);
    if (static_cast<int>(seq.size()) != cur.size()) throw ProviderFailure("provider returned a sequence of wrong length");
    VertexOrder order;
    try {
      order = VertexOrder(std::move(seq));
    } catch (const InvalidOrder& e) {
      throw ProviderFailure(std::string("provider returned a non-permutation: ") + e.what());
    }
    const VertexOrder working = regularize(cur, order).result;
    const BoundSet bounds = BoundSet::from(cost(cur, working), cur.budget);

    if (auto forced = rule4_force_arc(cur, working)) {
      RuleApplication app = start(RuleId::kForceArc);
      app.bounds = bounds;
      app.reversed = forced->reversed;
      app.terminal = forced->terminal;
      app.flow = forced->flow;
      cur = std::move(forced->instance);
      record(std::move(app), cur);
      continue;
    }
    if (auto rep = rule5_rich_replace(cur, working, bounds)) {
      RuleApplication app = start(RuleId::kRichReplace);
      app.bounds = bounds;
      app.replacement = rep->plan;
      std::vector<Vertex> origin;
      for (Vertex old : rep->old_of_new) origin.push_back(old == -1 ? -1 : res.origin[old]);
      res.origin = std::move(origin);
      cur = std::move(rep->instance);
      record(std::move(app), cur);
      continue;
    }
    if (rule6_size_no(cur, working, bounds)) {
      RuleApplication app = start(RuleId::kSizeNo);
      app.bounds = bounds;
      record(std::move(app), cur);
      return finish(KernelStatus::kTrivialNo);
    }
    res.final_order = working;
    res.final_bounds = bounds;
    return finish(KernelStatus::kReduced);
  }
}

Instance replay_trace(const Instance& input, const std::vector<RuleApplication>& trace) {
  Instance cur = input;
  for (const RuleApplication& app : trace) {
    switch (app.rule) {
      case RuleId::kTrivialNo:
      case RuleId::kSizeNo:
        return trivial_no_instance();
      case RuleId::kTrivialYes:
        return trivial_yes_instance();
      case RuleId::kDeleteBypassed:
        cur = delete_vertices(cur, VertexSet::of(cur.size(), app.deleted)).instance;
        break;
      case RuleId::kForceArc:
        if (!app.reversed) throw PreconditionViolated("replay: force_arc record without arc");
        cur = Instance(reverse_arc(cur.tournament, *app.reversed), cur.terminals, cur.budget - 1);
        break;
      case RuleId::kRichReplace:
        if (!app.replacement) throw PreconditionViolated("replay: rich_replace record without plan");
        cur = apply_rich_replacement(cur, *app.replacement).instance;
        break;
    }
    if (cur.size() != app.n_after || cur.budget != app.budget_after)
      throw PreconditionViolated("replay: record " + rule_name(app.rule) + " does not reproduce recorded sizes");
  }
  return cur;
}

std::vector<std::pair<Arc, Vertex>> terminal_location_violations(const Instance& inst, const VertexOrder& order,
                                                                 const BoundSet& bounds) {
  std::vector<std::pair<Arc, Vertex>> bad;
  for (const Arc& e : affected_arcs(inst, order)) {
    const int l = order.rank_of(e.head);
    const int r = order.rank_of(e.tail);
    for (int i = l; i <= r; ++i) {
      const Vertex t = order.at(i);
      if (!inst.is_terminal(t)) continue;
      if (i <= l + bounds.ell_loc || i >= r - bounds.ell_loc) continue;
      bad.emplace_back(e, t);
    }
  }
  return bad;
}

std::vector<Vertex> unaffected_neighbourhood_violations(const Instance& inst, const VertexOrder& order) {
  const VertexSet affected = affected_vertices(inst, order);
  std::vector<Vertex> bad;
  for (const RankInterval& iv : maximal_nonterminal_intervals(inst, order)) {
    for (int p = iv.first; p <= iv.last; ++p) {
      const Vertex v = order.at(p);
      if (affected.test(v)) continue;
      bool ok = true;
      for (int q = 0; q < iv.first && ok; ++q) ok = inst.tournament.beats(order.at(q), v);
      for (int q = iv.last + 1; q < order.size() && ok; ++q) ok = inst.tournament.beats(v, order.at(q));
      if (!ok) bad.push_back(v);
    }
  }
  return bad;
}

}  // namespace sfast
