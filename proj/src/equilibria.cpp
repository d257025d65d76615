// Copyright 2026 The sngames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sng/equilibria.hpp"

#include <algorithm>
#include <functional>

#include "sng/error.hpp"
#include "sng/scc.hpp"

namespace sng {
namespace {

std::vector<Strategy> options_of(const SocialNetwork& net, NodeIndex i) {
  std::vector<Strategy> opts;
  for (ProductIndex t : net.products(i)) opts.push_back(Strategy::product(t));
  opts.push_back(Strategy::null());
  return opts;
}

// Visiting order for the equilibrium search: repeatedly take the node with
// the fewest unplaced in-neighbours (least index on ties), so that nodes
// become checkable as early as possible.
std::vector<NodeIndex> search_order(const SocialNetwork& net) {
  const int n = net.node_count();
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  std::vector<NodeIndex> order;
  for (int step = 0; step < n; ++step) {
    NodeIndex best = -1;
    std::size_t best_missing = 0;
    for (NodeIndex i = 0; i < n; ++i) {
      if (placed[static_cast<std::size_t>(i)]) continue;
      std::size_t missing = 0;
      for (const auto& e : net.in_edges(i)) {
        if (!placed[static_cast<std::size_t>(e.from)]) ++missing;
      }
      if (best < 0 || missing < best_missing) {
        best = i;
        best_missing = missing;
      }
    }
    placed[static_cast<std::size_t>(best)] = true;
    order.push_back(best);
  }
  return order;
}

void require_product(const SocialNetwork& net, ProductIndex t) { net.product_id(t); }

// In-weight of i from members of `in_set` (a node mask).
Rational weight_from(const SocialNetwork& net, NodeIndex i, const std::vector<bool>& in_set) {
  Rational sum;
  for (const auto& e : net.in_edges(i)) {
    if (in_set[static_cast<std::size_t>(e.from)]) sum += e.weight;
  }
  return sum;
}

std::vector<bool> mask_of(int n, const std::vector<NodeIndex>& members) {
  std::vector<bool> mask(static_cast<std::size_t>(n), false);
  for (NodeIndex i : members) mask[static_cast<std::size_t>(i)] = true;
  return mask;
}

// Source components of the subgraph induced by `mask`, each sorted, ordered
// by least member.
std::vector<std::vector<NodeIndex>> source_components(const SocialNetwork& net,
                                                      const std::vector<bool>& mask) {
  const int n = net.node_count();
  std::vector<std::vector<int>> succ(static_cast<std::size_t>(n));
  for (NodeIndex i = 0; i < n; ++i) {
    if (!mask[static_cast<std::size_t>(i)]) continue;
    for (const auto& e : net.out_edges(i)) {
      if (mask[static_cast<std::size_t>(e.to)]) succ[static_cast<std::size_t>(i)].push_back(e.to);
    }
  }
  std::vector<int> component_of(static_cast<std::size_t>(n), -1);
  auto components = strongly_connected_components(succ);
  for (std::size_t c = 0; c < components.size(); ++c) {
    for (int v : components[c]) component_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  }
  std::vector<std::vector<NodeIndex>> sources;
  for (std::size_t c = 0; c < components.size(); ++c) {
    const auto& comp = components[c];
    if (!mask[static_cast<std::size_t>(comp.front())]) continue;
    bool fed = false;
    for (int v : comp) {
      for (const auto& e : net.in_edges(v)) {
        if (mask[static_cast<std::size_t>(e.from)] &&
            component_of[static_cast<std::size_t>(e.from)] != static_cast<int>(c)) {
          fed = true;
        }
      }
    }
    if (!fed) sources.push_back(comp);
  }
  std::sort(sources.begin(), sources.end());
  return sources;
}

}  // namespace

std::string_view to_string(EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kAny: return "any";
    case EquilibriumKind::kTrivial: return "trivial";
    case EquilibriumKind::kNonTrivial: return "nontrivial";
    case EquilibriumKind::kDetermined: return "determined";
  }
  return "unknown";
}

std::string_view to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::kBruteForce: return "brute";
    case SolveMethod::kDagConstruction: return "dag";
    case SolveMethod::kCycleProcedure: return "cycle";
    case SolveMethod::kSourceFreeFixpoint: return "sourcefree";
    case SolveMethod::kTrivialCheck: return "trivial-check";
  }
  return "unknown";
}

std::vector<Strategy> best_responses(const SocialNetwork& net, const JointStrategy& s,
                                     NodeIndex i) {
  net.node_id(i);
  check_profile(net, s);
  std::vector<Strategy> best;
  Rational best_payoff;
  for (Strategy x : options_of(net, i)) {
    Rational p = payoff_if(net, s, i, x);
    if (best.empty() || p > best_payoff) {
      best.assign(1, x);
      best_payoff = p;
    } else if (p == best_payoff) {
      best.push_back(x);
    }
  }
  return best;
}

Strategy best_response(const SocialNetwork& net, const JointStrategy& s, NodeIndex i) {
  return best_responses(net, s, i).front();
}

bool plays_best_response(const SocialNetwork& net, const JointStrategy& s, NodeIndex i) {
  const Rational current = payoff_if(net, s, i, s[i]);
  if (current < 0) return false;
  for (ProductIndex t : net.products(i)) {
    const Strategy x = Strategy::product(t);
    if (x != s[i] && payoff_if(net, s, i, x) > current) return false;
  }
  return true;
}

NashCheck is_nash(const SocialNetwork& net, const JointStrategy& s) {
  check_profile(net, s);
  for (NodeIndex i = 0; i < net.node_count(); ++i) {
    if (!plays_best_response(net, s, i)) {
      return {false, Deviation{i, best_response(net, s, i)}};
    }
  }
  return {true, std::nullopt};
}

std::vector<NodeIndex> deviators(const SocialNetwork& net, const JointStrategy& s) {
  check_profile(net, s);
  std::vector<NodeIndex> result;
  for (NodeIndex i = 0; i < net.node_count(); ++i) {
    if (!plays_best_response(net, s, i)) result.push_back(i);
  }
  return result;
}

NEClassification classify_ne(const JointStrategy& s) {
  const auto nulls = std::count_if(s.begin(), s.end(), [](Strategy x) { return x.is_null(); });
  if (nulls == static_cast<std::ptrdiff_t>(s.size())) return NEClassification::kTrivial;
  if (nulls == 0) return NEClassification::kDetermined;
  return NEClassification::kNonTrivialMixed;
}

bool matches(NEClassification c, EquilibriumKind kind) {
  switch (kind) {
    case EquilibriumKind::kAny: return true;
    case EquilibriumKind::kTrivial: return c == NEClassification::kTrivial;
    case EquilibriumKind::kNonTrivial: return c != NEClassification::kTrivial;
    case EquilibriumKind::kDetermined: return c == NEClassification::kDetermined;
  }
  return false;
}

std::vector<JointStrategy> enumerate_ne(const SocialNetwork& net, std::uint64_t guard) {
  const ProfileSpace space(net);
  space.require_within(guard);

  const int n = net.node_count();
  const std::vector<NodeIndex> order = search_order(net);
  std::vector<int> position(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) position[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;

  // checks[p]: nodes whose strategy and in-neighbourhood are all placed once
  // position p is assigned.
  std::vector<std::vector<NodeIndex>> checks(static_cast<std::size_t>(n));
  for (NodeIndex i = 0; i < n; ++i) {
    int ready = position[static_cast<std::size_t>(i)];
    for (const auto& e : net.in_edges(i)) {
      ready = std::max(ready, position[static_cast<std::size_t>(e.from)]);
    }
    checks[static_cast<std::size_t>(ready)].push_back(i);
  }

  JointStrategy s = JointStrategy::all_null(n);
  std::vector<JointStrategy> found;
  std::function<void(int)> place = [&](int depth) {
    if (depth == n) {
      found.push_back(s);
      return;
    }
    const NodeIndex i = order[static_cast<std::size_t>(depth)];
    for (Strategy x : space.options(i)) {
      s[i] = x;
      bool consistent = true;
      for (NodeIndex k : checks[static_cast<std::size_t>(depth)]) {
        if (!plays_best_response(net, s, k)) {
          consistent = false;
          break;
        }
      }
      if (consistent) place(depth + 1);
    }
  };
  place(0);
  std::sort(found.begin(), found.end());
  return found;
}

NEReport solve_brute_force(const SocialNetwork& net, EquilibriumKind kind, std::uint64_t guard) {
  NEReport report;
  report.method = SolveMethod::kBruteForce;
  for (const JointStrategy& s : enumerate_ne(net, guard)) {
    if (matches(classify_ne(s), kind)) {
      report.exists = true;
      report.witness = s;
      report.classification = classify_ne(s);
      break;
    }
  }
  return report;
}

NEReport solve_trivial(const SocialNetwork& net) {
  NEReport report;
  report.method = SolveMethod::kTrivialCheck;
  const JointStrategy s = JointStrategy::all_null(net.node_count());
  NashCheck check = is_nash(net, s);
  report.work = static_cast<std::uint64_t>(net.node_count());
  if (check.is_nash) {
    report.exists = true;
    report.witness = s;
    report.classification = NEClassification::kTrivial;
  } else {
    report.non_best_response_witness = check.deviation;
  }
  return report;
}

JointStrategy construct_ne_dag(const SocialNetwork& net) {
  const auto order = topological_order(net);
  if (!order) throw Error(ErrorCode::kNotADag, "underlying graph has a cycle");
  JointStrategy s = JointStrategy::all_null(net.node_count());
  // Each node's payoff depends only on its predecessors, which are fixed
  // before it in topological order.
  for (NodeIndex i : *order) s[i] = best_response(net, s, i);
  return s;
}

NEReport decide_ne_cycle(const SocialNetwork& net, EquilibriumKind kind) {
  if (!cycle_order(net)) {
    throw Error(ErrorCode::kNotASimpleCycle, "underlying graph is not a simple cycle");
  }
  if (kind != EquilibriumKind::kNonTrivial && kind != EquilibriumKind::kDetermined) {
    throw Error(ErrorCode::kInvalidArgument,
                "cycle procedure decides nontrivial or determined equilibria only");
  }
  NEReport report;
  report.method = SolveMethod::kCycleProcedure;
  const int n = net.node_count();
  for (ProductIndex t = 0; t < net.product_count(); ++t) {
    bool sustained = true;
    for (NodeIndex i = 0; i < n && sustained; ++i) {
      ++report.work;
      sustained = net.offers(i, t) && net.in_edges(i).front().weight >= net.threshold(i, t);
    }
    if (sustained) {
      report.exists = true;
      report.witness = JointStrategy::uniform(n, t);
      report.classification = NEClassification::kDetermined;
      break;
    }
  }
  return report;
}

std::vector<std::vector<NodeIndex>> sustainable_set_stages(const SocialNetwork& net,
                                                           ProductIndex t) {
  require_product(net, t);
  const int n = net.node_count();
  std::vector<NodeIndex> capable;
  for (NodeIndex i = 0; i < n; ++i) {
    if (net.offers(i, t)) capable.push_back(i);
  }
  std::vector<std::vector<NodeIndex>> stages{capable};
  while (true) {
    const std::vector<bool> current = mask_of(n, stages.back());
    std::vector<NodeIndex> next;
    for (NodeIndex i : capable) {
      if (weight_from(net, i, current) >= net.threshold(i, t)) next.push_back(i);
    }
    if (next == stages.back()) break;
    stages.push_back(std::move(next));
  }
  return stages;
}

std::vector<NodeIndex> sustainable_set(const SocialNetwork& net, ProductIndex t) {
  return sustainable_set_stages(net, t).back();
}

NEReport find_nontrivial_ne_sourcefree(const SocialNetwork& net) {
  if (!classify_graph(net).has_no_source_nodes) {
    throw Error(ErrorCode::kHasSourceNodes, "network has source nodes");
  }
  NEReport report;
  report.method = SolveMethod::kSourceFreeFixpoint;
  for (ProductIndex t = 0; t < net.product_count(); ++t) {
    const std::vector<NodeIndex> members = sustainable_set(net, t);
    report.work += static_cast<std::uint64_t>(net.node_count());
    if (members.empty()) continue;
    JointStrategy s = JointStrategy::all_null(net.node_count());
    for (NodeIndex i : members) s[i] = Strategy::product(t);
    report.exists = true;
    report.classification = classify_ne(s);
    report.witness = std::move(s);
    break;
  }
  return report;
}

bool is_self_sustaining(const SocialNetwork& net, const SelfSustainingSCS& scs) {
  const int n = net.node_count();
  if (scs.members.empty() || scs.product < 0 || scs.product >= net.product_count()) return false;
  std::vector<bool> in_set(static_cast<std::size_t>(n), false);
  for (NodeIndex i : scs.members) {
    if (i < 0 || i >= n || in_set[static_cast<std::size_t>(i)]) return false;
    in_set[static_cast<std::size_t>(i)] = true;
  }
  for (NodeIndex i : scs.members) {
    if (!net.offers(i, scs.product)) return false;
    if (weight_from(net, i, in_set) < net.threshold(i, scs.product)) return false;
  }
  // Strong connectivity: everything reachable from the first member both
  // forwards and backwards inside the set.
  auto reaches_all = [&](bool forward) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<NodeIndex> stack{scs.members.front()};
    seen[static_cast<std::size_t>(scs.members.front())] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      NodeIndex v = stack.back();
      stack.pop_back();
      auto visit = [&](NodeIndex w) {
        if (in_set[static_cast<std::size_t>(w)] && !seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          ++count;
          stack.push_back(w);
        }
      };
      if (forward) {
        for (const auto& e : net.out_edges(v)) visit(e.to);
      } else {
        for (const auto& e : net.in_edges(v)) visit(e.from);
      }
    }
    return count == scs.members.size();
  };
  return reaches_all(true) && reaches_all(false);
}

std::optional<SelfSustainingSCS> find_self_sustaining_scs(const SocialNetwork& net,
                                                          ProductIndex t) {
  const std::vector<NodeIndex> survivors = sustainable_set(net, t);
  if (survivors.empty()) return std::nullopt;
  // A source component receives no weight from the rest of the surviving
  // set, so its members are sustained from inside the component alone.
  auto sources = source_components(net, mask_of(net.node_count(), survivors));
  return SelfSustainingSCS{t, sources.front()};
}

JointStrategy expand_from_core(const SocialNetwork& net, const SelfSustainingSCS& core) {
  if (!is_self_sustaining(net, core)) {
    throw Error(ErrorCode::kInvalidCore, "core is not a self-sustaining SCS");
  }
  const int n = net.node_count();
  const ProductIndex t = core.product;
  std::vector<bool> reached = mask_of(n, core.members);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<bool> previous = reached;
    for (NodeIndex j = 0; j < n; ++j) {
      if (previous[static_cast<std::size_t>(j)] || !net.offers(j, t)) continue;
      if (weight_from(net, j, previous) >= net.threshold(j, t)) {
        reached[static_cast<std::size_t>(j)] = true;
        grew = true;
      }
    }
  }
  JointStrategy s = JointStrategy::all_null(n);
  for (NodeIndex j = 0; j < n; ++j) {
    if (reached[static_cast<std::size_t>(j)]) s[j] = Strategy::product(t);
  }
  return s;
}

bool verify_sustained_support(const SocialNetwork& net, const JointStrategy& s) {
  if (!classify_graph(net).has_no_source_nodes) {
    throw Error(ErrorCode::kHasSourceNodes, "network has source nodes");
  }
  check_profile(net, s);
  if (classify_ne(s) == NEClassification::kTrivial) {
    throw Error(ErrorCode::kTrivialProfile, "profile is all-null");
  }
  if (!is_nash(net, s).is_nash) {
    throw Error(ErrorCode::kNotANashEquilibrium, "profile is not a Nash equilibrium");
  }
  const int n = net.node_count();
  for (ProductIndex t = 0; t < net.product_count(); ++t) {
    std::vector<bool> adopters(static_cast<std::size_t>(n), false);
    bool used = false;
    for (NodeIndex i = 0; i < n; ++i) {
      if (s[i] == Strategy::product(t)) adopters[static_cast<std::size_t>(i)] = used = true;
    }
    if (!used) continue;

    // Any self-sustaining SCS inside the adopters lies within the greatest
    // sustained subset of them, whose source components are themselves
    // self-sustaining. So it suffices to search from those components.
    std::vector<bool> alive = adopters;
    bool shrank = true;
    while (shrank) {
      shrank = false;
      const std::vector<bool> previous = alive;
      for (NodeIndex i = 0; i < n; ++i) {
        if (previous[static_cast<std::size_t>(i)] &&
            weight_from(net, i, previous) < net.threshold(i, t)) {
          alive[static_cast<std::size_t>(i)] = false;
          shrank = true;
        }
      }
    }
    std::vector<bool> reached(static_cast<std::size_t>(n), false);
    std::vector<NodeIndex> stack;
    for (const auto& comp : source_components(net, alive)) {
      for (NodeIndex j : comp) {
        reached[static_cast<std::size_t>(j)] = true;
        stack.push_back(j);
      }
    }
    while (!stack.empty()) {
      NodeIndex v = stack.back();
      stack.pop_back();
      for (const auto& e : net.out_edges(v)) {
        if (!reached[static_cast<std::size_t>(e.to)]) {
          reached[static_cast<std::size_t>(e.to)] = true;
          stack.push_back(e.to);
        }
      }
    }
    for (NodeIndex i = 0; i < n; ++i) {
      if (adopters[static_cast<std::size_t>(i)] && !reached[static_cast<std::size_t>(i)]) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace sng
