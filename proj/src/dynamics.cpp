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

#include "sng/dynamics.hpp"

#include <algorithm>
#include <sstream>

#include "sng/equilibria.hpp"
#include "sng/error.hpp"
#include "sng/random.hpp"

namespace sng {
namespace {

void require_permutation(const SocialNetwork& net, const std::vector<NodeIndex>& order) {
  const int n = net.node_count();
  std::vector<NodeIndex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  bool ok = static_cast<int>(sorted.size()) == n;
  for (int k = 0; ok && k < n; ++k) ok = sorted[static_cast<std::size_t>(k)] == k;
  if (!ok) {
    throw Error(ErrorCode::kInvalidScheduler, "scheduler order is not a permutation of the nodes");
  }
}

std::string dot_quote(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<Strategy> better_responses(const SocialNetwork& net, const JointStrategy& s,
                                       NodeIndex i) {
  net.node_id(i);
  check_profile(net, s);
  const Rational current = payoff_if(net, s, i, s[i]);
  std::vector<Strategy> result;
  for (ProductIndex t : net.products(i)) {
    if (payoff_if(net, s, i, Strategy::product(t)) > current) {
      result.push_back(Strategy::product(t));
    }
  }
  if (current < 0) result.push_back(Strategy::null());
  return result;
}

ImprovementGraph::ImprovementGraph(ProfileSpace space, std::vector<std::uint64_t> offsets,
                                   std::vector<Transition> transitions)
    : space_(std::move(space)), offsets_(std::move(offsets)), transitions_(std::move(transitions)) {}

std::span<const ImprovementGraph::Transition> ImprovementGraph::transitions(
    std::uint64_t state) const {
  return std::span<const Transition>(transitions_).subspan(
      offsets_[state], offsets_[state + 1] - offsets_[state]);
}

bool ImprovementGraph::has_transition(std::uint64_t from, NodeIndex mover,
                                      std::uint64_t to) const {
  if (from >= state_count()) return false;
  for (const Transition& t : transitions(from)) {
    if (t.to == to && t.mover == mover) return true;
  }
  return false;
}

std::vector<std::uint64_t> ImprovementGraph::sinks() const {
  std::vector<std::uint64_t> result;
  for (std::uint64_t v = 0; v < state_count(); ++v) {
    if (offsets_[v] == offsets_[v + 1]) result.push_back(v);
  }
  return result;
}

std::optional<std::vector<std::uint64_t>> ImprovementGraph::find_cycle() const {
  enum : unsigned char { kWhite, kGrey, kBlack };
  const std::uint64_t n = state_count();
  std::vector<unsigned char> colour(n, kWhite);
  struct Frame {
    std::uint64_t state;
    std::uint64_t next;
  };
  std::vector<Frame> stack;
  for (std::uint64_t root = 0; root < n; ++root) {
    if (colour[root] != kWhite) continue;
    stack.push_back({root, offsets_[root]});
    colour[root] = kGrey;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next == offsets_[top.state + 1]) {
        colour[top.state] = kBlack;
        stack.pop_back();
        continue;
      }
      const std::uint64_t w = transitions_[top.next++].to;
      if (colour[w] == kGrey) {
        std::vector<std::uint64_t> cycle;
        auto it = std::find_if(stack.begin(), stack.end(),
                               [w](const Frame& f) { return f.state == w; });
        for (; it != stack.end(); ++it) cycle.push_back(it->state);
        return cycle;
      }
      if (colour[w] == kWhite) {
        colour[w] = kGrey;
        stack.push_back({w, offsets_[w]});
      }
    }
  }
  return std::nullopt;
}

bool ImprovementGraph::all_states_reach_sink() const {
  const std::uint64_t n = state_count();
  std::vector<std::uint64_t> reverse_offsets(n + 1, 0);
  for (const Transition& t : transitions_) ++reverse_offsets[t.to + 1];
  for (std::uint64_t v = 0; v < n; ++v) reverse_offsets[v + 1] += reverse_offsets[v];
  std::vector<std::uint64_t> predecessors(transitions_.size());
  std::vector<std::uint64_t> fill(reverse_offsets.begin(), reverse_offsets.end() - 1);
  for (std::uint64_t v = 0; v < n; ++v) {
    for (const Transition& t : transitions(v)) predecessors[fill[t.to]++] = v;
  }
  std::vector<bool> reaches(n, false);
  std::vector<std::uint64_t> frontier = sinks();
  for (std::uint64_t v : frontier) reaches[v] = true;
  std::uint64_t count = frontier.size();
  while (!frontier.empty()) {
    const std::uint64_t v = frontier.back();
    frontier.pop_back();
    for (std::uint64_t k = reverse_offsets[v]; k < reverse_offsets[v + 1]; ++k) {
      const std::uint64_t u = predecessors[k];
      if (!reaches[u]) {
        reaches[u] = true;
        ++count;
        frontier.push_back(u);
      }
    }
  }
  return count == n;
}

ImprovementGraph build_improvement_graph(const SocialNetwork& net, std::uint64_t guard) {
  ProfileSpace space(net);
  space.require_within(guard);
  const std::uint64_t states = space.size();
  std::vector<std::uint64_t> offsets;
  offsets.reserve(states + 1);
  offsets.push_back(0);
  std::vector<ImprovementGraph::Transition> transitions;
  for (std::uint64_t code = 0; code < states; ++code) {
    const JointStrategy s = space.decode(code);
    for (NodeIndex i = 0; i < net.node_count(); ++i) {
      const Rational current = payoff_if(net, s, i, s[i]);
      const std::uint64_t base = code - space.digit(i, s[i]) * space.stride(i);
      const auto opts = space.options(i);
      for (std::uint64_t d = 0; d < opts.size(); ++d) {
        if (opts[d] != s[i] && payoff_if(net, s, i, opts[d]) > current) {
          transitions.push_back({base + d * space.stride(i), i});
        }
      }
    }
    offsets.push_back(transitions.size());
  }
  return ImprovementGraph(std::move(space), std::move(offsets), std::move(transitions));
}

bool has_fip(const SocialNetwork& net, std::uint64_t guard) {
  return build_improvement_graph(net, guard).is_acyclic();
}

bool is_weakly_acyclic(const SocialNetwork& net, std::uint64_t guard) {
  return build_improvement_graph(net, guard).all_states_reach_sink();
}

std::string to_dot(const SocialNetwork& net, const ImprovementGraph& graph) {
  std::ostringstream out;
  out << "digraph improvement {\n";
  for (std::uint64_t v = 0; v < graph.state_count(); ++v) {
    out << "  s" << v << " [label=" << dot_quote(format_profile(net, graph.space().decode(v)));
    if (graph.transitions(v).empty()) out << ", shape=doublecircle";
    out << "];\n";
  }
  for (std::uint64_t v = 0; v < graph.state_count(); ++v) {
    for (const auto& t : graph.transitions(v)) {
      out << "  s" << v << " -> s" << t.to << " [label=" << dot_quote(net.node_id(t.mover))
          << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

DynamicsTrace run_scheduler(const SocialNetwork& net, const JointStrategy& start,
                            const SchedulerSpec& scheduler, std::uint64_t max_steps) {
  check_profile(net, start);
  if (max_steps == 0) throw Error(ErrorCode::kInvalidArgument, "max_steps must be at least 1");
  const int n = net.node_count();

  std::vector<NodeIndex> order(static_cast<std::size_t>(n));
  for (NodeIndex i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::optional<SplitMix64> rng;
  bool round_robin = false;
  if (const auto* smallest = std::get_if<SmallestIndexBestResponse>(&scheduler)) {
    if (!smallest->order.empty()) {
      require_permutation(net, smallest->order);
      order = smallest->order;
    }
  } else if (const auto* random = std::get_if<RandomBetterResponse>(&scheduler)) {
    rng.emplace(random->seed);
  } else {
    const auto& fixed = std::get<FixedOrderBestResponse>(scheduler);
    require_permutation(net, fixed.permutation);
    order = fixed.permutation;
    round_robin = true;
  }

  DynamicsTrace trace;
  JointStrategy s = start;
  std::size_t cursor = 0;
  while (true) {
    std::optional<NodeIndex> mover;
    Strategy next;
    if (rng) {
      std::vector<NodeIndex> candidates;
      for (NodeIndex i = 0; i < n; ++i) {
        if (!plays_best_response(net, s, i)) candidates.push_back(i);
      }
      if (!candidates.empty() && trace.steps.size() < max_steps) {
        mover = candidates[rng->below(candidates.size())];
        const auto options = better_responses(net, s, *mover);
        next = options[rng->below(options.size())];
      } else if (!candidates.empty()) {
        mover = candidates.front();
      }
    } else {
      for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t p = round_robin ? (cursor + k) % order.size() : k;
        const NodeIndex i = order[p];
        if (!plays_best_response(net, s, i)) {
          mover = i;
          if (round_robin) cursor = p + 1;
          break;
        }
      }
      if (mover) next = best_response(net, s, *mover);
    }

    if (!mover) {
      trace.outcome = DynamicsOutcome::kReachedNE;
      break;
    }
    if (trace.steps.size() >= max_steps) {
      trace.outcome = DynamicsOutcome::kStepBudgetExhausted;
      break;
    }
    const Rational before = payoff_if(net, s, *mover, s[*mover]);
    const Rational after = payoff_if(net, s, *mover, next);
    trace.steps.push_back({s, *mover, s[*mover], next, after - before});
    s[*mover] = next;
  }
  trace.final_state = std::move(s);
  return trace;
}

std::string format_trace_line(const SocialNetwork& net, std::size_t k, const TraceStep& step) {
  return "step " + std::to_string(k) + ": node=" + net.node_id(step.mover) + " " +
         strategy_name(net, step.old_strategy) + " -> " + strategy_name(net, step.new_strategy) +
         " delta=" + step.payoff_delta.str();
}

UniformFipReport uniform_fip_cycle_check(const SocialNetwork& net, std::uint64_t trials,
                                         std::uint64_t seed) {
  const auto order = cycle_order(net);
  if (!order) throw Error(ErrorCode::kNotASimpleCycle, "underlying graph is not a simple cycle");
  const int n = net.node_count();
  const ProfileSpace space(net);
  std::uint64_t widest = 0;
  for (NodeIndex i = 0; i < n; ++i) widest = std::max<std::uint64_t>(widest, space.options(i).size());

  UniformFipReport report;
  report.step_bound = 3 * static_cast<std::uint64_t>(n) * widest;

  std::vector<JointStrategy> starts{JointStrategy::all_null(n)};
  for (ProductIndex t = 0; t < net.product_count(); ++t) {
    bool legal = true;
    for (NodeIndex i = 0; i < n; ++i) legal = legal && net.offers(i, t);
    if (legal) starts.push_back(JointStrategy::uniform(n, t));
  }
  SplitMix64 rng(seed);
  for (std::uint64_t k = 0; k < trials; ++k) {
    JointStrategy s = JointStrategy::all_null(n);
    for (NodeIndex i = 0; i < n; ++i) {
      const auto opts = space.options(i);
      s[i] = opts[rng.below(opts.size())];
    }
    starts.push_back(std::move(s));
  }

  const SchedulerSpec scheduler = SmallestIndexBestResponse{*order};
  for (const JointStrategy& start : starts) {
    const DynamicsTrace trace = run_scheduler(net, start, scheduler, report.step_bound);
    ++report.runs;
    report.longest_run = std::max<std::uint64_t>(report.longest_run, trace.steps.size());
    if (trace.outcome != DynamicsOutcome::kReachedNE) {
      report.holds = false;
      report.failing_start = start;
      break;
    }
  }
  return report;
}

}  // namespace sng
