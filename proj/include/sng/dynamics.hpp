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

#ifndef SNG_DYNAMICS_HPP_
#define SNG_DYNAMICS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sng/model.hpp"
#include "sng/profile_space.hpp"

namespace sng {

// Strategies that strictly improve i's payoff against s, in Strategy order.
std::vector<Strategy> better_responses(const SocialNetwork& net, const JointStrategy& s,
                                       NodeIndex i);

// Every joint strategy of a network (as ProfileSpace codes) with an edge for
// each strictly improving unilateral deviation. Stored in CSR form.
class ImprovementGraph {
 public:
  struct Transition {
    std::uint64_t to;
    NodeIndex mover;
  };

  ImprovementGraph(ProfileSpace space, std::vector<std::uint64_t> offsets,
                   std::vector<Transition> transitions);

  const ProfileSpace& space() const { return space_; }
  std::uint64_t state_count() const { return space_.size(); }
  std::size_t transition_count() const { return transitions_.size(); }
  std::span<const Transition> transitions(std::uint64_t state) const;
  bool has_transition(std::uint64_t from, NodeIndex mover, std::uint64_t to) const;

  // States without outgoing transitions, ascending.
  std::vector<std::uint64_t> sinks() const;
  // A cycle as a list of states (first state not repeated), if any.
  std::optional<std::vector<std::uint64_t>> find_cycle() const;
  bool is_acyclic() const { return !find_cycle().has_value(); }
  // True iff some sink is reachable from every state.
  bool all_states_reach_sink() const;

 private:
  ProfileSpace space_;
  std::vector<std::uint64_t> offsets_;
  std::vector<Transition> transitions_;
};

ImprovementGraph build_improvement_graph(const SocialNetwork& net,
                                         std::uint64_t guard = kDefaultGuard);

bool has_fip(const SocialNetwork& net, std::uint64_t guard = kDefaultGuard);
bool is_weakly_acyclic(const SocialNetwork& net, std::uint64_t guard = kDefaultGuard);

// DOT rendering: states labelled "n1=t1,n2=_", edges labelled with the mover.
std::string to_dot(const SocialNetwork& net, const ImprovementGraph& graph);

// Schedulers pick a node that is not playing a best response and the
// strategy it moves to.

// The least node (in `order`, or index order when empty) not playing a best
// response switches to its canonical best response.
struct SmallestIndexBestResponse {
  std::vector<NodeIndex> order;
};

// A uniformly random non-best-responding node switches to a uniformly
// random better response. The stream is seeded once per run.
struct RandomBetterResponse {
  std::uint64_t seed = 0;
};

// Round robin over `permutation`: starting just after the previous mover,
// the first node not playing a best response switches to its canonical best
// response.
struct FixedOrderBestResponse {
  std::vector<NodeIndex> permutation;
};

using SchedulerSpec =
    std::variant<SmallestIndexBestResponse, RandomBetterResponse, FixedOrderBestResponse>;

struct TraceStep {
  JointStrategy state;  // before the move
  NodeIndex mover;
  Strategy old_strategy;
  Strategy new_strategy;
  Rational payoff_delta;
};

enum class DynamicsOutcome { kReachedNE, kStepBudgetExhausted };

struct DynamicsTrace {
  std::vector<TraceStep> steps;
  DynamicsOutcome outcome = DynamicsOutcome::kStepBudgetExhausted;
  JointStrategy final_state;
};

// Throws kInvalidProfile for a bad start, kInvalidScheduler for an order
// that is not a permutation of the nodes, kInvalidArgument when
// max_steps == 0.
DynamicsTrace run_scheduler(const SocialNetwork& net, const JointStrategy& start,
                            const SchedulerSpec& scheduler, std::uint64_t max_steps);

// "step k: node=<id> <old> -> <new> delta=<p/q>", k counted from 1.
std::string format_trace_line(const SocialNetwork& net, std::size_t k, const TraceStep& step);

struct UniformFipReport {
  bool holds = true;
  std::uint64_t runs = 0;
  std::uint64_t step_bound = 0;
  std::uint64_t longest_run = 0;
  std::optional<JointStrategy> failing_start;
};

// Simple cycles only (kNotASimpleCycle otherwise). Runs the smallest-index
// best-response scheduler, with nodes indexed along the cycle from node 0,
// from `trials` random starts plus all-null and every legal uniform product
// start. Holds iff every run reaches an equilibrium within
// 3 * n * max_i |S_i| steps.
UniformFipReport uniform_fip_cycle_check(const SocialNetwork& net, std::uint64_t trials,
                                         std::uint64_t seed);

}  // namespace sng

#endif  // SNG_DYNAMICS_HPP_
