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

#ifndef SNG_EQUILIBRIA_HPP_
#define SNG_EQUILIBRIA_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sng/model.hpp"
#include "sng/profile_space.hpp"

namespace sng {

// A unilateral deviation: `node` strictly gains by switching to `strategy`.
struct Deviation {
  NodeIndex node;
  Strategy strategy;
  friend bool operator==(const Deviation&, const Deviation&) = default;
};

struct NashCheck {
  bool is_nash = false;
  // Set iff !is_nash: the least deviating node and its canonical best response.
  std::optional<Deviation> deviation;
};

enum class EquilibriumKind { kAny, kTrivial, kNonTrivial, kDetermined };

enum class SolveMethod {
  kBruteForce,
  kDagConstruction,
  kCycleProcedure,
  kSourceFreeFixpoint,
  kTrivialCheck,
};

std::string_view to_string(EquilibriumKind kind);
std::string_view to_string(SolveMethod method);

struct NEReport {
  bool exists = false;
  std::optional<JointStrategy> witness;
  std::optional<NEClassification> classification;
  SolveMethod method = SolveMethod::kBruteForce;
  // For negative trivial checks: a node that would leave the all-null profile.
  std::optional<Deviation> non_best_response_witness;
  // Elementary (node, product) tests performed; used to confirm the linear
  // cost of the cycle procedure.
  std::uint64_t work = 0;
};

struct SelfSustainingSCS {
  ProductIndex product = 0;
  std::vector<NodeIndex> members;  // sorted
  friend bool operator==(const SelfSustainingSCS&, const SelfSustainingSCS&) = default;
};

// argmax of i's payoff over P(i) ∪ {null}, in Strategy order. Never empty.
std::vector<Strategy> best_responses(const SocialNetwork& net, const JointStrategy& s,
                                     NodeIndex i);
// First element of best_responses: the least product among ties, null only
// when no product does as well.
Strategy best_response(const SocialNetwork& net, const JointStrategy& s, NodeIndex i);
// Unchecked: reads only s_i and the strategies of N(i).
bool plays_best_response(const SocialNetwork& net, const JointStrategy& s, NodeIndex i);

NashCheck is_nash(const SocialNetwork& net, const JointStrategy& s);
// Every node whose current strategy is not a best response, in index order.
std::vector<NodeIndex> deviators(const SocialNetwork& net, const JointStrategy& s);

NEClassification classify_ne(const JointStrategy& s);
bool matches(NEClassification c, EquilibriumKind kind);

// All Nash equilibria in lexicographic order. Exhaustive over the profile
// space with early rejection of partial assignments; throws GuardExceeded
// when the space is larger than `guard`.
std::vector<JointStrategy> enumerate_ne(const SocialNetwork& net,
                                        std::uint64_t guard = kDefaultGuard);

// Least equilibrium of the requested kind among enumerate_ne's output.
NEReport solve_brute_force(const SocialNetwork& net, EquilibriumKind kind,
                           std::uint64_t guard = kDefaultGuard);

// Whether the all-null profile is an equilibrium (iff there is no source).
NEReport solve_trivial(const SocialNetwork& net);

// DAG networks: topological greedy best responses. Throws kNotADag.
JointStrategy construct_ne_dag(const SocialNetwork& net);

// Simple cycles: a non-trivial equilibrium exists iff a determined one does
// iff some product t is offered everywhere and every node's predecessor
// weight reaches θ(i,t). Runs in O(|P| * n). Throws kNotASimpleCycle, and
// kInvalidArgument for kinds other than kNonTrivial / kDetermined.
NEReport decide_ne_cycle(const SocialNetwork& net, EquilibriumKind kind);

// Greatest set of t-capable nodes in which every member's in-weight from
// the set reaches θ(i,t), as sorted indices. Computed by pruning from the
// set of all t-capable nodes; the stages variant returns every intermediate
// set, the first being all t-capable nodes and the last the fixed point.
std::vector<NodeIndex> sustainable_set(const SocialNetwork& net, ProductIndex t);
std::vector<std::vector<NodeIndex>> sustainable_set_stages(const SocialNetwork& net, ProductIndex t);

// Source-free networks: plays t on sustainable_set(t) for the first product
// where that set is non-empty. Throws kHasSourceNodes.
NEReport find_nontrivial_ne_sourcefree(const SocialNetwork& net);

// Checks every SelfSustainingSCS invariant directly.
bool is_self_sustaining(const SocialNetwork& net, const SelfSustainingSCS& scs);

// A source component of the subgraph induced on sustainable_set(t) (least member first),
// or nullopt iff no self-sustaining SCS for t exists.
std::optional<SelfSustainingSCS> find_self_sustaining_scs(const SocialNetwork& net,
                                                          ProductIndex t);

// Closes the core under "offers t and in-weight from the set reaches θ";
// returns the profile playing t on the closure and null elsewhere.
// Throws kInvalidCore unless is_self_sustaining(core).
JointStrategy expand_from_core(const SocialNetwork& net, const SelfSustainingSCS& core);

// For a non-trivial equilibrium s of a source-free network: every node
// playing t is reachable from a self-sustaining SCS for t contained in the
// set of t-players. Throws kHasSourceNodes, kTrivialProfile or
// kNotANashEquilibrium when the preconditions fail.
bool verify_sustained_support(const SocialNetwork& net, const JointStrategy& s);

}  // namespace sng

#endif  // SNG_EQUILIBRIA_HPP_
