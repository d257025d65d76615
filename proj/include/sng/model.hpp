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

#ifndef SNG_MODEL_HPP_
#define SNG_MODEL_HPP_

#include <climits>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sng/rational.hpp"

namespace sng {

// Nodes and products are identified externally by opaque strings. Inside a
// SocialNetwork they are interned to dense indices given by the
// lexicographic order of the ids, so index order is the canonical order.
using NodeIndex = int;
using ProductIndex = int;

// A player's choice: a product, or the opt-out strategy (null). Ordering
// puts products in canonical order and null after every product; this is
// the tie-break order used by every solver.
class Strategy {
 public:
  constexpr Strategy() = default;
  static constexpr Strategy null() { return Strategy(); }
  static constexpr Strategy product(ProductIndex t) { return Strategy(t); }

  constexpr bool is_null() const { return value_ == kNull; }
  constexpr ProductIndex product() const { return value_; }

  friend constexpr auto operator<=>(Strategy, Strategy) = default;

 private:
  static constexpr int kNull = INT_MAX;
  constexpr explicit Strategy(int value) : value_(value) {}
  int value_ = kNull;
};

// One strategy per node, indexed by NodeIndex. Ordered lexicographically in
// canonical node order.
class JointStrategy {
 public:
  JointStrategy() = default;
  explicit JointStrategy(std::vector<Strategy> choices) : choices_(std::move(choices)) {}

  static JointStrategy all_null(int node_count) {
    return JointStrategy(std::vector<Strategy>(static_cast<std::size_t>(node_count)));
  }
  static JointStrategy uniform(int node_count, ProductIndex t) {
    return JointStrategy(
        std::vector<Strategy>(static_cast<std::size_t>(node_count), Strategy::product(t)));
  }

  std::size_t size() const { return choices_.size(); }
  Strategy operator[](NodeIndex i) const { return choices_[static_cast<std::size_t>(i)]; }
  Strategy& operator[](NodeIndex i) { return choices_[static_cast<std::size_t>(i)]; }
  auto begin() const { return choices_.begin(); }
  auto end() const { return choices_.end(); }
  const std::vector<Strategy>& choices() const { return choices_; }

  friend auto operator<=>(const JointStrategy&, const JointStrategy&) = default;
  friend bool operator==(const JointStrategy&, const JointStrategy&) = default;

 private:
  std::vector<Strategy> choices_;
};

// Raw, string-keyed description of a network as it appears in files and in
// generator output. SocialNetwork::build turns it into the indexed form.
struct NodeSpec {
  std::string id;
  std::vector<std::string> products;
  std::map<std::string, Rational> thresholds;
  friend bool operator==(const NodeSpec&, const NodeSpec&) = default;
};

struct EdgeSpec {
  std::string from;
  std::string to;
  Rational weight;
  friend bool operator==(const EdgeSpec&, const EdgeSpec&) = default;
};

struct NetworkDescription {
  Rational c0 = 1;
  std::vector<std::string> products;
  std::vector<NodeSpec> nodes;
  std::vector<EdgeSpec> edges;
  friend bool operator==(const NetworkDescription&, const NetworkDescription&) = default;
};

// Throws Error with a validation code on the first violated constraint:
// weights in [0,1], at most one edge per ordered pair, no self-loops, no
// dangling endpoints, incoming weight sum <= 1, thresholds in (0,1] and
// defined exactly on the node's product set, non-empty product sets drawn
// from the product universe, c0 > 0, and at least one node.
void validate_network(const NetworkDescription& desc);

// Validated, immutable, index-based network.
class SocialNetwork {
 public:
  struct InEdge {
    NodeIndex from;
    Rational weight;
    friend bool operator==(const InEdge&, const InEdge&) = default;
  };
  struct OutEdge {
    NodeIndex to;
    Rational weight;
    friend bool operator==(const OutEdge&, const OutEdge&) = default;
  };

  // Validates (see validate_network) and interns ids.
  static SocialNetwork build(const NetworkDescription& desc);

  // Canonical description: products, nodes, node product lists and edges
  // all sorted. build(describe()) == *this.
  NetworkDescription describe() const;

  int node_count() const { return static_cast<int>(node_ids_.size()); }
  int product_count() const { return static_cast<int>(product_ids_.size()); }
  const std::string& node_id(NodeIndex i) const;
  const std::string& product_id(ProductIndex t) const;
  const std::vector<std::string>& node_ids() const { return node_ids_; }
  const std::vector<std::string>& product_ids() const { return product_ids_; }

  std::optional<NodeIndex> find_node(std::string_view id) const;
  std::optional<ProductIndex> find_product(std::string_view id) const;
  // Throwing lookups (kUnknownNode / kUnknownProduct).
  NodeIndex node_index(std::string_view id) const;
  ProductIndex product_index(std::string_view id) const;

  std::span<const InEdge> in_edges(NodeIndex i) const { return in_edges_[check(i)]; }
  std::span<const OutEdge> out_edges(NodeIndex i) const { return out_edges_[check(i)]; }
  // P(i), sorted.
  std::span<const ProductIndex> products(NodeIndex i) const { return products_[check(i)]; }
  bool offers(NodeIndex i, ProductIndex t) const;
  // θ(i, t); throws kUnknownProduct when t is not in P(i).
  const Rational& threshold(NodeIndex i, ProductIndex t) const;
  bool is_source(NodeIndex i) const { return in_edges_[check(i)].empty(); }
  const Rational& c0() const { return c0_; }
  std::optional<Rational> weight(NodeIndex from, NodeIndex to) const;
  std::size_t edge_count() const;

  friend bool operator==(const SocialNetwork&, const SocialNetwork&) = default;

 private:
  std::size_t check(NodeIndex i) const;

  Rational c0_ = 1;
  std::vector<std::string> node_ids_;
  std::vector<std::string> product_ids_;
  std::vector<std::vector<ProductIndex>> products_;
  // thresholds_[i][t] is meaningful only when offers(i, t).
  std::vector<std::vector<std::optional<Rational>>> thresholds_;
  std::vector<std::vector<InEdge>> in_edges_;
  std::vector<std::vector<OutEdge>> out_edges_;
};

struct GraphClass {
  bool is_dag = false;
  bool is_simple_cycle = false;
  bool has_no_source_nodes = false;
  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

enum class NEClassification { kTrivial, kNonTrivialMixed, kDetermined };

std::string_view to_string(NEClassification c);

// Throws kInvalidProfile unless s has one entry per node and every entry is
// null or a member of that node's product set.
void check_profile(const SocialNetwork& net, const JointStrategy& s);

// N(i): nodes with an edge into i, in canonical order.
std::vector<NodeIndex> neighbors(const SocialNetwork& net, NodeIndex i);

// Neighbours of i that play t in s.
std::vector<NodeIndex> supporters(const SocialNetwork& net, const JointStrategy& s,
                                  NodeIndex i, ProductIndex t);

// p_i(s). Validates s.
Rational payoff(const SocialNetwork& net, const JointStrategy& s, NodeIndex i);

// Payoff i would receive by playing x while everybody else keeps s. Does not
// validate s; x must be null or a member of P(i). Used in solver inner loops.
Rational payoff_if(const SocialNetwork& net, const JointStrategy& s, NodeIndex i,
                   Strategy x);

Rational social_welfare(const SocialNetwork& net, const JointStrategy& s);

GraphClass classify_graph(const SocialNetwork& net);

// Kahn order with the least available index first, or nullopt on a cycle.
std::optional<std::vector<NodeIndex>> topological_order(const SocialNetwork& net);

// For a simple cycle, the nodes along the edge direction starting from
// node 0; nullopt otherwise.
std::optional<std::vector<NodeIndex>> cycle_order(const SocialNetwork& net);

// Human-readable forms: "_" stands for the null strategy.
std::string strategy_name(const SocialNetwork& net, Strategy x);
std::string format_profile(const SocialNetwork& net, const JointStrategy& s);

}  // namespace sng

#endif  // SNG_MODEL_HPP_
