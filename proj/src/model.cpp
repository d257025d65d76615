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

#include "sng/model.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <utility>

#include "sng/error.hpp"

namespace sng {
namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

}  // namespace

void validate_network(const NetworkDescription& desc) {
  if (desc.nodes.empty()) throw Error(ErrorCode::kEmptyNetwork, "network has no nodes");
  if (desc.c0 <= 0) {
    throw Error(ErrorCode::kNonpositiveC0, "c0 must be positive, got " + desc.c0.str());
  }

  const std::set<std::string> universe(desc.products.begin(), desc.products.end());
  std::set<std::string> node_ids;
  for (const NodeSpec& node : desc.nodes) {
    if (!node_ids.insert(node.id).second) {
      throw Error(ErrorCode::kDuplicateNode, "node '" + node.id + "' listed twice");
    }
    if (node.products.empty()) {
      throw Error(ErrorCode::kEmptyProductSet, "node '" + node.id + "' has no products");
    }
    const std::set<std::string> offered(node.products.begin(), node.products.end());
    for (const std::string& t : offered) {
      if (!universe.contains(t)) {
        throw Error(ErrorCode::kUnknownProduct,
                    "node '" + node.id + "' offers product '" + t + "' outside the universe");
      }
      if (!node.thresholds.contains(t)) {
        throw Error(ErrorCode::kThresholdProductMismatch,
                    "node '" + node.id + "' has no threshold for '" + t + "'");
      }
    }
    for (const auto& [t, theta] : node.thresholds) {
      if (!offered.contains(t)) {
        throw Error(ErrorCode::kThresholdProductMismatch,
                    "node '" + node.id + "' has a threshold for '" + t +
                        "' which is not in its product set");
      }
      if (theta <= 0 || theta > 1) {
        throw Error(ErrorCode::kThresholdOutOfRange,
                    "threshold of '" + node.id + "' for '" + t + "' is " + theta.str() +
                        ", outside (0,1]");
      }
    }
  }

  std::set<std::pair<std::string, std::string>> seen;
  std::map<std::string, Rational> incoming;
  for (const EdgeSpec& e : desc.edges) {
    if (!node_ids.contains(e.from) || !node_ids.contains(e.to)) {
      throw Error(ErrorCode::kDanglingEdgeEndpoint,
                  "edge " + e.from + "->" + e.to + " references an unknown node");
    }
    if (e.from == e.to) throw Error(ErrorCode::kSelfLoop, "self-loop on '" + e.from + "'");
    if (!seen.emplace(e.from, e.to).second) {
      throw Error(ErrorCode::kDuplicateEdge, "edge " + e.from + "->" + e.to + " listed twice");
    }
    if (e.weight < 0 || e.weight > 1) {
      throw Error(ErrorCode::kWeightOutOfRange,
                  "edge " + e.from + "->" + e.to + " has weight " + e.weight.str());
    }
    incoming[e.to] += e.weight;
  }
  for (const auto& [id, sum] : incoming) {
    if (sum > 1) {
      throw Error(ErrorCode::kWeightSumExceeded,
                  "incoming weights of '" + id + "' sum to " + sum.str());
    }
  }
}

SocialNetwork SocialNetwork::build(const NetworkDescription& desc) {
  validate_network(desc);

  SocialNetwork net;
  net.c0_ = desc.c0;
  net.product_ids_ = sorted_unique(desc.products);
  std::vector<std::string> ids;
  for (const NodeSpec& node : desc.nodes) ids.push_back(node.id);
  net.node_ids_ = sorted_unique(std::move(ids));

  const std::size_t n = net.node_ids_.size();
  net.products_.resize(n);
  net.thresholds_.assign(n, std::vector<std::optional<Rational>>(net.product_ids_.size()));
  net.in_edges_.resize(n);
  net.out_edges_.resize(n);

  for (const NodeSpec& node : desc.nodes) {
    const auto i = static_cast<std::size_t>(net.node_index(node.id));
    for (const std::string& t : sorted_unique(node.products)) {
      ProductIndex p = net.product_index(t);
      net.products_[i].push_back(p);
      net.thresholds_[i][static_cast<std::size_t>(p)] = node.thresholds.at(t);
    }
  }
  for (const EdgeSpec& e : desc.edges) {
    NodeIndex from = net.node_index(e.from);
    NodeIndex to = net.node_index(e.to);
    net.in_edges_[static_cast<std::size_t>(to)].push_back({from, e.weight});
    net.out_edges_[static_cast<std::size_t>(from)].push_back({to, e.weight});
  }
  for (auto& list : net.in_edges_) {
    std::sort(list.begin(), list.end(),
              [](const InEdge& a, const InEdge& b) { return a.from < b.from; });
  }
  for (auto& list : net.out_edges_) {
    std::sort(list.begin(), list.end(),
              [](const OutEdge& a, const OutEdge& b) { return a.to < b.to; });
  }
  return net;
}

NetworkDescription SocialNetwork::describe() const {
  NetworkDescription desc;
  desc.c0 = c0_;
  desc.products = product_ids_;
  for (NodeIndex i = 0; i < node_count(); ++i) {
    NodeSpec node;
    node.id = node_ids_[static_cast<std::size_t>(i)];
    for (ProductIndex t : products(i)) {
      node.products.push_back(product_id(t));
      node.thresholds.emplace(product_id(t), threshold(i, t));
    }
    desc.nodes.push_back(std::move(node));
  }
  for (NodeIndex i = 0; i < node_count(); ++i) {
    for (const OutEdge& e : out_edges(i)) {
      desc.edges.push_back({node_id(i), node_id(e.to), e.weight});
    }
  }
  return desc;
}

std::size_t SocialNetwork::check(NodeIndex i) const {
  if (i < 0 || i >= node_count()) {
    throw Error(ErrorCode::kUnknownNode, "node index " + std::to_string(i) + " out of range");
  }
  return static_cast<std::size_t>(i);
}

const std::string& SocialNetwork::node_id(NodeIndex i) const { return node_ids_[check(i)]; }

const std::string& SocialNetwork::product_id(ProductIndex t) const {
  if (t < 0 || t >= product_count()) {
    throw Error(ErrorCode::kUnknownProduct,
                "product index " + std::to_string(t) + " out of range");
  }
  return product_ids_[static_cast<std::size_t>(t)];
}

std::optional<NodeIndex> SocialNetwork::find_node(std::string_view id) const {
  auto it = std::lower_bound(node_ids_.begin(), node_ids_.end(), id);
  if (it == node_ids_.end() || *it != id) return std::nullopt;
  return static_cast<NodeIndex>(it - node_ids_.begin());
}

std::optional<ProductIndex> SocialNetwork::find_product(std::string_view id) const {
  auto it = std::lower_bound(product_ids_.begin(), product_ids_.end(), id);
  if (it == product_ids_.end() || *it != id) return std::nullopt;
  return static_cast<ProductIndex>(it - product_ids_.begin());
}

NodeIndex SocialNetwork::node_index(std::string_view id) const {
  if (auto i = find_node(id)) return *i;
  throw Error(ErrorCode::kUnknownNode, "unknown node '" + std::string(id) + "'");
}

ProductIndex SocialNetwork::product_index(std::string_view id) const {
  if (auto t = find_product(id)) return *t;
  throw Error(ErrorCode::kUnknownProduct, "unknown product '" + std::string(id) + "'");
}

bool SocialNetwork::offers(NodeIndex i, ProductIndex t) const {
  if (t < 0 || t >= product_count()) return false;
  return thresholds_[check(i)][static_cast<std::size_t>(t)].has_value();
}

const Rational& SocialNetwork::threshold(NodeIndex i, ProductIndex t) const {
  if (!offers(i, t)) {
    throw Error(ErrorCode::kUnknownProduct, "product index " + std::to_string(t) +
                                                " is not offered to node " + node_id(i));
  }
  return *thresholds_[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
}

std::optional<Rational> SocialNetwork::weight(NodeIndex from, NodeIndex to) const {
  for (const InEdge& e : in_edges(to)) {
    if (e.from == from) return e.weight;
  }
  return std::nullopt;
}

std::size_t SocialNetwork::edge_count() const {
  std::size_t count = 0;
  for (const auto& list : in_edges_) count += list.size();
  return count;
}

std::string_view to_string(NEClassification c) {
  switch (c) {
    case NEClassification::kTrivial: return "trivial";
    case NEClassification::kNonTrivialMixed: return "nontrivial-mixed";
    case NEClassification::kDetermined: return "determined";
  }
  return "unknown";
}

void check_profile(const SocialNetwork& net, const JointStrategy& s) {
  if (s.size() != static_cast<std::size_t>(net.node_count())) {
    throw Error(ErrorCode::kInvalidProfile,
                "profile has " + std::to_string(s.size()) + " entries for " +
                    std::to_string(net.node_count()) + " nodes");
  }
  for (NodeIndex i = 0; i < net.node_count(); ++i) {
    if (!s[i].is_null() && !net.offers(i, s[i].product())) {
      throw Error(ErrorCode::kInvalidProfile,
                  "node '" + net.node_id(i) + "' plays a product outside its product set");
    }
  }
}

std::vector<NodeIndex> neighbors(const SocialNetwork& net, NodeIndex i) {
  std::vector<NodeIndex> result;
  for (const auto& e : net.in_edges(i)) result.push_back(e.from);
  return result;
}

std::vector<NodeIndex> supporters(const SocialNetwork& net, const JointStrategy& s,
                                  NodeIndex i, ProductIndex t) {
  net.product_id(t);
  check_profile(net, s);
  std::vector<NodeIndex> result;
  for (const auto& e : net.in_edges(i)) {
    if (s[e.from] == Strategy::product(t)) result.push_back(e.from);
  }
  return result;
}

Rational payoff_if(const SocialNetwork& net, const JointStrategy& s, NodeIndex i,
                   Strategy x) {
  if (x.is_null()) return 0;
  const auto in = net.in_edges(i);
  if (in.empty()) return net.c0();
  Rational total = -net.threshold(i, x.product());
  for (const auto& e : in) {
    if (s[e.from] == x) total += e.weight;
  }
  return total;
}

Rational payoff(const SocialNetwork& net, const JointStrategy& s, NodeIndex i) {
  check_profile(net, s);
  return payoff_if(net, s, i, s[i]);
}

Rational social_welfare(const SocialNetwork& net, const JointStrategy& s) {
  check_profile(net, s);
  Rational total;
  for (NodeIndex i = 0; i < net.node_count(); ++i) total += payoff_if(net, s, i, s[i]);
  return total;
}

std::optional<std::vector<NodeIndex>> topological_order(const SocialNetwork& net) {
  const int n = net.node_count();
  std::vector<int> indegree(static_cast<std::size_t>(n));
  for (NodeIndex i = 0; i < n; ++i) {
    indegree[static_cast<std::size_t>(i)] = static_cast<int>(net.in_edges(i).size());
  }
  std::priority_queue<NodeIndex, std::vector<NodeIndex>, std::greater<>> ready;
  for (NodeIndex i = 0; i < n; ++i) {
    if (indegree[static_cast<std::size_t>(i)] == 0) ready.push(i);
  }
  std::vector<NodeIndex> order;
  while (!ready.empty()) {
    NodeIndex i = ready.top();
    ready.pop();
    order.push_back(i);
    for (const auto& e : net.out_edges(i)) {
      if (--indegree[static_cast<std::size_t>(e.to)] == 0) ready.push(e.to);
    }
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

std::optional<std::vector<NodeIndex>> cycle_order(const SocialNetwork& net) {
  const int n = net.node_count();
  if (n < 2) return std::nullopt;
  for (NodeIndex i = 0; i < n; ++i) {
    if (net.in_edges(i).size() != 1 || net.out_edges(i).size() != 1) return std::nullopt;
  }
  std::vector<NodeIndex> order;
  std::vector<bool> visited(static_cast<std::size_t>(n));
  NodeIndex i = 0;
  while (!visited[static_cast<std::size_t>(i)]) {
    visited[static_cast<std::size_t>(i)] = true;
    order.push_back(i);
    i = net.out_edges(i).front().to;
  }
  if (static_cast<int>(order.size()) != n) return std::nullopt;
  return order;
}

GraphClass classify_graph(const SocialNetwork& net) {
  GraphClass cls;
  cls.is_dag = topological_order(net).has_value();
  cls.is_simple_cycle = cycle_order(net).has_value();
  cls.has_no_source_nodes = true;
  for (NodeIndex i = 0; i < net.node_count(); ++i) {
    if (net.is_source(i)) cls.has_no_source_nodes = false;
  }
  return cls;
}

std::string strategy_name(const SocialNetwork& net, Strategy x) {
  return x.is_null() ? "_" : net.product_id(x.product());
}

std::string format_profile(const SocialNetwork& net, const JointStrategy& s) {
  std::string out;
  for (NodeIndex i = 0; i < static_cast<NodeIndex>(s.size()); ++i) {
    if (i > 0) out += ',';
    out += net.node_id(i);
    out += '=';
    out += strategy_name(net, s[i]);
  }
  return out;
}

}  // namespace sng
