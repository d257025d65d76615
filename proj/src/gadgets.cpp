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

#include "sng/gadgets.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "sng/error.hpp"
#include "sng/random.hpp"

namespace sng {
namespace {

void add_node(NetworkDescription& desc, const std::string& id,
              const std::vector<std::string>& products, const Rational& theta) {
  NodeSpec node{id, products, {}};
  for (const auto& t : products) node.thresholds.emplace(t, theta);
  desc.nodes.push_back(std::move(node));
}

void check_triangle(const TriangleParams& p) {
  if (!(0 < p.theta && p.theta < p.w1 && p.w1 < p.w2 && p.w1 + p.w2 <= 1)) {
    throw Error(ErrorCode::kConstraintViolated,
                "triangle parameters need 0 < theta < w1 < w2 and w1 + w2 <= 1");
  }
}

// The three-node triangle with its sources. `first_product` plays the role
// of t1; `t1_source` names the node feeding the first triangle node with
// that product (created here only when `create_t1_source`).
void add_triangle(NetworkDescription& desc, const std::string& prefix,
                  const std::string& first_product, const std::string& t1_source,
                  bool create_t1_source, const TriangleParams& p) {
  const std::string sep = prefix.empty() ? "" : "_";
  const std::string n1 = prefix + "1", n2 = prefix + "2", n3 = prefix + "3";
  const std::string src_t2 = prefix + sep + "src_t2", src_t3 = prefix + sep + "src_t3";
  add_node(desc, n1, {first_product, "t2"}, p.theta);
  add_node(desc, n2, {first_product, "t3"}, p.theta);
  add_node(desc, n3, {"t2", "t3"}, p.theta);
  if (create_t1_source) add_node(desc, t1_source, {first_product}, p.theta);
  add_node(desc, src_t3, {"t3"}, p.theta);
  add_node(desc, src_t2, {"t2"}, p.theta);
  desc.edges.push_back({n1, n2, p.w2});
  desc.edges.push_back({n2, n3, p.w2});
  desc.edges.push_back({n3, n1, p.w2});
  desc.edges.push_back({t1_source, n1, p.w1});
  desc.edges.push_back({src_t3, n2, p.w1});
  desc.edges.push_back({src_t2, n3, p.w1});
}

std::string padded(const std::string& prefix, int index, int count) {
  const std::size_t width = std::to_string(std::max(count - 1, 0)).size();
  std::string digits = std::to_string(index);
  return prefix + std::string(width - std::min(width, digits.size()), '0') + digits;
}

std::vector<std::string> product_names(int count) {
  std::vector<std::string> names;
  for (int k = 1; k <= count; ++k) names.push_back(padded("t", k, count + 1));
  return names;
}

// Random non-empty subset of `universe`, optionally forced to contain `must`.
std::vector<std::string> random_products(SplitMix64& rng, const std::vector<std::string>& universe,
                                         const std::string* must) {
  std::vector<std::string> chosen;
  for (const auto& t : universe) {
    if ((must != nullptr && t == *must) || rng.coin(1, 2)) chosen.push_back(t);
  }
  if (chosen.empty()) chosen.push_back(universe[rng.below(universe.size())]);
  return chosen;
}

NetworkDescription random_nodes(SplitMix64& rng, const std::vector<std::string>& ids,
                                const std::vector<std::string>& universe, bool shared_bias) {
  NetworkDescription desc;
  desc.products = universe;
  std::string shared;
  const bool use_shared = shared_bias && rng.coin(1, 2);
  if (use_shared) shared = universe[rng.below(universe.size())];
  for (const auto& id : ids) {
    NodeSpec node{id, random_products(rng, universe, use_shared ? &shared : nullptr), {}};
    for (const auto& t : node.products) node.thresholds.emplace(t, Rational(rng.between(1, 8), 8));
    desc.nodes.push_back(std::move(node));
  }
  return desc;
}

// Draws raw weights k/16 and scales down every node whose in-sum exceeds 1.
void assign_weights(SplitMix64& rng, NetworkDescription& desc,
                    const std::vector<std::pair<int, int>>& edges, std::int64_t min_k) {
  std::map<int, Rational> incoming;
  std::vector<Rational> raw;
  for (const auto& [from, to] : edges) {
    raw.emplace_back(rng.between(min_k, 16), 16);
    incoming[to] += raw.back();
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const auto [from, to] = edges[k];
    Rational w = raw[k];
    if (incoming[to] > 1) w /= incoming[to];
    desc.edges.push_back({desc.nodes[static_cast<std::size_t>(from)].id,
                          desc.nodes[static_cast<std::size_t>(to)].id, w});
  }
}

std::vector<int> shuffled(SplitMix64& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int k = n - 1; k > 0; --k) {
    std::swap(perm[static_cast<std::size_t>(k)],
              perm[rng.below(static_cast<std::uint64_t>(k) + 1)]);
  }
  return perm;
}

}  // namespace

SocialNetwork gen_fig1(const TriangleParams& params) {
  check_triangle(params);
  NetworkDescription desc;
  desc.products = {"t1", "t2", "t3"};
  add_triangle(desc, "", "t1", "src_t1", true, params);
  return SocialNetwork::build(desc);
}

PartitionInstance::PartitionInstance(std::vector<Rational> values) : values_(std::move(values)) {
  if (values_.empty()) throw Error(ErrorCode::kConstraintViolated, "partition instance is empty");
  Rational sum;
  for (const auto& v : values_) {
    if (v <= 0) throw Error(ErrorCode::kConstraintViolated, "partition values must be positive");
    sum += v;
  }
  if (sum != 1) {
    throw Error(ErrorCode::kConstraintViolated, "partition values sum to " + sum.str() + ", not 1");
  }
}

PartitionInstance PartitionInstance::normalized(const std::vector<Rational>& values) {
  Rational sum;
  for (const auto& v : values) {
    if (v <= 0) throw Error(ErrorCode::kConstraintViolated, "partition values must be positive");
    sum += v;
  }
  std::vector<Rational> scaled;
  for (const auto& v : values) scaled.push_back(v / sum);
  return PartitionInstance(std::move(scaled));
}

SocialNetwork gen_partition_reduction(const PartitionInstance& instance,
                                      const TriangleParams& params) {
  check_triangle(params);
  const Rational half(1, 2);
  NetworkDescription desc;
  desc.products = {"t1", "t1'", "t2", "t3"};
  const int n = static_cast<int>(instance.values().size());
  add_node(desc, "a", {"t1"}, half);
  add_node(desc, "b", {"t1'"}, half);
  for (int k = 0; k < n; ++k) {
    const std::string id = padded("x", k + 1, n + 1);
    add_node(desc, id, {"t1", "t1'"}, params.theta);
    desc.edges.push_back({id, "a", instance.values()[static_cast<std::size_t>(k)]});
    desc.edges.push_back({id, "b", instance.values()[static_cast<std::size_t>(k)]});
  }
  add_triangle(desc, "A", "t1", "a", false, params);
  add_triangle(desc, "B", "t1'", "b", false, params);
  return SocialNetwork::build(desc);
}

SocialNetwork gen_fig3(Rational theta, Rational w) {
  if (!(0 < theta && theta < w && w <= 1)) {
    throw Error(ErrorCode::kConstraintViolated, "need 0 < theta < w <= 1");
  }
  NetworkDescription desc;
  desc.products = {"t1", "t2"};
  for (const char* id : {"1", "2", "3"}) add_node(desc, id, {"t1", "t2"}, theta);
  desc.edges = {{"1", "2", w}, {"2", "3", w}, {"3", "1", w}};
  return SocialNetwork::build(desc);
}

SocialNetwork gen_pos_witness() {
  NetworkDescription desc;
  desc.products = {"t1", "t2"};
  desc.nodes = {
      {"1", {"t1", "t2"}, {{"t1", Rational(1, 10)}, {"t2", Rational(6, 10)}}},
      {"2", {"t1", "t2"}, {{"t1", Rational(6, 10)}, {"t2", Rational(1, 10)}}},
  };
  desc.edges = {{"1", "2", Rational(1, 2)}, {"2", "1", Rational(1, 2)}};
  return SocialNetwork::build(desc);
}

SocialNetwork gen_equitable(const DigraphShape& shape,
                            const std::map<std::string, std::map<std::string, Rational>>& thresholds,
                            Rational c0) {
  const std::set<std::string> ids(shape.nodes.begin(), shape.nodes.end());
  if (ids.size() != shape.nodes.size()) {
    throw Error(ErrorCode::kInvalidShape, "duplicate node in shape");
  }
  std::set<std::pair<std::string, std::string>> seen;
  std::map<std::string, int> indegree;
  for (const auto& [from, to] : shape.edges) {
    if (!ids.contains(from) || !ids.contains(to)) {
      throw Error(ErrorCode::kInvalidShape, "edge " + from + "->" + to + " leaves the node set");
    }
    if (from == to) throw Error(ErrorCode::kInvalidShape, "self-loop on '" + from + "'");
    if (!seen.emplace(from, to).second) {
      throw Error(ErrorCode::kInvalidShape, "edge " + from + "->" + to + " listed twice");
    }
    ++indegree[to];
  }

  NetworkDescription desc;
  desc.c0 = c0;
  std::set<std::string> universe;
  for (const auto& id : shape.nodes) {
    NodeSpec node{id, {}, {}};
    if (auto it = thresholds.find(id); it != thresholds.end()) {
      node.thresholds = it->second;
      for (const auto& [t, theta] : it->second) {
        node.products.push_back(t);
        universe.insert(t);
      }
    }
    desc.nodes.push_back(std::move(node));
  }
  desc.products.assign(universe.begin(), universe.end());
  for (const auto& [from, to] : shape.edges) desc.edges.push_back({from, to, Rational(1, indegree[to])});
  return SocialNetwork::build(desc);
}

SocialNetwork gen_equitable(const SocialNetwork& base) {
  NetworkDescription desc = base.describe();
  std::map<std::string, int> indegree;
  for (const auto& e : desc.edges) ++indegree[e.to];
  for (auto& e : desc.edges) e.weight = Rational(1, indegree[e.to]);
  return SocialNetwork::build(desc);
}

SocialNetwork gen_random(RandomClass cls, int n, int product_count, std::uint64_t seed) {
  const bool needs_two = cls == RandomClass::kSimpleCycle || cls == RandomClass::kNoSource;
  if (n < 1 || (needs_two && n < 2) || product_count < 1) {
    throw Error(ErrorCode::kUnsatisfiableClass,
                "cannot generate the requested class with n=" + std::to_string(n) +
                    " and " + std::to_string(product_count) + " products");
  }
  SplitMix64 rng(seed);
  std::vector<std::string> ids;
  for (int k = 0; k < n; ++k) ids.push_back(padded("n", k, n));
  NetworkDescription desc = random_nodes(rng, ids, product_names(product_count),
                                         cls != RandomClass::kDag);

  std::vector<std::pair<int, int>> edges;
  switch (cls) {
    case RandomClass::kDag: {
      const std::vector<int> order = shuffled(rng, n);
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (rng.coin(2, 5)) {
            edges.emplace_back(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)]);
          }
        }
      }
      break;
    }
    case RandomClass::kSimpleCycle: {
      const std::vector<int> order = shuffled(rng, n);
      for (int k = 0; k < n; ++k) {
        edges.emplace_back(order[static_cast<std::size_t>(k)],
                           order[static_cast<std::size_t>((k + 1) % n)]);
      }
      break;
    }
    case RandomClass::kNoSource:
    case RandomClass::kGeneral: {
      std::vector<bool> fed(static_cast<std::size_t>(n), false);
      for (int from = 0; from < n; ++from) {
        for (int to = 0; to < n; ++to) {
          if (from != to && rng.coin(7, 20)) {
            edges.emplace_back(from, to);
            fed[static_cast<std::size_t>(to)] = true;
          }
        }
      }
      if (cls == RandomClass::kNoSource) {
        for (int to = 0; to < n; ++to) {
          if (fed[static_cast<std::size_t>(to)]) continue;
          int from = static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
          if (from >= to) ++from;
          edges.emplace_back(from, to);
        }
      }
      break;
    }
  }
  assign_weights(rng, desc, edges, 4);
  return SocialNetwork::build(desc);
}

SocialNetwork gen_random_two_player(bool cycle, int product_count, std::uint64_t seed) {
  if (product_count < 1) throw Error(ErrorCode::kUnsatisfiableClass, "need at least one product");
  SplitMix64 rng(seed);
  NetworkDescription desc = random_nodes(rng, {"1", "2"}, product_names(product_count), false);
  std::vector<std::pair<int, int>> edges{{0, 1}};
  if (cycle) edges.emplace_back(1, 0);
  assign_weights(rng, desc, edges, 1);
  return SocialNetwork::build(desc);
}

}  // namespace sng
