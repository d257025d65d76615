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

#ifndef SNG_TESTS_FIXTURES_HPP_
#define SNG_TESTS_FIXTURES_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "sng/error.hpp"
#include "sng/model.hpp"

namespace fixtures {

inline sng::Rational q(const char* text) { return *sng::Rational::parse(text); }

struct NodeLine {
  std::string id;
  std::vector<std::pair<std::string, const char*>> thresholds;  // product -> θ
};

struct EdgeLine {
  std::string from;
  std::string to;
  const char* weight;
};

inline sng::NetworkDescription describe(std::vector<NodeLine> nodes, std::vector<EdgeLine> edges,
                                        const char* c0 = "1") {
  sng::NetworkDescription d;
  d.c0 = q(c0);
  std::map<std::string, bool> products;
  for (const auto& n : nodes) {
    sng::NodeSpec spec;
    spec.id = n.id;
    for (const auto& [p, theta] : n.thresholds) {
      spec.products.push_back(p);
      spec.thresholds[p] = q(theta);
      products[p] = true;
    }
    d.nodes.push_back(spec);
  }
  for (const auto& [p, unused] : products) d.products.push_back(p);
  for (const auto& e : edges) d.edges.push_back({e.from, e.to, q(e.weight)});
  return d;
}

inline sng::SocialNetwork build(std::vector<NodeLine> nodes, std::vector<EdgeLine> edges,
                                const char* c0 = "1") {
  return sng::SocialNetwork::build(describe(std::move(nodes), std::move(edges), c0));
}

// Profile from product ids in node index order; "_" is the opt-out.
inline sng::JointStrategy profile(const sng::SocialNetwork& net,
                                  const std::vector<std::string>& names) {
  sng::JointStrategy s = sng::JointStrategy::all_null(net.node_count());
  for (int i = 0; i < net.node_count(); ++i) {
    if (names[i] != "_") s[i] = sng::Strategy::product(net.product_index(names[i]));
  }
  return s;
}

template <typename F>
sng::ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const sng::Error& e) {
    return e.code();
  }
  FAIL("no sng::Error thrown");
  return sng::ErrorCode::kInvalidArgument;
}

}  // namespace fixtures

#define CHECK_ERROR_CODE(expr, expected) \
  CHECK(fixtures::error_code_of([&] { (void)(expr); }) == (expected))

#endif  // SNG_TESTS_FIXTURES_HPP_
