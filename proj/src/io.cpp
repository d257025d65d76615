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

#include "sng/io.hpp"

#include <set>

#include <json.hpp>

#include "sng/error.hpp"

namespace sng {
namespace {

using nlohmann::json;

json parse_json(std::string_view document) {
  try {
    return json::parse(document.begin(), document.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, document.size());
    for (std::size_t k = 0; k < end; ++k) {
      if (document[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kSyntaxError, "line " + std::to_string(line) + ", column " +
                                             std::to_string(column) + ": malformed JSON");
  }
}

[[noreturn]] void structure_error(const std::string& message) {
  throw Error(ErrorCode::kSyntaxError, message);
}

const json& member(const json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) structure_error(where + ": missing \"" + key + "\"");
  return *it;
}

void only_members(const json& object, std::initializer_list<const char*> keys,
                  const std::string& where) {
  if (!object.is_object()) structure_error(where + ": expected an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : object.items()) {
    if (!allowed.contains(key)) structure_error(where + ": unexpected member \"" + key + "\"");
  }
}

std::string string_of(const json& value, const std::string& where) {
  if (!value.is_string()) structure_error(where + ": expected a string");
  return value.get<std::string>();
}

Rational rational_of(const json& value, const std::string& where) {
  const std::string text = string_of(value, where);
  auto r = Rational::parse(text);
  if (!r) structure_error(where + ": \"" + text + "\" is not a rational of the form p or p/q");
  return *r;
}

std::vector<std::string> strings_of(const json& value, const std::string& where) {
  if (!value.is_array()) structure_error(where + ": expected an array");
  std::vector<std::string> out;
  for (const auto& item : value) out.push_back(string_of(item, where));
  return out;
}

}  // namespace

NetworkDescription parse_network_description(std::string_view document) {
  const json root = parse_json(document);
  only_members(root, {"c0", "products", "nodes", "edges"}, "network");
  NetworkDescription desc;
  desc.c0 = rational_of(member(root, "c0", "network"), "c0");
  desc.products = strings_of(member(root, "products", "network"), "products");

  const json& nodes = member(root, "nodes", "network");
  if (!nodes.is_array()) structure_error("nodes: expected an array");
  for (const json& node : nodes) {
    only_members(node, {"id", "products", "thresholds"}, "node");
    NodeSpec spec;
    spec.id = string_of(member(node, "id", "node"), "node id");
    const std::string where = "node '" + spec.id + "'";
    spec.products = strings_of(member(node, "products", where), where + " products");
    const json& thresholds = member(node, "thresholds", where);
    if (!thresholds.is_object()) structure_error(where + " thresholds: expected an object");
    for (const auto& [t, theta] : thresholds.items()) {
      spec.thresholds.emplace(t, rational_of(theta, where + " threshold " + t));
    }
    desc.nodes.push_back(std::move(spec));
  }

  const json& edges = member(root, "edges", "network");
  if (!edges.is_array()) structure_error("edges: expected an array");
  for (const json& edge : edges) {
    only_members(edge, {"from", "to", "weight"}, "edge");
    EdgeSpec spec;
    spec.from = string_of(member(edge, "from", "edge"), "edge from");
    spec.to = string_of(member(edge, "to", "edge"), "edge to");
    spec.weight = rational_of(member(edge, "weight", "edge"), "edge " + spec.from + "->" + spec.to);
    desc.edges.push_back(std::move(spec));
  }
  return desc;
}

SocialNetwork parse_network(std::string_view document) {
  return SocialNetwork::build(parse_network_description(document));
}

std::string serialize_network(const SocialNetwork& net) {
  const NetworkDescription desc = net.describe();
  json root = json::object();
  root["c0"] = desc.c0.str();
  root["products"] = desc.products;
  json nodes = json::array();
  for (const NodeSpec& node : desc.nodes) {
    json thresholds = json::object();
    for (const auto& [t, theta] : node.thresholds) thresholds[t] = theta.str();
    nodes.push_back({{"id", node.id}, {"products", node.products}, {"thresholds", thresholds}});
  }
  root["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const EdgeSpec& e : desc.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"weight", e.weight.str()}});
  }
  root["edges"] = std::move(edges);
  return root.dump(2) + "\n";
}

JointStrategy parse_profile(const SocialNetwork& net, std::string_view document) {
  const json root = parse_json(document);
  if (!root.is_object()) structure_error("profile: expected an object");
  JointStrategy s = JointStrategy::all_null(net.node_count());
  std::vector<bool> seen(static_cast<std::size_t>(net.node_count()), false);
  for (const auto& [id, value] : root.items()) {
    const auto i = net.find_node(id);
    if (!i) throw Error(ErrorCode::kInvalidProfile, "profile names unknown node '" + id + "'");
    seen[static_cast<std::size_t>(*i)] = true;
    if (value.is_null()) continue;
    if (!value.is_string()) {
      throw Error(ErrorCode::kInvalidProfile, "strategy of '" + id + "' must be a string or null");
    }
    const auto t = net.find_product(value.get<std::string>());
    if (!t || !net.offers(*i, *t)) {
      throw Error(ErrorCode::kInvalidProfile,
                  "node '" + id + "' cannot play '" + value.get<std::string>() + "'");
    }
    s[*i] = Strategy::product(*t);
  }
  for (NodeIndex i = 0; i < net.node_count(); ++i) {
    if (!seen[static_cast<std::size_t>(i)]) {
      throw Error(ErrorCode::kInvalidProfile, "profile omits node '" + net.node_id(i) + "'");
    }
  }
  return s;
}

std::string serialize_profile(const SocialNetwork& net, const JointStrategy& s) {
  check_profile(net, s);
  json root = json::object();
  for (NodeIndex i = 0; i < net.node_count(); ++i) {
    root[net.node_id(i)] = s[i].is_null() ? json(nullptr) : json(net.product_id(s[i].product()));
  }
  return root.dump(2) + "\n";
}

}  // namespace sng
