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

#ifndef SNG_IO_HPP_
#define SNG_IO_HPP_

#include <string>
#include <string_view>

#include "sng/model.hpp"

namespace sng {

// Network documents are JSON objects with exactly the members
//   "c0": "<rational>",
//   "products": ["<id>", ...],
//   "nodes": [{"id": .., "products": [..], "thresholds": {"<t>": "<rational>"}}],
//   "edges": [{"from": .., "to": .., "weight": "<rational>"}]
// Rationals are strings "p" or "p/q"; JSON numbers are rejected. Structural
// problems throw Error(kSyntaxError) with a line:column when the JSON itself
// is malformed; semantic problems throw the validation codes.
NetworkDescription parse_network_description(std::string_view document);
SocialNetwork parse_network(std::string_view document);

// Canonical form: sorted keys, nodes by id, edges by (from, to), reduced
// rationals, two-space indentation and a trailing newline.
std::string serialize_network(const SocialNetwork& net);

// Profile documents map every node id to a product id or null (opt out).
// Throws kSyntaxError for malformed JSON and kInvalidProfile for a domain
// mismatch or an unavailable product.
JointStrategy parse_profile(const SocialNetwork& net, std::string_view document);
std::string serialize_profile(const SocialNetwork& net, const JointStrategy& s);

}  // namespace sng

#endif  // SNG_IO_HPP_
