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

#include "sng/profile_space.hpp"

#include <algorithm>
#include <limits>

#include "sng/error.hpp"

namespace sng {

ProfileSpace::ProfileSpace(const SocialNetwork& net) {
  const int n = net.node_count();
  options_.resize(static_cast<std::size_t>(n));
  strides_.assign(static_cast<std::size_t>(n), 1);
  for (NodeIndex i = 0; i < n; ++i) {
    auto& opts = options_[static_cast<std::size_t>(i)];
    for (ProductIndex t : net.products(i)) opts.push_back(Strategy::product(t));
    opts.push_back(Strategy::null());
  }
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t stride = 1;
  bool saturated = false;
  for (NodeIndex i = n - 1; i >= 0; --i) {
    strides_[static_cast<std::size_t>(i)] = saturated ? 0 : stride;
    const std::uint64_t radix = options_[static_cast<std::size_t>(i)].size();
    if (saturated || stride > kMax / radix) {
      saturated = true;
    } else {
      stride *= radix;
    }
  }
  size_ = saturated ? kMax : stride;
}

void ProfileSpace::require_within(std::uint64_t guard) const {
  if (size_ > guard) throw GuardExceeded(size_, guard);
}

std::uint64_t ProfileSpace::digit(NodeIndex i, Strategy x) const {
  const auto opts = options(i);
  auto it = std::lower_bound(opts.begin(), opts.end(), x);
  if (it == opts.end() || *it != x) {
    throw Error(ErrorCode::kInvalidProfile, "strategy not available to node");
  }
  return static_cast<std::uint64_t>(it - opts.begin());
}

JointStrategy ProfileSpace::decode(std::uint64_t code) const {
  std::vector<Strategy> choices(options_.size());
  for (NodeIndex i = node_count() - 1; i >= 0; --i) {
    const auto& opts = options_[static_cast<std::size_t>(i)];
    choices[static_cast<std::size_t>(i)] = opts[code % opts.size()];
    code /= opts.size();
  }
  return JointStrategy(std::move(choices));
}

std::uint64_t ProfileSpace::encode(const JointStrategy& s) const {
  if (s.size() != options_.size()) {
    throw Error(ErrorCode::kInvalidProfile, "profile size does not match network");
  }
  std::uint64_t code = 0;
  for (NodeIndex i = 0; i < node_count(); ++i) code += digit(i, s[i]) * stride(i);
  return code;
}

}  // namespace sng
