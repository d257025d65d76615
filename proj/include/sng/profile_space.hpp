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

#ifndef SNG_PROFILE_SPACE_HPP_
#define SNG_PROFILE_SPACE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "sng/model.hpp"

namespace sng {

inline constexpr std::uint64_t kDefaultGuard = 1'000'000;

// Mixed-radix numbering of all joint strategies of a network. Node 0 is the
// most significant digit and each node's options are listed in Strategy
// order, so increasing codes visit profiles in lexicographic order.
class ProfileSpace {
 public:
  explicit ProfileSpace(const SocialNetwork& net);

  // Number of joint strategies, saturated at UINT64_MAX.
  std::uint64_t size() const { return size_; }
  // Throws GuardExceeded when size() > guard.
  void require_within(std::uint64_t guard) const;

  int node_count() const { return static_cast<int>(options_.size()); }
  std::span<const Strategy> options(NodeIndex i) const {
    return options_[static_cast<std::size_t>(i)];
  }
  std::uint64_t stride(NodeIndex i) const { return strides_[static_cast<std::size_t>(i)]; }
  // Position of x in options(i).
  std::uint64_t digit(NodeIndex i, Strategy x) const;

  JointStrategy decode(std::uint64_t code) const;
  std::uint64_t encode(const JointStrategy& s) const;

 private:
  std::vector<std::vector<Strategy>> options_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t size_ = 1;
};

}  // namespace sng

#endif  // SNG_PROFILE_SPACE_HPP_
