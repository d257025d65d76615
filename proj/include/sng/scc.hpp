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

#ifndef SNG_SCC_HPP_
#define SNG_SCC_HPP_

#include <vector>

namespace sng {

// Strongly connected components of a digraph given by successor lists
// (iterative Tarjan). Components are returned in reverse topological order
// of the condensation: every edge between two components goes from a later
// component to an earlier one. Members of each component are sorted.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& successors);

}  // namespace sng

#endif  // SNG_SCC_HPP_
