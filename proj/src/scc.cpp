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

#include "sng/scc.hpp"

#include <algorithm>
#include <cstddef>

namespace sng {

std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& successors) {
  const int n = static_cast<int>(successors.size());
  constexpr int kUnvisited = -1;
  std::vector<int> index(static_cast<std::size_t>(n), kUnvisited);
  std::vector<int> lowlink(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  std::vector<std::vector<int>> components;

  struct Frame {
    int vertex;
    std::size_t next_edge;
  };
  std::vector<Frame> call_stack;
  int counter = 0;

  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != kUnvisited) continue;
    call_stack.push_back({root, 0});
    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      const auto v = static_cast<std::size_t>(frame.vertex);
      if (frame.next_edge == 0 && index[v] == kUnvisited) {
        index[v] = lowlink[v] = counter++;
        stack.push_back(frame.vertex);
        on_stack[v] = true;
      }
      const auto& succ = successors[v];
      if (frame.next_edge < succ.size()) {
        const int w = succ[frame.next_edge++];
        const auto wu = static_cast<std::size_t>(w);
        if (index[wu] == kUnvisited) {
          call_stack.push_back({w, 0});
        } else if (on_stack[wu]) {
          lowlink[v] = std::min(lowlink[v], index[wu]);
        }
        continue;
      }
      if (lowlink[v] == index[v]) {
        std::vector<int> component;
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          component.push_back(w);
        } while (w != frame.vertex);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
      const int finished = frame.vertex;
      call_stack.pop_back();
      if (!call_stack.empty()) {
        const auto parent = static_cast<std::size_t>(call_stack.back().vertex);
        lowlink[parent] = std::min(lowlink[parent], lowlink[static_cast<std::size_t>(finished)]);
      }
    }
  }
  return components;
}

}  // namespace sng
