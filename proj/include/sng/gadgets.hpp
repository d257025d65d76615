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

#ifndef SNG_GADGETS_HPP_
#define SNG_GADGETS_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sng/model.hpp"

namespace sng {

// Parameters of the three-product triangle without equilibria. Must satisfy
// 0 < theta < w1 < w2 and w1 + w2 <= 1.
struct TriangleParams {
  Rational theta{1, 4};
  Rational w1{1, 3};  // source -> triangle edges
  Rational w2{1, 2};  // triangle edges
};

// Triangle 1 -> 2 -> 3 -> 1 with P(1) = {t1,t2}, P(2) = {t1,t3},
// P(3) = {t2,t3}, fed by single-product sources src_t1 -> 1, src_t3 -> 2 and
// src_t2 -> 3. Throws kConstraintViolated.
SocialNetwork gen_fig1(const TriangleParams& params = {});

// Positive rationals summing to one.
class PartitionInstance {
 public:
  // Throws kConstraintViolated unless every value is positive and they sum to 1.
  explicit PartitionInstance(std::vector<Rational> values);
  // Divides positive values by their sum.
  static PartitionInstance normalized(const std::vector<Rational>& values);
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

// Selector sources x1..xn with products {t1, t1'} feed node a (product t1)
// and node b (product t1') with weight a_i each; a and b have threshold 1/2.
// a replaces the t1 source of one triangle copy (nodes A1..A3, A_src_*), b
// the t1' source of a second copy with t1 renamed t1' (B1..B3, B_src_*).
// An equilibrium exists iff the values split into two halves.
SocialNetwork gen_partition_reduction(const PartitionInstance& instance,
                                      const TriangleParams& params = {});

// 3-cycle 1 -> 2 -> 3 -> 1, every node offers {t1, t2}, every weight w and
// threshold theta. Requires 0 < theta < w <= 1.
SocialNetwork gen_fig3(Rational theta = Rational(1, 4), Rational w = Rational(1, 2));

// 2-cycle whose only equilibrium is all-null while (t1, t1) has welfare 3/10.
SocialNetwork gen_pos_witness();

struct DigraphShape {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

// Every incoming edge of a node with k in-neighbours gets weight 1/k.
// thresholds: node -> product -> θ; a node's product set is the key set.
// Throws kInvalidShape for self-loops, duplicate or dangling edges, or
// duplicate nodes.
SocialNetwork gen_equitable(const DigraphShape& shape,
                            const std::map<std::string, std::map<std::string, Rational>>& thresholds,
                            Rational c0 = 1);
// Same graph, products and thresholds as `base`, equitable weights.
SocialNetwork gen_equitable(const SocialNetwork& base);

enum class RandomClass { kDag, kSimpleCycle, kNoSource, kGeneral };

// Deterministic in (cls, n, product_count, seed). Node ids n0.., product ids
// t1..; weights k/16 (k >= 4) rescaled to keep in-sums <= 1; thresholds k/8.
// Throws kUnsatisfiableClass (n < 1, or n < 2 for cycles and source-free
// graphs, or product_count < 1).
SocialNetwork gen_random(RandomClass cls, int n, int product_count, std::uint64_t seed);

// Two players "1" and "2": edge 1 -> 2, or the 2-cycle when `cycle`.
SocialNetwork gen_random_two_player(bool cycle, int product_count, std::uint64_t seed);

}  // namespace sng

#endif  // SNG_GADGETS_HPP_
