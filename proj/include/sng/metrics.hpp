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

#ifndef SNG_METRICS_HPP_
#define SNG_METRICS_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "sng/model.hpp"
#include "sng/profile_space.hpp"

namespace sng {

struct WelfarePoint {
  JointStrategy profile;
  Rational welfare;
};

// optimum / equilibrium welfare. x/0 with x > 0 is infinite and 0/0 is 1;
// a negative denominator leaves the ratio undefined. numerator and
// denominator are always the raw welfare values.
struct PriceRatio {
  enum class Kind { kFinite, kInfinite, kUndefinedNegativeWelfare, kUndefinedNoEquilibrium };
  Kind kind = Kind::kUndefinedNoEquilibrium;
  Rational value;
  Rational numerator;
  Rational denominator;

  // "p/q", "inf", "undefined-negative-welfare" or "undefined-no-equilibrium".
  std::string str() const;
};

PriceRatio price_ratio(const Rational& optimum, const Rational& equilibrium_welfare);

struct EfficiencyReport {
  WelfarePoint optimum;
  std::optional<WelfarePoint> best_ne;
  std::optional<WelfarePoint> worst_ne;
  std::size_t ne_count = 0;
  PriceRatio poa;  // optimum over worst equilibrium welfare
  PriceRatio pos;  // optimum over best equilibrium welfare

  bool has_equilibrium() const { return ne_count > 0; }
};

// Lexicographically least profile of maximum social welfare.
WelfarePoint social_optimum(const SocialNetwork& net, std::uint64_t guard = kDefaultGuard);

// When there is no equilibrium the report still carries the optimum and
// both ratios are kUndefinedNoEquilibrium.
EfficiencyReport efficiency(const SocialNetwork& net, std::uint64_t guard = kDefaultGuard);

}  // namespace sng

#endif  // SNG_METRICS_HPP_
