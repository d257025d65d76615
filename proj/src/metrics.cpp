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

#include "sng/metrics.hpp"

#include "sng/equilibria.hpp"

namespace sng {

std::string PriceRatio::str() const {
  switch (kind) {
    case Kind::kFinite: return value.str();
    case Kind::kInfinite: return "inf";
    case Kind::kUndefinedNegativeWelfare: return "undefined-negative-welfare";
    case Kind::kUndefinedNoEquilibrium: return "undefined-no-equilibrium";
  }
  return "undefined";
}

PriceRatio price_ratio(const Rational& optimum, const Rational& equilibrium_welfare) {
  PriceRatio r;
  r.numerator = optimum;
  r.denominator = equilibrium_welfare;
  if (equilibrium_welfare < 0) {
    r.kind = PriceRatio::Kind::kUndefinedNegativeWelfare;
  } else if (equilibrium_welfare == 0) {
    r.kind = optimum > 0 ? PriceRatio::Kind::kInfinite : PriceRatio::Kind::kFinite;
    if (r.kind == PriceRatio::Kind::kFinite) r.value = 1;
  } else {
    r.kind = PriceRatio::Kind::kFinite;
    r.value = optimum / equilibrium_welfare;
  }
  return r;
}

WelfarePoint social_optimum(const SocialNetwork& net, std::uint64_t guard) {
  const ProfileSpace space(net);
  space.require_within(guard);
  std::optional<WelfarePoint> best;
  for (std::uint64_t code = 0; code < space.size(); ++code) {
    JointStrategy s = space.decode(code);
    Rational welfare;
    for (NodeIndex i = 0; i < net.node_count(); ++i) welfare += payoff_if(net, s, i, s[i]);
    if (!best || welfare > best->welfare) best = WelfarePoint{std::move(s), welfare};
  }
  return *best;
}

EfficiencyReport efficiency(const SocialNetwork& net, std::uint64_t guard) {
  EfficiencyReport report;
  report.optimum = social_optimum(net, guard);
  const auto equilibria = enumerate_ne(net, guard);
  report.ne_count = equilibria.size();
  for (const JointStrategy& s : equilibria) {
    const Rational welfare = social_welfare(net, s);
    if (!report.best_ne || welfare > report.best_ne->welfare) report.best_ne = WelfarePoint{s, welfare};
    if (!report.worst_ne || welfare < report.worst_ne->welfare) report.worst_ne = WelfarePoint{s, welfare};
  }
  if (report.has_equilibrium()) {
    report.poa = price_ratio(report.optimum.welfare, report.worst_ne->welfare);
    report.pos = price_ratio(report.optimum.welfare, report.best_ne->welfare);
  } else {
    report.poa.numerator = report.pos.numerator = report.optimum.welfare;
  }
  return report;
}

}  // namespace sng
