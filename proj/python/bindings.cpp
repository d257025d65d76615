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

#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sng/cli.hpp"
#include "sng/dynamics.hpp"
#include "sng/equilibria.hpp"
#include "sng/error.hpp"
#include "sng/gadgets.hpp"
#include "sng/io.hpp"
#include "sng/metrics.hpp"

namespace py = pybind11;
using namespace sng;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(r.num(), r.den());
}

// Accepts str, int or fractions.Fraction.
Rational rational(const py::handle& value) {
  const std::string text = py::str(value);
  auto r = Rational::parse(text);
  if (!r) throw py::value_error("not an exact rational: '" + text + "'");
  return *r;
}

py::dict to_dict(const SocialNetwork& net, const JointStrategy& s) {
  py::dict out;
  for (NodeIndex i = 0; i < net.node_count(); ++i) {
    out[py::str(net.node_id(i))] =
        s[i].is_null() ? py::object(py::none()) : py::object(py::str(net.product_id(s[i].product())));
  }
  return out;
}

JointStrategy from_dict(const SocialNetwork& net, const py::dict& profile) {
  if (static_cast<int>(profile.size()) != net.node_count()) {
    throw Error(ErrorCode::kInvalidProfile, "profile must name every node exactly once");
  }
  JointStrategy s = JointStrategy::all_null(net.node_count());
  for (const auto& [key, value] : profile) {
    const NodeIndex i = net.node_index(py::cast<std::string>(key));
    if (value.is_none()) continue;
    const auto t = net.find_product(py::cast<std::string>(value));
    if (!t || !net.offers(i, *t)) {
      throw Error(ErrorCode::kInvalidProfile, "node cannot play '" + py::cast<std::string>(value) + "'");
    }
    s[i] = Strategy::product(*t);
  }
  return s;
}

py::object strategy(const SocialNetwork& net, Strategy x) {
  return x.is_null() ? py::object(py::none()) : py::object(py::str(net.product_id(x.product())));
}

EquilibriumKind kind_of(const std::string& text) {
  if (text == "any") return EquilibriumKind::kAny;
  if (text == "trivial") return EquilibriumKind::kTrivial;
  if (text == "nontrivial") return EquilibriumKind::kNonTrivial;
  if (text == "determined") return EquilibriumKind::kDetermined;
  throw py::value_error("kind must be any, trivial, nontrivial or determined");
}

py::dict report(const SocialNetwork& net, const NEReport& r) {
  py::dict out;
  out["exists"] = r.exists;
  out["method"] = std::string(to_string(r.method));
  out["witness"] = r.witness ? py::object(to_dict(net, *r.witness)) : py::object(py::none());
  out["classification"] = r.classification ? py::object(py::str(std::string(to_string(*r.classification))))
                                           : py::object(py::none());
  out["work"] = r.work;
  return out;
}

py::dict price(const PriceRatio& p) {
  py::dict out;
  out["kind"] = p.str();
  out["value"] = p.kind == PriceRatio::Kind::kFinite ? fraction(p.value) : py::object(py::none());
  out["numerator"] = fraction(p.numerator);
  out["denominator"] = fraction(p.denominator);
  return out;
}

RandomClass class_of(const std::string& text) {
  if (text == "dag") return RandomClass::kDag;
  if (text == "cycle") return RandomClass::kSimpleCycle;
  if (text == "nosource") return RandomClass::kNoSource;
  if (text == "general") return RandomClass::kGeneral;
  throw py::value_error("class must be dag, cycle, nosource or general");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Social network games: equilibria, improvement dynamics and generators.";

  static py::exception<Error> error(m, "SngError", PyExc_ValueError);
  static py::exception<GuardExceeded> guard_error(m, "GuardExceeded", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GuardExceeded& e) {
      PyErr_SetString(guard_error.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<SocialNetwork>(m, "Network")
      .def_static("from_json", [](const std::string& doc) { return parse_network(doc); })
      .def("to_json", [](const SocialNetwork& net) { return serialize_network(net); })
      .def_property_readonly("node_ids", &SocialNetwork::node_ids)
      .def_property_readonly("product_ids", &SocialNetwork::product_ids)
      .def_property_readonly("c0", [](const SocialNetwork& net) { return fraction(net.c0()); })
      .def("__len__", &SocialNetwork::node_count)
      .def("__eq__", [](const SocialNetwork& a, const SocialNetwork& b) { return a == b; })
      .def("classify", [](const SocialNetwork& net) {
        const GraphClass g = classify_graph(net);
        py::dict out;
        out["is_dag"] = g.is_dag;
        out["is_simple_cycle"] = g.is_simple_cycle;
        out["has_no_source_nodes"] = g.has_no_source_nodes;
        return out;
      });

  m.def("payoff", [](const SocialNetwork& net, const py::dict& profile, const std::string& node) {
    return fraction(payoff(net, from_dict(net, profile), net.node_index(node)));
  }, py::arg("net"), py::arg("profile"), py::arg("node"));
  m.def("social_welfare", [](const SocialNetwork& net, const py::dict& profile) {
    return fraction(social_welfare(net, from_dict(net, profile)));
  }, py::arg("net"), py::arg("profile"));

  m.def("is_nash", [](const SocialNetwork& net, const py::dict& profile) {
    const NashCheck check = is_nash(net, from_dict(net, profile));
    py::object deviation = py::none();
    if (check.deviation) {
      deviation = py::make_tuple(net.node_id(check.deviation->node),
                                 strategy(net, check.deviation->strategy));
    }
    return py::make_tuple(check.is_nash, deviation);
  }, py::arg("net"), py::arg("profile"),
     "Returns (is_nash, deviation) with deviation = (node, improving strategy) or None.");

  m.def("enumerate_ne", [](const SocialNetwork& net, std::uint64_t guard) {
    py::list out;
    for (const auto& s : enumerate_ne(net, guard)) out.append(to_dict(net, s));
    return out;
  }, py::arg("net"), py::arg("guard") = kDefaultGuard);

  m.def("solve_brute_force", [](const SocialNetwork& net, const std::string& kind, std::uint64_t guard) {
    return report(net, solve_brute_force(net, kind_of(kind), guard));
  }, py::arg("net"), py::arg("kind") = "nontrivial", py::arg("guard") = kDefaultGuard);
  m.def("construct_ne_dag", [](const SocialNetwork& net) {
    return to_dict(net, construct_ne_dag(net));
  }, py::arg("net"));
  m.def("decide_ne_cycle", [](const SocialNetwork& net, const std::string& kind) {
    return report(net, decide_ne_cycle(net, kind_of(kind)));
  }, py::arg("net"), py::arg("kind") = "nontrivial");
  m.def("find_nontrivial_ne_sourcefree", [](const SocialNetwork& net) {
    return report(net, find_nontrivial_ne_sourcefree(net));
  }, py::arg("net"));
  m.def("sustainable_set", [](const SocialNetwork& net, const std::string& product) {
    std::vector<std::string> ids;
    for (NodeIndex i : sustainable_set(net, net.product_index(product))) ids.push_back(net.node_id(i));
    return ids;
  }, py::arg("net"), py::arg("product"));

  m.def("improvement_graph", [](const SocialNetwork& net, std::uint64_t guard) {
    const ImprovementGraph graph = build_improvement_graph(net, guard);
    py::dict out;
    out["states"] = graph.state_count();
    out["transitions"] = graph.transition_count();
    py::list sinks;
    for (auto v : graph.sinks()) sinks.append(to_dict(net, graph.space().decode(v)));
    out["sinks"] = sinks;
    py::object cycle = py::none();
    if (auto found = graph.find_cycle()) {
      py::list states;
      for (auto v : *found) states.append(to_dict(net, graph.space().decode(v)));
      cycle = states;
    }
    out["cycle"] = cycle;
    out["weakly_acyclic"] = graph.all_states_reach_sink();
    out["dot"] = to_dot(net, graph);
    return out;
  }, py::arg("net"), py::arg("guard") = kDefaultGuard);
  m.def("has_fip", &has_fip, py::arg("net"), py::arg("guard") = kDefaultGuard);
  m.def("is_weakly_acyclic", &is_weakly_acyclic, py::arg("net"), py::arg("guard") = kDefaultGuard);

  m.def("run_dynamics", [](const SocialNetwork& net, const py::dict& start, const std::string& scheduler,
                           std::uint64_t seed, const std::vector<std::string>& order,
                           std::uint64_t max_steps) {
    std::vector<NodeIndex> indices;
    for (const auto& id : order) indices.push_back(net.node_index(id));
    SchedulerSpec spec;
    if (scheduler == "smallest-index") {
      spec = SmallestIndexBestResponse{indices};
    } else if (scheduler == "random") {
      spec = RandomBetterResponse{seed};
    } else if (scheduler == "fixed") {
      spec = FixedOrderBestResponse{indices};
    } else {
      throw py::value_error("scheduler must be smallest-index, random or fixed");
    }
    const DynamicsTrace trace = run_scheduler(net, from_dict(net, start), spec, max_steps);
    py::list steps;
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
      steps.append(format_trace_line(net, k + 1, trace.steps[k]));
    }
    py::dict out;
    out["reached_ne"] = trace.outcome == DynamicsOutcome::kReachedNE;
    out["steps"] = steps;
    out["final"] = to_dict(net, trace.final_state);
    return out;
  }, py::arg("net"), py::arg("start"), py::arg("scheduler") = "smallest-index",
     py::arg("seed") = 0, py::arg("order") = std::vector<std::string>{},
     py::arg("max_steps") = 1000);

  m.def("efficiency", [](const SocialNetwork& net, std::uint64_t guard) {
    const EfficiencyReport r = efficiency(net, guard);
    py::dict out;
    out["optimum"] = fraction(r.optimum.welfare);
    out["optimum_profile"] = to_dict(net, r.optimum.profile);
    out["ne_count"] = r.ne_count;
    out["best_ne"] = r.best_ne ? py::object(fraction(r.best_ne->welfare)) : py::object(py::none());
    out["worst_ne"] = r.worst_ne ? py::object(fraction(r.worst_ne->welfare)) : py::object(py::none());
    out["poa"] = price(r.poa);
    out["pos"] = price(r.pos);
    return out;
  }, py::arg("net"), py::arg("guard") = kDefaultGuard);

  m.def("gen_fig1", [](const py::object& theta, const py::object& w1, const py::object& w2) {
    return gen_fig1({rational(theta), rational(w1), rational(w2)});
  }, py::arg("theta") = "1/4", py::arg("w1") = "1/3", py::arg("w2") = "1/2");
  m.def("gen_fig3", [](const py::object& theta, const py::object& w) {
    return gen_fig3(rational(theta), rational(w));
  }, py::arg("theta") = "1/4", py::arg("w") = "1/2");
  m.def("gen_partition_reduction", [](const py::list& values) {
    std::vector<Rational> rs;
    for (const auto& v : values) rs.push_back(rational(v));
    return gen_partition_reduction(PartitionInstance::normalized(rs));
  }, py::arg("values"), "Values are rescaled to sum to one.");
  m.def("gen_pos_witness", &gen_pos_witness);
  m.def("gen_equitable", [](const SocialNetwork& base) { return gen_equitable(base); }, py::arg("base"));
  m.def("gen_random", [](const std::string& cls, int n, int products, std::uint64_t seed) {
    return gen_random(class_of(cls), n, products, seed);
  }, py::arg("cls"), py::arg("n"), py::arg("products"), py::arg("seed"));

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
