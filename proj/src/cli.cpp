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

#include "sng/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sng/dynamics.hpp"
#include "sng/equilibria.hpp"
#include "sng/error.hpp"
#include "sng/gadgets.hpp"
#include "sng/io.hpp"
#include "sng/metrics.hpp"
#include "sng/random.hpp"

namespace sng {
namespace {

using ordered_json = nlohmann::ordered_json;

// Thrown for argument problems detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line-oriented `key: value` output, or one JSON object with --json.
// Arrays print one line per element ("key 1: ..."), objects one line per
// member ("key member: ...").
class Report {
 public:
  void add(const std::string& key, ordered_json value) { root_[key] = std::move(value); }

  void emit(std::ostream& out, bool as_json) const {
    if (as_json) {
      out << root_.dump(2) << "\n";
      return;
    }
    for (const auto& [key, value] : root_.items()) print(out, key, value);
  }

 private:
  static void print(std::ostream& out, const std::string& key, const ordered_json& value) {
    if (value.is_array()) {
      std::size_t k = 0;
      for (const auto& item : value) print(out, key + " " + std::to_string(++k), item);
    } else if (value.is_object()) {
      for (const auto& [sub, item] : value.items()) print(out, key + " " + sub, item);
    } else if (value.is_string()) {
      out << key << ": " << value.get<std::string>() << "\n";
    } else {
      out << key << ": " << value.dump() << "\n";
    }
  }

  ordered_json root_ = ordered_json::object();
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << content;
}

SocialNetwork load_network(const std::string& path) { return parse_network(read_file(path)); }

Rational rational_arg(const std::string& text, const std::string& flag) {
  auto r = Rational::parse(text);
  if (!r) throw UsageError(flag + ": '" + text + "' is not a rational p or p/q");
  return *r;
}

std::uint64_t seed_arg(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError(what + ": '" + text + "' is not an unsigned integer seed");
  }
  return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

JointStrategy random_profile(const SocialNetwork& net, std::uint64_t seed) {
  const ProfileSpace space(net);
  SplitMix64 rng(seed);
  JointStrategy s = JointStrategy::all_null(net.node_count());
  for (NodeIndex i = 0; i < net.node_count(); ++i) {
    const auto opts = space.options(i);
    s[i] = opts[rng.below(opts.size())];
  }
  return s;
}

ordered_json report_of(const SocialNetwork& net, const NEReport& r) {
  ordered_json j = ordered_json::object();
  j["exists"] = r.exists;
  j["method"] = std::string(to_string(r.method));
  if (r.witness) {
    j["classification"] = std::string(to_string(*r.classification));
    j["witness"] = format_profile(net, *r.witness);
  }
  if (r.non_best_response_witness) {
    j["deviator"] = net.node_id(r.non_best_response_witness->node);
    j["improvement"] = strategy_name(net, r.non_best_response_witness->strategy);
  }
  return j;
}

struct Options {
  bool json = false;
  std::uint64_t guard = kDefaultGuard;
  std::string network;
  std::string profile;
  std::string kind = "nontrivial";
  std::string method = "auto";
  std::string start;
  std::string scheduler = "smallest-index";
  std::uint64_t max_steps = 1000;
  std::string trace_path;
  std::string dot_path;
  std::string check;
  std::string output;
  std::string theta, w1, w2, w;
  std::string values;
  std::string base;
  std::string random_class = "dag";
  int n = 5;
  int products = 2;
  std::uint64_t seed = 0;
};

int cmd_validate(const Options& o, Report& report) {
  const SocialNetwork net = load_network(o.network);
  report.add("valid", true);
  report.add("nodes", net.node_count());
  report.add("edges", net.edge_count());
  report.add("products", net.product_count());
  return kExitOk;
}

int cmd_classify(const Options& o, Report& report) {
  const SocialNetwork net = load_network(o.network);
  const GraphClass cls = classify_graph(net);
  report.add("is_dag", cls.is_dag);
  report.add("is_simple_cycle", cls.is_simple_cycle);
  report.add("has_no_source_nodes", cls.has_no_source_nodes);
  return kExitOk;
}

int cmd_payoff(const Options& o, Report& report) {
  const SocialNetwork net = load_network(o.network);
  const JointStrategy s = parse_profile(net, read_file(o.profile));
  ordered_json payoffs = ordered_json::object();
  for (NodeIndex i = 0; i < net.node_count(); ++i) payoffs[net.node_id(i)] = payoff(net, s, i).str();
  report.add("payoff", payoffs);
  report.add("social_welfare", social_welfare(net, s).str());
  return kExitOk;
}

int cmd_ne_check(const Options& o, Report& report) {
  const SocialNetwork net = load_network(o.network);
  const JointStrategy s = parse_profile(net, read_file(o.profile));
  const NashCheck check = is_nash(net, s);
  report.add("nash", check.is_nash);
  report.add("classification", std::string(to_string(classify_ne(s))));
  if (!check.is_nash) {
    report.add("deviator", net.node_id(check.deviation->node));
    report.add("improvement", strategy_name(net, check.deviation->strategy));
    std::string all;
    for (NodeIndex i : deviators(net, s)) all += (all.empty() ? "" : ",") + net.node_id(i);
    report.add("deviators", all);
  }
  return check.is_nash ? kExitOk : kExitNegative;
}

int cmd_ne_enumerate(const Options& o, Report& report) {
  const SocialNetwork net = load_network(o.network);
  const auto equilibria = enumerate_ne(net, o.guard);
  report.add("count", equilibria.size());
  ordered_json list = ordered_json::array();
  for (const auto& s : equilibria) list.push_back(format_profile(net, s));
  report.add("ne", list);
  return equilibria.empty() ? kExitNegative : kExitOk;
}

EquilibriumKind kind_arg(const std::string& text) {
  if (text == "trivial") return EquilibriumKind::kTrivial;
  if (text == "nontrivial") return EquilibriumKind::kNonTrivial;
  if (text == "determined") return EquilibriumKind::kDetermined;
  throw UsageError("--kind must be trivial, nontrivial or determined");
}

int cmd_ne_solve(const Options& o, Report& report) {
  const SocialNetwork net = load_network(o.network);
  const EquilibriumKind kind = kind_arg(o.kind);
  const GraphClass cls = classify_graph(net);
  std::string method = o.method;

  if (method == "auto") {
    if (kind == EquilibriumKind::kTrivial) {
      method = "trivial";
    } else if (cls.is_simple_cycle) {
      method = "cycle";
    } else if (kind == EquilibriumKind::kNonTrivial && cls.is_dag) {
      method = "dag";
    } else if (kind == EquilibriumKind::kNonTrivial && cls.has_no_source_nodes) {
      method = "sourcefree";
    } else {
      method = "brute";
      if (kind == EquilibriumKind::kDetermined) {
        report.add("note",
                   "deciding determined equilibria is NP-complete outside simple cycles; "
                   "using guarded exhaustive search");
      }
    }
  }

  NEReport result;
  if (method == "brute") {
    result = solve_brute_force(net, kind, o.guard);
  } else if (method == "trivial") {
    if (kind != EquilibriumKind::kTrivial) throw UsageError("--method trivial needs --kind trivial");
    result = solve_trivial(net);
  } else if (method == "dag") {
    if (kind != EquilibriumKind::kNonTrivial) {
      throw UsageError("--method dag constructs nontrivial equilibria only");
    }
    const JointStrategy s = construct_ne_dag(net);
    result.exists = true;
    result.method = SolveMethod::kDagConstruction;
    result.witness = s;
    result.classification = classify_ne(s);
  } else if (method == "cycle") {
    if (kind == EquilibriumKind::kTrivial) throw UsageError("--method cycle needs nontrivial or determined");
    result = decide_ne_cycle(net, kind);
  } else if (method == "sourcefree") {
    if (kind != EquilibriumKind::kNonTrivial) {
      throw UsageError("--method sourcefree decides nontrivial equilibria only");
    }
    result = find_nontrivial_ne_sourcefree(net);
  } else {
    throw UsageError("--method must be auto, brute, dag, cycle or sourcefree");
  }
  report.add("kind", std::string(to_string(kind)));
  const ordered_json fields = report_of(net, result);
  for (const auto& [key, value] : fields.items()) report.add(key, value);
  return result.exists ? kExitOk : kExitNegative;
}

SchedulerSpec scheduler_arg(const SocialNetwork& net, const std::string& text) {
  if (text == "smallest-index") return SmallestIndexBestResponse{};
  if (text == "cycle-index") {
    auto order = cycle_order(net);
    if (!order) throw UsageError("--scheduler cycle-index needs a simple cycle");
    return SmallestIndexBestResponse{*order};
  }
  if (text.rfind("random:", 0) == 0) {
    try {
      return RandomBetterResponse{seed_arg(text.substr(7), "--scheduler")};
    } catch (const UsageError& e) {
      throw Error(ErrorCode::kInvalidScheduler, e.what());
    }
  }
  if (text.rfind("fixed:", 0) == 0) {
    FixedOrderBestResponse fixed;
    for (const auto& id : split(text.substr(6), ',')) {
      auto i = net.find_node(id);
      if (!i) throw Error(ErrorCode::kInvalidScheduler, "unknown node '" + id + "' in order");
      fixed.permutation.push_back(*i);
    }
    return fixed;
  }
  throw UsageError("--scheduler must be smallest-index, cycle-index, random:SEED or fixed:ID,...");
}

int cmd_dynamics(const Options& o, Report& report) {
  const SocialNetwork net = load_network(o.network);
  JointStrategy start;
  if (o.start == "all-null") {
    start = JointStrategy::all_null(net.node_count());
  } else if (o.start.rfind("random:", 0) == 0) {
    start = random_profile(net, seed_arg(o.start.substr(7), "--start"));
  } else {
    start = parse_profile(net, read_file(o.start));
  }
  const SchedulerSpec scheduler = scheduler_arg(net, o.scheduler);
  const DynamicsTrace trace = run_scheduler(net, start, scheduler, o.max_steps);

  if (!o.trace_path.empty()) {
    std::string lines;
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
      lines += format_trace_line(net, k + 1, trace.steps[k]) + "\n";
    }
    write_file(o.trace_path, lines);
  }
  const bool reached = trace.outcome == DynamicsOutcome::kReachedNE;
  report.add("start", format_profile(net, start));
  report.add("outcome", reached ? "reached-ne" : "step-budget-exhausted");
  report.add("steps", trace.steps.size());
  report.add("final", format_profile(net, trace.final_state));
  return reached ? kExitOk : kExitBudget;
}

int cmd_igraph(const Options& o, Report& report) {
  const SocialNetwork net = load_network(o.network);
  const ImprovementGraph graph = build_improvement_graph(net, o.guard);
  report.add("states", graph.state_count());
  report.add("transitions", graph.transition_count());
  ordered_json sinks = ordered_json::array();
  for (auto v : graph.sinks()) sinks.push_back(format_profile(net, graph.space().decode(v)));
  report.add("sinks", sinks.size());
  report.add("sink", sinks);
  if (!o.dot_path.empty()) write_file(o.dot_path, to_dot(net, graph));

  if (o.check.empty()) return kExitOk;
  if (o.check == "fip") {
    const auto cycle = graph.find_cycle();
    report.add("fip", !cycle.has_value());
    if (cycle) {
      std::string path;
      for (auto v : *cycle) path += format_profile(net, graph.space().decode(v)) + " -> ";
      path += format_profile(net, graph.space().decode(cycle->front()));
      report.add("cycle", path);
    }
    return cycle ? kExitNegative : kExitOk;
  }
  if (o.check == "weak") {
    const bool weak = graph.all_states_reach_sink();
    report.add("weakly_acyclic", weak);
    return weak ? kExitOk : kExitNegative;
  }
  throw UsageError("--check must be fip or weak");
}

int cmd_metrics(const Options& o, Report& report) {
  const SocialNetwork net = load_network(o.network);
  const EfficiencyReport eff = efficiency(net, o.guard);
  report.add("optimum", eff.optimum.welfare.str());
  report.add("optimum_profile", format_profile(net, eff.optimum.profile));
  report.add("nash_equilibria", eff.ne_count);
  if (eff.has_equilibrium()) {
    report.add("best_ne", format_profile(net, eff.best_ne->profile));
    report.add("best_ne_welfare", eff.best_ne->welfare.str());
    report.add("worst_ne", format_profile(net, eff.worst_ne->profile));
    report.add("worst_ne_welfare", eff.worst_ne->welfare.str());
  }
  report.add("poa", eff.poa.str());
  report.add("poa_raw", eff.poa.numerator.str() + " / " + eff.poa.denominator.str());
  report.add("pos", eff.pos.str());
  report.add("pos_raw", eff.pos.numerator.str() + " / " + eff.pos.denominator.str());
  return eff.has_equilibrium() ? kExitOk : kExitNegative;
}

TriangleParams triangle_args(const Options& o) {
  TriangleParams p;
  if (!o.theta.empty()) p.theta = rational_arg(o.theta, "--theta");
  if (!o.w1.empty()) p.w1 = rational_arg(o.w1, "--w1");
  if (!o.w2.empty()) p.w2 = rational_arg(o.w2, "--w2");
  return p;
}

RandomClass class_arg(const std::string& text) {
  if (text == "dag") return RandomClass::kDag;
  if (text == "cycle") return RandomClass::kSimpleCycle;
  if (text == "nosource") return RandomClass::kNoSource;
  if (text == "general") return RandomClass::kGeneral;
  throw UsageError("--class must be dag, cycle, nosource or general");
}

int cmd_gen(const std::string& which, const Options& o, std::ostream& out, std::ostream& err) {
  std::optional<SocialNetwork> net;
  if (which == "fig1") {
    net = gen_fig1(triangle_args(o));
  } else if (which == "fig3") {
    net = gen_fig3(o.theta.empty() ? Rational(1, 4) : rational_arg(o.theta, "--theta"),
                   o.w.empty() ? Rational(1, 2) : rational_arg(o.w, "--w"));
  } else if (which == "partition") {
    std::vector<Rational> values;
    for (const auto& part : split(o.values, ',')) values.push_back(rational_arg(part, "--a"));
    net = gen_partition_reduction(PartitionInstance::normalized(values), triangle_args(o));
  } else if (which == "pos-witness") {
    net = gen_pos_witness();
  } else if (which == "equitable") {
    net = gen_equitable(load_network(o.base));
  } else {
    net = gen_random(class_arg(o.random_class), o.n, o.products, o.seed);
    err << "generator: random class=" << o.random_class << " n=" << o.n
        << " products=" << o.products << " seed=" << o.seed << " prng=splitmix64\n";
  }
  const std::string document = serialize_network(*net);
  if (o.output.empty()) {
    out << document;
  } else {
    write_file(o.output, document);
  }
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  if (code == ErrorCode::kGuardExceeded) return kExitBudget;
  if (is_validation_code(code) || code == ErrorCode::kSyntaxError ||
      code == ErrorCode::kInvalidProfile || code == ErrorCode::kUnknownNode ||
      code == ErrorCode::kArithmeticOverflow) {
    return kExitInvalid;
  }
  return kExitUsage;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Nash equilibria and improvement dynamics of social network games", "sng"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit one JSON object instead of key: value lines");

  auto network_arg = [&](CLI::App* sub) {
    sub->add_option("network", o.network, "Network document")->required();
  };
  auto guard_arg = [&](CLI::App* sub) {
    sub->add_option("--guard", o.guard, "Maximum number of joint strategies to enumerate");
  };

  auto* validate = app.add_subcommand("validate", "Check a network document");
  network_arg(validate);
  auto* classify = app.add_subcommand("classify", "Report DAG / simple cycle / source-free flags");
  network_arg(classify);
  auto* payoff_cmd = app.add_subcommand("payoff", "Payoffs and social welfare of a profile");
  network_arg(payoff_cmd);
  payoff_cmd->add_option("--profile", o.profile, "Profile document")->required();

  auto* ne = app.add_subcommand("ne", "Nash equilibrium queries");
  ne->require_subcommand(1);
  ne->fallthrough();
  auto* ne_check = ne->add_subcommand("check", "Is the profile a Nash equilibrium?");
  network_arg(ne_check);
  ne_check->add_option("--profile", o.profile, "Profile document")->required();
  auto* ne_enum = ne->add_subcommand("enumerate", "List every Nash equilibrium");
  network_arg(ne_enum);
  guard_arg(ne_enum);
  auto* ne_solve = ne->add_subcommand("solve", "Decide existence of an equilibrium of a kind");
  network_arg(ne_solve);
  guard_arg(ne_solve);
  ne_solve->add_option("--kind", o.kind, "trivial | nontrivial | determined");
  ne_solve->add_option("--method", o.method, "auto | brute | dag | cycle | sourcefree");

  auto* dynamics = app.add_subcommand("dynamics", "Run scheduler-driven improvement dynamics");
  network_arg(dynamics);
  dynamics->add_option("--start", o.start, "Profile document, all-null or random:SEED")->required();
  dynamics->add_option("--scheduler", o.scheduler,
                       "smallest-index | cycle-index | random:SEED | fixed:ID,ID,...");
  dynamics->add_option("--max-steps", o.max_steps, "Step budget")->check(CLI::PositiveNumber);
  dynamics->add_option("--trace", o.trace_path, "Write one line per step to this file");

  auto* igraph = app.add_subcommand("igraph", "Build the improvement graph");
  network_arg(igraph);
  guard_arg(igraph);
  igraph->add_option("--dot", o.dot_path, "Write the graph in DOT format");
  igraph->add_option("--check", o.check, "fip | weak");

  auto* metrics = app.add_subcommand("metrics", "Social optimum, price of anarchy and stability");
  network_arg(metrics);
  guard_arg(metrics);

  auto* gen = app.add_subcommand("gen", "Generate networks");
  gen->require_subcommand(1);
  gen->fallthrough();
  auto output_arg = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write the network here instead of stdout");
  };
  auto* gen_fig1_cmd = gen->add_subcommand("fig1", "Triangle network without equilibria");
  auto* gen_partition_cmd = gen->add_subcommand("partition", "PARTITION reduction network");
  for (auto* sub : {gen_fig1_cmd, gen_partition_cmd}) {
    sub->add_option("--theta", o.theta, "Threshold (default 1/4)");
    sub->add_option("--w1", o.w1, "Source edge weight (default 1/3)");
    sub->add_option("--w2", o.w2, "Triangle edge weight (default 1/2)");
  }
  gen_partition_cmd->add_option("--a", o.values, "Comma-separated positive rationals")->required();
  auto* gen_fig3_cmd = gen->add_subcommand("fig3", "3-cycle with an infinite improvement path");
  gen_fig3_cmd->add_option("--theta", o.theta, "Threshold (default 1/4)");
  gen_fig3_cmd->add_option("--w", o.w, "Edge weight (default 1/2)");
  gen->add_subcommand("pos-witness", "2-cycle with unbounded price of stability");
  auto* gen_equitable_cmd = gen->add_subcommand("equitable", "Re-weight a network equitably");
  gen_equitable_cmd->add_option("--base", o.base, "Network supplying graph and thresholds")->required();
  auto* gen_random_cmd = gen->add_subcommand("random", "Seeded random network");
  gen_random_cmd->add_option("--class", o.random_class, "dag | cycle | nosource | general");
  gen_random_cmd->add_option("--n", o.n, "Number of nodes");
  gen_random_cmd->add_option("--products", o.products, "Number of products");
  gen_random_cmd->add_option("--seed", o.seed, "PRNG seed");
  for (auto* sub : gen->get_subcommands({})) output_arg(sub);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Report report;
  int code = kExitOk;
  try {
    if (validate->parsed()) {
      code = cmd_validate(o, report);
    } else if (classify->parsed()) {
      code = cmd_classify(o, report);
    } else if (payoff_cmd->parsed()) {
      code = cmd_payoff(o, report);
    } else if (ne_check->parsed()) {
      code = cmd_ne_check(o, report);
    } else if (ne_enum->parsed()) {
      code = cmd_ne_enumerate(o, report);
    } else if (ne_solve->parsed()) {
      code = cmd_ne_solve(o, report);
    } else if (dynamics->parsed()) {
      code = cmd_dynamics(o, report);
    } else if (igraph->parsed()) {
      code = cmd_igraph(o, report);
    } else if (metrics->parsed()) {
      code = cmd_metrics(o, report);
    } else {
      for (auto* sub : gen->get_subcommands({})) {
        if (sub->parsed()) return cmd_gen(sub->get_name(), o, out, err);
      }
    }
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    code = exit_code_for(e.code());
    if (validate->parsed() && code == kExitInvalid) {
      report.add("valid", false);
      report.add("error", std::string(to_string(e.code())));
      report.emit(out, o.json);
    }
    err << "error: " << e.what() << "\n";
    return code;
  }
  report.emit(out, o.json);
  return code;
}

}  // namespace sng
