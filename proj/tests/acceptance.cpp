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

// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "sng/cli.hpp"
#include "sng/dynamics.hpp"
#include "sng/equilibria.hpp"
#include "sng/gadgets.hpp"
#include "sng/io.hpp"
#include "sng/metrics.hpp"
#include "sng/profile_space.hpp"
#include "sng/random.hpp"

using namespace sng;

namespace {

// Instances visited by the first eight criteria, replayed by the sink check.
std::vector<SocialNetwork> g_visited;
constexpr std::uint64_t kSinkCheckLimit = 1'500'000;

void visit(const SocialNetwork& net) { g_visited.push_back(net); }

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (failures_ <= 5) std::fprintf(stderr, "  [%s] %s\n", name_.c_str(), what.c_str());
    }
  }
  void note(const std::string& text) { notes_ += (notes_.empty() ? "" : "; ") + text; }

  bool report(double seconds) const {
    std::printf("%-4s %-26s checks=%-6zu failures=%-3zu %.2fs  %s\n", failures_ ? "FAIL" : "PASS",
                name_.c_str(), checks_, failures_, seconds, notes_.c_str());
    std::fflush(stdout);
    return failures_ == 0;
  }

 private:
  std::string name_;
  std::string notes_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
};

std::set<std::string> formatted(const SocialNetwork& net, const std::vector<JointStrategy>& v) {
  std::set<std::string> out;
  for (const auto& s : v) out.insert(format_profile(net, s));
  return out;
}

int cli(std::vector<std::string> args, std::string* out = nullptr) {
  std::ostringstream o, e;
  const int code = run_cli(args, o, e);
  if (out) *out = o.str() + "\x1f" + e.str();
  return code;
}

// ---------------------------------------------------------------------------

void triangle(Criterion& c) {
  const SocialNetwork net = gen_fig1({Rational(1, 4), Rational(1, 3), Rational(1, 2)});
  visit(net);
  c.expect(ProfileSpace(net).size() == 216, "state count");
  const auto start = std::chrono::steady_clock::now();
  c.expect(enumerate_ne(net).empty(), "enumerate_ne finds no equilibrium");
  c.expect(std::chrono::steady_clock::now() - start < std::chrono::seconds(1), "under one second");

  const auto dir = std::filesystem::temp_directory_path() / "sng_acceptance";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "triangle.json").string();
  std::ofstream(path) << serialize_network(net);
  std::string out;
  c.expect(cli({"ne", "enumerate", path}, &out) == kExitNegative, "cli exit code");
  c.expect(out.rfind("count: 0\n", 0) == 0, "cli reports zero equilibria");

  struct Row {
    const char* s1;
    const char* s2;
    const char* s3;
    const char* marked;
  };
  const Row rows[] = {{"t1", "t1", "t2", "1"}, {"t1", "t1", "t3", "3"}, {"t1", "t3", "t2", "3"},
                      {"t1", "t3", "t3", "2"}, {"t2", "t1", "t2", "2"}, {"t2", "t1", "t3", "2"},
                      {"t2", "t3", "t2", "3"}, {"t2", "t3", "t3", "1"}};
  int exact = 0, ambiguous = 0;
  for (const Row& row : rows) {
    JointStrategy s = JointStrategy::all_null(net.node_count());
    for (NodeIndex i = 0; i < net.node_count(); ++i) s[i] = Strategy::product(net.products(i)[0]);
    s[net.node_index("1")] = Strategy::product(net.product_index(row.s1));
    s[net.node_index("2")] = Strategy::product(net.product_index(row.s2));
    s[net.node_index("3")] = Strategy::product(net.product_index(row.s3));
    const NodeIndex marked = net.node_index(row.marked);
    const NashCheck check = is_nash(net, s);
    const auto all = deviators(net, s);
    const std::string tag = std::string("(") + row.s1 + "," + row.s2 + "," + row.s3 + ")";
    c.expect(!check.is_nash && check.deviation, tag + " is not an equilibrium");
    if (!check.deviation) continue;
    // The reported move must be a strict improvement.
    c.expect(payoff_if(net, s, check.deviation->node, check.deviation->strategy) >
                 payoff(net, s, check.deviation->node),
             tag + " reported move improves");
    if (all.size() == 1) {
      ++exact;
      c.expect(check.deviation->node == marked, tag + " reported deviator is the marked player");
    } else {
      // Every triangle player can improve here; the marked one must be among them.
      ++ambiguous;
      c.expect(std::find(all.begin(), all.end(), marked) != all.end(),
               tag + " marked player is a deviator");
    }
  }
  c.note(std::to_string(exact) + " unique-deviator profiles matched exactly, " +
         std::to_string(ambiguous) + " with three deviators matched by membership");
}

void partition(Criterion& c) {
  SplitMix64 rng(20240601);
  int yes = 0, no = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int pattern = 0; pattern < 64; ++pattern) {
    const int n = 2 + pattern % 4;
    const bool planted = (pattern >> 5) & 1;
    std::vector<Rational> values;
    while (true) {
      values.clear();
      Rational balance = 0;
      for (int k = 0; k + 1 < n; ++k) {
        const Rational v(rng.between(1, 12));
        values.push_back(v);
        balance += ((pattern >> k) & 1) ? v : -v;
      }
      // Planted: the last value cancels the signed sum, so the sign pattern is a partition.
      const Rational last = planted ? (balance < 0 ? -balance : balance) : Rational(rng.between(1, 12));
      if (last.is_zero()) continue;
      values.push_back(last);
      break;
    }
    const PartitionInstance instance = PartitionInstance::normalized(values);
    const bool expected = oracle::has_partition(instance.values());
    (expected ? yes : no)++;
    if (planted) c.expect(expected, "planted instance has a partition");
    const SocialNetwork net = gen_partition_reduction(instance);
    visit(net);
    const auto ne = enumerate_ne(net, 20'000'000);
    c.expect(!ne.empty() == expected, "pattern " + std::to_string(pattern) + ": existence");
    for (const auto& s : ne) c.expect(classify_ne(s) != NEClassification::kTrivial, "non-trivial");
  }
  c.expect(std::chrono::steady_clock::now() - start < std::chrono::minutes(5), "under five minutes");
  c.note("64 instances, n=2..5, " + std::to_string(yes) + " with a partition, " +
         std::to_string(no) + " without");
}

void dags(Criterion& c) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 8);
    const SocialNetwork net = gen_random(RandomClass::kDag, n, 1 + static_cast<int>(seed % 3), seed);
    const JointStrategy s = construct_ne_dag(net);
    c.expect(is_nash(net, s).is_nash, "construction is an equilibrium");
    c.expect(classify_ne(s) != NEClassification::kTrivial, "construction is non-trivial");
    oracle::Profile o(net.node_count());
    for (NodeIndex i = 0; i < net.node_count(); ++i) {
      if (!s[i].is_null()) o[i] = net.product_id(s[i].product());
    }
    c.expect(oracle::Game(net.describe()).is_nash(o), "oracle agrees the construction is stable");
    if (ProfileSpace(net).size() <= 50'000) visit(net);
  }
  for (std::uint64_t seed = 1000; seed < 1050; ++seed) {
    const SocialNetwork net = gen_random(RandomClass::kDag, 2 + static_cast<int>(seed % 5), 2, seed);
    c.expect(has_fip(net), "DAG game has the FIP");
    visit(net);
  }
  c.note("100 constructions, 50 FIP checks");
}

// Cycle where every node offers every product and only the last product is sustained.
SocialNetwork worst_case_cycle(int n, int products) {
  NetworkDescription d;
  for (int t = 0; t < products; ++t) d.products.push_back("t" + std::to_string(t + 1));
  for (int i = 0; i < n; ++i) {
    NodeSpec node;
    char id[16];
    std::snprintf(id, sizeof id, "n%06d", i);
    node.id = id;
    node.products = d.products;
    for (int t = 0; t < products; ++t) {
      node.thresholds[d.products[t]] = (t + 1 < products && i == n - 1) ? Rational(3, 4) : Rational(1, 4);
    }
    d.nodes.push_back(node);
  }
  for (int i = 0; i < n; ++i) {
    d.edges.push_back({d.nodes[i].id, d.nodes[(i + 1) % n].id, Rational(1, 2)});
  }
  return SocialNetwork::build(d);
}

void cycles(Criterion& c) {
  int nontrivial = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 2 + static_cast<int>(seed % 6);
    const int products = 1 + static_cast<int>((seed / 6) % 3);
    const SocialNetwork net = gen_random(RandomClass::kSimpleCycle, n, products, seed);
    visit(net);
    const oracle::Existence truth = oracle::existence(oracle::Game(net.describe()).equilibria());
    const NEReport a = decide_ne_cycle(net, EquilibriumKind::kNonTrivial);
    const NEReport b = decide_ne_cycle(net, EquilibriumKind::kDetermined);
    c.expect(a.exists == truth.nontrivial, "non-trivial existence");
    c.expect(b.exists == truth.determined, "determined existence");
    c.expect(a.exists == (solve_brute_force(net, EquilibriumKind::kNonTrivial).exists),
             "library brute force agrees");
    c.expect(a.work <= static_cast<std::uint64_t>(n) * net.product_count(), "work bound");
    if (a.exists) {
      ++nontrivial;
      c.expect(is_nash(net, *a.witness).is_nash, "witness is an equilibrium");
    }
  }

  // Work on the worst case is exactly n * |P|; timing grows linearly with it.
  std::string scaling;
  for (int n : {1000, 4000, 16000}) {
    const SocialNetwork net = worst_case_cycle(n, 3);
    const NEReport r = decide_ne_cycle(net, EquilibriumKind::kDetermined);
    c.expect(r.exists, "worst case has the last product");
    c.expect(r.work == static_cast<std::uint64_t>(3 * n), "worst-case work equals n*|P|");
    scaling += " n=" + std::to_string(n) + ":" + std::to_string(r.work);
  }
  c.note("300 cycles (" + std::to_string(nontrivial) + " with equilibria); work" + scaling);
}

void source_free(Criterion& c) {
  int found = 0, support_checked = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const int products = 1 + static_cast<int>((seed / 5) % 3);
    const SocialNetwork net = gen_random(RandomClass::kNoSource, n, products, seed);
    if (ProfileSpace(net).size() <= kSinkCheckLimit) visit(net);
    const auto truth = oracle::Game(net.describe()).equilibria();
    const oracle::Existence e = oracle::existence(truth);
    const NEReport r = find_nontrivial_ne_sourcefree(net);
    c.expect(r.exists == e.nontrivial, "existence agrees with brute force");
    if (r.exists) {
      ++found;
      c.expect(is_nash(net, *r.witness).is_nash, "witness is an equilibrium");
      c.expect(truth.contains(format_profile(net, *r.witness)), "oracle lists the witness");
    }
    const auto ne = enumerate_ne(net);
    c.expect(formatted(net, ne) == truth, "enumeration matches the oracle");
    for (const auto& s : ne) {
      if (classify_ne(s) == NEClassification::kTrivial) continue;
      ++support_checked;
      c.expect(verify_sustained_support(net, s), "equilibrium has sustained support");
    }
    bool any_core = false;
    for (ProductIndex t = 0; t < net.product_count(); ++t) {
      any_core = any_core || find_self_sustaining_scs(net, t).has_value();
    }
    const bool only_trivial = ne.size() == 1 && classify_ne(ne[0]) == NEClassification::kTrivial;
    c.expect(any_core != only_trivial, "no core for any product iff only the trivial equilibrium");
  }
  c.note("300 networks, " + std::to_string(found) + " with non-trivial equilibria, " +
         std::to_string(support_checked) + " support checks");
}

void efficiency_limits(Criterion& c) {
  NetworkDescription d;
  d.products = {"t"};
  for (const char* id : {"1", "2", "3"}) d.nodes.push_back({id, {"t"}, {{"t", Rational(1, 4)}}});
  d.edges = {{"1", "2", Rational(1, 2)}, {"2", "3", Rational(1, 2)}, {"3", "1", Rational(1, 2)}};
  const SocialNetwork cycle = SocialNetwork::build(d);
  visit(cycle);
  c.expect(!sustainable_set(cycle, 0).empty(), "cycle sustains its product");
  const EfficiencyReport a = efficiency(cycle);
  c.expect(a.poa.kind == PriceRatio::Kind::kInfinite, "poa is infinite on the cycle");
  c.expect(a.poa.str() == "inf", "poa prints as inf");

  const SocialNetwork witness = gen_pos_witness();
  visit(witness);
  const EfficiencyReport b = efficiency(witness);
  c.expect(b.pos.kind == PriceRatio::Kind::kInfinite, "pos is infinite on the witness");
  c.expect(b.optimum.welfare == Rational(3, 10), "witness optimum");
  c.note("poa " + a.poa.str() + " (" + a.poa.numerator.str() + "/" + a.poa.denominator.str() +
         "), pos " + b.pos.str() + " (" + b.pos.numerator.str() + "/" + b.pos.denominator.str() + ")");
}

void two_player(Criterion& c) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const bool cycle = seed % 2 == 1;
    const SocialNetwork net = gen_random_two_player(cycle, 1 + static_cast<int>((seed / 2) % 4), seed);
    visit(net);
    c.expect(build_improvement_graph(net).is_acyclic(), "improvement graph is acyclic");
  }
  c.note("100 one-edge and 100 two-cycle games");
}

void infinite_path(Criterion& c) {
  const SocialNetwork net = gen_fig3(Rational(1, 4), Rational(1, 2));
  visit(net);
  const ImprovementGraph graph = build_improvement_graph(net);
  auto state = [&](const char* a, const char* b, const char* x) {
    JointStrategy s = JointStrategy::all_null(3);
    s[0] = Strategy::product(net.product_index(a));
    s[1] = Strategy::product(net.product_index(b));
    s[2] = Strategy::product(net.product_index(x));
    return graph.space().encode(s);
  };
  const std::uint64_t ring[] = {state("t2", "t2", "t1"), state("t1", "t2", "t1"),
                                state("t1", "t2", "t2"), state("t1", "t1", "t2"),
                                state("t2", "t1", "t2"), state("t2", "t1", "t1")};
  const NodeIndex movers[] = {0, 2, 1, 0, 2, 1};
  for (int k = 0; k < 6; ++k) {
    c.expect(graph.has_transition(ring[k], movers[k], ring[(k + 1) % 6]),
             "cycle edge " + std::to_string(k));
  }
  c.expect(!graph.is_acyclic(), "no FIP");
  c.expect(is_weakly_acyclic(net), "weakly acyclic");

  const std::uint64_t bound = 3 * 3 * 3;
  std::uint64_t longest = 0;
  const auto order = cycle_order(net);
  for (std::uint64_t v = 0; v < graph.state_count(); ++v) {
    const auto trace = run_scheduler(net, graph.space().decode(v), SmallestIndexBestResponse{*order}, bound);
    c.expect(trace.outcome == DynamicsOutcome::kReachedNE, "start " + std::to_string(v) + " terminates");
    c.expect(is_nash(net, trace.final_state).is_nash, "ends in an equilibrium");
    longest = std::max<std::uint64_t>(longest, trace.steps.size());
  }

  std::uint64_t runs = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 2 + static_cast<int>(seed % 7);
    const SocialNetwork cyc = gen_random(RandomClass::kSimpleCycle, n, 1 + static_cast<int>(seed % 3), seed);
    if (ProfileSpace(cyc).size() <= 50'000) visit(cyc);
    const UniformFipReport r = uniform_fip_cycle_check(cyc, 20, seed);
    c.expect(r.holds, "uniform check holds");
    runs += r.runs;
  }
  c.note("27 starts, longest run " + std::to_string(longest) + " of " + std::to_string(bound) +
         "; 300 cycles, " + std::to_string(runs) + " runs");
}

void sinks_are_equilibria(Criterion& c) {
  std::size_t compared = 0, skipped = 0;
  for (const SocialNetwork& net : g_visited) {
    if (ProfileSpace(net).size() > kSinkCheckLimit) {
      ++skipped;
      continue;
    }
    const ImprovementGraph graph = build_improvement_graph(net, kSinkCheckLimit);
    std::vector<JointStrategy> sinks;
    for (auto v : graph.sinks()) sinks.push_back(graph.space().decode(v));
    c.expect(sinks == enumerate_ne(net, kSinkCheckLimit), "sinks equal equilibria");
    ++compared;
  }
  c.note(std::to_string(compared) + " instances compared, " + std::to_string(skipped) +
         " above " + std::to_string(kSinkCheckLimit) + " states skipped");
}

void determinism(Criterion& c) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "sng_acceptance";
  fs::create_directories(dir);
  auto file = [&](const std::string& name) { return (dir / name).string(); };
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  };

  std::ofstream(file("fig1.json")) << serialize_network(gen_fig1());
  std::ofstream(file("fig3.json")) << serialize_network(gen_fig3());
  std::ofstream(file("nosource.json")) << serialize_network(gen_random(RandomClass::kNoSource, 5, 2, 3));
  std::ofstream(file("start.json")) << R"({"1": "t2", "2": "t2", "3": "t1"})";

  const std::vector<std::vector<std::string>> commands = {
      {"validate", file("fig1.json")},
      {"classify", file("nosource.json")},
      {"payoff", file("fig3.json"), "--profile", file("start.json")},
      {"ne", "check", file("fig3.json"), "--profile", file("start.json")},
      {"ne", "enumerate", file("nosource.json")},
      {"ne", "enumerate", file("fig3.json"), "--json"},
      {"ne", "solve", file("fig1.json"), "--kind", "nontrivial"},
      {"ne", "solve", file("nosource.json"), "--kind", "nontrivial"},
      {"ne", "solve", file("fig3.json"), "--kind", "determined", "--method", "cycle"},
      {"dynamics", file("fig3.json"), "--start", file("start.json"), "--scheduler", "random:5",
       "--trace", file("trace.txt")},
      {"dynamics", file("nosource.json"), "--start", "random:8", "--scheduler", "smallest-index"},
      {"igraph", file("fig3.json"), "--check", "fip", "--dot", file("g.dot")},
      {"igraph", file("nosource.json"), "--check", "weak"},
      {"metrics", file("nosource.json")},
      {"metrics", file("fig3.json"), "--json"},
      {"gen", "fig1"},
      {"gen", "fig3", "--theta", "1/5", "--w", "2/3"},
      {"gen", "partition", "--a", "1/2,1/4,1/4"},
      {"gen", "pos-witness"},
      {"gen", "equitable", "--base", file("nosource.json")},
      {"gen", "random", "--class", "general", "--n", "6", "--products", "3", "--seed", "17"},
  };
  for (const auto& args : commands) {
    std::string first, second;
    const int a = cli(args, &first);
    const std::string trace1 = slurp(file("trace.txt")), dot1 = slurp(file("g.dot"));
    const int b = cli(args, &second);
    const std::string trace2 = slurp(file("trace.txt")), dot2 = slurp(file("g.dot"));
    std::string name;
    for (const auto& arg : args) name += arg.substr(0, 12) + " ";
    c.expect(a == b && first == second, "repeatable: " + name);
    c.expect(trace1 == trace2 && dot1 == dot2, "repeatable side files: " + name);
  }

  int round_trips = 0;
  std::vector<SocialNetwork> nets = {gen_fig1(), gen_fig3(), gen_pos_witness(),
                                     gen_partition_reduction(PartitionInstance::normalized({1, 2, 3}))};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    nets.push_back(gen_random(static_cast<RandomClass>(seed % 4), 2 + static_cast<int>(seed % 6), 3, seed));
  }
  for (const auto& net : nets) {
    const std::string canonical = serialize_network(net);
    c.expect(serialize_network(parse_network(canonical)) == canonical, "serialize after parse");
    c.expect(parse_network(canonical) == net, "parse after serialize");
    ++round_trips;
  }
  c.note(std::to_string(commands.size()) + " commands run twice, " + std::to_string(round_trips) +
         " canonical round trips");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"no-equilibrium-triangle", triangle},  {"partition-reduction", partition},
      {"dag-construction", dags},             {"cycle-procedure", cycles},
      {"source-free-search", source_free},    {"unbounded-prices", efficiency_limits},
      {"two-player-fip", two_player},         {"infinite-path-cycle", infinite_path},
      {"sinks-are-equilibria", sinks_are_equilibria}, {"determinism", determinism},
  };
  bool all = true;
  int k = 0;
  for (const auto& [name, body] : criteria) {
    Criterion c(std::to_string(++k) + ". " + name);
    const auto start = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("unexpected exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = c.report(seconds) && all;
  }
  std::printf("%s\n", all ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILURES");
  return all ? 0 : 1;
}
