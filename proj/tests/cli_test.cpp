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

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "sng/cli.hpp"
#include "sng/gadgets.hpp"
#include "sng/io.hpp"

using namespace sng;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class Workspace {
 public:
  Workspace() : dir_(fs::temp_directory_path() / ("sng_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Workspace() { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) const {
    const fs::path path = dir_ / name;
    std::ofstream(path) << content;
    return path.string();
  }
  std::string read(const std::string& name) const {
    std::ifstream in(dir_ / name);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

}  // namespace

TEST_CASE("cli: validate and classify") {
  Workspace ws;
  const std::string fig3 = ws.write("fig3.json", serialize_network(gen_fig3()));
  Run r = run({"validate", fig3});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "valid: true\nnodes: 3\nedges: 3\nproducts: 2\n");

  r = run({"classify", fig3});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "is_dag: false\nis_simple_cycle: true\nhas_no_source_nodes: true\n");

  const std::string bad = ws.write("bad.json", "{\"c0\": \"1\"");
  r = run({"validate", bad});
  CHECK(r.code == kExitInvalid);
  CHECK(r.out.find("valid: false") != std::string::npos);
  CHECK(r.err.find("syntax-error") != std::string::npos);

  std::string doc = serialize_network(gen_fig3());
  doc.replace(doc.find("\"1/2\""), 5, "\"3/2\"");
  r = run({"validate", ws.write("heavy.json", doc)});
  CHECK(r.code == kExitInvalid);
  CHECK(r.out.find("error: weight-out-of-range") != std::string::npos);

  CHECK(run({"validate", ws.path("missing.json")}).code == kExitUsage);
}

TEST_CASE("cli: payoff and ne check") {
  Workspace ws;
  const std::string fig3 = ws.write("fig3.json", serialize_network(gen_fig3()));
  const std::string mixed = ws.write("mixed.json", R"({"1": "t1", "2": "t2", "3": null})");
  Run r = run({"payoff", fig3, "--profile", mixed});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "payoff 1: -1/4\npayoff 2: -1/4\npayoff 3: 0\nsocial_welfare: -1/2\n");

  r = run({"ne", "check", fig3, "--profile", mixed});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("nash: false\n") == 0);
  CHECK(r.out.find("deviator: 1\nimprovement: _\ndeviators: 1,2,3\n") != std::string::npos);

  const std::string agree = ws.write("agree.json", R"({"1": "t2", "2": "t2", "3": "t2"})");
  r = run({"ne", "check", fig3, "--profile", agree});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "nash: true\nclassification: determined\n");

  const std::string partial = ws.write("partial.json", R"({"1": "t2"})");
  CHECK(run({"ne", "check", fig3, "--profile", partial}).code == kExitInvalid);
}

TEST_CASE("cli: ne enumerate and solve") {
  Workspace ws;
  const std::string fig1 = ws.write("fig1.json", serialize_network(gen_fig1()));
  const std::string fig3 = ws.write("fig3.json", serialize_network(gen_fig3()));

  Run r = run({"ne", "enumerate", fig1});
  CHECK(r.code == kExitNegative);
  CHECK(r.out == "count: 0\n");
  r = run({"ne", "enumerate", fig3});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "count: 3\nne 1: 1=t1,2=t1,3=t1\nne 2: 1=t2,2=t2,3=t2\nne 3: 1=_,2=_,3=_\n");
  r = run({"ne", "enumerate", fig1, "--guard", "100"});
  CHECK(r.code == kExitBudget);
  CHECK(r.err.find("guard-exceeded") != std::string::npos);

  r = run({"ne", "solve", fig1, "--kind", "nontrivial"});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("exists: false") != std::string::npos);

  r = run({"ne", "solve", fig3, "--kind", "determined"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "kind: determined\nexists: true\nmethod: cycle\nclassification: determined\n"
                 "witness: 1=t1,2=t1,3=t1\n");

  r = run({"ne", "solve", fig3, "--kind", "nontrivial", "--method", "sourcefree"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("witness: 1=t1,2=t1,3=t1") != std::string::npos);

  r = run({"ne", "solve", fig1, "--kind", "trivial"});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("deviator: src_t1\nimprovement: t1\n") != std::string::npos);

  r = run({"ne", "solve", fig1, "--kind", "determined"});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("note: ") == 0);

  const std::string dag =
      ws.write("dag.json", serialize_network(gen_random(RandomClass::kDag, 5, 2, 3)));
  r = run({"ne", "solve", dag, "--kind", "nontrivial"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("method: dag") != std::string::npos);

  CHECK(run({"ne", "solve", fig1, "--kind", "nontrivial", "--method", "dag"}).code == kExitUsage);
  CHECK(run({"ne", "solve", fig1, "--kind", "nontrivial", "--method", "cycle"}).code == kExitUsage);
  CHECK(run({"ne", "solve", fig1, "--kind", "nontrivial", "--method", "sourcefree"}).code ==
        kExitUsage);
  CHECK(run({"ne", "solve", fig3, "--kind", "sometimes"}).code == kExitUsage);
  CHECK(run({"ne", "solve", fig3, "--method", "magic"}).code == kExitUsage);
}

TEST_CASE("cli: auto dispatch agrees with brute force") {
  Workspace ws;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    for (auto cls : {RandomClass::kDag, RandomClass::kSimpleCycle, RandomClass::kNoSource,
                     RandomClass::kGeneral}) {
      const std::string net = ws.write("r.json", serialize_network(gen_random(cls, 4, 2, seed)));
      for (const char* kind : {"trivial", "nontrivial", "determined"}) {
        const Run automatic = run({"ne", "solve", net, "--kind", kind});
        const Run brute = run({"ne", "solve", net, "--kind", kind, "--method", "brute"});
        CHECK(automatic.code == brute.code);
      }
    }
  }
}

TEST_CASE("cli: dynamics") {
  Workspace ws;
  const std::string fig3 = ws.write("fig3.json", serialize_network(gen_fig3()));
  const std::string start = ws.write("start.json", R"({"1": "t2", "2": "t2", "3": "t1"})");
  Run r = run({"dynamics", fig3, "--start", start, "--trace", ws.path("trace.txt")});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "start: 1=t2,2=t2,3=t1\noutcome: reached-ne\nsteps: 2\nfinal: 1=t1,2=t1,3=t1\n");
  CHECK(ws.read("trace.txt") ==
        "step 1: node=1 t2 -> t1 delta=1/2\nstep 2: node=2 t2 -> t1 delta=1/2\n");

  r = run({"dynamics", fig3, "--start", start, "--scheduler", "fixed:1,3,2", "--max-steps", "6"});
  CHECK(r.code == kExitBudget);
  CHECK(r.out.find("outcome: step-budget-exhausted\nsteps: 6\nfinal: 1=t2,2=t2,3=t1\n") !=
        std::string::npos);

  r = run({"dynamics", fig3, "--start", "random:9", "--scheduler", "random:4"});
  CHECK(r.code == kExitOk);
  CHECK(run({"dynamics", fig3, "--start", "random:9", "--scheduler", "random:4"}).out == r.out);

  CHECK(run({"dynamics", fig3, "--start", "all-null", "--scheduler", "cycle-index"}).code ==
        kExitOk);
  CHECK(run({"dynamics", fig3, "--start", "all-null", "--scheduler", "fixed:1,2"}).code ==
        kExitUsage);
  CHECK(run({"dynamics", fig3, "--start", "all-null", "--scheduler", "bogus"}).code == kExitUsage);
  CHECK(run({"dynamics", fig3, "--start", "all-null", "--max-steps", "0"}).code == kExitUsage);
  CHECK(run({"dynamics", fig3, "--start", "random:x"}).code == kExitUsage);
}

TEST_CASE("cli: igraph") {
  Workspace ws;
  const std::string fig3 = ws.write("fig3.json", serialize_network(gen_fig3()));
  Run r = run({"igraph", fig3, "--check", "fip", "--dot", ws.path("g.dot")});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("fip: false") != std::string::npos);
  CHECK(ws.read("g.dot").rfind("digraph improvement {", 0) == 0);

  r = run({"igraph", fig3, "--check", "weak"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("weakly_acyclic: true") != std::string::npos);

  const std::string two =
      ws.write("two.json", serialize_network(gen_random_two_player(true, 3, 1)));
  CHECK(run({"igraph", two, "--check", "fip"}).code == kExitOk);
  CHECK(run({"igraph", fig3, "--check", "sometimes"}).code == kExitUsage);
  CHECK(run({"igraph", fig3, "--guard", "5"}).code == kExitBudget);
}

TEST_CASE("cli: metrics") {
  Workspace ws;
  const std::string pos = ws.write("pos.json", serialize_network(gen_pos_witness()));
  Run r = run({"metrics", pos});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("pos: inf\n") != std::string::npos);
  CHECK(r.out.find("optimum: 3/10\n") == 0);

  const std::string fig1 = ws.write("fig1.json", serialize_network(gen_fig1()));
  r = run({"metrics", fig1});
  CHECK(r.code == kExitNegative);
  CHECK(r.out.find("poa: undefined-no-equilibrium") != std::string::npos);
}

TEST_CASE("cli: generators") {
  Workspace ws;
  Run r = run({"gen", "fig1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == serialize_network(gen_fig1()));
  CHECK(run({"gen", "fig3", "--theta", "1/3", "--w", "1/2"}).out ==
        serialize_network(gen_fig3(fixtures::q("1/3"), fixtures::q("1/2"))));
  CHECK(run({"gen", "pos-witness"}).out == serialize_network(gen_pos_witness()));
  r = run({"gen", "partition", "--a", "2,1,1", "-o", ws.path("p.json")});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  CHECK(parse_network(ws.read("p.json")) ==
        gen_partition_reduction(PartitionInstance::normalized({2, 1, 1})));

  const std::string base = ws.write("base.json", serialize_network(gen_fig3()));
  CHECK(run({"gen", "equitable", "--base", base}).out == serialize_network(gen_equitable(gen_fig3())));

  r = run({"gen", "random", "--class", "cycle", "--n", "5", "--products", "3", "--seed", "12"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == serialize_network(gen_random(RandomClass::kSimpleCycle, 5, 3, 12)));
  CHECK(r.err.find("seed=12") != std::string::npos);

  CHECK(run({"gen", "fig1", "--theta", "1/2"}).code == kExitUsage);
  CHECK(run({"gen", "fig1", "--theta", "0.25"}).code == kExitUsage);
  CHECK(run({"gen", "random", "--class", "cycle", "--n", "1"}).code == kExitUsage);
  CHECK(run({"gen", "random", "--class", "tree"}).code == kExitUsage);
}

TEST_CASE("cli: usage, help and json") {
  Workspace ws;
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"ne"}).code == kExitUsage);
  CHECK(run({"validate"}).code == kExitUsage);
  Run r = run({"--help"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("Usage:") != std::string::npos);

  const std::string fig3 = ws.write("fig3.json", serialize_network(gen_fig3()));
  r = run({"ne", "enumerate", fig3, "--json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("\"count\": 3") != std::string::npos);
  CHECK(r.out.find("\"1=_,2=_,3=_\"") != std::string::npos);
  CHECK(run({"--json", "classify", fig3}).out == run({"classify", fig3, "--json"}).out);
}
