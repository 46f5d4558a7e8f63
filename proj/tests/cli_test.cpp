// Copyright 2026 The tortho Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tortho/cli.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "tortho/io.hpp"

using namespace tortho;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("tortho_cli_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

}  // namespace

TEST_CASE("gen writes the family") {
  const Run r = run({"gen", "--order", "4"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == serialize_square_file(make_mols_family(4)));

  const Run shift = run({"gen", "--order", "2", "--method", "shift"});
  CHECK(shift.status == kExitOk);
  CHECK(shift.out.starts_with("2 2\n"));

  const auto path = std::filesystem::temp_directory_path() / "tortho_cli_gen_out.txt";
  CHECK(run({"gen", "--order", "5", "--out", path.string()}).status == kExitOk);
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == serialize_square_file(make_mols_family(5)));
}

TEST_CASE("domain errors exit 1 with one line") {
  const Run r = run({"gen", "--order", "14"});
  CHECK(r.status == kExitDomainError);
  CHECK(r.err == "error: no construction available for order 14: neither n nor n+1 is prime\n");
  CHECK(run({"gen", "--order", "4", "--method", "additive"}).status == kExitDomainError);
  CHECK(run({"verify", "--t", "3", "--in", "/nonexistent/tortho"}).status == kExitDomainError);
  CHECK(run({"turan", "--m", "6", "--n", "5"}).status == kExitDomainError);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"frobnicate"}).status == kExitUsage);
  CHECK(run({"gen"}).status == kExitUsage);
  CHECK(run({"gen", "--order", "four"}).status == kExitUsage);
  CHECK(run({"gen", "--order", "4", "--method", "magic"}).status == kExitUsage);
  CHECK(run({"turan", "--m", "2"}).status == kExitUsage);
  const std::string file = temp_file("usage.txt", serialize_square_file(make_mols_family(5)));
  CHECK(run({"graph", "--t", "2", "--in", file, "--format", "gml"}).status == kExitUsage);
  CHECK(run({"graph", "--t", "3", "--in", file, "--format", "dot", "--squares", "1,2"}).status == kExitUsage);
  CHECK(run({"channels", "--t", "2", "--in", file, "--vertex", "A-1"}).status == kExitUsage);
  CHECK(run({"--help"}).status == kExitOk);
}

TEST_CASE("verify reports each subset") {
  const std::string good = temp_file("verify5.txt", serialize_square_file(make_mols_family(5)));
  const Run ok = run({"verify", "--t", "2", "--in", good});
  CHECK(ok.status == kExitOk);
  CHECK(ok.out.find("squares 1,2: orthogonal (25/25 distinct)") != std::string::npos);
  CHECK(ok.out.find("verdict: 6/6 subsets 2-orthogonal") != std::string::npos);

  // Stacking (a, b, a) is only as good as (a, b), and adjacent order-4
  // shift squares are not 2-orthogonal.
  const MolsSet order4 = make_mols_family(4);
  const std::string dup = temp_file(
      "verifydup.txt",
      serialize_square_file(MolsSet({order4[0], order4[1], order4[2], order4[0]},
                                    FamilyKind::kExternal)));
  const Run bad = run({"verify", "--t", "3", "--in", dup});
  CHECK(bad.status == kExitDomainError);
  CHECK(bad.out.find("squares 1,2,3: orthogonal (16/16 distinct)") != std::string::npos);
  CHECK(bad.out.find("squares 1,2,4: NOT orthogonal (12/16 distinct); "
                     "cells (2,1) and (4,3) share a tuple") != std::string::npos);
  CHECK(bad.out.find("verdict: 2/4 subsets 3-orthogonal") != std::string::npos);

  const Run pairs = run({"verify", "--t", "2", "--in", dup});
  CHECK(pairs.status == kExitDomainError);
  CHECK(pairs.out.find("squares 1,4: NOT orthogonal (4/16 distinct)") != std::string::npos);
}

TEST_CASE("graph exports") {
  const std::string file = temp_file("graph4.txt", serialize_square_file(make_mols_family(4)));
  const Run edges = run({"graph", "--t", "3", "--in", file, "--format", "edges"});
  CHECK(edges.status == kExitOk);
  CHECK(edges.out.find("\nA1 B2\n") != std::string::npos);

  const Run chosen = run({"graph", "--t", "3", "--in", file, "--format", "json", "--squares", "4,1,3"});
  CHECK(chosen.status == kExitOk);
  CHECK(chosen.out.find("\"tuple\": [\n") != std::string::npos);

  const Run rejected = run({"graph", "--t", "2", "--in", file, "--format", "dot"});
  CHECK(rejected.status == kExitDomainError);
  CHECK(rejected.err.find("cells (2,1) and (4,3) share a tuple") != std::string::npos);
}

TEST_CASE("stats on the order-4, t=3 graph") {
  const std::string file = temp_file("stats4.txt", serialize_square_file(make_mols_family(4)));
  const Run r = run({"stats", "--t", "3", "--in", file});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("vertices: 12\n") != std::string::npos);
  CHECK(r.out.find("edges: 32\n") != std::string::npos);
  CHECK(r.out.find("max multiplicity: 2\n") != std::string::npos);
  CHECK(r.out.find("oracle max multiplicity: 2\n") != std::string::npos);
  CHECK(r.out.find("note: n+1=5 is prime: multiple edges expected for t=3..n; "
                   "computed max multiplicity 2: consistent\n") != std::string::npos);
}

TEST_CASE("stats on a t=2 prime graph") {
  const std::string file = temp_file("stats5.txt", serialize_square_file(make_mols_family(5)));
  const Run r = run({"stats", "--t", "2", "--in", file});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("bipartite: yes\n") != std::string::npos);
  CHECK(r.out.find("simple: yes\n") != std::string::npos);
}

TEST_CASE("turan prints both counts") {
  const Run r = run({"turan", "--m", "3", "--n", "5"});
  CHECK(r.status == kExitOk);
  CHECK(r.out == "formula: 8\nbrute force: 8\n");
}

TEST_CASE("channels through a vertex") {
  const std::string file = temp_file("chan4.txt", serialize_square_file(make_mols_family(4)));
  const Run r = run({"channels", "--t", "3", "--in", file, "--vertex", "C:3"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.starts_with("4 channels through C3\ncell (1,1): A1 -> B2 -> C3\n"));
  CHECK(run({"channels", "--t", "3", "--in", file, "--vertex", "3:3"}).out == r.out);
  CHECK(run({"channels", "--t", "3", "--in", file, "--vertex", "D:1"}).status == kExitDomainError);
}

TEST_CASE("check runs the oracle suite") {
  const Run r = run({"check"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("DISAGREE") == std::string::npos);
  CHECK(r.out.ends_with("all checks agree\n"));
}
