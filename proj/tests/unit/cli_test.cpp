// Copyright 2026 The Authors.
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

// Drives the orthomat binary through a shell and checks outputs and exit
// codes.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "gtest/gtest.h"
#include "nlohmann/json.hpp"

namespace {

struct Result {
  int status = -1;
  std::string out;
};

const std::string kData = ORTHOMAT_DATA_DIR;

Result run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string(ORTHOMAT_BINARY) + " " + args +
                          (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf;
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string data(const std::string& name) { return kData + "/" + name; }

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

TEST(CliTest, CheckLantern) {
  const Result r = run("check " + data("mo2.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "orthomatroid: yes; simple: yes; rank: 2; irreducible: yes\n")) << r.out;
}

TEST(CliTest, CheckEdgePlusPointPrintsWitness) {
  const Result r = run("check " + data("edge_plus_point.json"));
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(has(r.out, "exchange: FAILS; F = {} ({}), x = 0 (a), y = 2 (c)")) << r.out;
  const Result j = run("check --format json " + data("edge_plus_point.json"));
  EXPECT_EQ(j.status, 1);
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["exchange"]["witness"]["x"], 0);
  EXPECT_EQ(doc["exchange"]["witness"]["y"], 2);
  EXPECT_EQ(doc["exchange"]["witness"]["labels"]["y"], "c");
}

TEST(CliTest, MalformedInputExitsTwo) {
  const Result r = run("check " + data("malformed.json"), true);
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(has(r.out, "ParseError")) << r.out;
  EXPECT_EQ(run("check " + data("missing.json")).status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
  EXPECT_EQ(run("").status, 2);
}

TEST(CliTest, LatticeFormats) {
  const Result dot = run("lattice " + data("mo2.json") + " --format dot");
  EXPECT_EQ(dot.status, 0);
  std::size_t nodes = 0;
  for (auto p = dot.out.find("[label="); p != std::string::npos; p = dot.out.find("[label=", p + 1)) {
    ++nodes;
  }
  EXPECT_EQ(nodes, 6u);
  const Result json = run("lattice " + data("discrete3.json"));
  EXPECT_EQ(json.status, 0);
  const auto doc = nlohmann::json::parse(json.out);
  EXPECT_EQ(doc["nodes"].size(), 8u);
  EXPECT_EQ(doc["hasse"].size(), 12u);
}

TEST(CliTest, NodeBudget) {
  const Result r = run("lattice " + data("big_rays.json") + " --node-budget 10", true);
  EXPECT_EQ(r.status, 2);
  EXPECT_TRUE(has(r.out, "ResourceLimit")) << r.out;
}

TEST(CliTest, Basis) {
  const Result a = run("basis " + data("mo2.json") + " --span 0,1,2,3 --start 0");
  EXPECT_EQ(a.status, 0);
  EXPECT_TRUE(has(a.out, "B = {0,1}")) << a.out;
  const Result b = run("basis " + data("discrete3.json") + " --span 0,1,2 --start \"\"");
  EXPECT_EQ(b.status, 0);
  EXPECT_TRUE(has(b.out, "B = {0,1,2}")) << b.out;
  const Result c = run("basis " + data("mo2.json") + " --span 0 --start 2", true);
  EXPECT_EQ(c.status, 2);
  EXPECT_TRUE(has(c.out, "NotInClosure")) << c.out;
  const Result d = run("basis " + data("mo2.json") + " --span a1,a1p,a2,a2p --start a2p");
  EXPECT_TRUE(has(d.out, "B = {2,3}")) << d.out;
}

TEST(CliTest, ComponentsAndRank) {
  const Result r = run("components " + data("mo3.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "1 component, size 6, rank 2\n");
  const Result k = run("rank " + data("discrete3.json"));
  EXPECT_EQ(k.status, 0);
  EXPECT_TRUE(has(k.out, "3")) << k.out;
  EXPECT_EQ(run("components " + data("path3.json")).status, 1);
}

TEST(CliTest, SimplifyPath) {
  const Result r = run("simplify " + data("path3.json"));
  EXPECT_EQ(r.status, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["orthoset"]["n"], 2);
  EXPECT_EQ(doc["quotient_map"], nlohmann::json::parse("[1,0,1]"));
}

TEST(CliTest, Iso) {
  const Result r = run("iso " + data("mo2.json") + " " + data("mo2_relabelled.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "[")) << r.out;
  const Result n = run("iso " + data("mo2.json") + " " + data("discrete3.json"));
  EXPECT_EQ(n.status, 1);
  EXPECT_TRUE(has(n.out, "NOT ISOMORPHIC")) << n.out;
}

TEST(CliTest, PropsysOnBenzene) {
  const Result r = run("propsys " + data("o6.json"));
  EXPECT_EQ(r.status, 1);
  EXPECT_TRUE(has(r.out, "orthomodular")) << r.out;
}

TEST(CliTest, Generators) {
  const Result d = run("gen discrete 3");
  EXPECT_EQ(d.status, 0);
  EXPECT_EQ(nlohmann::json::parse(d.out)["orthogonal_pairs"].size(), 3u);
  const Result rays = run("gen rays " + data("c2_mub.rays") + " --form hermitian");
  EXPECT_EQ(rays.status, 0);
  EXPECT_EQ(nlohmann::json::parse(rays.out)["orthogonal_pairs"].size(), 3u);
  const Result e = run("gen enum 4 --up-to-iso");
  EXPECT_EQ(e.status, 0);
  EXPECT_EQ(nlohmann::json::parse(e.out).size(), 6u);
  EXPECT_EQ(run("gen random 8 0.3 42").out, run("gen random 8 0.3 42").out);
  EXPECT_EQ(run("gen mo 0").status, 2);
}

TEST(CliTest, Laws) {
  const Result r = run("laws " + data("path3.json"));
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(has(r.out, "idempotence")) << r.out;
}

}  // namespace
