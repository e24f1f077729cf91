/*
 *   Copyright 2026 The weilcat Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <sstream>

#include <weilcat/cli.hpp>

using namespace weilcat;

namespace {

struct Run {
	int code;
	std::string out;
	std::string err;
};

Run run(std::vector<std::string> args) {
	std::ostringstream out, err;
	int code = run_cli(args, out, err);
	return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Normalize) {
	auto r = run({"normalize", "W@W", "x2*x1 + x1*x2"});
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(r.out, "2*x1*x2\n");
}

TEST(Cli, Compose) {
	auto r = run({"compose", "[W@W -> W@W]{ x1 -> x2 ; x2 -> x1 }", "[W -> W@W]{ x1 -> x1*x2 }"});
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(r.out, "[W -> W@W]{ x1 -> x1*x2 }\n");
	EXPECT_EQ(run({"compose", "[W -> W]{ x1 -> x1 }", "[W -> W@W]{ x1 -> x1*x2 }"}).code, 2);
}

TEST(Cli, CheckHom) {
	EXPECT_EQ(run({"check-hom", "[W^2 -> W]{ x1 -> x1 ; x2 -> x1 }"}).code, 0);
	// The image of x1 squares to 4*x1*x2, so this candidate is rejected.
	auto r = run({"check-hom", "[W^2 -> W@W]{ x1 -> x1 + x1 + x1*x2 + x2 ; x2 -> 3*x1*x2 }"});
	EXPECT_EQ(r.code, 1);
	EXPECT_EQ(r.out, "fail: x1*x1 = 0 but its image is 4*x1*x2\n");
	auto j = run({"--json", "check-hom", "[W^2 -> W@W]{ x1 -> x1 ; x2 -> x2 }"});
	EXPECT_EQ(j.code, 1);
	EXPECT_EQ(json::parse(j.out)["witness"], json({1, 2}));
}

TEST(Cli, Tensor) {
	EXPECT_EQ(run({"tensor", "W^2", "W"}).out, "W^2@W\n");
	EXPECT_EQ(run({"tensor", "W", "N"}).out, "W\n");
	EXPECT_EQ(run({"tensor", "W", "[W -> W]{ x1 -> x1 }"}).code, 2);
}

TEST(Cli, PullbackLift) {
	auto r = run({"pullback-lift", "--square", "vertical", "--right", "[W -> W@W]{ x1 -> x1*x2 + 2*x2 }", "--bottom",
	              "[W -> N]{ x1 -> 0 }"});
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(r.out, "[W -> W^2]{ x1 -> x1 + 2*x2 }\n");
	auto f = run({"pullback-lift", "--square", "foundational", "N", "1", "1", "--right", "[W -> W]{ x1 -> x1 }",
	              "--bottom", "[W -> W]{ x1 -> x1 }"});
	EXPECT_EQ(f.out, "[W -> W^2]{ x1 -> x1 + x2 }\n");
	EXPECT_EQ(run({"pullback-lift", "--square", "vertical", "--right", "[W -> W@W]{ x1 -> x1 }", "--bottom",
	               "[W -> N]{ x1 -> 0 }"})
	              .code,
	          2);
	EXPECT_EQ(run({"pullback-lift", "--square", "sideways", "--right", "[W -> W]{ x1 -> x1 }", "--bottom",
	               "[W -> W]{ x1 -> x1 }"})
	              .code,
	          2);
}

TEST(Cli, VerifyPullback) {
	auto r = run({"--json", "verify-pullback", "--square", "foundational", "W@W", "2", "1", "--budget", "50"});
	EXPECT_EQ(r.code, 0);
	auto j = json::parse(r.out);
	EXPECT_EQ(j["cones_checked"], 50);
	EXPECT_EQ(j["seed"], 0);
	EXPECT_EQ(j["square"], "foundational(W@W, 2, 1)");
	EXPECT_TRUE(j["failures"].empty());
	EXPECT_NE(run({"verify-pullback", "--square", "vertical"}).out.find("cones checked: 500"), std::string::npos);
}

TEST(Cli, Phitilde) {
	EXPECT_EQ(run({"phitilde", "[W -> W@W]{ x1 -> x1*x2 }"}).out, "X1^X2\n");
	EXPECT_EQ(run({"phitilde", "[W^2 -> W]{ x1 -> x1 ; x2 -> x1 }"}).out, "(X1, X1)\n");
}

TEST(Cli, Alpha) {
	auto r = run({"alpha", "[W -> W@W]{ x1 -> x1*x2 }", "[W@W -> W]{ x1 -> x1 ; x2 -> x1 }"});
	EXPECT_EQ(r.code, 0);
	EXPECT_EQ(r.out, "composite: *\nexpanded: X1^X1\ninclusion: []\nzeta: X1^X1\n");
}

TEST(Cli, CheckCoherence) {
	auto r = run({"check-coherence", "[W -> W@W]{ x1 -> x1*x2 }", "[W@W -> W@W]{ x1 -> x2 ; x2 -> x1 }",
	              "[W@W -> W]{ x1 -> x1 ; x2 -> x1 }"});
	EXPECT_EQ(r.code, 0);
	EXPECT_NE(r.out.find("result: PASS"), std::string::npos);
	EXPECT_EQ(run({"check-coherence", "--budget", "20", "--seed", "5"}).code, 0);
	EXPECT_EQ(run({"check-coherence", "[W -> W]{ x1 -> x1 }"}).code, 2);
}

TEST(Cli, CheckTangent) {
	auto r = run({"check-tangent", "--instance", "nmod", "--seed", "7", "--budget", "200"});
	EXPECT_EQ(r.code, 0) << r.out;
	EXPECT_NE(r.out.find("seed: 7"), std::string::npos);
	auto j = run({"--json", "check-tangent", "--instance", "weil-self", "--budget", "20"});
	EXPECT_EQ(j.code, 0);
	auto report = json::parse(j.out);
	EXPECT_EQ(report["instance"], "weil-self");
	EXPECT_EQ(report["seed"], 0);
	EXPECT_TRUE(report["passed"]);
	EXPECT_EQ(run({"check-tangent", "--instance", "smooth"}).code, 2);
}

TEST(Cli, DiffobjCheck) {
	EXPECT_EQ(run({"diffobj-check"}).code, 0);
	EXPECT_EQ(run({"diffobj-check", "--rank", "3"}).code, 0);
	auto bad = run({"--json", "diffobj-check", "--phat", "[[0,2]]"});
	EXPECT_EQ(bad.code, 1);
	auto j = json::parse(bad.out);
	for (const auto &c : j["checks"])
		if (c["law"] == "diff.phat_Tphat_l")
			EXPECT_EQ(c["failed"], 1);
	EXPECT_EQ(run({"diffobj-check", "--instance", "trivial"}).code, 1);
	EXPECT_EQ(run({"diffobj-check", "--instance", "trivial", "--rank", "0"}).code, 0);
	EXPECT_EQ(run({"diffobj-check", "--phat", "[[0,1,1]]"}).code, 2);
}

TEST(Cli, Derivative) {
	EXPECT_EQ(run({"derivative", "[[1]]"}).out, "[[0,1]]\n");
	EXPECT_EQ(run({"derivative", "[[0]]"}).out, "[[0,0]]\n");
	EXPECT_EQ(run({"derivative", "[[1,2]"}).code, 2);
}

TEST(Cli, MalformedInputClasses) {
	for (const auto *text : {"[W^2 -> W@W]{ x1 -> x1 ; x1 -> x2 }", "[W^2 -> W@W]{ x1 -> x1 }",
	                         "[W^2 -> W@W]{ x1 -> x3 ; x2 -> x1 }", "[W^2 -> W@W]{ x1 -> x1 +"}) {
		auto r = run({"phitilde", text});
		EXPECT_EQ(r.code, 2) << text;
		EXPECT_NE(r.err.find("at column "), std::string::npos) << r.err;
	}
}

TEST(Cli, UsageErrors) {
	EXPECT_EQ(run({}).code, 2);
	EXPECT_EQ(run({"frobnicate"}).code, 2);
	EXPECT_EQ(run({"check-tangent"}).code, 2);
	EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
	auto a = run({"--json", "check-tangent", "--instance", "nmod", "--seed", "3", "--budget", "30"});
	auto b = run({"--json", "check-tangent", "--instance", "nmod", "--seed", "3", "--budget", "30"});
	EXPECT_EQ(a.out, b.out);
}
