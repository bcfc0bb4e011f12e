// Copyright 2026 The DecoGuard Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "decoguard/cli.hpp"
#include "decoguard/error.hpp"

namespace decoguard::cli {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) v.push_back(line);
  return v;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> v;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) v.push_back(f);
  if (!line.empty() && line.back() == ',') v.emplace_back();
  return v;
}

std::string column(const std::string& csv, const std::string& name, std::size_t row = 1) {
  const auto ls = lines(csv);
  const auto header = fields(ls.at(0));
  const auto values = fields(ls.at(row));
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return values.at(i);
  }
  ADD_FAILURE() << "no column " << name;
  return "";
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("decoguard_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

TEST(ParseAngle, PiSuffixAndRadians) {
  EXPECT_EQ(parse_angle("0.25pi"), std::numbers::pi * 0.25);
  EXPECT_EQ(parse_angle("pi"), std::numbers::pi);
  EXPECT_EQ(parse_angle("1.5"), 1.5);
  EXPECT_THROW(parse_angle("abc"), DomainError);
  EXPECT_THROW(parse_angle("1.5x"), DomainError);
}

TEST(FormatNumber, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(0.1 + 0.2), "0.3");
  EXPECT_EQ(format_number(std::numbers::pi), "3.14159265359");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(1e-20), "1e-20");
}

TEST(ConfigFile, ParsesKeyValueWithComments) {
  const fs::path p = scratch("cfg.txt");
  std::ofstream(p) << "# comment\nr = 0.5\n\n  kind=ad   # trailing\n";
  const auto entries = read_config_file(p.string());
  ASSERT_EQ(entries.size(), 2u);
  EXPECT_EQ(entries[0].first, "r");
  EXPECT_EQ(entries[0].second, "0.5");
  EXPECT_EQ(entries[1].first, "kind");
  EXPECT_EQ(entries[1].second, "ad");
}

TEST(Channel, PhaseDampingOnPlus) {
  const Invocation r = invoke({"channel", "--kind", "pd", "--r", "0.75", "--state", "+x"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[0], "stage,re00,im00,re01,im01,re10,im10,re11,im11,x,y,z");
  EXPECT_EQ(column(r.out, "re01", 2), "0.25");
  EXPECT_EQ(column(r.out, "re10", 2), "0.25");
}

TEST(Channel, FullAmplitudeDampingOfExcitedState) {
  const Invocation r = invoke({"channel", "--kind", "ad", "--r", "1", "--state", "+z-excited"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(lines(r.out)[2], "output,1,0,0,0,0,0,0,0,0,0,1");
}

TEST(Channel, ZeroDampingIsBitwiseIdentity) {
  for (const char* state : {"+x", "-y", "random", "excited"}) {
    const Invocation r = invoke({"channel", "--kind", "pd", "--r", "0", "--state", state});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    EXPECT_EQ(ls[1].substr(ls[1].find(',')), ls[2].substr(ls[2].find(','))) << state;
  }
}

TEST(Channel, AlternateParameterizations) {
  const Invocation kick = invoke({"channel", "--kind", "pd-flip", "--lambda", "0.5pi", "--state", "+x"});
  ASSERT_EQ(kick.code, 0) << kick.err;
  EXPECT_LE(std::abs(std::stod(column(kick.out, "x", 2))), 1e-15);
  const Invocation decay = invoke({"channel", "--kind", "ad", "--gamma", "0.34657359028", "--time", "1", "--state", "1"});
  ASSERT_EQ(decay.code, 0) << decay.err;
  EXPECT_EQ(column(decay.out, "re00", 2), "0.5");
}

TEST(Channel, InvalidInputsFail) {
  EXPECT_EQ(invoke({"channel", "--kind", "pd", "--r", "1.5"}).code, 1);
  EXPECT_EQ(invoke({"channel", "--kind", "pd-flip", "--r", "0.7"}).code, 1);
  EXPECT_EQ(invoke({"channel", "--kind", "xx", "--r", "0.1"}).code, 1);
  EXPECT_EQ(invoke({"channel", "--kind", "ad"}).code, 1);
  EXPECT_EQ(invoke({"channel", "--kind", "ad", "--r", "0.1", "--state", "bogus"}).code, 1);
  EXPECT_EQ(invoke({"channel", "--kind", "ad", "--r", "0.1", "--alpha", "2"}).code, 1);
  const Invocation r = invoke({"channel", "--kind", "ad", "--r", "0.1", "--nope", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Scheme, TrivialWmqmr) {
  const Invocation r = invoke({"scheme", "--scheme", "wmqmr", "--p1", "0", "--p2", "0", "--r", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, "fidelity"), "1");
  EXPECT_EQ(column(r.out, "success_prob"), "1");
}

TEST(Scheme, GroundStateImmuneUnderRotationScheme) {
  const Invocation r = invoke({"scheme", "--scheme", "qffc_rot", "--state", "ground", "--p", "1", "--eta", "0", "--noise",
                        "ad", "--r", "0.9"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, "fidelity"), "1");
}

TEST(Scheme, WmppfSuccessIsExactlyOne) {
  for (const char* p : {"0", "0.3", "0.8", "1"}) {
    const Invocation r = invoke({"scheme", "--scheme", "wmppf", "--p", p, "--noise", "pd", "--r", "0.6", "--alpha", "0.3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(column(r.out, "success_prob"), "1");
  }
}

TEST(Scheme, ReportsResolvedMatchedStrengths) {
  const Invocation r = invoke({"scheme", "--scheme", "wmqmr", "--p1", "0.6", "--r", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, "p2"), "0.8");
  EXPECT_EQ(column(r.out, "fidelity"), "0.977008420918");
  EXPECT_EQ(column(r.out, "success_prob"), "0.22");
  EXPECT_NE(column(r.out, "branches").find("!"), std::string::npos);
}

TEST(Scheme, EntanglementReportsConcurrence) {
  const Invocation r = invoke({"scheme", "--scheme", "ent_wmqmr", "--r", "0.6", "--p1", "0.8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, "concurrence"), "0.436556513725");
  EXPECT_EQ(invoke({"scheme", "--scheme", "ent_wmqmr", "--noise", "pd", "--r", "0.6"}).code, 1);
}

TEST(Scheme, EveryKindRuns) {
  for (const char* kind : {"wmqmr", "qfbc", "qffc_ps", "qffc_rot", "wmppf", "composite", "ent_wmqmr"}) {
    const Invocation r = invoke({"scheme", "--scheme", kind, "--r", "0.3"});
    EXPECT_EQ(r.code, 0) << kind << ": " << r.err;
    EXPECT_EQ(lines(r.out).size(), 2u);
  }
}

TEST(Scheme, ConfigFileWithFlagOverride) {
  const fs::path cfg = scratch("scheme.cfg");
  std::ofstream(cfg) << "scheme = wmqmr\np1 = 0.6\nr = 0.9\n";
  const Invocation r = invoke({"scheme", "--config", cfg.string(), "--r", "0.5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(column(r.out, "r"), "0.5");
  EXPECT_EQ(column(r.out, "p1"), "0.6");
}

TEST(Scheme, ConfigFileRejectsUnknownKeys) {
  const fs::path cfg = scratch("bad.cfg");
  std::ofstream(cfg) << "scheme = wmqmr\nwobble = 3\n";
  const Invocation r = invoke({"scheme", "--config", cfg.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("wobble"), std::string::npos);
  EXPECT_EQ(invoke({"scheme", "--config", scratch("missing.cfg").string()}).code, 2);
}

TEST(Sweep, WritesDeterministicCsv) {
  const std::vector<std::string> args{"sweep",       "--phi",         "0.25pi", "--noise", "pd",
                                      "--alpha_count", "4",           "--r_count", "4",     "--theta_steps",
                                      "6",           "--eta_steps", "6"};
  const Invocation a = invoke(args);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3", "--kernel", "scalar"});
  const Invocation b = invoke(threaded);
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(a.out, b.out);
  const auto ls = lines(a.out);
  ASSERT_EQ(ls.size(), 17u);
  EXPECT_EQ(ls[0], kSweepHeader);
  EXPECT_LE(std::abs(std::stod(column(a.out, "f_diff", 1))), 1e-12);
}

TEST(Sweep, UnwritableOutputFails) {
  const Invocation r = invoke({"sweep", "--alpha_count", "2", "--r_count", "2", "--theta_steps", "2", "--eta_steps", "2",
                        "--out", "/nonexistent-dir/x.csv"});
  EXPECT_EQ(r.code, 2);
}

TEST(Sweep, BadKernelRejected) {
  EXPECT_EQ(invoke({"sweep", "--alpha_count", "2", "--r_count", "2", "--kernel", "neon9"}).code, 1);
}

TEST(Fig6, WritesSixFiles) {
  const fs::path dir = scratch("fig6");
  fs::remove_all(dir);
  const Invocation r = invoke({"fig6", "--out", dir.string(), "--alpha_count", "3", "--r_count", "3", "--theta_steps", "4",
                        "--eta_steps", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(dir)) {
    ++files;
    std::ifstream in(entry.path());
    std::stringstream ss;
    ss << in.rdbuf();
    const auto ls = lines(ss.str());
    EXPECT_EQ(ls.size(), 10u) << entry.path();
    EXPECT_EQ(ls[0], kSweepHeader);
    EXPECT_EQ(entry.path().extension(), ".csv");
  }
  EXPECT_EQ(files, 6u);
  EXPECT_TRUE(fs::exists(dir / "fig6_ad_phi_0.25pi.csv"));
  EXPECT_TRUE(fs::exists(dir / "fig6_pd_phi_0.csv"));
}

TEST(Help, EveryCommandDocumentsUnits) {
  for (const char* cmd : {"channel", "scheme", "sweep", "fig6"}) {
    const Invocation r = invoke({cmd, "--help"});
    EXPECT_EQ(r.code, 0) << cmd;
    EXPECT_NE(r.out.find("--config"), std::string::npos) << cmd;
  }
  EXPECT_NE(invoke({"scheme", "--help"}).out.find("radians"), std::string::npos);
  EXPECT_NE(invoke({"scheme", "--help"}).out.find("probability"), std::string::npos);
  EXPECT_NE(invoke({"channel", "--help"}).out.find("radians"), std::string::npos);
  EXPECT_NE(invoke({"sweep", "--help"}).out.find("radians"), std::string::npos);
  EXPECT_NE(invoke({"fig6", "--help"}).out.find("probability"), std::string::npos);
  EXPECT_EQ(invoke({}).code, 1);
}

}  // namespace
}  // namespace decoguard::cli
