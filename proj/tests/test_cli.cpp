#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "dualpoly/cli.hpp"

namespace fs = std::filesystem;
using dualpoly::Json;

namespace {

struct Invocation {
  int code = 0;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "approxdeg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  Invocation r;
  r.code = dualpoly::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("approxdeg_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    unsetenv("APPROXDEG_OUT_DIR");
  }
  void TearDown() override {
    unsetenv("APPROXDEG_OUT_DIR");
    fs::remove_all(dir_);
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  Json run_json(std::vector<std::string> args, int expect = 0) {
    const std::string file = path("report.json");
    args.push_back("--out");
    args.push_back(file);
    const Invocation r = invoke(args);
    EXPECT_EQ(r.code, expect) << r.err;
    return Json::parse(slurp(file));
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, RampRadicand) {
  const Json j = run_json({"ramp", "--k", "1", "--K", "2"});
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["result"]["radicand"], "1/32");
  EXPECT_EQ(j["tool"], "approxdeg");
  EXPECT_EQ(j["version"], dualpoly::cli::kVersion);
}

TEST_F(CliTest, DualAndEpsilon) {
  const Json j = run_json({"dual-and", "--n", "2", "--d", "1"});
  EXPECT_EQ(j["result"]["epsilon"], "1/4");
  EXPECT_EQ(j["config"]["command"], "dual-and");
  EXPECT_EQ(j["config"]["parameters"]["n"], 2);
}

TEST_F(CliTest, UnknownFlagIsUsageErrorWithoutOutput) {
  const Invocation r = invoke({"ramp", "--k", "1", "--K", "2", "--bogus", "--out", path("x.json")});
  EXPECT_EQ(r.code, dualpoly::cli::kUsage);
  EXPECT_FALSE(fs::exists(path("x.json")));
  const Invocation bad = invoke({"dual-and", "--n", "0", "--d", "1", "--out", path("y.json")});
  EXPECT_EQ(bad.code, dualpoly::cli::kUsage);
  EXPECT_FALSE(fs::exists(path("y.json")));
  EXPECT_EQ(invoke({}).code, dualpoly::cli::kUsage);
  EXPECT_EQ(invoke({"ramp", "--k", "x", "--K", "2"}).code, dualpoly::cli::kUsage);
  EXPECT_EQ(invoke({"approx-degree", "--f", "and", "--n", "4", "--eps", "1/0"}).code, dualpoly::cli::kUsage);
  EXPECT_EQ(invoke({"consolidate", "--dist", path("missing.json"), "--t", "2"}).code, dualpoly::cli::kUsage);
}

TEST_F(CliTest, ViolationExitsThreeAndNamesProperty) {
  const Json j = run_json({"weight-bound", "--f", "and", "--n", "8", "--K", "1", "--eps", "1/100", "--construct"},
                          dualpoly::cli::kViolated);
  EXPECT_EQ(j["status"], "violated");
  EXPECT_FALSE(j["violation"]["property"].get<std::string>().empty());
  EXPECT_FALSE(j["violation"]["instance"].get<std::string>().empty());
}

TEST_F(CliTest, RepeatRunsAreByteIdentical) {
  const std::vector<std::string> cmds[] = {
      {"dual-and", "--n", "5", "--d", "2", "--seed", "9"},
      {"approx-degree", "--f", "maj", "--n", "7", "--eps", "1/3"},
      {"ramp", "--k", "1", "--K", "3", "--n", "24", "--finite"},
  };
  for (auto args : cmds) {
    auto a = args, b = args;
    a.insert(a.end(), {"--out", path("a.json")});
    b.insert(b.end(), {"--out", path("b.json")});
    ASSERT_EQ(invoke(a).code, 0);
    ASSERT_EQ(invoke(b).code, 0);
    EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json"))) << args[0];
  }
}

TEST_F(CliTest, SampleSharesSeededAndTabular) {
  ASSERT_EQ(invoke({"dual-and", "--n", "4", "--d", "2", "--emit", path("w.json"), "--out", path("d.json")}).code, 0);
  ASSERT_TRUE(fs::exists(path("w.json")));
  auto run_csv = [&](const std::string& seed, const std::string& name) {
    const Invocation r = invoke({"sample-shares", "--witness", path("w.json"), "--secret", "+1", "--count", "50", "--seed",
                          seed, "--csv", "--out", path(name)});
    EXPECT_EQ(r.code, 0) << r.err;
    return slurp(path(name));
  };
  const std::string a = run_csv("3", "a.csv");
  EXPECT_EQ(a, run_csv("3", "b.csv"));
  EXPECT_NE(a, run_csv("4", "c.csv"));
  EXPECT_NE(a.find("bit_1,bit_2,bit_3,bit_4"), std::string::npos);
  EXPECT_NE(a.find("# config: "), std::string::npos);
}

TEST_F(CliTest, CsvFloatsOnlyInFloatColumns) {
  ASSERT_EQ(invoke({"ramp", "--k", "2", "--K", "5", "--csv", "--out", path("r.csv")}).code, 0);
  std::istringstream in(slurp(path("r.csv")));
  const std::regex sci(R"(^-?\d\.\d+e[+-]\d+$)");
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line == "key,value") continue;
    const auto comma = line.find(',');
    const std::string key = line.substr(0, comma), value = line.substr(comma + 1);
    const bool is_float = key.size() > 6 && key.ends_with("_float");
    EXPECT_EQ(is_float, std::regex_match(value, sci)) << line;
    if (!is_float) EXPECT_EQ(value.find('.'), std::string::npos) << line;
    ++rows;
  }
  EXPECT_GT(rows, 0);
}

TEST_F(CliTest, OutDirEnvironment) {
  setenv("APPROXDEG_OUT_DIR", dir_.c_str(), 1);
  const Invocation r = invoke({"approx-degree", "--f", "and", "--n", "4", "--eps", "1/3", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  EXPECT_TRUE(fs::exists(path("approx-degree.csv")));
}

TEST_F(CliTest, StdoutWhenNoDestination) {
  const Invocation r = invoke({"ramp", "--k", "1", "--K", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["result"]["radicand"], "1/32");
}

TEST_F(CliTest, ListCommands) {
  const Invocation r = invoke({"--list-commands"});
  EXPECT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  std::vector<std::string> names;
  for (const auto& c : j["commands"]) names.push_back(c["command"]);
  for (const char* want :
       {"dual-and", "sample-shares", "symcheb pw", "approx-degree", "ramp", "weight-bound", "consolidate", "indist-check"})
    EXPECT_NE(std::find(names.begin(), names.end(), want), names.end()) << want;
}

TEST_F(CliTest, FunctionAndDistributionFiles) {
  std::ofstream(path("f.json")) << R"({"predicate": [0, 1, 0, 0, 0]})";
  const Json a = run_json({"approx-degree", "--f", path("f.json"), "--eps", "1/3"});
  EXPECT_EQ(a["status"], "ok");
  std::ofstream(path("d.json")) << R"({"n": 4, "weight_probs": ["0", "0", "1", "0", "0"]})";
  const Json c = run_json({"consolidate", "--dist", path("d.json"), "--t", "2"});
  EXPECT_EQ(c["result"]["consolidated"]["weight_probs"], Json::array({"2/3", "1/3", "0/1"}));
  std::ofstream(path("e.json")) << R"({"n": 4, "weight_probs": ["1/16", "1/4", "3/8", "1/4", "1/16"]})";
  const Json ic = run_json({"indist-check", "--dist1", path("d.json"), "--dist2", path("e.json"), "--k", "1"});
  EXPECT_EQ(ic["status"], "ok");
}

TEST_F(CliTest, SymchebChecks) {
  for (const char* check : {"bounded", "main3", "normg", "fupper"}) {
    const Json j = run_json({"symcheb", "pw", "--n", "256", "--K", "4", "--w", "1", "--check", check, "--k", "2",
                             "--eps", "1/10", "--delta", "1/100"});
    EXPECT_EQ(j["status"], "ok") << check;
  }
}
