#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "factorcrit/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "factorcrit");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = factorcrit::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

TEST(Cli, GoldenCases) {
  const std::string dir = FACTORCRIT_CLI_DIR;
  const auto cases = nlohmann::json::parse(slurp(dir + "/cases.json"));
  ASSERT_FALSE(cases.empty());
  for (const auto& c : cases) {
    const auto name = c["name"].get<std::string>();
    const auto r = run(c["args"].get<std::vector<std::string>>(), c.value("stdin", std::string{}));
    EXPECT_EQ(r.code, c["exit"].get<int>()) << name << ": " << r.err;
    EXPECT_EQ(r.out, slurp(dir + "/golden/" + name + ".out")) << name;
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, factorcrit::cli::kExitUsage);
  EXPECT_EQ(run({"no-such-command"}).code, factorcrit::cli::kExitUsage);
  EXPECT_EQ(run({"check-critical", "-g", "Dhc"}).code, factorcrit::cli::kExitUsage);
  EXPECT_EQ(run({"check-critical", "-k", "9", "-g", "Dhc"}).code, factorcrit::cli::kExitUsage);
  EXPECT_EQ(run({"matching", "-f", "/nonexistent/graph.g6"}).code, factorcrit::cli::kExitUsage);
  EXPECT_EQ(run({"spectral-radius", "-g", "C?"}).code, factorcrit::cli::kExitUsage);
  const auto r = run({"matching"}, "A`x\n");
  EXPECT_EQ(r.code, factorcrit::cli::kExitUsage);
  EXPECT_NE(r.err.find("at byte"), std::string::npos);
}

TEST(Cli, JsonOutputsParse) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--json", "matching", "-g", "Dhc"},
           {"--json", "clique", "-g", "Dhc"},
           {"--json", "spectral-radius", "-g", "Dhc"},
           {"--json", "closure", "-l", "3", "-g", "Dhc", "--trace"},
           {"--json", "verify-thm5", "-t", "1", "-k", "1", "-g", "P~~~~~~~~~~~~~~~~~~~~_??"},
           {"--json", "lemma8", "-t", "1", "-k", "1", "-g", "P~~~~~~~~~~~~~~~~~~~~_??"}}) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0) << args[1] << ": " << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], args[1]);
  }
}

TEST(Cli, CampaignWritesReport) {
  const std::string config = testing::TempDir() + "factorcrit_campaign.json";
  const std::string report = testing::TempDir() + "factorcrit_report.json";
  std::ofstream(config) << R"({"theorems":["thm4"],"t":1,"k":1,"samples":10,"seed":3})";
  const auto r = run({"campaign", "--config", config, "--output", report});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(slurp(report));
  EXPECT_FALSE(j["violation"].get<bool>());
  EXPECT_EQ(j["reports"][0]["theorem"], "thm4");
  EXPECT_EQ(run({"campaign", "--config", "/nonexistent.json"}).code, factorcrit::cli::kExitUsage);
}

}  // namespace
