#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "zdg/cli.hpp"

namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "zdg");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = zdg::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("zdg_cli_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST(Cli, InspectZ30) {
  const CliRun r = run({"inspect", "--zn", "30"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("(2)=Ann(15)"), std::string::npos);
  EXPECT_NE(r.out.find("(3)=Ann(10)"), std::string::npos);
  EXPECT_NE(r.out.find("(5)=Ann(6)"), std::string::npos);
  EXPECT_NE(r.out.find("annihilating_ideals: 6"), std::string::npos);
}

TEST(Cli, InputErrorsExitThree) {
  EXPECT_EQ(run({"inspect", "--zn", "12"}).code, 3);
  EXPECT_EQ(run({"inspect", "--fields", "2,4"}).code, 3);
  EXPECT_EQ(run({"inspect"}).code, 3);
  EXPECT_EQ(run({"inspect", "--zn", "6", "--fields", "2,3"}).code, 3);
  EXPECT_EQ(run({"inspect", "--table", "/nonexistent.json"}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 3);
  EXPECT_EQ(run({"verify", "--zn", "30", "--suite", "nope"}).code, 3);
}

TEST(Cli, ExportDot) {
  const CliRun r = run({"export", "--zn", "30", "--graph", "ag", "--format", "dot"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph \"AG(Z_30)\"", 0), 0u);
}

TEST(Cli, ExportOverCapExitsFour) {
  setenv("ZDG_EXPLICIT_VERTEX_CAP", "100", 1);
  const CliRun r = run({"export", "--zn", "2310"});
  unsetenv("ZDG_EXPLICIT_VERTEX_CAP");
  EXPECT_EQ(r.code, 4) << r.err;
}

TEST(Cli, VerifyWritesReport) {
  const CliRun r = run({"verify", "--zn", "30"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["summary"]["unregistered_violations"], 0);
}

TEST(Cli, Dominate) {
  const CliRun r = run({"dominate", "--zn", "30", "--graph", "ag"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("domination_number: 3"), std::string::npos) << r.out;
  const CliRun t = run({"dominate", "--fields", "2,2,2,2,2", "--total"});
  EXPECT_NE(t.out.find("total_domination_number: 5"), std::string::npos) << t.out;
}

TEST(Cli, BatchIsDeterministic) {
  const fs::path a = scratch("a"), b = scratch("b");
  ASSERT_EQ(run({"batch", "--squarefree-below", "60", "--seed", "7", "--out", a.string()}).code, 0);
  ASSERT_EQ(run({"batch", "--squarefree-below", "60", "--seed", "7", "--out", b.string()}).code, 0);
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_EQ(slurp(a / "summary.json"), slurp(b / "summary.json"));
  EXPECT_TRUE(fs::exists(a / "00000_Z_2.json"));
}

TEST(Cli, BatchCorpusList) {
  const fs::path d = scratch("corpus");
  std::ofstream(d / "rings.txt") << "zn 30\nfields 2,3,5\nzn 12\n";
  const CliRun r = run({"batch", "--corpus", (d / "rings.txt").string()});
  EXPECT_EQ(r.code, 3);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rings"], 3);
  EXPECT_EQ(j["errors"].size(), 1u);
}
