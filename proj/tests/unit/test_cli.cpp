#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rfdress/app.hpp"

namespace {

namespace fs = std::filesystem;
using namespace rfdress;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("rfdress_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  app::RunResult run(const std::string& command, const std::string& yaml, unsigned workers = 1,
                     const std::string& sub = "a") {
    app::RunOptions o;
    o.config_text = yaml;
    o.workers = workers;
    o.out = dir_ / sub;
    return app::run(command, o);
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

struct Main {
  int code;
  std::string out;
  std::string err;
};

Main call(std::vector<std::string> args) {
  args.insert(args.begin(), "rfdress");
  std::ostringstream out, err;
  const int code = app::main(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(CliCommands, NamesAndVersion) {
  const auto names = app::command_names();
  for (const char* c : {"sidebands", "resonance-map", "lzs-map", "classical", "evolve", "ensemble"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), c), names.end()) << c;
  }
  EXPECT_FALSE(std::string(app::version()).empty());
}

TEST(Genbessel, TrivialValues) {
  auto r = call({"genbessel", "0", "0", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1,1,0.000e+00\n");
  r = call({"genbessel", "1", "0", "5"});
  EXPECT_EQ(r.code, 0);
  double sum = 1, integral = 1, diff = 1;
  ASSERT_EQ(std::sscanf(r.out.c_str(), "%lf,%lf,%lf", &sum, &integral, &diff), 3);
  EXPECT_EQ(sum, 0.0);
  EXPECT_LT(std::fabs(integral), 1e-12);
  EXPECT_LT(diff, 1e-12);
}

TEST(Genbessel, DualMethodAgree) {
  const auto r = call({"genbessel", "2", "1.5", "0.7"});
  ASSERT_EQ(r.code, 0);
  double sum = 0, integral = 0, diff = 1;
  ASSERT_EQ(std::sscanf(r.out.c_str(), "%lf,%lf,%lf", &sum, &integral, &diff), 3);
  EXPECT_NEAR(sum, integral, 1e-12);
  EXPECT_LT(diff, 1e-12);
}

TEST(Genbessel, BadArgumentsAreConfigErrors) {
  EXPECT_EQ(call({"genbessel", "1", "x", "0"}).code, app::kExitConfig);
  EXPECT_EQ(call({"genbessel", "1", "nan", "0"}).code, app::kExitConfig);
  EXPECT_EQ(call({"genbessel", "1"}).code, app::kExitConfig);
}

TEST(Main, UsageErrors) {
  EXPECT_EQ(call({}).code, app::kExitConfig);
  EXPECT_EQ(call({"no-such-command"}).code, app::kExitConfig);
  EXPECT_EQ(call({"--workers", "0", "sidebands"}).code, app::kExitConfig);
  EXPECT_EQ(call({"--help"}).code, app::kExitOk);
  EXPECT_EQ(call({"--version"}).code, app::kExitOk);
}

TEST_F(Cli, MainWritesFilesAndListsThem) {
  const auto cfg = dir_ / "s.yaml";
  std::ofstream(cfg) << "drives:\n  - {f_static: 0.2, f_rf: 0.0}\n";
  const auto r = call({"--config", cfg.string(), "--out", (dir_ / "m").string(), "sidebands"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int files = 0;
  while (std::getline(lines, line)) {
    EXPECT_TRUE(fs::exists(line)) << line;
    ++files;
  }
  EXPECT_EQ(files, 1);
}

TEST_F(Cli, YamlFileMayStartWithComment) {
  const auto cfg = dir_ / "c.yaml";
  std::ofstream(cfg) << "# a note\ndrives:\n  - {f_static: 0.2, f_rf: 0.1}\n";
  app::RunOptions o;
  o.config = cfg;
  o.out = dir_ / "c";
  const auto r = app::run("sidebands", o);
  EXPECT_EQ(r.exit_code, 0) << r.message;
}

TEST_F(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run("evolve", "bogus: 1\n").exit_code, app::kExitConfig);
  EXPECT_EQ(run("evolve", "f_static: 0.2\nf_rf: 0.3\nbogus: 1\n").exit_code, app::kExitConfig);
  EXPECT_EQ(run("sidebands", "drives: [{f_static: 0.2, f_rf: -1}]\n").exit_code, app::kExitConfig);
  EXPECT_EQ(run("sidebands", "drives: [{f_static: 0.2, f_rf: 0.1}]\nmodel: {preset: nope}\n").exit_code,
            app::kExitConfig);
  EXPECT_EQ(run("resonance-map", "grid: {f_static: {steps: 0}}\n").exit_code, app::kExitConfig);
  EXPECT_EQ(run("lzs-map", "n_cycles: 0\n").exit_code, app::kExitConfig);
  EXPECT_EQ(run("evolve", "f_static: [1, 2\n").exit_code, app::kExitConfig);
  EXPECT_EQ(run("nope", "").exit_code, app::kExitConfig);
  const auto r = run("evolve", "f_static: 0.2\nf_rf: 0.3\nbogus: 1\n");
  EXPECT_NE(r.message.find("bogus"), std::string::npos) << r.message;
}

TEST_F(Cli, NumericFailureExitsThree) {
  // The coarsest allowed step drifts past the norm budget on this run.
  const auto r = run("evolve",
                     "f_static: 0.2\nf_rf: 0.4581\nomega0_mhz: 0.1\nt_end_us: 20\ndt_us: 0.000125\nstride: 1000\n");
  EXPECT_EQ(r.exit_code, app::kExitNumeric) << r.message;
  EXPECT_NE(r.message.find("dt"), std::string::npos) << r.message;
}

TEST_F(Cli, SidebandsZeroRfIsSingleLine) {
  const auto r = run("sidebands", "drives:\n  - {f_static: 0.2, f_rf: 0.0}\n");
  ASSERT_EQ(r.exit_code, 0) << r.message;
  ASSERT_EQ(r.files.size(), 1u);
  std::istringstream in(slurp(r.files[0]));
  std::string line;
  int rows = 0, nonzero = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      continue;
    }
    ++rows;
    // The population column is the third.
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    ASSERT_GE(cells.size(), 3u);
    if (std::stod(cells[2]) != 0.0) ++nonzero;
  }
  EXPECT_EQ(rows, 81);
  EXPECT_EQ(nonzero, 1);
}

TEST_F(Cli, OutputsCarryMetadataHeader) {
  const auto r = run("classical", "omegas_mhz: [8]\n");
  ASSERT_EQ(r.exit_code, 0) << r.message;
  const auto text = slurp(r.files.at(0));
  EXPECT_EQ(text.rfind("#", 0), 0u);
  EXPECT_NE(text.find(app::version()), std::string::npos);
  EXPECT_NE(text.find("MHz"), std::string::npos);
}

TEST_F(Cli, WorkerCountDoesNotChangeFiles) {
  const std::vector<std::pair<std::string, std::string>> jobs{
      {"resonance-map", "grid:\n  f_static: {steps: 31}\n  f_rf: {steps: 23}\n"},
      {"lzs-map", "grid:\n  f_static: {steps: 31}\n  f_rf: {steps: 23}\n"},
      {"ensemble", "count: 500\nseed: 3\ntheta: {steps: 11}\n"},
  };
  for (const auto& [cmd, yaml] : jobs) {
    const auto a = run(cmd, yaml, 1, cmd + "1");
    const auto b = run(cmd, yaml, 4, cmd + "4");
    ASSERT_EQ(a.exit_code, 0) << a.message;
    ASSERT_EQ(b.exit_code, 0) << b.message;
    ASSERT_EQ(a.files.size(), b.files.size());
    for (std::size_t i = 0; i < a.files.size(); ++i) {
      EXPECT_EQ(a.files[i].filename(), b.files[i].filename());
      EXPECT_EQ(slurp(a.files[i]), slurp(b.files[i])) << a.files[i];
    }
  }
}

TEST_F(Cli, RerunFromEchoedCsvIsIdentical) {
  const std::vector<std::pair<std::string, std::string>> jobs{
      {"sidebands", "drives:\n  - {f_static: 0.2, f_rf: 0.45}\n"},
      {"evolve", "f_static: 0.2\nf_rf: 0.3\nt_end_us: 1\nstride: 128\n"},
      {"ensemble", "count: 200\ntheta: {steps: 7}\n"},
  };
  for (const auto& [cmd, yaml] : jobs) {
    const auto a = run(cmd, yaml, 1, cmd + "_first");
    ASSERT_EQ(a.exit_code, 0) << a.message;
    app::RunOptions o;
    o.config = a.files.at(0);
    o.out = dir_ / (cmd + "_again");
    const auto b = app::run(cmd, o);
    ASSERT_EQ(b.exit_code, 0) << b.message;
    ASSERT_EQ(a.files.size(), b.files.size());
    for (std::size_t i = 0; i < a.files.size(); ++i) EXPECT_EQ(slurp(a.files[i]), slurp(b.files[i])) << cmd;
    // The echo names its command, so it cannot drive a different one.
    const auto other = app::run(cmd == "evolve" ? "sidebands" : "evolve", o);
    EXPECT_EQ(other.exit_code, app::kExitConfig);
  }
}

TEST_F(Cli, SeedOverrideChangesEnsemble) {
  app::RunOptions o;
  o.config_text = "count: 200\nseed: 1\ntheta: {steps: 5}\n";
  o.out = dir_ / "s1";
  const auto a = app::run("ensemble", o);
  o.seed = 2;
  o.out = dir_ / "s2";
  const auto b = app::run("ensemble", o);
  ASSERT_EQ(a.exit_code, 0);
  ASSERT_EQ(b.exit_code, 0);
  EXPECT_NE(slurp(a.files.at(0)), slurp(b.files.at(0)));
}

}  // namespace
