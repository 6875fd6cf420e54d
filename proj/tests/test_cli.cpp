#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

namespace {

struct Result {
  int code;
  std::string out;
};

Result run(const std::string &args) {
  const std::string cmd = std::string(DIAMOND_CLI_PATH) + " " + args + " 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, std::string> read_manifest(const std::filesystem::path &path) {
  std::map<std::string, std::string> kv;
  std::ifstream in(path);
  for (std::string line; std::getline(in, line);) {
    const auto eq = line.find(" = ");
    if (eq != std::string::npos) kv[line.substr(0, eq)] = line.substr(eq + 3);
  }
  return kv;
}

std::filesystem::path scratch(const std::string &name) {
  const auto dir = std::filesystem::temp_directory_path() / ("diamond_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, EigenTable) {
  const Result r = run("eigen --J 1 --Jz 2 --J0 0.5 --h 0.3 --hp 0.1");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("\n1   +1.400000000"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("max residual"), std::string::npos);
}

TEST(Cli, EigenAllZero) {
  const Result r = run("eigen --J 0 --Jz 0 --J0 0 --h 0 --hp 0");
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  for (int n = 0; n < 16; ++n) {
    std::getline(lines, line);
    std::istringstream fields(line);
    int index;
    double energy;
    fields >> index >> energy;
    EXPECT_EQ(energy, 0.0) << line;
  }
}

TEST(Cli, BellPsiPlus) {
  const Result r = run("bell --target psi-plus");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("probability       0.500000000"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("fidelity          1.000000000000"), std::string::npos) << r.out;
}

TEST(Cli, BellPhiMinusPlusMinusBranch) {
  const Result r = run("bell --target phi-minus --branch plus-minus");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("probability       0.250000000"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("hp                0.000000000"), std::string::npos) << r.out;
}

TEST(Cli, BellPsiMinusUnsupported) {
  const Result r = run("bell --target psi-minus");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("no recipe in source protocol family"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("eigen --bogus 1").code, 2);
  EXPECT_EQ(run("bell").code, 2);
  EXPECT_EQ(run("bell --target phi-plus --quarter 2").code, 2);
  EXPECT_EQ(run("bell --target phi-plus --J0 0").code, 2);
  EXPECT_EQ(run("sweep --axis bogus:0:1:3 --out /tmp/x.csv").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, VerifyIsDeterministic) {
  const Result a = run("verify --trials 1000 --seed 7");
  const Result b = run("verify --trials 1000 --seed 7");
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("all suites passed"), std::string::npos);
}

TEST(Cli, MeasureSampleIsDeterministic) {
  const Result a = run("measure --pair sides --theta 0.7 --phi 1.2 --t 2 --seed 5");
  const Result b = run("measure --pair sides --theta 0.7 --phi 1.2 --t 2 --seed 5");
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("sampled"), std::string::npos);
}

TEST(Cli, SweepWritesCsvAndReproducibleManifest) {
  const auto dir = scratch("sweep");
  const std::string out = (dir / "xy.csv").string();
  const Result r = run("sweep --quantity concurrence-xy --axis Jt:0:3.1:5 --axis Jzt:0:2:4 --fixed dphi=0.25 --out " + out);
  ASSERT_EQ(r.code, 0) << r.out;
  const std::string csv = slurp(out);
  EXPECT_EQ(csv.substr(0, 9), "Jt,Jzt,C\n");
  const auto manifest = read_manifest(out + ".manifest");
  EXPECT_EQ(manifest.at("command"), "sweep");
  EXPECT_EQ(manifest.at("outputs"), out);
  EXPECT_EQ(manifest.at("seed"), "none");
  EXPECT_FALSE(manifest.at("tool_version").empty());

  std::filesystem::remove(out);
  const Result again = run(manifest.at("arguments"));
  ASSERT_EQ(again.code, 0) << again.out;
  EXPECT_EQ(slurp(out), csv);
}

TEST(Cli, PresetsEmitFiles) {
  const auto dir = scratch("presets");
  for (const char *preset : {"fig2 --dphi 0.5", "fig3", "fig4"}) {
    const Result r = run(std::string("sweep --preset ") + preset + " --out-dir " + dir.string());
    EXPECT_EQ(r.code, 0) << r.out;
  }
  for (const char *file : {"fig2_dphi0.5.csv", "fig3.csv", "fig4_ratio1.csv", "fig4_ratio4.csv"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / file)) << file;
    EXPECT_TRUE(std::filesystem::exists(dir / (std::string(file) + ".manifest"))) << file;
  }
}

TEST(Cli, ConfigFileSuppliesDefaults) {
  const auto dir = scratch("config");
  const auto cfg = dir / "run.cfg";
  std::ofstream(cfg) << "# couplings\nJ = 0\nJz = 0\nJ0 = 0.5\nh = 0.3\nhp = 0.1\n";
  const Result from_file = run("--config " + cfg.string() + " eigen");
  EXPECT_EQ(from_file.code, 0) << from_file.out;
  EXPECT_NE(from_file.out.find("\n1   +0.900000000"), std::string::npos) << from_file.out;
  const Result overridden = run("eigen --config " + cfg.string() + " --J0 1");
  EXPECT_NE(overridden.out.find("\n1   +1.400000000"), std::string::npos) << overridden.out;
  EXPECT_EQ(run("--config " + (dir / "missing.cfg").string() + " eigen").code, 2);
}

TEST(Cli, EvolveWritesAmplitudes) {
  const auto dir = scratch("evolve");
  const std::string out = (dir / "state.csv").string();
  const Result r = run("evolve --t 1.3 --out " + out);
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("closed form vs propagator"), std::string::npos);
  EXPECT_EQ(slurp(out).substr(0, 15), "index,ket,re,im");
  EXPECT_EQ(read_manifest(out + ".manifest").at("t"), "1.3");
}
