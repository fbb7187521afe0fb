#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "cli_app.hpp"
#include "zmoments/cache.hpp"

namespace stdfs = std::filesystem;
using zmoments::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "zmoments");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  stdfs::path path;
  TempDir() {
    static std::mt19937_64 rng(std::random_device{}());
    path = stdfs::temp_directory_path() / ("zmoments_cli_test_" + std::to_string(rng()));
    stdfs::create_directories(path);
  }
  ~TempDir() { stdfs::remove_all(path); }
  std::string str() const { return path.string(); }
};

}  // namespace

TEST(Cli, InputErrors) {
  EXPECT_EQ(call({}).code, 1);
  EXPECT_EQ(call({"coeff", "--k", "2"}).code, 1);  // --N missing
  EXPECT_EQ(call({"coeff", "--k", "2", "--N", "-1", "--no-cache"}).code, 1);
  EXPECT_EQ(call({"poly", "--k", "two"}).code, 1);
  EXPECT_EQ(call({"poly", "--k", "1", "--format", "xml", "--no-cache"}).code, 1);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, CoefficientBeyondDegree) {
  Result r = call({"coeff", "--k", "2", "--N", "5", "--no-cache", "--digits", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("note"), std::string::npos);
}

TEST(Cli, PolyJsonShapeAndDeterminism) {
  TempDir d;
  auto args = [&](bool cache) {
    std::vector<std::string> a{"poly", "--k", "2", "--digits", "25", "--format", "json"};
    if (cache) a.insert(a.end(), {"--cache-dir", d.str()});
    else a.push_back("--no-cache");
    return a;
  };
  Result plain = call(args(false));
  ASSERT_EQ(plain.code, 0) << plain.err;
  Result cold = call(args(true));
  Result warm = call(args(true));
  EXPECT_EQ(plain.out, cold.out);
  EXPECT_EQ(cold.out, warm.out);
  auto j = nlohmann::json::parse(plain.out);
  EXPECT_EQ(j["k"], 2);
  ASSERT_EQ(j["coefficients"].size(), 5u);
  EXPECT_EQ(j["coefficients"][0]["value"].get<std::string>().substr(0, 12), "5.0660591821");
  EXPECT_TRUE(j["coefficients"][4].contains("error"));
  EXPECT_TRUE(j.contains("truncation"));
}

TEST(Cli, CsvIsLabelledLossy) {
  Result r = call({"poly", "--k", "1", "--digits", "20", "--format", "csv", "--no-cache"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("# lossy", 0), 0u);
  EXPECT_NE(r.out.find("N,value"), std::string::npos);
}

TEST(Cli, CacheDirFlagBeatsEnvironment) {
  TempDir env_dir, flag_dir;
  ::setenv("ZMOMENTS_CACHE_DIR", env_dir.str().c_str(), 1);
  Result a = call({"precompute", "--nmax", "2", "--k", "1", "--digits", "20"});
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_FALSE(stdfs::is_empty(env_dir.path));
  Result b = call({"precompute", "--nmax", "2", "--k", "1", "--digits", "20", "--cache-dir", flag_dir.str()});
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_FALSE(stdfs::is_empty(flag_dir.path));
  ::unsetenv("ZMOMENTS_CACHE_DIR");
}

TEST(Cli, PrecomputeIsIdempotent) {
  TempDir d;
  std::vector<std::string> args{"precompute", "--nmax", "3", "--k", "2", "--digits", "25", "--cache-dir", d.str(),
                                "--format", "json"};
  Result first = call(args);
  ASSERT_EQ(first.code, 0) << first.err;
  Result second = call(args);
  ASSERT_EQ(second.code, 0) << second.err;
  auto j1 = nlohmann::json::parse(first.out), j2 = nlohmann::json::parse(second.out);
  EXPECT_GT(j1["computed"].get<int>(), 0);
  EXPECT_EQ(j2["computed"].get<int>(), 0);
  EXPECT_EQ(j2["reused"].get<int>(), j1["computed"].get<int>() + j1["reused"].get<int>());
}

TEST(Cli, HeldLockIsAnIoError) {
  TempDir d;
  zmoments::CacheLock lock(d.path);
  Result r = call({"precompute", "--nmax", "1", "--cache-dir", d.str()});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, UnwritableCacheIsAnIoError) {
  TempDir d;
  stdfs::path file = d.path / "plain_file";
  std::ofstream(file) << "x";
  Result r = call({"precompute", "--nmax", "1", "--cache-dir", (file / "sub").string()});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, FastSelftestPasses) {
  Result r = call({"selftest", "fast", "--format", "json"});
  EXPECT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["failed"], 0);
  EXPECT_GT(j["checks"].size(), 3u);
}
