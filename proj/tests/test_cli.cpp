#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ncpart/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = ncpart::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, EnumeratePairs) {
  const Result r = run({"enumerate", "--weights", "set:2", "--n-max", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.rfind("# ncpart ", 0), 0u);
  EXPECT_NE(r.out.find("# weights: set:2"), std::string::npos);
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines[0], "n,count");
  EXPECT_EQ(lines[4], "4,2");
  EXPECT_EQ(lines[8], "8,14");
  EXPECT_EQ(lines[3], "3,0");
}

TEST(Cli, EnumerateAsymptotic) {
  const Result r = run({"enumerate", "--weights", "all", "--n-max", "200", "--asymptotic"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  EXPECT_EQ(lines[0], "n,count,asymptotic,ratio");
  const std::string last = lines.back();
  const double ratio = std::stod(last.substr(last.rfind(',') + 1));
  EXPECT_NEAR(ratio, 0.9944, 1e-3);
}

TEST(Cli, EnumerateExplicitWeights) {
  const Result r = run({"enumerate", "--weights", "[1,1,1,1,1,1,1]", "--n-max", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(data_lines(r.out).back(), "6,132");
}

TEST(Cli, SupportFreePoisson) {
  const Result r = run({"support", "--preset", "free-poisson:1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 2u);
  EXPECT_EQ(lines[0], "name,rho,nu,xi,s_max,branch,residual");
  std::vector<std::string> cells;
  std::stringstream ss(lines[1]);
  for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
  EXPECT_NEAR(std::stod(cells[4]), 4.0, 1e-9);
  EXPECT_EQ(cells[5], "nu_ge_1");
}

TEST(Cli, SupportFromFile) {
  const std::string path = testing::TempDir() + "ncpart_kappa.json";
  {
    std::ofstream(path) << R"({"kappa":[0,1]})";
  }
  const Result r = run({"support", "--cumulants", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(data_lines(r.out)[1].find(",2,"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, SampleInfeasible) {
  const Result r = run({"sample", "--weights", "set:3", "--n", "4", "--count", "1", "--seed", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Infeasible"), std::string::npos);
}

TEST(Cli, SampleJsonLinesAndRender) {
  const std::string path = testing::TempDir() + "ncpart_sample.jsonl";
  const std::vector<std::string> args{"sample", "--weights", "odd", "--n", "51", "--count", "5", "--seed", "7", "--out", path};
  const Result r = run(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string first = slurp(path);
  std::istringstream in(first);
  std::string line;
  std::getline(in, line);
  const auto meta = nlohmann::json::parse(line);
  EXPECT_EQ(meta["meta"]["seed"], "7");
  EXPECT_EQ(meta["meta"]["weights"], "odd");
  std::size_t count = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j["replica"], count);
    EXPECT_EQ(j["n"], 51);
    for (const auto& b : j["blocks"]) EXPECT_EQ(b.size() % 2, 1u);
    ++count;
  }
  EXPECT_EQ(count, 5u);
  ASSERT_EQ(run(args).code, 0);
  EXPECT_EQ(slurp(path), first);

  const std::string svg = testing::TempDir() + "ncpart_sample.svg";
  const Result rr = run({"render", "--in", path, "--index", "2", "--fill", "--shade", "--out", svg});
  ASSERT_EQ(rr.code, 0) << rr.err;
  const std::string drawing = slurp(svg);
  EXPECT_EQ(drawing.rfind("<?xml", 0), 0u);
  EXPECT_NE(drawing.find("<metadata>ncpart"), std::string::npos);
  EXPECT_NE(drawing.find("</svg>"), std::string::npos);
  std::remove(path.c_str());
  std::remove(svg.c_str());
}

TEST(Cli, RenderSinglePartitionFile) {
  const std::string path = testing::TempDir() + "ncpart_p.json";
  {
    std::ofstream(path) << R"({"n": 4, "blocks": [[1, 4], [2, 3]]})";
  }
  const Result r = run({"render", "--in", path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("<line"), std::string::npos);
  {
    std::ofstream(path) << R"({"n": 4, "blocks": [[1, 3], [2, 4]]})";
  }
  const Result bad = run({"render", "--in", path});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("Crossing"), std::string::npos);
  std::remove(path.c_str());
}

TEST(Cli, Stats) {
  const Result r = run({"stats", "--weights", "all", "--n", "200", "--replicas", "200", "--seed", "3", "--sets", "1;2;odd"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto lines = data_lines(r.out);
  EXPECT_EQ(lines[0], "statistic,k_or_set,observed,predicted,stderr,n,replicas,seed");
  EXPECT_NE(r.out.find("zeta_variance,set:1,"), std::string::npos);
  EXPECT_NE(r.out.find("zeta_mean,odd,"), std::string::npos);
  EXPECT_NE(r.out.find("# seed: 3"), std::string::npos);
  EXPECT_EQ(run({"stats", "--weights", "all", "--n", "200", "--replicas", "200", "--seed", "3", "--sets", "1;2;odd"}).out,
            r.out);
}

TEST(Cli, UsageErrors) {
  const Result missing = run({"sample", "--n", "5"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("--weights"), std::string::npos);
  const Result unknown = run({"enumerate", "--weights", "all", "--n-max", "3", "--bogus"});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("--bogus"), std::string::npos);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"sample", "--weights", "set:1", "--n", "5"}).code, 1);
  EXPECT_EQ(run({"sample", "--weights", "all", "--n", "5", "--method", "fast"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, SelftestSubset) {
  const Result r = run({"selftest", "--criterion", "3", "--criterion", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS 3 "), std::string::npos);
  EXPECT_NE(r.out.find("PASS 7 "), std::string::npos);
}
