#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = relloc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  std::string write_state(const std::string& name, const std::string& body) {
    const std::string path = ::testing::TempDir() + "relloc_cli_" + name + ".json";
    std::ofstream(path) << body;
    paths_.push_back(path);
    return path;
  }
  void TearDown() override {
    for (const auto& p : paths_) std::remove(p.c_str());
  }

 private:
  std::vector<std::string> paths_;
};

double number(const std::string& s) { return std::stod(s); }

}  // namespace

TEST_F(CliTest, EvalExamples) {
  const std::string rest = write_state("rest", R"({"m": 1, "S": 0, "c": 1, "x": [0,0,0], "p": [0,0,0]})");
  Result r = run({"eval", rest, "P0"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(number(r.out), -1.0);

  const std::string st =
      write_state("j12", R"({"m": 1, "S": 1, "c": 1, "x": [1,0,0], "p": [0,1,0], "s_hat": [0,0,1]})");
  r = run({"eval", st, "x1*p2 - x2*p1 + s3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(number(r.out), 2.0);
  r = run({"eval", st, "J12"});
  EXPECT_EQ(number(r.out), 2.0);
  r = run({"eval", st, "X1"});
  EXPECT_NEAR(number(r.out), 1.0, 1e-15);

  r = run({"--c", "3", "eval", rest, "P0"});
  EXPECT_EQ(number(r.out), -3.0);

  r = run({"--format", "json", "eval", rest, "P0"});
  EXPECT_EQ(nlohmann::json::parse(r.out).at("value"), -1.0);
}

TEST_F(CliTest, EvalErrors) {
  const std::string rest = write_state("rest2", R"({"m": 1, "x": [0,0,0], "p": [0,0,0]})");
  Result r = run({"eval", rest, "x1 +"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("offset 4"), std::string::npos) << r.err;
  r = run({"eval", rest, "1/x1"});
  EXPECT_EQ(r.code, 2);
  r = run({"eval", "/nonexistent.json", "x1"});
  EXPECT_EQ(r.code, 2);
  r = run({"eval", write_state("bad", R"({"m": 1, "x": [0,0,0]})"), "x1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("\"p\""), std::string::npos);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, BracketExamples) {
  const std::string st =
      write_state("br", R"({"m": 1, "S": 2, "c": 1, "x": [0.5,0,0], "p": [0.2,0.3,0], "s_hat": [0,0,1]})");
  Result r = run({"bracket", st, "x1", "p1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(number(r.out), 1.0);
  r = run({"bracket", st, "s1", "s2"});
  EXPECT_EQ(number(r.out), 2.0);
  r = run({"bracket", st, "J12", "P1"});
  EXPECT_NEAR(number(r.out), 0.3, 1e-15);
  r = run({"bracket", st, "X1", "X2"});
  EXPECT_NEAR(number(r.out), 0.0, 1e-14);
  r = run({"bracket", "--symbolic", st, "x1", "p1^2"});
  EXPECT_NE(r.out.find('\n'), r.out.rfind('\n'));
}

TEST_F(CliTest, WorldlineRows) {
  const std::string st =
      write_state("wl", R"({"m": 1, "S": 1, "c": 1, "x": [1,2,3], "p": [0.5,0,0], "s_hat": [0,1,0]})");
  Result r = run({"worldline", st, "--choice", "nw", "--tau", "0:2:3"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "tau,x0,x1,x2,x3");
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  ASSERT_EQ(rows.size(), 3u);
  // On u = e0 the NW position is x, advancing with velocity p/|P0|.
  EXPECT_NEAR(rows[0][2], 1.0, 1e-12);
  EXPECT_NEAR(rows[0][3], 2.0, 1e-12);
  EXPECT_NEAR(rows[1][1], 1.0, 1e-12);
  EXPECT_NEAR(rows[2][2] - rows[1][2], 0.5 / std::sqrt(1.25), 1e-12);

  r = run({"worldline", st, "--choice", "ce", "--u", "2", "1", "0", "0", "--tau", "-1:1:2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("rows").size(), 2u);
  EXPECT_NEAR(j.at("u")[0].get<double>(), 2.0 / std::sqrt(3.0), 1e-15);

  EXPECT_EQ(run({"worldline", st, "--u", "0", "1", "0", "0"}).code, 2);
  EXPECT_EQ(run({"worldline", st, "--tau", "0:1"}).code, 2);
  EXPECT_EQ(run({"worldline", st, "--choice", "xx"}).code, 2);
}

TEST_F(CliTest, Verify) {
  Result r = run({"verify", "algebra", "--samples", "5"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.rfind("suite,check,value,bound,threshold,status", 0), 0u);
  r = run({"verify", "nope"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("covariance"), std::string::npos);
  r = run({"verify", "algebra", "--samples", "5", "--tol", "algebra=1e-300"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run({"verify", "algebra", "--tol", "zzz=1"}).code, 2);
  EXPECT_EQ(run({"verify", "algebra", "--samples", "0"}).code, 2);
}

TEST_F(CliTest, Moller) {
  const std::string st =
      write_state("mo", R"({"m": 2, "S": 1, "c": 1, "x": [0,0,0], "p": [0.4,0,0.1], "s_hat": [0,0,1]})");
  Result r = run({"moller", st});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j.at("radius").get<double>(), 0.5);
  EXPECT_NEAR(j.at("spin").get<double>(), 1.0, 1e-12);

  r = run({"--c", "2", "--format", "json", "moller", st});
  EXPECT_DOUBLE_EQ(nlohmann::json::parse(r.out).at("radius").get<double>(), 0.25);

  r = run({"moller", st, "--format", "csv"});
  EXPECT_EQ(r.out.rfind("radius,", 0), 0u);

  const std::string zero = write_state("mo0", R"({"m": 2, "x": [0,0,0], "p": [0.4,0,0.1]})");
  r = run({"--format", "json", "moller", zero});
  EXPECT_EQ(nlohmann::json::parse(r.out).at("radius").get<double>(), 0.0);
}
