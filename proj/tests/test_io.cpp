#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "relloc/io.hpp"
#include "relloc/sampling.hpp"

using namespace relloc;
using nlohmann::json;

TEST(Io, StateRoundTrip) {
  Sampler s(71);
  const ElementarySystem sys(1.5, 0.5, 2.0);
  const State st = s.state(sys);
  const json j = to_json(sys, st);
  EXPECT_EQ(j.at("schema"), kSchema);
  const SystemState back = system_state_from_json(json::parse(j.dump()));
  EXPECT_EQ(back.system.m(), 1.5);
  EXPECT_EQ(back.system.spin(), 0.5);
  EXPECT_EQ(back.system.c(), 2.0);
  EXPECT_EQ(back.state.x, st.x);
  EXPECT_EQ(back.state.p, st.p);
  EXPECT_EQ(*back.state.s_hat, *st.s_hat);
}

TEST(Io, DefaultsAndOverride) {
  const json j = json::parse(R"({"m": 2, "x": [0, 0, 0], "p": [1, 0, 0]})");
  const SystemState a = system_state_from_json(j);
  EXPECT_EQ(a.system.c(), 1.0);
  EXPECT_EQ(a.system.spin(), 0.0);
  EXPECT_FALSE(a.state.s_hat);
  EXPECT_EQ(system_state_from_json(j, 3.0).system.c(), 3.0);
}

TEST(Io, RejectsMalformedStates) {
  EXPECT_THROW(system_state_from_json(json::parse(R"({"x": [0,0,0], "p": [0,0,0]})")), std::invalid_argument);
  EXPECT_THROW(system_state_from_json(json::parse(R"({"m": 1, "x": [0,0], "p": [0,0,0]})")), std::invalid_argument);
  EXPECT_THROW(system_state_from_json(json::parse(R"({"m": 1, "x": [0,0,"a"], "p": [0,0,0]})")),
               std::invalid_argument);
  EXPECT_THROW(system_state_from_json(json::parse(R"({"m": 1, "S": 1, "x": [0,0,0], "p": [0,0,0]})")),
               std::invalid_argument);
  EXPECT_THROW(system_state_from_json(json::parse(R"({"m": 1, "S": 1, "x": [0,0,0], "p": [0,0,0], "s_hat": [1,1,0]})")),
               std::invalid_argument);
  EXPECT_THROW(system_state_from_json(json::parse(R"({"m": 1, "x": [0,0,0], "p": [0,0,0], "s_hat": [1,0,0]})")),
               std::invalid_argument);
  EXPECT_THROW(system_state_from_json(json::parse(R"({"m": -1, "x": [0,0,0], "p": [0,0,0]})")), std::invalid_argument);
  EXPECT_THROW(system_state_from_json(json::parse("[1, 2]")), std::invalid_argument);
}

TEST(Io, TransformAndHyperplaneRoundTrip) {
  Sampler s(72);
  const PoincareTransform g = s.poincare();
  const PoincareTransform back = poincare_from_json(json::parse(to_json(g).dump()));
  EXPECT_EQ(max_abs_difference(back.lambda.matrix(), g.lambda.matrix()), 0.0);
  EXPECT_EQ(max_abs_difference(back.a, g.a), 0.0);
  const Hyperplane h = s.hyperplane();
  const Hyperplane hb = hyperplane_from_json(json::parse(to_json(h).dump()));
  EXPECT_EQ(max_abs_difference(hb.u(), h.u()), 0.0);
  EXPECT_EQ(hb.tau(), h.tau());
  EXPECT_THROW(poincare_from_json(json::parse(R"({"lambda": [[1,0,0,0]]})")), std::invalid_argument);
  EXPECT_THROW(hyperplane_from_json(json::parse(R"({"u": [0,1,0,0], "tau": 0})")), std::invalid_argument);
}

TEST(Io, FormatDoubleIsShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(-2.0), "-2");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

TEST(Io, ReadJsonFileReportsPath) {
  EXPECT_THROW(read_json_file("/nonexistent/state.json"), std::runtime_error);
  const std::string path = ::testing::TempDir() + "relloc_io_bad.json";
  std::ofstream(path) << "{ not json";
  try {
    read_json_file(path);
    FAIL() << "expected failure";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find(path), std::string::npos);
  }
  std::remove(path.c_str());
}
