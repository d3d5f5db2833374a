#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = schmidt::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_json(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("schmidt_cli_" + name + ".json");
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, CountExample) {
  const auto r = run({"count", "--family", "Q", "--n", "3", "--k", "2", "--t", "1", "--r", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2\n");
}

TEST(Cli, SeriesPentagonal) {
  const auto r = run({"series", "--expr", "POCH(1,1)^1", "--terms", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 -1 -1 0 0 1\n");
  EXPECT_EQ(run({"series", "--expr", "POCH(1,1)", "--terms", "2", "--lines"}).out, "1\n-1\n-1\n");
  EXPECT_EQ(nlohmann::json::parse(run({"series", "--expr", "POCH(1,1)", "--terms", "3", "--json"}).out),
            nlohmann::json::parse("[1,-1,-1,0]"));
}

TEST(Cli, VerifyPasses) {
  const auto r = run({"verify", "--theorem", "p=q", "--n-max", "10", "--k", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all pass"), std::string::npos);
}

TEST(Cli, VerifyCorruptExitsOneWithWitness) {
  const auto r = run({"verify", "--theorem", "h=d", "--n-max", "3", "--k", "1", "--corrupt", "--json"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  bool witnessed = false;
  for (const auto& c : j["cells"]) witnessed = witnessed || !c["witness"].is_null();
  EXPECT_TRUE(witnessed);
}

TEST(Cli, EnumerateJsonRoundTripsThroughMap) {
  const auto r = run({"enumerate", "--family", "P", "--n", "6", "--k", "2", "--t", "2", "--r", "1", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto items = nlohmann::json::parse(r.out);
  ASSERT_FALSE(items.empty());
  for (const auto& tuple : items) {
    const auto fwd = run({"map", "--theorem", "p=q", "--input", temp_json("fwd", tuple.dump())});
    ASSERT_EQ(fwd.code, 0) << fwd.err;
    const auto back = run({"map", "--theorem", "p=q", "--direction", "backward", "--k", "2", "--input",
                           temp_json("back", fwd.out)});
    ASSERT_EQ(back.code, 0) << back.err;
    EXPECT_EQ(nlohmann::json::parse(back.out), tuple);
  }
}

TEST(Cli, MapPhiWorkedExample) {
  const auto path = temp_json("phi", R"({"rows":3,"cols":4,"entries":[[5,5,4,3],[7,4,1,0],[-5,-9,0,1]]})");
  const auto r = run({"map", "--theorem", "phi", "--input", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::parse("[7,7,4,0,-1,-4,5,4,3,4,1,1]"));
}

TEST(Cli, MapDiamondBothWays) {
  const auto tuple = temp_json("htuple", R"([[5,2],[7,4,{"part":4,"over":true},2],[11,3,2,1],
    [{"part":6,"over":true},5,{"part":3,"over":true}],[8,8,2]])");
  const auto fwd = run({"map", "--theorem", "h=d", "--input", tuple});
  ASSERT_EQ(fwd.code, 0) << fwd.err;
  EXPECT_EQ(nlohmann::json::parse(fwd.out)["entries"],
            nlohmann::json::parse("[37,34,31,22,23,22,20,20,19,17,11,9,11,5,8,3,3,1,0,0,0]"));
  const auto back = run({"map", "--theorem", "h=d", "--direction", "backward", "--input", temp_json("hd", fwd.out)});
  ASSERT_EQ(back.code, 0) << back.err;
  EXPECT_EQ(nlohmann::json::parse(back.out)[3][0], nlohmann::json::parse(R"({"part":6,"over":true})"));
}

TEST(Cli, RenderDot) {
  const auto r = run({"render", "--diamond", temp_json("d", R"({"k":1,"entries":[1,0,1,0]})"), "--format", "dot"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph diamond {", 0), 0u);
  EXPECT_NE(r.out.find("p1 -> p2;"), std::string::npos);
  EXPECT_NE(r.out.find("p3 -> p4;"), std::string::npos);
}

TEST(Cli, RenderFerrers) {
  const auto path = temp_json("o", R"([7,{"part":7,"over":true},5,4,{"part":4,"over":true},2,{"part":1,"over":true}])");
  const auto r = run({"render", "--overpartition", path, "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ooooooo\noooooo#\nooooo\noooo\nooo#\noo\n#\n");
}

TEST(Cli, UsageErrorsExitTwo) {
  const auto a = run({});
  EXPECT_EQ(a.code, 2);
  EXPECT_NE(a.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"count", "--family", "Q"}).code, 2);
  EXPECT_EQ(run({"count", "--family", "NOPE", "--n", "1"}).code, 2);
  EXPECT_EQ(run({"count", "--family", "Q", "--n", "3", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"verify", "--theorem", "x=y", "--n-max", "2"}).code, 2);
  EXPECT_EQ(run({"map", "--theorem", "p=q", "--input", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"render", "--format", "dot"}).code, 2);
  EXPECT_EQ(run({"series", "--expr", "POCH(", "--terms", "3"}).code, 2);
}
