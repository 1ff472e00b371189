#include "cli.hpp"

#include <nlohmann/json.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace {

using nlohmann::json;

struct Result {
  int code;
  json out;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = toricval::cli::run(args, out, err);
  return {code, json::parse(out.str())};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("toricval_cli_" + name + ".json");
  std::ofstream(path) << text;
  return path.string();
}

const char* kOverlapping = R"({"format":"toricval/1","gamma":"Z","ambient_dim":2,"payload":{"fan":{"cones":[
  {"vertices":[["0","0"]],"rays":[["1","0"],["0","1"]]},
  {"vertices":[["0","0"]],"rays":[["1","1"],["-1","1"]]}]}}})";

const char* kLineFan = R"({"format":"toricval/1","gamma":"Z","ambient_dim":1,"payload":{"fan":{"cones":[
  {"vertices":[["0"]],"rays":[["1"]]},{"vertices":[["0"]],"rays":[["-1"]]}]}}})";

const char* kQuadrant = R"({"format":"toricval/1","gamma":"Z","ambient_dim":1,"payload":{"halfspace_fan":{"cones":[
  {"vertices":[["0","0"]],"rays":[["1","0"],["0","1"]]}]}}})";

}  // namespace

TEST(Cli, ExamplesListAndRun) {
  const Result list = invoke({"examples", "list"});
  EXPECT_EQ(list.code, 0);
  EXPECT_EQ(list.out.at("result").at("examples").size(), 3u);
  const Result run = invoke({"examples", "run", "ex-raynaud-disconnect"});
  EXPECT_EQ(run.code, 1);
  EXPECT_EQ(run.out.at("status"), "Refuted");
  EXPECT_EQ(invoke({"examples", "run", "ex-nope"}).code, 3);
}

TEST(Cli, OverlappingFanIsRefuted) {
  const Result r = invoke({"validate", write_temp("overlap", kOverlapping)});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out.at("status"), "Refuted");
}

TEST(Cli, AlgebraizeProjectiveLine) {
  const Result r = invoke({"algebraize", write_temp("p1", kLineFan)});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.at("status"), "Proved");
  EXPECT_EQ(r.out.at("result").at("e"), "1");
}

TEST(Cli, HilbertBasisOfTheQuadrant) {
  const Result r = invoke({"hilbert", write_temp("quadrant", kQuadrant)});
  ASSERT_EQ(r.code, 0) << r.out.dump();
  const json& basis = r.out.at("result").at("hilbert_basis");
  EXPECT_EQ(r.out.at("result").at("size"), 2);
  ASSERT_EQ(basis.size(), 2u);
  for (const auto& h : basis) {
    EXPECT_TRUE(h.contains("u"));
    EXPECT_TRUE(h.at("gamma").is_string());
  }
}

TEST(Cli, RenderCensus) {
  const Result r = invoke({"render", write_temp("p1_render", kLineFan), "--viewport", "-1,1,-1,1"});
  ASSERT_EQ(r.code, 0) << r.out.dump();
  EXPECT_EQ(r.out.at("result").at("census").at("segments"), 2);
  EXPECT_EQ(r.out.at("result").at("census").at("points"), 1);
}

TEST(Cli, InputErrors) {
  std::ostringstream out, err;
  EXPECT_EQ(toricval::cli::run({}, out, err), 3);
  const Result bad = invoke({"validate", write_temp("broken", "{\"format\": ")});
  EXPECT_EQ(bad.code, 3);
  EXPECT_EQ(bad.out.at("error").at("kind"), "InputError");
  EXPECT_NE(bad.out.at("error").at("message").get<std::string>().find("line"), std::string::npos);
  EXPECT_EQ(invoke({"validate", "/nonexistent/doc.json"}).code, 3);
  EXPECT_EQ(invoke({"validate", write_temp("p1_window", kLineFan), "--window", "1"}).code, 3);
}

TEST(Cli, GammaOverrideAcceptsHalves) {
  const char* halves = R"({"format":"toricval/1","gamma":"Z","ambient_dim":1,"payload":{"complex":{"cells":[
    {"ineqs":[{"u":[1],"gamma":"0"},{"u":[-1],"gamma":"-1/2"}]}]}}})";
  const std::string path = write_temp("halves", halves);
  const Result strict = invoke({"validate", path});
  EXPECT_EQ(strict.code, 3);
  EXPECT_EQ(strict.out.at("error").at("kind"), "NotGammaRational");
  EXPECT_EQ(invoke({"validate", path, "--gamma", "Z[1/2]"}).code, 0);
}
