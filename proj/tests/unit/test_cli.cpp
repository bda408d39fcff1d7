#include <gtest/gtest.h>

#include <sstream>

#include "../../tools/cli.hpp"
#include "fixtures.hpp"

using namespace toric;
using toric::testing::fixture;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, RlctSecondApplication) {
  const auto r = run({"--json", "rlct", "--file", fixture("app_b/h.json"), "--script", fixture("app_b/map.json")});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  const auto j = io::parse_json(r.out);
  EXPECT_EQ(j["lambda1"], "3/4");
  EXPECT_EQ(j["m1"], 1);
}

TEST(Cli, CurveCsv) {
  const auto r = run({"curve", "{\"lambda1\":\"3/4\",\"m1\":1}", "--n", "10,100"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "n,K,G_shape");
  EXPECT_NE(r.out.find("10,0.075"), std::string::npos);
  EXPECT_NE(r.out.find("100,0.0075"), std::string::npos);
}

TEST(Cli, HilbertJson) {
  const auto r = run({"--json", "hilbert", fixture("app_b/cone.json")});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  const auto j = io::parse_json(r.out);
  EXPECT_EQ(j["hilbert_basis"].size(), 3u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"rlct", "x^2 +"}).code, cli::parse_error);
  EXPECT_EQ(run({"hilbert", "{\"ambient_dim\":2,\"generators\":[[1,0],[-1,0]]}"}).code, cli::domain_error);
  EXPECT_EQ(run({"resolve", "x^2 + y"}).code, cli::incomplete_resolution);
  EXPECT_EQ(run({"frobnicate"}).code, cli::parse_error);
  EXPECT_EQ(run({"verify", "--file", fixture("numeric/monomial.json"), "--expect", "1"}).code,
            cli::verification_mismatch);
}

TEST(Cli, ToricIdeal) {
  const auto r = run({"--json", "toric-ideal", "[[2,1,0],[0,1,2]]"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  EXPECT_EQ(io::parse_json(r.out)["binomials"][0], "t1*t3 - t2^2");
}

TEST(Cli, FanValidation) {
  const auto bad = run({"--json", "dual", fixture("fans/hirzebruch1_printed.json")});
  ASSERT_EQ(bad.code, cli::ok) << bad.err;
  EXPECT_FALSE(io::parse_json(bad.out)["valid"].get<bool>());
  const auto good = run({"--json", "dual", fixture("fans/hirzebruch1_standard.json")});
  EXPECT_TRUE(io::parse_json(good.out)["valid"].get<bool>());
}

TEST(Cli, OutputFile) {
  const auto path = std::filesystem::temp_directory_path() / "toric_cli_output_test.json";
  const auto r = run({"--json", "--output", path.string(), "newton", "x^2 + y^2"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(io::read_json_file(path)["vertices"].size(), 2u);
  std::filesystem::remove(path);
}
