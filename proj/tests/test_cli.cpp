#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "kmw/cli.hpp"

using kmw::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(KMW_SAMPLES_DIR) + "/" + name + ".json"; }

}  // namespace

TEST(Cli, SliceWeightsOfSlTwo) {
  auto r = call({"weights", "--input", sample("a1-dominant"), "--method", "slice", "--height", "10"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  std::vector<std::vector<int>> offsets;
  for (const auto& w : doc["weights"]) offsets.push_back(w["offset"].get<std::vector<int>>());
  EXPECT_EQ(offsets, (std::vector<std::vector<int>>{{0}, {1}, {2}, {3}}));
  EXPECT_EQ(doc["weights"][1]["pairings"][0], "1");
  EXPECT_EQ(doc["method"], "slice");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"verify", "--input", sample("affine-trivial"), "--check", "macdonald", "--height", "8"}).code, 0);
  auto orbit = call({"weights", "--input", sample("affine-trivial"), "--method", "orbit"});
  EXPECT_EQ(orbit.code, 3);
  EXPECT_NE(orbit.err.find("finite stabilizer"), std::string::npos);
  EXPECT_EQ(call({"classify", "--input", sample("bad-gcm")}).code, 2);
  EXPECT_EQ(call({"classify", "--input", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(call({"weights", "--input", sample("a1-dominant"), "--method", "magic"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"series", "--input", sample("affine-basic"), "--formula", "ab"}).code, 3);
  EXPECT_EQ(call({"verify", "--input", sample("a2-adjoint"), "--check", "denominator"}).code, 0);
  EXPECT_EQ(call({"verify", "--input", sample("affine-trivial"), "--check", "denominator"}).code, 3);
  EXPECT_EQ(call({"weights", "--input", sample("affine-basic"), "--method", "oracle", "--height", "9"}).code, 4);
}

TEST(Cli, ExpectedFailureMode) {
  std::vector<std::string> base{"verify", "--input", sample("affine-trivial"), "--check", "wkw", "--height", "8"};
  auto plain = call(base);
  EXPECT_EQ(plain.code, 1);
  EXPECT_EQ(nlohmann::json::parse(plain.out)["status"], "EXPECTED_FAIL");
  base.push_back("--expect-fail");
  EXPECT_EQ(call(base).code, 0);
  EXPECT_EQ(call({"verify", "--input", sample("a1-dominant"), "--check", "wkw", "--expect-fail"}).code, 1);
}

TEST(Cli, OutputsAreDeterministicAndSorted) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"weights", "--input", sample("affine-leg"), "--method", "hull", "--height", "6"},
           {"weights", "--input", sample("a3-levi"), "--format", "svg", "--height", "6"},
           {"series", "--input", sample("hyperbolic"), "--formula", "wkw", "--height", "8"},
           {"roots", "--input", sample("hyperbolic"), "--kind", "imaginary", "--height", "8"},
           {"classify", "--input", sample("affine-leg-trivial-levi")}}) {
    auto a = call(args), b = call(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
  auto doc = nlohmann::json::parse(
      call({"weights", "--input", sample("affine-leg"), "--method", "slice", "--height", "6"}).out);
  std::vector<std::vector<int>> offsets;
  for (const auto& w : doc["weights"]) offsets.push_back(w["offset"].get<std::vector<int>>());
  EXPECT_TRUE(std::is_sorted(offsets.begin(), offsets.end()));
}

TEST(Cli, SeriesCoefficientsAreStrings) {
  auto r = call({"series", "--input", sample("a2-adjoint"), "--formula", "ab", "--height", "6"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto doc = nlohmann::json::parse(r.out);
  bool found = false;
  for (const auto& t : doc["terms"])
    if (t["offset"] == nlohmann::json{1, 1}) found = t["coefficient"] == "2";
  EXPECT_TRUE(found);
}

TEST(Cli, SvgForSlTwo) {
  auto r = call({"weights", "--input", sample("a1-dominant"), "--format", "svg"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::size_t dots = 0;
  for (std::size_t p = r.out.find("<circle"); p != std::string::npos; p = r.out.find("<circle", p + 1)) ++dots;
  EXPECT_EQ(dots, 4u);
  EXPECT_NE(r.out.find("<line class=\"hull\""), std::string::npos);
  EXPECT_EQ(r.out.find("class=\"ray\""), std::string::npos);
}

TEST(Cli, SvgRaysForInfiniteIntegrability) {
  auto r = call({"weights", "--input", sample("affine-leg"), "--format", "svg", "--height", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("class=\"ray\""), std::string::npos);
  EXPECT_NE(r.out.find("<polygon class=\"hull\""), std::string::npos);
}

TEST(Cli, RankDeficientProjection) {
  kmw::WeightSet ws;
  kmw::HullModel hull;
  kmw::Projection flat{{1, 2}, {2, 4}};
  EXPECT_THROW(kmw::emit_svg(ws, hull, flat), kmw::InputError);
}

TEST(Cli, ProblemRoundTrip) {
  auto p = kmw::read_problem_file(sample("a3-levi"));
  auto q = kmw::problem_from_json(kmw::to_json(p));
  EXPECT_EQ(q.cartan, p.cartan);
  EXPECT_EQ(q.lambda, p.lambda);
  EXPECT_EQ(kmw::to_json(q), kmw::to_json(p));
  EXPECT_THROW(kmw::parse_problem(R"({"cartan": [[2]], "lambda": [3]})"), kmw::InputError);
  EXPECT_THROW(kmw::parse_problem(R"({"cartan": [[2]], "lambda": ["1", "2"]})"), kmw::InputError);
}
