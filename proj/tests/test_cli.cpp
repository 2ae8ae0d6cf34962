#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
  json payload() const { return json::parse(out); }
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = subres::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(SUBRES_DATA_DIR) + "/" + name; }

const char* kLinearPair = R"({
  "f": {"n_vars": 1, "degree": 2, "terms": [{"exp": [0], "coef": "-1"}, {"exp": [2], "coef": "1"}]},
  "g": {"n_vars": 1, "degree": 1, "terms": [{"exp": [0], "coef": "-2"}, {"exp": [1], "coef": "1"}]}
})";

TEST(CliTest, UniDeltaExampleIsSeven) {
  const auto r = run({"uni-delta", "--input", data("example1.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = r.payload();
  EXPECT_EQ(j["value"], "7");
  EXPECT_EQ(j["seed"], 1);
  EXPECT_EQ(j["verb"], "uni-delta");
  EXPECT_TRUE(j.contains("sign_convention"));
  EXPECT_TRUE(j.contains("matrix_size"));
}

TEST(CliTest, UniDeltaReadsStdin) {
  std::ifstream file(data("example1.json"));
  std::stringstream text;
  text << file.rdbuf();
  const auto r = run({"uni-delta"}, text.str());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.payload()["value"], "7");
}

TEST(CliTest, MultiDeltaConicsMatchesClosedForm) {
  for (const char* seed : {"1", "2", "17"}) {
    const auto r = run({"multi-delta", "--input", data("conics.json"), "--seed", seed});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = r.payload();
    EXPECT_EQ(j["closed_form_check"], true);
    EXPECT_EQ(j["value"], j["closed_form"]);
    EXPECT_EQ(j["seed"], std::stoi(seed));
  }
}

TEST(CliTest, SameSeedIsByteIdentical) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"multi-delta", "--input", data("conics.json"), "--seed", "5"},
        std::vector<std::string>{"verify", "--suite", "all", "--count", "3", "--seed", "9"}}) {
    const auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
  EXPECT_NE(run({"multi-delta", "--input", data("conics.json"), "--seed", "5"}).out,
            run({"multi-delta", "--input", data("conics.json"), "--seed", "6"}).out);
}

TEST(CliTest, UniResAndSres) {
  // Res(x^2 - 1, x - 2) = g-root evaluation 2^2 - 1 = 3 (up to the Sylvester sign (-1)^{2})
  const auto res = run({"uni-res"}, kLinearPair);
  ASSERT_EQ(res.code, 0) << res.err;
  EXPECT_EQ(res.payload()["value"], "3");
  const auto sres = run({"uni-sres"}, kLinearPair);
  ASSERT_EQ(sres.code, 0) << sres.err;
  EXPECT_EQ(sres.payload()["sres"].size(), 2u);
}

TEST(CliTest, TOrderOverride) {
  std::ifstream file(data("example1.json"));
  std::stringstream text;
  text << file.rdbuf();
  const auto r = run({"uni-delta", "--t-override", "9"}, text.str());
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.payload()["error"], "BadOrderRange");
}

TEST(CliTest, TSetOverrideFile) {
  const std::string path = ::testing::TempDir() + "/t_override.json";
  {
    std::ofstream f(path);
    f << R"({"2": [[0, 2]]})";
  }
  // t = 3 for degrees (2, 2, 2): T_2 may be chosen freely among degree-2 monomials.
  const std::string input = R"({"degrees": [2, 2, 2], "t": 3, "S": [[0, 0]]})";
  const auto plain = run({"extraneous"}, input);
  const auto over = run({"extraneous", "--T-override", path}, input);
  ASSERT_EQ(plain.code, 0) << plain.out;
  ASSERT_EQ(over.code, 0) << over.out;
  EXPECT_EQ(plain.payload()["polys"], over.payload()["polys"]);

  std::ofstream(path) << R"({"2": [[1, 1, 1]]})";
  EXPECT_EQ(run({"extraneous", "--T-override", path}, input).code, 2);
}

TEST(CliTest, VerifyThm2Passes) {
  const auto r = run({"verify", "--suite", "thm2", "--max-degree", "3", "--count", "25"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = r.payload();
  EXPECT_EQ(j["suite"], "thm2");
  EXPECT_EQ(j["instances"], j["passed"]);
  EXPECT_TRUE(j["failures"].empty());
}

TEST(CliTest, VerifyEverySuite) {
  for (const char* suite : {"thm1", "thm2", "poisson-uni", "poisson-multi", "rar", "hong", "koko", "counts",
                            "minor-ratio", "oracles"}) {
    const auto r = run({"verify", "--suite", suite, "--count", "4"});
    EXPECT_EQ(r.code, 0) << suite << ": " << r.out;
    EXPECT_GT(r.payload()["instances"].get<int>(), 0) << suite;
  }
}

TEST(CliTest, SchemaErrorsExitTwo) {
  EXPECT_EQ(run({"uni-delta"}, "{not json").code, 2);
  EXPECT_EQ(run({"uni-delta"}, R"({"g": 1})").code, 2);
  EXPECT_EQ(run({"uni-delta", "--input", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  const auto r = run({"multi-delta"}, R"({"degrees": [2, 2, 2], "t": 2, "S": [[0, 0]]})");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.payload()["error"], "WrongCardinality");
  EXPECT_FALSE(r.err.empty());
}

TEST(CliTest, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

TEST(CliTest, GenPolyUnivariateAndMultivariate) {
  std::string uni = kLinearPair;
  uni.insert(uni.rfind('}'), R"(, "t": 1, "S_plus": [[0], [1]])");
  const auto u = run({"gen-poly"}, uni);
  ASSERT_EQ(u.code, 0) << u.out;
  EXPECT_EQ(u.payload()["polynomial"]["n_vars"], 1);

  const auto m = run({"gen-poly"}, R"({"degrees": [2, 2, 2], "t": 2, "S_plus": [[0, 0], [1, 0], [1, 1], [2, 0]]})");
  ASSERT_EQ(m.code, 0) << m.out;
  EXPECT_EQ(m.payload()["polynomial"]["n_vars"], 2);
}

}  // namespace
