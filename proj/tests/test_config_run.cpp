#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "distid/errors.hpp"
#include "distid/run.hpp"

namespace distid {
namespace {

constexpr const char* kBoundsConfig = R"({
  "command": "bounds",
  "family": {"kind": "explicit", "members": [[0.5, 0.5], [0.9, 0.1]]},
  "n_grid": [10]
})";

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseConfig, DefaultsFilled) {
  const RunConfig cfg = parse_config(kBoundsConfig);
  EXPECT_EQ(cfg.command, Command::kBounds);
  EXPECT_EQ(cfg.seed.value, 0x5EEDu);
  EXPECT_EQ(cfg.trials, 10000u);
  EXPECT_EQ(cfg.workers, 1);
  EXPECT_EQ(cfg.format, OutputFormat::kCsv);
  EXPECT_TRUE(cfg.out.empty());
  EXPECT_EQ(cfg.n_grid, (std::vector<std::uint64_t>{10}));
}

TEST(ParseConfig, UnknownKeyIsNamed) {
  const std::string msg = error_of(R"({"command": "simulate", "trails": 10})");
  EXPECT_NE(msg.find("trails"), std::string::npos) << msg;
  const std::string nested = error_of(R"({"family": {"kind": "binary-grid", "sise": 3}})");
  EXPECT_NE(nested.find("sise"), std::string::npos) << nested;
}

TEST(ParseConfig, GridMustIncrease) {
  EXPECT_FALSE(error_of(R"({"n_grid": [10, 10, 20]})").empty());
  EXPECT_FALSE(error_of(R"({"n_grid": [30, 20]})").empty());
  EXPECT_FALSE(error_of(R"({"n": 3, "n_grid": [1, 2]})").empty());
}

TEST(ParseConfig, SyntaxAndTypeErrors) {
  const std::string msg = error_of("{\n  \"n\": 3,\n  \"trials\": ,\n}");
  EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
  EXPECT_FALSE(error_of(R"({"trials": "many"})").empty());
  EXPECT_FALSE(error_of(R"({"trials": -1})").empty());
  EXPECT_FALSE(error_of(R"({"format": "xml"})").empty());
}

TEST(ParseConfig, PerCommandRequirements) {
  EXPECT_FALSE(error_of(R"({"command": "bounds", "n": 3})").empty());
  EXPECT_FALSE(error_of(R"({"command": "lemma"})").empty());
  EXPECT_FALSE(error_of(R"({"command": "exponent", "n_grid": [1,2,3],
      "family": {"kind": "binary-grid", "size": 3}})").empty());
  EXPECT_FALSE(error_of(R"({"command": "sweep", "n_grid": [1,2,3]})").empty());
}

TEST(ParseConfig, SequenceSpec) {
  const RunConfig cfg = parse_config(R"({
    "command": "sweep",
    "sequence": {"growth": {"kind": "exponential", "rate": 0.05},
                 "generator": {"kind": "random-simplex", "alphabet": 16, "seed": 3},
                 "pair_budget": 500},
    "n_grid": [10, 20, 30]
  })");
  ASSERT_TRUE(cfg.sequence.has_value());
  EXPECT_EQ(cfg.sequence->growth.kind, GrowthRule::Kind::kExponential);
  EXPECT_EQ(cfg.sequence->pair_budget, 500u);
  EXPECT_EQ(std::get<RandomSimplex>(cfg.sequence->generator).alphabet, 16u);
}

TEST(Render, BoundsExampleRow) {
  const std::string out = render(parse_config(kBoundsConfig));
  EXPECT_EQ(out,
            "n,A,S,log_S,upper,upper_applicable,upper_clamped,lower\n"
            "10,2,0.10737418239999995,-2.231435513142098,NA,false,false,0.039348293882569926\n");
}

TEST(Render, LemmaEqualWeights) {
  RunConfig cfg = parse_config(R"({"command": "lemma", "k": 4, "r": [4], "trials": 1, "weights": "equal",
                                   "facts": false})");
  const std::string out = render(cfg);
  EXPECT_EQ(out, "check,k,r,trial,lhs,rhs,holds\nlemma,4,4,0,1,1,true\n");
}

TEST(Render, SimulateDisjointPairHasZeroPHat) {
  const std::string out = render(parse_config(R"({"command": "simulate", "n": 4, "trials": 100,
      "family": {"kind": "explicit", "members": [[1, 0], [0, 1]]}})"));
  EXPECT_NE(out.find("\n4,2,100,0,0,"), std::string::npos) << out;
}

TEST(Render, WorkerCountDoesNotChangeOutput) {
  RunConfig cfg = parse_config(R"({"command": "simulate", "n_grid": [5, 10], "trials": 3000,
      "family": {"kind": "binary-grid", "size": 4}})");
  const std::string one = render(cfg);
  cfg.workers = 3;
  EXPECT_EQ(render(cfg), one);
}

TEST(Run, ExitCodes) {
  std::ostringstream out;
  std::ostringstream diag;
  EXPECT_EQ(run(parse_config(kBoundsConfig), out, diag), kExitOk);

  RunConfig bad = parse_config(R"({"command": "lemma", "k": 4, "r": [5]})");
  EXPECT_EQ(run(bad, out, diag), kExitPrecondition);

  RunConfig unwritable = parse_config(kBoundsConfig);
  unwritable.out = "/nonexistent-dir/x.csv";
  EXPECT_EQ(run(unwritable, out, diag), kExitIo);

  RunConfig no_command;
  EXPECT_EQ(run(no_command, out, diag), kExitConfig);
}

}  // namespace
}  // namespace distid
