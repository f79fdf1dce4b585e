#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "oreqb_cli/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = oreqb::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, RingShow) {
  const auto r = run({"ring", "show", "modular:6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("idempotents: {0, 1, 3, 4}"), std::string::npos) << r.out;
  const auto j = run({"ring", "show", "EX_3_5", "--format", "json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_EQ(json::parse(j.out).at("order"), 4);
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run({"check", "quasi-baer", "EX_3_5"}).code, 2);
  EXPECT_EQ(run({"check", "compatible", "EX_2_4"}).code, 0);
  EXPECT_EQ(run({"check", "no-such-property", "EX_2_4"}).code, 1);
  EXPECT_EQ(run({"check", "rigid", "modular:6"}).code, 1);
  EXPECT_EQ(run({"check", "reduced", "EX_9_9"}).code, 1);
  const auto over = run({"check", "skew-armendariz", "EX_3_3", "--mode", "exhaustive", "--budget", "1000"});
  EXPECT_EQ(over.code, 3) << over.err;
}

TEST(Cli, ArmendarizWitnessInJson) {
  const auto r = run({"check", "skew-armendariz", "EX_2_4", "--max-degree", "1", "--format", "json"});
  EXPECT_EQ(r.code, 2);
  const json doc = json::parse(r.out);
  const json& w = doc.at("entries").at(0).at("witness");
  EXPECT_EQ(w.at("p"), "[[[2,0],[0,2]],[[2,1],[0,2]]]");
  EXPECT_EQ(w.at("q"), "[[[2,0],[0,2]],[[2,1],[0,2]]]");
  EXPECT_EQ(w.at("i"), 1);
  EXPECT_EQ(w.at("j"), 0);
}

TEST(Cli, TextAndJsonAgreeOnStatus) {
  for (const auto& prop : {"reduced", "quasi-baer", "compatible", "rigid"}) {
    const auto text = run({"check", prop, "EX_2_2"});
    const auto js = run({"check", prop, "EX_2_2", "--format", "json"});
    EXPECT_EQ(text.code, js.code) << prop;
    const std::string status = json::parse(js.out).at("entries").at(0).at("status");
    EXPECT_NE(text.out.find(" " + status + " "), std::string::npos) << prop << "\n" << text.out;
  }
}

TEST(Cli, OreArithmetic) {
  auto r = run({"ore", "mul", "EX_3_5", "[t]", "[0,1,t]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[0,t]\n");
  r = run({"ore", "shift", "EX_3_5", "2", "t", "--pretty"});
  EXPECT_EQ(r.out, "t*x^2\n");
  r = run({"ore", "eq", "EX_3_5", "[0,t]", "[0,t,0]"});
  EXPECT_EQ(r.code, 0);
  r = run({"ore", "mul", "EX_3_5", "[t", "[1]"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
}

TEST(Cli, VerifySkippedExample) {
  const auto r = run({"verify", "EX_3_1", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  for (const auto& e : json::parse(r.out).at("entries")) EXPECT_EQ(e.at("status"), "skipped");
}

TEST(Cli, MalformedDescriptorFile) {
  const auto path = std::filesystem::temp_directory_path() / "oreqb_cli_bad.json";
  {
    std::ofstream out(path);
    out << "{\"kind\": \"modular\",\n";
  }
  const auto r = run({"ring", "show", path.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
  std::filesystem::remove(path);
}

TEST(Cli, DescriptorFileContext) {
  const auto path = std::filesystem::temp_directory_path() / "oreqb_cli_ctx.json";
  {
    std::ofstream out(path);
    out << R"({"ring": {"kind": "quotient", "base": {"kind": "modular", "n": 2},
                        "modulus": ["0", "0", "1"], "var": "t"},
               "sigma": {"rule": "identity"}, "delta": {"rule": "formal_derivative"}})";
  }
  const auto r = run({"ore", "mul", path.string(), "[t]", "[0,1,t]"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "[0,t]\n");
  std::filesystem::remove(path);
}
