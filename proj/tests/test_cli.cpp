#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sevac/cli.hpp"

using sevac::run_cli;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_cli(args, out, err);
  return {status, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream file(std::string(SEVAC_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(file.good());
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

}  // namespace

TEST_CASE("tables match the golden files") {
  const auto s = run({"table", "S", "--max-n", "10", "--format", "markdown", "--source", "both"});
  CHECK(s.status == 0);
  CHECK(s.out == golden("s_table.md"));

  const auto star = run({"table", "S_star", "--max-n", "10", "--source", "both"});
  CHECK(star.status == 0);
  CHECK(star.out == golden("s_star_table.md"));
}

TEST_CASE("degenerate table") {
  const auto r = run({"table", "S", "--max-n", "0"});
  CHECK(r.status == 0);
  CHECK(r.out == "| n/d | 0 |\n|---|---|\n| 0 | 1 |\n");
}

TEST_CASE("csv and json tables") {
  const auto csv = run({"table", "c", "--max-n", "4", "--max-m", "3", "--format", "csv",
                        "--source", "both"});
  CHECK(csv.status == 0);
  CHECK(csv.out == "n/m,1,2,3\n0,1,1,1\n1,1,0,1\n2,1,2,3\n3,1,0,3\n4,1,3,7\n");

  const auto json = run({"table", "s_star_totals", "--max-n", "10", "--format", "json"});
  CHECK(json.status == 0);
  const auto doc = nlohmann::json::parse(json.out);
  CHECK(doc["family"] == "s_star_totals");
  CHECK(doc["rows"].size() == 6);
  CHECK(doc["rows"][5]["values"][0] == "81");
  CHECK(doc["agree"] == true);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"table", "S", "--max-n", "12", "--source", "both",
                                      "--format", "json"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("apply") {
  CHECK(run({"apply", "evacuate", "32146578"}).out == "12435876\n");
  CHECK(run({"apply", "descents", "32146578"}).out == "1,2,5\n");
  CHECK(run({"apply", "self-evac-check", "1234"}).out == "true\n");
  CHECK(run({"apply", "self-evac-check", "2134"}).out == "false\n");
  CHECK(run({"apply", "rsk", "21"}).out == "1\n2\n");
  CHECK(run({"apply", "polarize", "x=1,1,2,3,4,4,4,6;y=4,3,2,1,6,4,1,4"}).out == "74328615\n");
  CHECK(run({"apply", "rsk", "x=1,2,2,3,3,3,4,4,4,4;y=1,2,2,3,3,3,4,4,4,4"}).out ==
        "1 2 3 4\n2 3 4\n3 4\n4\n");
  CHECK(run({"apply", "evacuate", "x=1,2;y=2,1;m=3"}).out == "2 3\n3 2\n");

  const auto json = run({"apply", "descents", "32146578", "--format", "json"});
  CHECK(nlohmann::json::parse(json.out)["result"] == nlohmann::json::array({1, 2, 5}));
}

TEST_CASE("exit statuses") {
  CHECK(run({}).status == 2);
  CHECK(run({"table", "T"}).status == 2);
  CHECK(run({"table", "S", "--format", "xml"}).status == 2);
  CHECK(run({"apply", "descents", "2314"}).status == 2);
  CHECK(run({"apply", "frobnicate", "21"}).status == 2);
  CHECK(run({"verify", "all", "--caps", "bogus=1"}).status == 2);
  CHECK(run({"table", "S", "--max-n", "16", "--source", "oracle"}).status == 3);
  CHECK(run({"table", "S", "--max-n", "16", "--source", "formula"}).status == 3);
  CHECK(run({"table", "S", "--max-n", "16", "--caps", "inv-n=16"}).status == 0);
  CHECK(run({"--help"}).status == 0);
}

TEST_CASE("verify") {
  const auto witnesses = run({"verify", "witnesses"});
  CHECK(witnesses.status == 0);
  CHECK(witnesses.out.find("2 identities, 0 mismatched") != std::string::npos);

  const auto empty = run({"verify", "all", "--caps", "none", "--format", "json"});
  CHECK(empty.status == 0);
  CHECK(nlohmann::json::parse(empty.out)["records"].empty());

  const auto literal = run({"verify", "formulas", "--eq9-literal", "--format", "json"});
  CHECK(literal.status == 1);
  const auto doc = nlohmann::json::parse(literal.out);
  bool found = false;
  for (const auto& record : doc["records"]) {
    if (record["identity"] == "s_star_total.explicit_vs_literal_recurrence") {
      found = true;
      CHECK(record["status"] == "mismatch");
      CHECK(record["counterexample"]["parameters"] == "k=2");
    } else {
      CHECK(record["status"] == "match");
    }
  }
  CHECK(found);
}
