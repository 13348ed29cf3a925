#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "interlab/cli.hpp"
#include "interlab/error.hpp"
#include "interlab/json_io.hpp"

using namespace interlab;
using io::Json;

namespace {

std::string data(const std::string& name) { return std::string(INTERLAB_TEST_DATA) + "/" + name; }

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  CliRun r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

}  // namespace

TEST(JsonIo, NumbersAreExact) {
  EXPECT_EQ(io::scalar_from(Json::parse("0.1")), Scalar::ratio(1, 10));
  EXPECT_EQ(io::scalar_from(Json("1/3")), Scalar::ratio(1, 3));
  EXPECT_EQ(io::scalar_from(Json::parse("1e9")), Scalar(1000000000));
  EXPECT_EQ(io::ext_from(Json("-inf")), ExtReal::minus_inf());
  EXPECT_THROW(io::scalar_from(Json(true)), InputError);
}

TEST(JsonIo, ScalarsRoundTrip) {
  for (const char* text : {"0", "-7", "1/3", "1.7", "-0.125", "123456789012345678901234567890", "2/7"}) {
    Scalar s = Scalar::parse(text);
    EXPECT_EQ(io::scalar_from(Json::parse(io::to_json(s).dump())), s) << text;
  }
  EXPECT_EQ(io::to_json(ExtReal::plus_inf()), Json("+inf"));
  EXPECT_EQ(io::to_json(Scalar::ratio(1, 3)), Json("1/3"));
  EXPECT_EQ(io::to_json(Scalar::parse("1.7")).dump(), "1.7");
}

TEST(JsonIo, FunctionsByArrayOrObject) {
  SpacePtr s = io::space_from(Json::parse(R"({"atoms": ["x", "y"], "weights": [1, 0.5]})"));
  EXPECT_EQ(io::fn_from(Json::parse(R"([1, "+inf"])"), s).values(),
            io::fn_from(Json::parse(R"({"y": "inf", "x": 1})"), s).values());
  EXPECT_THROW(io::fn_from(Json::parse(R"({"x": 1})"), s), InputError);
  EXPECT_THROW(io::fn_from(Json::parse(R"([1])"), s), InputError);
}

TEST(JsonIo, CapacityTable) {
  SpacePtr s = io::space_from(Json::parse(R"({"atoms": ["a", "b"], "weights": [1, 1]})"));
  Capacity c = io::capacity_from(
      Json::parse(R"({"kind": "table", "values": {"{a}": 0.5, "{ b }": 0.7, "{a,b}": 1}})"), s);
  EXPECT_EQ(c(AtomSet::from_mask(2, 2)), ExtReal(Scalar::parse("0.7")));
  EXPECT_EQ(io::capacity_from(io::to_json(c), s).table_values(), c.table_values());
  EXPECT_THROW(io::capacity_from(Json::parse(R"({"kind": "table", "values": {"{a}": 0.5}})"), s), InputError);
}

TEST(JsonIo, ScenarioRoundTrip) {
  io::Scenario sc = io::scenario_from(io::parse_text(R"({
    "space": {"weights": [1, 0, 2]},
    "family": [[3, 0, "-inf"], [1, 7, 2]],
    "functional": {"kind": "post_compose", "of": "ess_sup", "map": {"kind": "clamp", "lo": 0, "hi": 2}},
    "subset_budget": 4, "tolerance": "1/1000", "seed": 9})"));
  ASSERT_TRUE(sc.family.has_value());
  Json back = io::scenario_to_json(*sc.space, *sc.family, sc.functional, sc.options);
  io::Scenario again = io::scenario_from(back);
  EXPECT_EQ(again.family->members[1].values(), sc.family->members[1].values());
  EXPECT_EQ(again.options.subset_budget, 4u);
  EXPECT_EQ(*again.options.tolerance, Scalar::ratio(1, 1000));
  EXPECT_EQ(io::to_json(again.functional), io::to_json(sc.functional));
}

TEST(JsonIo, ScenarioSchemaErrors) {
  EXPECT_THROW(io::parse_text("{"), InputError);
  EXPECT_THROW(io::scenario_from(Json::parse(R"({"family": [[1]]})")), InputError);
  EXPECT_THROW(io::scenario_from(Json::parse(R"({"space": {"weights": [1]}, "family": [[1]], "oops": 1})")),
               InputError);
  EXPECT_THROW(io::scenario_from(Json::parse(R"({"space": {"weights": [1]}, "family": {"generator": "nope", "prefix": 3}})")),
               InputError);
}

TEST(Cli, CheckGinerFail) {
  Json j = run_json({"check", data("giner_fail.json")});
  EXPECT_EQ(j["report"]["holds"], false);
  EXPECT_EQ(j["report"]["lhs"], 1);
  EXPECT_EQ(j["report"]["rhs"], 0);
  EXPECT_EQ(j["report"]["phi_inf_directed"]["verdict"], "no");
  EXPECT_EQ(j["gap_form"]["integrably_inf_directed"], false);
}

TEST(Cli, CheckChainAndChoquet) {
  EXPECT_EQ(run_json({"check", data("chain.json")})["report"]["holds"], true);
  Json c = run_json({"check", data("choquet.json")});
  EXPECT_EQ(c["report"]["holds"], true);
  EXPECT_EQ(run_json({"check", data("clamped_ess_sup.json")})["report"]["invariant_failure"], nullptr);
}

TEST(Cli, CheckSequences) {
  Json e = run_json({"check", data("example_2_6.json")});
  EXPECT_EQ(e["report"]["prefix_lhs"], -100);
  EXPECT_EQ(e["report"]["interchange"], "holds-in-limit");
  Json lit = run_json({"check", data("example_2_6_literal.json")});
  EXPECT_EQ(lit["report"]["lhs"], -5);
  EXPECT_EQ(lit["report"]["rhs"], -15);
  Json m = run_json({"check", data("mct.json")});
  EXPECT_EQ(m["seq_inf_continuity"]["verdict"], "holds");
  // The prefix override reaches generated families.
  Json short_prefix = run_json({"check", data("example_2_6.json"), "--prefix", "10"});
  EXPECT_EQ(short_prefix["report"]["prefix_lhs"], -10);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", data("malformed.json")}).code, cli::kExitInput);
  EXPECT_EQ(run({"check", data("bad_schema.json")}).code, cli::kExitInput);
  EXPECT_EQ(run({"check", data("domain_error.json")}).code, cli::kExitDomain);
  EXPECT_EQ(run({"check", data("missing.json")}).code, cli::kExitInput);
  EXPECT_EQ(run({"gallery", "nope"}).code, cli::kExitInput);
  EXPECT_EQ(run({"check", data("chain.json"), "--format", "xml"}).code, cli::kExitInput);
  EXPECT_EQ(run({"check", data("chain.json"), "--tolerance", "-1"}).code, cli::kExitInput);
  EXPECT_EQ(run({}).code, cli::kExitInput);
}

TEST(Cli, GalleryExamples) {
  Json e = run_json({"gallery", "example-2-6", "--prefix", "100"});
  EXPECT_EQ(e["result"]["sequence"]["lhs"], "-inf");
  EXPECT_EQ(e["result"]["sequence"]["rhs"], "-inf");
  EXPECT_EQ(e["result"]["sequence"]["interchange"], "holds-in-limit");
  EXPECT_EQ(e["result"]["literal_truncation"]["report"]["phi_inf_directed"]["verdict"], "no");
  Json g = run_json({"gallery", "giner-pair"});
  EXPECT_EQ(g["result"]["report"]["holds"], false);
  EXPECT_EQ(g["result"]["report"]["phi_inf_directed"]["witness"], Json::parse("[0, 1]"));
  Json c = run_json({"gallery", "choquet-demo"});
  EXPECT_EQ(c["result"]["directed"]["report"]["holds"], true);
  EXPECT_EQ(c["result"]["undirected"]["report"]["holds"], false);
  EXPECT_EQ(run_json({"gallery", "rw-demo"})["result"]["two_constants"]["interchange"]["verdict"],
            "hypothesis violated, inequality strict");
  EXPECT_EQ(run_json({"gallery", "shapiro-demo"})["result"]["expectation"]["report"]["conclusion"], true);
}

TEST(Cli, RwAndShapiroChecks) {
  Json rw = run_json({"rw-check", data("rw_product.json")});
  EXPECT_EQ(rw["interchange"]["equal"], true);
  // a: 0, b: min(4, 1) with weight 2, c: 0.
  EXPECT_EQ(rw["interchange"]["lhs"], 2);
  EXPECT_EQ(rw["argmin"]["holds"], true);
  Json two = run_json({"rw-check", data("rw_two_constants.json")});
  EXPECT_EQ(two["interchange"]["verdict"], "hypothesis violated, inequality strict");
  EXPECT_EQ(two["argmin"]["applicable"], false);
  Json sh = run_json({"shapiro-check", data("shapiro.json")});
  EXPECT_EQ(sh["report"]["failed_hypotheses"].size(), 0u);
  EXPECT_EQ(sh["report"]["conclusion"], true);
}

TEST(Cli, OracleIsDeterministic) {
  CliRun a = run({"oracle", "--trials", "150", "--seed", "5"});
  CliRun b = run({"oracle", "--trials", "150", "--seed", "5"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  Json j = Json::parse(a.out);
  EXPECT_EQ(j["violation_count"], 0);
  Json empty = run_json({"oracle", "--trials", "0"});
  EXPECT_EQ(empty["trials"], 0);
}

TEST(Cli, OutFileAndTextFormat) {
  const std::string path = ::testing::TempDir() + "interlab_report.txt";
  CliRun r = run({"check", data("chain.json"), "--format", "text", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_NE(ss.str().find("report.holds: true"), std::string::npos);
  std::remove(path.c_str());
}
