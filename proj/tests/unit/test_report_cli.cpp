#include <sstream>

#include "doctest.h"
#include "shiftbetti/cli.hpp"
#include "shiftbetti/report.hpp"
#include "shiftbetti/tables.hpp"

using namespace shiftbetti;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "shiftbetti");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("pretty formatting") {
  CHECK(pretty_totals({1, 6, 9, 4, 0}) == "(1, 6, 9, 4, 0)");
  CHECK(pretty_row(22, {1, 6, 9, 4, 0}) == "j=22 -> (1, 6, 9, 4, 0)");
  CHECK(pretty_totals({}) == "()");
}

TEST_CASE("scan CSV and JSON") {
  const auto report = scan(FamilySpec(2, 3, 5), 28, 30);
  const std::string csv = scan_csv(report);
  CHECK(csv.rfind(std::string(kScanCsvHeader) + "\n", 0) == 0);
  CHECK(csv.find("29,30,32,35,40,1,1,3,3,1,0,3,1\n") != std::string::npos);
  CHECK(count_lines(csv) == 4);

  const Json j = scan_to_json(report);
  CHECK(j["abc"] == Json::array({2, 3, 5}));
  CHECK(j["offset"] == 1);
  const auto back = scan_from_json(Json::parse(j.dump()));
  CHECK(back.rows == report.rows);
  CHECK(back.family.a() == 2);
  CHECK(back.family.offset() == 1);
}

TEST_CASE("Betti JSON round-trip") {
  const auto t = graded_betti(Semigroup::normalize({23, 25, 28, 33}));
  const Json j = betti_to_json(t);
  CHECK(j["totals"] == Json::array({1, 6, 9, 4, 0}));
  CHECK(j["rows"]["0"] == Json::array({1, 0, 0, 0, 0}));
  const auto back = betti_from_json(Json::parse(j.dump()));
  CHECK(back.rows == t.rows);
  CHECK(back.totals == t.totals);
}

TEST_CASE("output_record") {
  const Json r = output_record("betti", Json{{"gens", {2, 3}}}, Json{{"x", 1}});
  CHECK(r["schema_version"] == kSchemaVersion);
  CHECK(r["command"] == "betti");
  CHECK_FALSE(r.contains("timing_ms"));
  CHECK(output_record("betti", {}, {}, 1.5)["timing_ms"] == 1.5);
  CHECK(r.begin().key() == "schema_version");
}

TEST_CASE("cli betti") {
  auto r = run_cli({"betti", "--gens", "30,32,35,40"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "(1, 3, 3, 1, 0)\n");

  CHECK(run_cli({"betti", "--gens", "4,6,10"}).out == run_cli({"betti", "--gens", "2,3,5"}).out);

  auto csv = run_cli({"--format", "csv", "betti", "--gens", "30,32,35,40"});
  CHECK(csv.out.rfind("degree,b0,b1,b2,b3,b4\n0,1,0,0,0,0\n70,0,1,0,0,0\n", 0) == 0);

  auto json = run_cli({"--format", "json", "betti", "--gens", "40,30,35,32"});
  const Json j = Json::parse(json.out);
  CHECK(j["payload"]["totals"] == Json::array({1, 3, 3, 1, 0}));
  CHECK(j["parameters"]["generators"] == Json::array({30, 32, 35, 40}));
}

TEST_CASE("cli gens and critical") {
  auto g = run_cli({"gens", "--gens", "30,32,35,40"});
  CHECK(g.code == kExitOk);
  CHECK(g.out.rfind("mu = 3\n", 0) == 0);
  auto c = run_cli({"critical", "--gens", "30,32,35,40"});
  CHECK(c.out == "x1^4 - x4^3\nx2^5 - x1^3 x3^2\nx3^2 - x1 x4\nx4^3 - x1^4\n");
}

TEST_CASE("cli scan") {
  auto r = run_cli({"--format", "csv", "scan", "--abc", "2,3,5", "--from", "22", "--to", "51"});
  CHECK(r.code == kExitOk);
  CHECK(count_lines(r.out) == 31);
  auto p = run_cli({"scan", "--abc", "2,3,5", "--from", "22", "--to", "51"});
  CHECK(p.out.find("j=29 -> (1, 3, 3, 1, 0)\n") != std::string::npos);
  CHECK(p.out.find("# period: unconfirmed\n") != std::string::npos);
  auto few = run_cli({"scan", "--abc", "2,3,5", "--from", "22", "--to", "30"});
  CHECK(few.out.find("# period: insufficient-data\n") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  CHECK(run_cli({"betti", "--gens", "1,2", "--nope"}).code == kExitUsage);
  CHECK(run_cli({"betti", "--gens", "3,x,5"}).code == kExitUsage);
  CHECK(run_cli({"betti", "--gens", "7"}).code == kExitUsage);
  CHECK(run_cli({"--format", "xml", "betti", "--gens", "2,3"}).code == kExitUsage);
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"--help"}).code == kExitOk);

  auto h = run_cli({"verify", "theorem-b", "--abc", "3,5,2", "--from", "1000", "--to", "1001"});
  CHECK(h.code == kExitUsage);
  CHECK(h.err.find("hypothesis-not-met") != std::string::npos);
  auto o = run_cli({"verify", "theorem-b", "--abc", "2,3,5", "--from", "10", "--to", "12"});
  CHECK(o.err.find("out-of-range") != std::string::npos);
}

TEST_CASE("cli verify") {
  auto a = run_cli({"verify", "theorem-a", "--abc", "2,3,5", "--n-max", "2"});
  CHECK(a.code == kExitOk);
  CHECK(a.out == "theorem-a: 4/4 cases agree, 0 counterexamples\n");
  auto h = run_cli({"verify", "hs3", "--q-max", "40", "--ab-max", "5"});
  CHECK(h.code == kExitOk);
}

TEST_CASE("compare_table reports a unified diff") {
  ExpectedTable expected = expected_table(1);
  REQUIRE(expected.rows.size() == 30);
  const auto computed = scan(expected.family, expected.from, expected.to);
  CHECK(compare_table(expected, computed).pass);

  expected.rows[3].second = {1, 9, 9, 9, 0};
  const auto cmp = compare_table(expected, computed);
  CHECK_FALSE(cmp.pass);
  CHECK(cmp.matched == 29);
  CHECK(cmp.diff.find("--- expected/table1\n+++ computed/table1\n") == 0);
  CHECK(cmp.diff.find("-j=25 -> (1, 9, 9, 9, 0)\n") != std::string::npos);
  CHECK(cmp.diff.find("@@ -") != std::string::npos);
}

TEST_CASE("parse_table") {
  const auto t = parse_table(
      "# example=7 abc=2,3,5 offset=1 from=29 to=30\n"
      "j=29 -> (1, 3, 3, 1, 0)\n"
      "j=30 -> (1, 4, 4, 1, 0)\n");
  CHECK(t.example == 7);
  CHECK(t.family.c() == 5);
  CHECK(t.rows.size() == 2);
  CHECK(t.rows[1].second == std::vector<Int>{1, 4, 4, 1, 0});
}

TEST_CASE("output is byte-identical across job counts") {
  for (const char* format : {"csv", "json"}) {
    const auto one = run_cli({"--format", format, "--jobs", "1", "scan", "--abc", "12,3,1",
                              "--from", "65", "--to", "90"});
    const auto four = run_cli({"--format", format, "--jobs", "4", "scan", "--abc", "12,3,1",
                               "--from", "65", "--to", "90"});
    CHECK(one.code == kExitOk);
    CHECK(one.out == four.out);
  }
}
