#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "sgcm/cli.hpp"
#include "sgcm/error.hpp"
#include "sgcm/report.hpp"

using namespace sgcm;
using nlohmann::json;

namespace {

const std::string kMacaulay = R"({"a":4,"b":4,"gens":[[3,1],[1,3]]})";
const std::string kEleven = R"({"a":2,"b":3,"gens":[[11,1],[1,11]]})";

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("ring parsing") {
    const RawRing j = parse_ring(kMacaulay);
    CHECK(j.a == 4);
    CHECK(j.gens == std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 1}, {1, 3}});
    const RawRing c = parse_ring(" 4,4;3:1, 1:3 ");
    CHECK(validate(c) == validate(j));
    CHECK(parse_ring("2,3;").gens.empty());
    CHECK(parse_ring("2,3").gens.empty());
    CHECK(compact_ring(validate(j)) == "4,4;3:1,1:3");
    for (const char* bad : {"", "{", "2;3", "2,x;", "2,3;1-2", R"({"a":2})", R"({"a":2,"b":"3"})",
                            R"({"a":2,"b":3,"gens":[[1]]})"}) {
      try {
        parse_ring(bad);
        FAIL("accepted " << bad);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Parse);
      }
    }
  }

  TEST_CASE("curve detection") {
    const auto c = as_curve(validate({23, 23, {{5, 18}, {21, 2}}}));
    REQUIRE(c.has_value());
    CHECK(*c == CurveSpec{23, 2, 18});
    CHECK_FALSE(as_curve(validate({2, 3, {{11, 1}, {1, 11}}})).has_value());
    CHECK_FALSE(as_curve(validate({4, 4, {{3, 1}}})).has_value());
  }

  TEST_CASE("analyze reports and exit codes") {
    CliResult r = run_cli({"analyze", kMacaulay});
    CHECK(r.exit_code == 3);
    CHECK(r.out.find("length: 5") != std::string::npos);
    CHECK(r.out.find("multiplicity: 4") != std::string::npos);
    CHECK(r.out.find("is_cm: false") != std::string::npos);

    r = run_cli({"analyze", "2,3;"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("length: 1") != std::string::npos);

    r = run_cli({"--json", "analyze", kEleven, "--oracle"});
    CHECK(r.exit_code == 3);
    const json j = json::parse(r.out);
    CHECK(j["multiplicity"] == 6);
    CHECK(j["constant_C"] == 30);
    CHECK(j["stabilization_N"] == 9);
    CHECK(j["length"] == 11);
    CHECK(j["oracle_checked"] == true);
    CHECK(j["criteria_agree"] == true);
    CHECK(j["criteria"]["gsw"] == false);
    CHECK_FALSE(j.contains("disagreement"));
  }

  TEST_CASE("analysis JSON round-trips") {
    for (const std::string& ring : {kMacaulay, kEleven, std::string("2,3;"), std::string("23,23;21:2,5:18"),
                                    std::string("3,5;2:7,4:4,1:1")}) {
      AnalyzeOptions opts;
      opts.oracle = true;
      opts.with_basis = true;
      opts.with_trace = true;
      const AnalysisReport report = analyze(validate(parse_ring(ring)), opts);
      const json emitted = to_json(report);
      CHECK(analysis_from_json(json::parse(emitted.dump())) == report);
      CHECK(report.is_cm == (report.length == report.multiplicity));
      CHECK(report.criteria_agree);
    }
  }

  TEST_CASE("JSON output is deterministic and JSON only") {
    const CliResult a = run_cli({"analyze", kEleven, "--json", "--trace"});
    const CliResult b = run_cli({"--json", "--trace", "analyze", kEleven});
    CHECK(a.out == b.out);
    CHECK(json::accept(a.out));
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"--json", "basis", "--n", "23", "--l", "2", "--m", "18", "--trace", "--plot"},
             {"--json", "verify", kMacaulay},
             {"--json", "batch", "--curves", "--max-n", "5"},
             {"--json", "construct", "--a", "2", "--b", "3", "--subgroup-gens", "[[1,1]]"},
             {"--json", "analyze", "not a ring"}}) {
      const CliResult r = run_cli(args);
      CHECK(json::accept(r.out));
    }
  }

  TEST_CASE("basis command") {
    CliResult r = run_cli({"basis", "--n", "23", "--l", "2", "--m", "18", "--trace"});
    CHECK(r.exit_code == 3);
    const auto out = lines(r.out);
    std::vector<std::string> trace;
    std::copy_if(out.begin(), out.end(), std::back_inserter(trace),
                 [](const std::string& l) { return l.rfind("step=", 0) == 0; });
    REQUIRE(trace.size() == 5);
    CHECK(trace[0] == "step=1 base=5 a*=4 b*=3 c*=2 h*=46 |B|=23");
    CHECK(trace[4].find("|B|=41") != std::string::npos);
    CHECK(out.size() == 41 + 5);

    r = run_cli({"basis", kEleven});
    CHECK(lines(r.out).size() == 11);
    CHECK(lines(r.out)[1] == "(11,1)");
    r = run_cli({"basis", kEleven, "--log"});
    CHECK(lines(r.out)[1] == "<1,0>");
    r = run_cli({"basis", R"({"a":2,"b":3,"gens":[[7,1],[1,7]]})", "--json"});
    CHECK(json::parse(r.out)["size"] == 21);
    r = run_cli({"basis", kEleven, "--plot"});
    CHECK(r.out.find("#+") == std::string::npos);
    CHECK(r.out.find('#') != std::string::npos);

    r = run_cli({"basis", "4,4;3:1"});
    CHECK(r.exit_code == 65);
    CHECK(r.err.find("NotFourGen") != std::string::npos);
    CHECK(run_cli({"basis", "--n", "23", "--l", "2"}).exit_code == 64);
    CHECK(run_cli({"basis"}).exit_code == 64);
    CHECK(run_cli({"basis", "--n", "5", "--l", "3", "--m", "2"}).exit_code == 65);
  }

  TEST_CASE("construct command") {
    CliResult r = run_cli({"--json", "construct", "--a", "2", "--b", "3", "--subgroup-gens", "[[1,1]]",
                           "--constant", "0", "--stab", "0"});
    CHECK(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["verification"]["multiplicity"] == 6);
    CHECK(j["verification"]["constant_C"] == 0);
    CHECK(j["verification"]["stabilization_N"] == 0);
    CHECK(j["spec"]["a"] == 2);

    r = run_cli({"construct", "--a", "2", "--b", "3", "--subgroup-gens", "[[0,0]]"});
    CHECK(r.exit_code == 65);
    CHECK(r.err.find("TrivialSubgroup") != std::string::npos);
    CHECK(run_cli({"construct", "--a", "2", "--b", "3", "--subgroup-gens", "[[1,"}).exit_code == 65);
    CHECK(run_cli({"construct", "--a", "2"}).exit_code == 64);
  }

  TEST_CASE("batch command") {
    CliResult r = run_cli({"batch", "--curves", "--max-n", "4"});
    CHECK(r.exit_code == 0);
    const auto out = lines(r.out);
    REQUIRE(out.size() == 5);
    CHECK(out[0].rfind("n,l,m,is_cm,H,basis_size,bound_attained", 0) == 0);
    CHECK(out[3].rfind("4,1,3,false,", 0) == 0);
    CHECK(lines(run_cli({"batch", "--curves", "--max-n", "3"}).out).size() == 2);

    r = run_cli({"--json", "batch", "--curves", "--max-n", "30", "--oracle-up-to", "20"});
    const json rows = json::parse(r.out);
    CHECK(rows.size() == 4060);
    for (const json& row : rows) {
      if (row["n"].get<int>() <= 20) CHECK(row["oracle_agrees"] == true);
      if (!row["special_case_agrees"].is_null()) CHECK(row["special_case_agrees"] == true);
    }

    const auto path = std::filesystem::temp_directory_path() / "sgcm_batch_test.csv";
    r = run_cli({"batch", "--curves", "--max-n", "5", "--out", path.string()});
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == batch_csv_header());
    std::filesystem::remove(path);

    CHECK(run_cli({"batch", "--curves", "--max-n", "5", "--out", "/nonexistent/dir/x.csv"}).exit_code == 74);
    CHECK(run_cli({"batch", "--max-n", "5"}).exit_code == 64);
    CHECK(run_cli({"batch", "--curves", "--max-n", "2"}).exit_code == 65);
  }

  TEST_CASE("verify command") {
    CliResult r = run_cli({"verify", kMacaulay, "--hf-range", "0..4"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("HF: 5 9 13 17 21") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    r = run_cli({"--json", "verify", kEleven, "--hf-range", "0..12"});
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["all_passed"] == true);
    CHECK(run_cli({"verify", "2,3;"}).exit_code == 0);
    CHECK(run_cli({"verify", "2,3;", "--hf-range", "4..1"}).exit_code == 65);
  }

  TEST_CASE("error exit codes") {
    CHECK(run_cli({"analyze", "{\"a\":0,\"b\":3}"}).exit_code == 65);
    CHECK(run_cli({"analyze", "2,3;0:0"}).exit_code == 65);
    CHECK(run_cli({"analyze", "2,3;1001:1,1:1001", "--budget", "10"}).exit_code == 69);
    CHECK(run_cli({"frobnicate"}).exit_code == 64);
    CHECK(run_cli({}).exit_code == 64);
    CHECK(run_cli({"--help"}).exit_code == 0);
    CHECK(exit_code_for(ErrorCode::Io) == 74);
    CHECK(exit_code_for(ErrorCode::Disagreement) == 70);
    CHECK(exit_code_for(ErrorCode::Overflow) == 69);
  }

  TEST_CASE("batch CSV rows") {
    BatchRow row;
    row.n = 4;
    row.l = 1;
    row.m = 3;
    row.subgroup_order = 4;
    row.basis_size = 5;
    row.special_case_agrees = true;
    CHECK(batch_csv_row(row) == "4,1,3,false,4,5,false,true,false,");
  }
}
