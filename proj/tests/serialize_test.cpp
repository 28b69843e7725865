#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oxtoby/serialize.hpp"

using namespace oxtoby;
using oxtoby::core::Int;

TEST_CASE("spec file parsing and round-trip") {
  auto sf = serialize::parse_spec_file(
      R"({"ratios": [3, 4, 3], "symbols": ["a", "b", "c"], "depth": 2})");
  CHECK(sf.ratios == std::vector<Int>{3, 4, 3});
  CHECK(sf.symbols == std::vector<std::string>{"a", "b", "c"});
  CHECK(sf.depth == 2);

  auto spec = serialize::to_oxtoby_spec(sf);
  CHECK(spec.fg.depth() == 2);
  CHECK(spec.fg.ratios == std::vector<Int>{3, 4});

  auto again = serialize::parse_spec_file(serialize::spec_file_json(sf).dump());
  CHECK(again.ratios == sf.ratios);
  CHECK(again.symbols == sf.symbols);
  CHECK(again.depth == sf.depth);
}

TEST_CASE("spec file depth defaults to the ratio count") {
  auto sf = serialize::parse_spec_file(
      R"({"ratios": [3, 3], "symbols": ["a", "b"]})");
  CHECK(sf.depth == 2);
}

TEST_CASE("spec file rejections") {
  CHECK_THROWS_AS(serialize::parse_spec_file("not json"),
                  serialize::ParseError);
  CHECK_THROWS_AS(serialize::parse_spec_file("[1, 2]"), serialize::ParseError);
  CHECK_THROWS_AS(
      serialize::parse_spec_file(R"({"ratios": [], "symbols": []})"),
      serialize::ParseError);
  CHECK_THROWS_AS(serialize::parse_spec_file(
                      R"({"ratios": [3], "symbols": ["a"], "depth": 2})"),
                  serialize::ParseError);
  CHECK_THROWS_AS(serialize::parse_spec_file(
                      R"({"ratios": [3], "symbols": ["a"], "depth": 0})"),
                  serialize::ParseError);
  CHECK_THROWS_AS(serialize::parse_spec_file(R"({"symbols": ["a"]})"),
                  serialize::ParseError);
}

TEST_CASE("window diagrams in text and machine form") {
  auto fg = core::mk_fast_growth({3, 3, 3, 3});
  auto spec = ttype::oxtoby_spec_from_sequence({"x1", "x2", "x3", "x4"}, fg);
  auto w = ttype::render_window(spec, core::mk_window(-6, 7));
  CHECK(serialize::window_text(w) ==
        "window [-6, 7)\n"
        "symbols: x1 x3 x1 x1 x2 x1 x1 x2 x1 x1 x3 x1 x1\n"
        "levels:  1 3 1 1 2 1 1 2 1 1 3 1 1\n");

  auto j = serialize::window_json(w);
  CHECK(j["lo"] == -6);
  CHECK(j["hi"] == 7);
  CHECK(j["symbols"].size() == 13);
  CHECK(j["symbols"][0] == "x1");
  CHECK(j["levels"][1] == 3);
}

TEST_CASE("unresolved cells render as question marks") {
  auto fg = core::mk_fast_growth({3, 4, 3});
  auto spec = ttype::oxtoby_spec_from_sequence({"a", "b", "c"}, fg);
  auto w = ttype::render_window(spec, core::mk_window(14, 21));
  CHECK(serialize::symbols_line(w) == "a a ? a a ? a");
  CHECK(serialize::levels_line(w) == "1 1 ? 1 1 ? 1");
  auto j = serialize::window_json(w);
  CHECK(j["symbols"][2] == "?");
  CHECK(j["levels"][5] == "?");
}

TEST_CASE("block records in both formats") {
  core::Block b{-4, 3, 2, 1};
  CHECK(serialize::block_text(b) == "block [-4, 3] m=2 class=1");
  auto j = serialize::block_json(b);
  CHECK(j["n0"] == -4);
  CHECK(j["n1"] == 3);
  CHECK(j["m"] == 2);
  CHECK(j["class"] == 1);
}

TEST_CASE("check records carry status-dependent fields") {
  harness::CheckRecord pass;
  pass.ratios = {3, 3, 3};
  pass.result.id = harness::LemmaId::L6_2;
  pass.result.status = harness::CheckStatus::Pass;
  pass.result.instances = 42;
  auto pj = serialize::check_json(pass);
  CHECK(pj["status"] == "pass");
  CHECK(pj["lemma"] == "L6.2");
  CHECK(pj["instances"] == 42);
  CHECK_FALSE(pj.contains("counterexample"));
  CHECK_FALSE(pj.contains("error"));
  CHECK(serialize::check_text(pass) ==
        "[PASS] L6.2 ratios=3,3,3 instances=42 skipped=0");

  harness::CheckRecord fail = pass;
  fail.result.status = harness::CheckStatus::Fail;
  fail.result.counterexample = {{"lemma", "L6.2"}, {"m", 2}, {"pos", 0}};
  auto fj = serialize::check_json(fail);
  CHECK(fj["status"] == "fail");
  CHECK(fj["counterexample"]["pos"] == 0);
  CHECK(serialize::check_text(fail).find("counterexample=") !=
        std::string::npos);

  harness::CheckRecord err = pass;
  err.result.status = harness::CheckStatus::Error;
  err.result.error = "bounds too small";
  auto ej = serialize::check_json(err);
  CHECK(ej["status"] == "error");
  CHECK(ej["error"] == "bounds too small");
}

TEST_CASE("campaign reports summarize counts") {
  harness::CampaignReport report;
  report.passed = 25;
  report.failed = 1;
  auto j = serialize::report_json(report);
  CHECK(j["passed"] == 25);
  CHECK(j["failed"] == 1);
  CHECK(j["ok"] == false);
  CHECK(serialize::report_text(report) ==
        "checks: 0 passed: 25 failed: 1 errors: 0");
}
