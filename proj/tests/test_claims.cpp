#include <doctest.h>

#include "helpers.hpp"
#include "sallylab/claims.hpp"
#include "sallylab/report.hpp"

using namespace sallylab;

TEST_CASE("every built-in claim passes") {
  const auto results = run_claims(builtin_fixtures());
  CHECK(results.size() >= 30);
  for (const auto& r : results) {
    CAPTURE(r.id);
    CAPTURE(r.expected);
    CAPTURE(r.computed);
    CHECK(r.status == ClaimStatus::Pass);
  }
  const auto report = claims_report(results);
  CHECK(report.exit_code == 0);
  CHECK(report.doc["failed"] == 0);
}

TEST_CASE("a corrupted fixture fails with both values shown") {
  auto fixtures = builtin_fixtures();
  auto& free_fixture = fixtures.at(3);
  REQUIRE(free_fixture.spec.label == "free-x5y5");
  free_fixture.spec.extra.pop_back();  // I = Q + (x^2 y^3) is no longer the example
  const auto results = run_claims({free_fixture});
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (r.status != ClaimStatus::Fail) continue;
    ++failed;
    CHECK_FALSE(r.expected.empty());
    CHECK_FALSE(r.computed.empty());
    CHECK(r.expected != r.computed);
  }
  CHECK(failed > 0);
  CHECK(claims_report(results).exit_code == 1);
  const auto md = render(claims_report(results).doc, Format::Markdown);
  CHECK(md.find("FAIL") != std::string::npos);
}

TEST_CASE("a fixture whose profile cannot be built fails every claim") {
  auto fixtures = builtin_fixtures();
  auto fx = fixtures.at(4);
  fx.spec.extra.push_back(Monomial{1, 1});  // Q is no longer a reduction
  for (const auto& r : run_claims({fx})) {
    CHECK(r.status == ClaimStatus::Fail);
    CHECK(r.computed.find("NotAReduction") != std::string::npos);
  }
}

TEST_CASE("analysis reports") {
  const auto spec = parse_spec(R"({"dim":2, "Q":[[7,0],[0,7]], "extra":[[1,6],[2,5],[4,3],[5,2]], "label":"ex-1"})");
  const auto analyze = run_command(Command::Analyze, spec, std::nullopt);
  CHECK(analyze.exit_code == 0);
  CHECK(analyze.doc["schema"] == kAnalysisSchema);
  CHECK(analyze.doc["classification"]["tag"] == "S1_3");
  CHECK(analyze.doc["classification"]["subcase"] == "i");
  CHECK(analyze.doc["sally"]["s"][1] == "3");
  CHECK(analyze.doc["sally"]["s"][2] == "5");
  CHECK(analyze.doc["ok"] == true);

  const auto free_spec = parse_spec(R"({"dim":2,"Q":["x^5","y^5"],"extra":["x^2*y^3","x^3*y^2"]})");
  const auto fr = run_command(Command::Analyze, free_spec, 8);
  CHECK(fr.doc["classification"]["tag"] == "FREE");
  CHECK(fr.doc["hilbert"]["e"] == Json::array({"25", "10", "2"}));
  CHECK(fr.doc["window"] == 8);

  const auto q_spec = parse_spec(R"({"dim":2,"Q":[[5,0],[0,5]],"extra":[]})");
  const auto z = run_command(Command::Classify, q_spec, std::nullopt);
  CHECK(z.doc["classification"]["tag"] == "ZERO");
  CHECK(run_command(Command::Hilbert, q_spec, std::nullopt).doc["hilbert"]["e"] ==
        Json::array({"25", "0", "0"}));

  const auto not_red = parse_spec(R"({"dim":2,"Q":[[5,0],[0,5]],"extra":[[1,1]]})");
  const auto err = run_command(Command::Sally, not_red, std::nullopt);
  CHECK(err.exit_code == 1);
  CHECK(err.doc["error"]["kind"] == "NotAReduction");
  const auto red = run_command(Command::Reduction, not_red, std::nullopt);
  CHECK(red.exit_code == 0);
  CHECK(red.doc["reduction"]["is_reduction"] == false);

  const auto closure = run_command(Command::Closure, spec, std::nullopt);
  CHECK(closure.doc["closure"]["integrally_closed"] == false);

  for (auto format : {Format::Json, Format::Markdown, Format::Csv}) {
    const auto text = render(analyze.doc, format);
    CHECK_FALSE(text.empty());
    CHECK(text.back() == '\n');
  }
  const auto csv = render(analyze.doc, Format::Csv);
  CHECK(csv.rfind("n,H,P,s\n0,30,29,0\n1,106,106,3\n", 0) == 0);
}

TEST_CASE("search reports") {
  SearchConfig config;
  config.samples = 50;
  config.box = 8;
  const auto a = render(search_report(sweep(config, 1)).doc, Format::Json);
  const auto b = render(search_report(sweep(config, 2)).doc, Format::Json);
  CHECK(a == b);
  const auto doc = Json::parse(a);
  CHECK(doc["schema"] == kSearchSchema);
  CHECK(doc["generator"]["name"] == "splitmix64");
  CHECK(render(doc, Format::Csv).rfind("rank,m,s1,s2,count\n", 0) == 0);
}
