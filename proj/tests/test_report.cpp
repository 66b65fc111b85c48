#include "ncres/report.hpp"

#include <doctest.h>

using namespace ncres;
using nlohmann::ordered_json;

TEST_SUITE("cli") {

TEST_CASE("assignment parsing") {
  const Substitution s = parse_assignments({"hp=0", "W=1/2,dU1_4=-3"});
  CHECK(s.at(sym::hp()) == ScalarExpr{0});
  for (int a = 1; a <= 4; ++a) CHECK(s.at(sym::W(a)) == ScalarExpr{GaussianRational(1, 2)});
  CHECK(s.at(sym::dU(1, 4)) == ScalarExpr{-3});
  CHECK(parse_assignments({"dV=0"}).size() == 16);
  CHECK_THROWS_AS(parse_assignments({"xi1=0"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_assignments({"nope=1"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_assignments({"hp"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_assignments({"hp=x"}), std::invalid_argument);
}

TEST_CASE("trace identities report") {
  RunConfig cfg;
  cfg.command = "verify-traces";
  const RunResult r = run(cfg);
  CHECK(r.exit_code == 2);
  const ordered_json& doc = r.document;
  CHECK(doc["schema"] == 1);
  REQUIRE(doc["sections"].size() == 1);
  const auto& rows = doc["sections"][0]["comparisons"];
  CHECK(rows.size() == 10);
  for (const auto& row : rows) {
    for (const char* key : {"target_ref", "engine_expr", "paper_expr", "verdict"}) CHECK(row.contains(key));
  }
  CHECK_THROWS_AS([] {
    RunConfig bad;
    bad.command = "plot";
    run(bad);
  }(), std::invalid_argument);
}

TEST_CASE("constant fields give a vanishing first-pairing total") {
  RunConfig cfg;
  cfg.command = "phi";
  cfg.pairings = {Pairing::A};
  cfg.assignments = {"hp=0", "W=0,dU=0,dV=0"};
  const RunResult r = run(cfg);
  const auto& sec = r.document["sections"][0];
  CHECK(sec["kind"] == "phi");
  CHECK(sec["cases"].size() == 5);
  CHECK(sec["totals"]["engine"] == "0");
  CHECK(sec["totals"]["paper"] == "0");
  for (const auto& row : sec["comparisons"]) {
    const std::string ref = row["target_ref"];
    if (ref.find(" total [") != std::string::npos) CHECK(row["verdict"] == "match");
  }
  // intermediate rows (factor-i differences, published case sum) still differ
  CHECK(r.exit_code == 2);
}

TEST_CASE("reports are deterministic and round-trip") {
  RunConfig cfg;
  cfg.command = "phi";
  cfg.pairings = {Pairing::A};
  cfg.threads = 1;
  const std::string serial = run(cfg).document.dump(2);
  cfg.threads = 3;
  const std::string parallel = run(cfg).document.dump(2);
  CHECK(serial == parallel);
  CHECK(ordered_json::parse(serial).dump(2) == serial);

  RunConfig f;
  f.command = "functional";
  const RunResult fr = run(f);
  CHECK(fr.exit_code == 2);
  const std::string text = render_text(fr.document);
  CHECK(text.find("== functional ==") != std::string::npos);
  CHECK(text.find("closed m=2 slot Ric(U,V)") != std::string::npos);
  CHECK(text == render_text(run(f).document));
}

}  // TEST_SUITE
