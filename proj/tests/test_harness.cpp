#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "numsg/harness.hpp"
#include "numsg/json_io.hpp"
#include "test_util.hpp"

using numsg::CampaignConfig;
using numsg::Check;
using numsg::Semigroup;

namespace {

CampaignConfig all_checks(std::int64_t genus) {
  CampaignConfig cfg;
  cfg.genus_bound = genus;
  cfg.checks = {Check::predictor, Check::conjecture, Check::table33, Check::tail,
                Check::relations, Check::diffbounds, Check::apery};
  return cfg;
}

std::string to_json_string(const numsg::VerificationReport& report) {
  std::ostringstream out;
  numsg::report_emit_json(report, out);
  return out.str();
}

std::string to_csv_string(const numsg::VerificationReport& report) {
  std::ostringstream out;
  numsg::report_emit_csv(report, out);
  return out.str();
}

}  // namespace

TEST_CASE("campaign over genus <= 6 is clean") {
  const auto report = numsg::verify_campaign(all_checks(6));
  CHECK(report.population == 49);  // 50 semigroups minus N
  CHECK(report.violations == 0);
  CHECK(report.findings.empty());
  for (const auto& rec : report.records) CHECK(rec.failures.empty());
}

TEST_CASE("empty population report shape") {
  CampaignConfig cfg;
  cfg.checks = {Check::predictor};
  const auto report = numsg::verify_campaign(cfg);
  CHECK(report.population == 0);
  CHECK(report.violations == 0);
  const auto j = numsg::report_to_json(report);
  CHECK(j.at("records").is_array());
  CHECK(j.at("records").empty());
  CHECK(j.at("aggregates").at("population") == 0);
  CHECK(j.at("aggregates").at("violations") == 0);
}

TEST_CASE("explicit single-semigroup campaign") {
  CampaignConfig cfg;
  cfg.population.push_back(Semigroup::from_generators({8, 10, 12, 13}));
  cfg.checks = {Check::tail, Check::table33};
  const auto report = numsg::verify_campaign(cfg);
  CHECK(report.population == 1);
  CHECK(report.violations == 0);
  CHECK(report.records[0].verdict == "match");
  CHECK(report.records[0].oracle_sm == 46);
}

TEST_CASE("reports are deterministic and parallel-stable") {
  auto cfg = all_checks(7);
  const std::string once = to_json_string(numsg::verify_campaign(cfg));
  const std::string twice = to_json_string(numsg::verify_campaign(cfg));
  CHECK(once == twice);

  cfg.jobs = 4;
  const std::string parallel = to_json_string(numsg::verify_campaign(cfg));
  CHECK(once == parallel);

  const std::string csv_once = to_csv_string(numsg::verify_campaign(cfg));
  const std::string csv_twice = to_csv_string(numsg::verify_campaign(cfg));
  CHECK(csv_once == csv_twice);
}

TEST_CASE("csv schema") {
  CampaignConfig cfg;
  cfg.population.push_back(Semigroup::from_generators({3, 4}));
  cfg.checks = {Check::predictor};
  const std::string csv = to_csv_string(numsg::verify_campaign(cfg));
  const std::string header = csv.substr(0, csv.find('\n'));
  CHECK(header ==
        "id,genus,e,c,d,c_sub,d_prime,ell,tau,s_tilde,t,oracle_sm,pred_kind,pred_lo,"
        "pred_hi,rule,verdict");
}

TEST_CASE("report json round-trips") {
  const auto report = numsg::verify_campaign(all_checks(5));
  const auto parsed = nlohmann::json::parse(to_json_string(report));
  CHECK(parsed.at("aggregates").at("population") == report.population);
  CHECK(parsed.at("aggregates").at("violations") == report.violations);
  CHECK(parsed.at("records").size() == report.records.size());
  for (std::size_t i = 0; i < report.records.size(); ++i) {
    CHECK(parsed.at("records")[i].at("gaps").get<std::vector<std::int64_t>>() ==
          report.records[i].gaps);
    CHECK(parsed.at("records")[i].at("oracle_sm") == report.records[i].oracle_sm);
  }
}

TEST_CASE("config validation") {
  CampaignConfig no_checks;
  no_checks.genus_bound = 4;
  CHECK_THROWS_AS(numsg::verify_campaign(no_checks), numsg::error);

  auto over_cap = all_checks(25);
  CHECK_THROWS_AS(numsg::verify_campaign(over_cap), numsg::error);
}

TEST_CASE("semigroup json accepts gaps and gens forms") {
  const auto from_gens = numsg::semigroup_from_json(nlohmann::json{{"gens", {3, 4}}});
  const auto from_gaps =
      numsg::semigroup_from_json(nlohmann::json{{"gaps", {1, 2, 5}}, {"c", 6}});
  CHECK(from_gens == from_gaps);
  CHECK_THROWS_AS(numsg::semigroup_from_json(nlohmann::json{{"x", 1}}), numsg::error);
  CHECK_THROWS_AS(
      numsg::semigroup_from_json(nlohmann::json{{"gaps", {1, 2, 5}}, {"c", 9}}),
      numsg::error);
}
