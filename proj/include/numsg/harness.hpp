#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "numsg/core.hpp"
#include "numsg/nu.hpp"
#include "numsg/predict.hpp"

namespace numsg {

enum class Check { predictor, conjecture, table33, tail, relations, diffbounds, apery };

const char* to_string(Check check);
std::optional<Check> check_from_string(const std::string& name);

struct CampaignConfig {
  // Population: a genus bound (canonical enumeration) or an explicit list.
  std::optional<std::int64_t> genus_bound;
  std::vector<Semigroup> population;
  std::set<Check> checks;
  int jobs = 1;
  std::int64_t genus_cap = 20;
};

struct CampaignRecord {
  std::int64_t id = 0;
  std::vector<std::int64_t> gaps;
  InvariantRecord inv;
  std::int64_t oracle_sm = 0;
  std::int64_t oracle_m = 0;
  Prediction pred;
  std::string verdict;                 // match | in-range | lb-only-ok | violation
  std::vector<std::string> failures;   // failed check/predicate ids
};

/// Conjecture counterexample outside the proven classes: reported, not fatal.
struct Finding {
  std::int64_t id = 0;
  std::vector<std::int64_t> gaps;
  std::int64_t oracle_sm = 0;
  std::int64_t bound = 0;
};

struct VerificationReport {
  std::string version;
  std::string config;                  // canonical echo of the campaign config
  std::vector<CampaignRecord> records;
  std::vector<Finding> findings;
  std::int64_t population = 0;
  std::int64_t violations = 0;
  std::map<std::string, std::int64_t> rule_hits;
};

/// Runs every selected check over the population; deterministic for a fixed
/// config.  Lower-module failures (TableMismatch, InconsistentRules) surface
/// as violation records, never as silent skips.
VerificationReport verify_campaign(const CampaignConfig& cfg);

void report_emit_json(const VerificationReport& report, std::ostream& out);
void report_emit_csv(const VerificationReport& report, std::ostream& out);

/// Relation-property suite of section 2 plus the CM-type lemmas; returns the
/// ids of violated predicates (empty when everything holds).
std::vector<std::string> check_relations(const Semigroup& s, const InvariantRecord& rec,
                                         const NuTable& table);

/// Tail identities of the nu table (exact tail formula + monotone tail +
/// last-descent bookkeeping).
std::vector<std::string> check_tail(const InvariantRecord& rec, const NuTable& table);

}  // namespace numsg
