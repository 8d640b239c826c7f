#include "numsg/json_io.hpp"

#include <ostream>

namespace numsg {

using nlohmann::json;

json semigroup_to_json(const Semigroup& s) {
  return json{{"gaps", s.gaps()}, {"c", s.conductor()}};
}

Semigroup semigroup_from_json(const json& j) {
  if (j.contains("gens")) {
    return Semigroup::from_generators(j.at("gens").get<std::vector<std::int64_t>>());
  }
  if (j.contains("gaps")) {
    auto gaps = j.at("gaps").get<std::vector<std::int64_t>>();
    Semigroup s = Semigroup::from_gaps(gaps);
    if (j.contains("c") && j.at("c").get<std::int64_t>() != s.conductor())
      throw error("BadInput", "declared conductor disagrees with the gap set");
    return s;
  }
  throw error("BadInput", "semigroup JSON needs a \"gaps\" or \"gens\" key");
}

json invariants_to_json(const InvariantRecord& rec) {
  json j{{"e", rec.e},
         {"c", rec.c},
         {"d", rec.d},
         {"c_sub", rec.c_sub},
         {"k", rec.k},
         {"ell", rec.ell},
         {"g", rec.genus},
         {"tau", rec.tau},
         {"s_tilde", rec.s_tilde},
         {"t", rec.t},
         {"H", rec.holes},
         {"ordinary", rec.ordinary},
         {"acute", rec.acute},
         {"symmetric", rec.symmetric}};
  j["d_prime"] = rec.d_prime ? json(*rec.d_prime) : json(nullptr);
  j["q"] = rec.q ? json(*rec.q) : json(nullptr);
  return j;
}

json nu_table_to_json(const NuTable& table) {
  json entries = json::array();
  for (const auto& e : table.entries) entries.push_back({e.index, e.element, e.nu});
  return json{{"entries", entries}, {"m", table.m}, {"s_m", table.s_m}, {"g", table.genus}};
}

json prediction_to_json(const Prediction& pred) {
  json j{{"kind", to_string(pred.kind)},
         {"lo", pred.lo},
         {"hi", pred.hi},
         {"rule", pred.rule},
         {"conjecture_lb", pred.conjecture_lb},
         {"lb_status", pred.lb_status}};
  if (!pred.lb_rule.empty()) j["lb_rule"] = pred.lb_rule;
  if (!pred.candidates.empty()) j["candidates"] = pred.candidates;
  return j;
}

json rule_hits_to_json(const std::vector<RuleHit>& hits) {
  json out = json::array();
  for (const auto& hit : hits) {
    json j{{"id", hit.id}};
    switch (hit.kind) {
      case RuleHit::Kind::exact:
        j["kind"] = "exact";
        j["lo"] = hit.lo;
        j["hi"] = hit.hi;
        break;
      case RuleHit::Kind::range:
        j["kind"] = "range";
        j["lo"] = hit.lo;
        j["hi"] = hit.hi;
        break;
      case RuleHit::Kind::lower:
        j["kind"] = "lower";
        j["lo"] = hit.lo;
        break;
      case RuleHit::Kind::upper:
        j["kind"] = "upper";
        j["hi"] = hit.hi;
        break;
      case RuleHit::Kind::info:
        j["kind"] = "info";
        j["note"] = hit.note;
        break;
    }
    if (!hit.candidates.empty()) j["candidates"] = hit.candidates;
    out.push_back(j);
  }
  return out;
}

json report_to_json(const VerificationReport& report) {
  json records = json::array();
  for (const auto& rec : report.records) {
    json j{{"id", rec.id},
           {"gaps", rec.gaps},
           {"genus", rec.inv.genus},
           {"invariants", invariants_to_json(rec.inv)},
           {"oracle_sm", rec.oracle_sm},
           {"oracle_m", rec.oracle_m},
           {"prediction", prediction_to_json(rec.pred)},
           {"verdict", rec.verdict}};
    if (!rec.failures.empty()) j["failures"] = rec.failures;
    records.push_back(j);
  }
  json findings = json::array();
  for (const auto& f : report.findings)
    findings.push_back(
        {{"id", f.id}, {"gaps", f.gaps}, {"oracle_sm", f.oracle_sm}, {"bound", f.bound}});
  return json{{"version", report.version},
              {"config", report.config},
              {"aggregates",
               {{"population", report.population},
                {"violations", report.violations},
                {"rule_hits", report.rule_hits}}},
              {"findings", findings},
              {"records", records}};
}

void report_emit_json(const VerificationReport& report, std::ostream& out) {
  out << report_to_json(report).dump(2) << "\n";
}

void report_emit_csv(const VerificationReport& report, std::ostream& out) {
  out << "id,genus,e,c,d,c_sub,d_prime,ell,tau,s_tilde,t,oracle_sm,pred_kind,pred_lo,"
         "pred_hi,rule,verdict\n";
  for (const auto& rec : report.records) {
    out << rec.id << "," << rec.inv.genus << "," << rec.inv.e << "," << rec.inv.c << ","
        << rec.inv.d << "," << rec.inv.c_sub << ",";
    if (rec.inv.d_prime) out << *rec.inv.d_prime;
    out << "," << rec.inv.ell << "," << rec.inv.tau << "," << rec.inv.s_tilde << ","
        << rec.inv.t << "," << rec.oracle_sm << "," << to_string(rec.pred.kind) << ",";
    if (rec.pred.kind != PredictionKind::no_rule) out << rec.pred.lo;
    out << ",";
    if (rec.pred.kind == PredictionKind::exact || rec.pred.kind == PredictionKind::range)
      out << rec.pred.hi;
    out << "," << rec.pred.rule << "," << rec.verdict << "\n";
  }
}

}  // namespace numsg
