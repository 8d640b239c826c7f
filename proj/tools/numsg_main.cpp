// Command-line surface: invariants, nu, sm, predict, enumerate, suzuki, verify.
// Exit codes: 0 success, 1 violations found, 2 usage/config error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "numsg/core.hpp"
#include "numsg/families.hpp"
#include "numsg/harness.hpp"
#include "numsg/json_io.hpp"
#include "numsg/nu.hpp"
#include "numsg/predict.hpp"

namespace {

using numsg::Semigroup;

std::vector<std::int64_t> parse_list(const std::string& csv) {
  std::vector<std::int64_t> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoll(item));
  }
  return out;
}

Semigroup semigroup_from_flags(const std::string& gens, const std::string& gaps) {
  if (!gens.empty() && !gaps.empty())
    throw numsg::error("BadInput", "give either --gens or --gaps, not both");
  if (!gens.empty()) return Semigroup::from_generators(parse_list(gens));
  if (!gaps.empty()) return Semigroup::from_gaps(parse_list(gaps));
  throw numsg::error("BadInput", "a semigroup is required: --gens a,b,... or --gaps x,y,...");
}

struct VerifyOptions {
  std::int64_t genus = -1;
  std::string gens, gaps, jsonl;
  std::string checks = "predictor,conjecture,table33,tail,relations,diffbounds";
  std::string out_path;
  std::string format = "json";
  int jobs = 1;
  std::int64_t cap = 20;
};

int run_verify(const VerifyOptions& opt) {
  numsg::CampaignConfig cfg;
  cfg.jobs = opt.jobs;
  cfg.genus_cap = opt.cap;
  for (const std::string& name : [&] {
         std::vector<std::string> names;
         std::stringstream ss(opt.checks);
         std::string item;
         while (std::getline(ss, item, ',')) names.push_back(item);
         return names;
       }()) {
    auto check = numsg::check_from_string(name);
    if (!check) throw numsg::error("BadInput", "unknown check: " + name);
    cfg.checks.insert(*check);
  }
  if (opt.genus >= 0) {
    cfg.genus_bound = opt.genus;
  } else if (!opt.jsonl.empty()) {
    std::ifstream in(opt.jsonl);
    if (!in) throw numsg::error("IoError", "cannot read " + opt.jsonl);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      cfg.population.push_back(numsg::semigroup_from_json(nlohmann::json::parse(line)));
    }
  } else {
    cfg.population.push_back(semigroup_from_flags(opt.gens, opt.gaps));
  }

  const numsg::VerificationReport report = numsg::verify_campaign(cfg);

  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!opt.out_path.empty()) {
    file.open(opt.out_path, std::ios::binary);
    if (!file) throw numsg::error("IoError", "cannot write " + opt.out_path);
    out = &file;
  }
  if (opt.format == "json") numsg::report_emit_json(report, *out);
  else if (opt.format == "csv") numsg::report_emit_csv(report, *out);
  else throw numsg::error("BadInput", "format must be json or csv");

  if (!opt.out_path.empty()) {
    std::cout << "population " << report.population << ", violations " << report.violations
              << ", findings " << report.findings.size() << "\n";
  }
  return report.violations > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical-semigroup invariants, order-bound oracle and theorem engine"};
  app.require_subcommand(1);

  std::string gens, gaps;
  auto add_semigroup_flags = [&](CLI::App* cmd) {
    cmd->add_option("--gens", gens, "comma-separated generators");
    cmd->add_option("--gaps", gaps, "comma-separated gap set");
  };

  auto* cmd_inv = app.add_subcommand("invariants", "invariant record as JSON");
  add_semigroup_flags(cmd_inv);

  std::int64_t upto = -1;
  auto* cmd_nu = app.add_subcommand("nu", "nu table as JSON");
  add_semigroup_flags(cmd_nu);
  cmd_nu->add_option("--upto", upto, "extend/restrict listed entries to s_i <= N");

  auto* cmd_sm = app.add_subcommand("sm", "oracle s_m, prediction and applicable rules");
  add_semigroup_flags(cmd_sm);

  auto* cmd_predict = app.add_subcommand("predict", "prediction as JSON");
  add_semigroup_flags(cmd_predict);

  std::int64_t genus = 0, cap = 20, ell_filter = -1, max_e = -1, max_tau = -1;
  bool acute_only = false;
  auto* cmd_enum = app.add_subcommand("enumerate", "JSON-lines stream of semigroups by genus");
  cmd_enum->add_option("--genus", genus, "genus bound")->required();
  cmd_enum->add_option("--cap", cap, "enumeration cap (default 20)");
  cmd_enum->add_flag("--acute-only", acute_only, "keep acute semigroups only");
  cmd_enum->add_option("--max-e", max_e, "keep multiplicity <= bound");
  cmd_enum->add_option("--max-tau", max_tau, "keep CM type <= bound");
  cmd_enum->add_option("--ell", ell_filter, "keep ell == value");

  std::int64_t suzuki_n = 1;
  auto* cmd_suzuki = app.add_subcommand("suzuki", "Suzuki-curve semigroup record");
  cmd_suzuki->add_option("--n", suzuki_n, "parameter n >= 1 (a = 2^n)")->required();

  VerifyOptions vopt;
  auto* cmd_verify = app.add_subcommand("verify", "oracle-vs-prediction campaign");
  cmd_verify->add_option("--genus", vopt.genus, "population: every semigroup of genus <= G");
  cmd_verify->add_option("--gens", vopt.gens, "population: single semigroup by generators");
  cmd_verify->add_option("--gaps", vopt.gaps, "population: single semigroup by gaps");
  cmd_verify->add_option("--jsonl", vopt.jsonl, "population: JSON-lines file");
  cmd_verify->add_option("--check", vopt.checks, "comma-separated checks");
  cmd_verify->add_option("--out", vopt.out_path, "report path (default stdout)");
  cmd_verify->add_option("--format", vopt.format, "json|csv");
  cmd_verify->add_option("--jobs", vopt.jobs, "worker threads");
  cmd_verify->add_option("--cap", vopt.cap, "enumeration cap (default 20)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_inv->parsed()) {
      const Semigroup s = semigroup_from_flags(gens, gaps);
      std::cout << numsg::invariants_to_json(numsg::invariants(s)).dump(2) << "\n";
      return 0;
    }
    if (cmd_nu->parsed()) {
      const Semigroup s = semigroup_from_flags(gens, gaps);
      numsg::NuTable table = numsg::nu_table(s);
      if (upto >= 0) {
        numsg::NuTable shown;
        shown.genus = table.genus;
        shown.m = table.m;
        shown.s_m = table.s_m;
        for (const auto& e : table.entries)
          if (e.element <= upto) shown.entries.push_back(e);
        for (std::int64_t n = table.entries.empty() ? 0 : table.entries.back().element + 1;
             n <= upto; ++n) {
          if (!s.contains(n)) continue;
          const std::int64_t index =
              shown.entries.empty() ? 0 : shown.entries.back().index + 1;
          shown.entries.push_back({index, n, numsg::nu(s, n)});
        }
        table = std::move(shown);
      }
      std::cout << numsg::nu_table_to_json(table).dump(2) << "\n";
      return 0;
    }
    if (cmd_sm->parsed()) {
      const Semigroup s = semigroup_from_flags(gens, gaps);
      const auto rec = numsg::invariants(s);
      const auto table = numsg::nu_table(s);
      nlohmann::json j{{"oracle_sm", table.s_m},
                       {"m", table.m},
                       {"prediction", numsg::prediction_to_json(numsg::predict_sm(s, rec))},
                       {"rules", numsg::rule_hits_to_json(numsg::applicable_rules(s, rec))}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (cmd_predict->parsed()) {
      const Semigroup s = semigroup_from_flags(gens, gaps);
      std::cout << numsg::prediction_to_json(numsg::predict_sm(s, numsg::invariants(s))).dump(2)
                << "\n";
      return 0;
    }
    if (cmd_enum->parsed()) {
      const bool filtered = acute_only || max_e >= 0 || max_tau >= 0 || ell_filter >= 0;
      numsg::enumerate_by_genus(
          genus,
          [&](const Semigroup& s) {
            if (s.is_naturals()) {
              if (!filtered) {
                nlohmann::json j = numsg::semigroup_to_json(s);
                j["trivial"] = true;
                std::cout << j.dump() << "\n";
              }
              return;
            }
            if (filtered) {
              const auto rec = numsg::invariants(s);
              if (acute_only && !rec.acute) return;
              if (max_e >= 0 && rec.e > max_e) return;
              if (max_tau >= 0 && rec.tau > max_tau) return;
              if (ell_filter >= 0 && rec.ell != ell_filter) return;
            }
            std::cout << numsg::semigroup_to_json(s).dump() << "\n";
          },
          cap);
      return 0;
    }
    if (cmd_suzuki->parsed()) {
      const Semigroup s = numsg::suzuki(suzuki_n);
      const auto rec = numsg::invariants(s);
      const auto table = numsg::nu_table(s);
      const auto apery = numsg::apery_set_suzuki_form(std::int64_t{1} << suzuki_n);
      nlohmann::json j{{"n", suzuki_n},
                       {"a", std::int64_t{1} << suzuki_n},
                       {"semigroup", numsg::semigroup_to_json(s)},
                       {"genus", s.genus()},
                       {"symmetric", rec.symmetric},
                       {"tau", rec.tau},
                       {"apery", apery.elements},
                       {"s_tilde", rec.s_tilde},
                       {"d", rec.d},
                       {"oracle_sm", table.s_m},
                       {"prediction", numsg::prediction_to_json(numsg::predict_sm(s, rec))}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (cmd_verify->parsed()) return run_verify(vopt);
  } catch (const numsg::error& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
