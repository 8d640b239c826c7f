#include "numsg/harness.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include "numsg/families.hpp"

namespace numsg {

const char* to_string(Check check) {
  switch (check) {
    case Check::predictor: return "predictor";
    case Check::conjecture: return "conjecture";
    case Check::table33: return "table33";
    case Check::tail: return "tail";
    case Check::relations: return "relations";
    case Check::diffbounds: return "diffbounds";
    case Check::apery: return "apery";
  }
  return "?";
}

std::optional<Check> check_from_string(const std::string& name) {
  for (Check c : {Check::predictor, Check::conjecture, Check::table33, Check::tail,
                  Check::relations, Check::diffbounds, Check::apery})
    if (name == to_string(c)) return c;
  return std::nullopt;
}

namespace {

std::vector<std::int64_t> interval(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

}  // namespace

std::vector<std::string> check_tail(const InvariantRecord& rec, const NuTable& table) {
  std::vector<std::string> fails;
  for (const auto& entry : table.entries) {
    if (entry.element >= 2 * rec.c - 1 && entry.nu != entry.index + 1 - table.genus) {
      fails.push_back("Th2.3.1");
      break;
    }
  }
  for (std::size_t i = 0; i + 1 < table.entries.size(); ++i) {
    if (table.entries[i].element >= 2 * rec.d + 1 &&
        table.entries[i + 1].nu < table.entries[i].nu) {
      fails.push_back("Th2.3.2");
      break;
    }
  }
  if (table.m > 0) {
    const auto& at = table.entries[static_cast<std::size_t>(table.m)];
    if (at.nu <= table.nu_at_index(table.m + 1) || at.element != table.s_m)
      fails.push_back("Def2.2-m");
  }
  for (std::size_t i = 0; i + 1 < table.entries.size(); ++i) {
    if (table.entries[i].index > table.m && table.entries[i + 1].nu < table.entries[i].nu) {
      fails.push_back("Def2.2-m");
      break;
    }
  }
  return fails;
}

std::vector<std::string> check_relations(const Semigroup& s, const InvariantRecord& rec,
                                         const NuTable& table) {
  std::vector<std::string> fails;
  auto add_if = [&](bool ok, const char* id) {
    if (!ok) fails.push_back(id);
  };

  if (rec.ordinary) {
    add_if(table.m == 0 && table.s_m == 0, "Th2.3.3");
    add_if(rec.tau == rec.e - 1 && rec.holes.empty() && rec.acute, "Ordinary");
    add_if((rec.tau == 1) == rec.symmetric, "SymmetricTau");
    return fails;
  }

  const std::int64_t e = rec.e, c = rec.c, d = rec.d, cs = rec.c_sub, ell = rec.ell;
  const std::int64_t dp = *rec.d_prime, st = rec.s_tilde, t = rec.t, tau = rec.tau;
  const std::int64_t q_local = cs - (c - e);
  const auto& H = rec.holes;
  const auto hsize = static_cast<std::int64_t>(H.size());
  auto mem = [&](std::int64_t x) { return x >= 0 && s.contains(x); };
  auto run = [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t x = std::max<std::int64_t>(lo, 0); x <= hi; ++x)
      if (!s.contains(x)) return false;
    return true;
  };
  auto in_holes = [&](std::int64_t x) {
    return std::binary_search(H.begin(), H.end(), x);
  };

  add_if(c - e <= cs && cs <= d && dp < cs, "Setting2.1");
  add_if(e <= 2 * ell + t + q_local, "Prop2.5.1");

  {
    const bool a = d - cs >= ell - 1;
    const bool b = st - ell == cs - 1;
    const bool cc = c + cs - 2 == st + d;
    const bool dd = e == 2 * ell + t + q_local;
    add_if(a == b && b == cc && cc == dd, "Prop2.5.2");
    if (a && b && cc && dd) {
      add_if(cs <= st && st <= d && table.s_m == st + d, "Prop2.5.2i");
      add_if(rec.acute == (d - dp >= 2 * ell + t), "Prop2.5.2ii");
    }
  }

  for (std::int64_t h = 0; h < e; ++h)
    if (mem(d - h) && !(e >= h + ell + 1)) {
      fails.push_back("Prop2.6.1a");
      break;
    }
  {
    bool ok = true;
    for (std::int64_t sv = std::max<std::int64_t>(c - e, 0); sv <= c + ell && ok; ++sv) {
      if (!mem(sv)) continue;
      for (std::int64_t sp = std::max<std::int64_t>(sv - ell, 0); sp < sv && ok; ++sp)
        if (mem(sp) && sp < c - e) ok = false;
    }
    add_if(ok, "Prop2.6.1b");
  }
  add_if(st >= c - e && e >= t + ell + 1, "Prop2.6.2");
  if (t > 0) {
    const std::int64_t snext = s.next_member(st);
    add_if(e >= 2 * ell + 1 + d - snext && e >= 2 * ell + 1 && snext >= c - e + ell,
           "Prop2.6.3");
    if (mem(st + 1)) add_if(e >= 2 * ell + t, "Prop2.6.3");
  }
  {
    const bool a1 = e > 2 * ell + t, a2 = st - ell > c - e - 1, a3 = in_holes(st - ell);
    const bool b1 = e == 2 * ell + t, b2 = st - ell == c - e - 1;
    const bool c1 = e < 2 * ell + t;
    const bool c2 = c - e - ell <= st - ell && st - ell < c - e - 1;
    const int picked = (a1 ? 1 : 0) + (b1 ? 1 : 0) + (c1 ? 1 : 0);
    add_if(picked == 1 && a1 == a2 && a1 == a3 && b1 == b2 && c1 == c2, "Prop2.6.4");
  }
  if (e < 2 * ell + t) {
    add_if(st <= dp || t == 0, "Prop2.6.5a");
    if (st <= dp) {
      bool empty_window = true;
      for (std::int64_t v = st + 1; v <= c - e + ell - 1; ++v)
        if (mem(v)) empty_window = false;
      add_if(empty_window && hsize >= 2 * ell + t - e, "Prop2.6.5b");
    }
  }
  if (t > 0) {
    if (st <= dp) add_if(d - cs <= ell - 2 && d - dp <= ell && cs >= c - e + 2, "Cor2.7.1");
    if (q_local == 0 || q_local == 1)
      add_if(d - cs >= ell - 1 && e == 2 * ell + t + q_local, "Cor2.7.2");
    if (d - cs <= ell - 2) {
      add_if(d - cs + 2 <= d - dp && d - dp <= ell && ell <= e - 3 - (d - cs), "Cor2.7.3a");
      if (st >= 2 * dp - d) add_if(t <= 2 * ell, "Cor2.7.3b");
    }
    if (st < dp && e <= 2 * ell + t) {
      // The stated bound #H <= ell+t-2(d-c')-4 counts the members
      // {c'-ell..d-ell}, s_tilde, d' of the window as distinct; d' (when
      // d' = d-ell) and s_tilde can fall inside the run, each adding one.
      // Witness for the slack: {0,8,10,12,15->} has #H = 3 with bound 2.
      std::int64_t slack = 0;
      if (dp == d - ell) ++slack;
      if (cs - ell <= st && st <= d - ell) ++slack;
      add_if(hsize <= ell + t - 2 * (d - cs) - 4 + slack, "Cor2.7.4");
    }
  }
  if (cs <= st && st < d) add_if(e >= 2 * ell + t, "Cor2.8.1");
  if (st <= dp) {
    if (e <= 2 * ell + t) add_if(mem(d + 2 * ell - e) == (e == 2 * ell + t), "Cor2.8.2a");
    {
      bool contained = true;
      for (std::int64_t hole : H)
        if (hole < dp - t + 1 || hole > cs - 1) contained = false;
      if (contained) add_if(e <= 2 * ell + t, "Cor2.8.2b");
    }
    if (H == interval(dp + 1, cs - 1) && e < 2 * ell + t) add_if(st == dp, "Cor2.8.2c");
  }
  if (cs == c - e || cs == c - e + 1) add_if(rec.acute, "Th2.3.5");

  add_if(hsize + ell <= tau && tau <= e - 1, "Lemma4.8.1");
  if (tau == ell) {
    add_if(H.empty(), "Lemma4.8.2");
    const bool b1 = ell == e - 1;
    const bool b2 = cs == d;
    const bool b3 = d == c - e;
    bool b4 = c % e == 0;
    for (std::int64_t v = 0; v < c && b4; ++v)
      if (mem(v) && v % e != 0) b4 = false;
    add_if(b1 == b2 && b2 == b3 && b3 == b4, "Lemma4.8.2");
  }
  if (cs > c - e) {
    add_if(tau >= ell + 1, "Lemma4.8.3");
    if (tau == ell + 1)
      add_if(H == std::vector<std::int64_t>{cs - 1}, "Lemma4.8.3");
  }
  if (st <= dp && tau == ell + 1) {
    if (st == dp) add_if(e == 2 * ell + t - 1 || e == 2 * ell + t, "Lemma4.8.4");
    else add_if(e == 2 * ell + t, "Lemma4.8.4");
  }

  add_if((tau == 1) == rec.symmetric && symmetric_via_apery(s) == rec.symmetric,
         "SymmetricTau");
  if (H.empty()) add_if(cs == c - e && rec.acute, "Prop4.1.1");
  if (st < dp)
    add_if((run(dp - ell, dp) && e == 2 * ell + t) == (H == interval(dp + 1, cs - 1)),
           "Prop4.1.2eq");
  if (st < dp) {
    bool consecutive = true;
    for (std::int64_t v = std::max<std::int64_t>(st + dp - ell, 0); v <= c; ++v)
      if (mem(v) && s.next_member(v) != v + 1) consecutive = false;
    add_if(consecutive, "Prop3.1.1");
  }
  add_if(0 < table.s_m && table.s_m <= 2 * d, "Rem2.4.2");
  if (table.s_m > 2 * dp) add_if(mem(table.s_m - d), "Cor3.7.1");

  return fails;
}

namespace {

void run_checks(const CampaignConfig& cfg, const Semigroup& s, CampaignRecord& rec,
                bool& finding) {
  auto enabled = [&](Check c) { return cfg.checks.count(c) > 0; };
  rec.gaps = s.gaps();
  try {
    rec.inv = invariants(s);
    const NuTable table = nu_table(s);
    rec.oracle_sm = table.s_m;
    rec.oracle_m = table.m;
    rec.pred = predict_sm(s, rec.inv);

    // Predictor soundness is always evaluated; it defines the verdict column.
    switch (rec.pred.kind) {
      case PredictionKind::exact:
        rec.verdict = rec.pred.lo == table.s_m ? "match" : "violation";
        break;
      case PredictionKind::range: {
        bool ok = rec.pred.lo <= table.s_m && table.s_m <= rec.pred.hi;
        if (ok && !rec.pred.candidates.empty())
          ok = std::find(rec.pred.candidates.begin(), rec.pred.candidates.end(), table.s_m) !=
               rec.pred.candidates.end();
        rec.verdict = ok ? "in-range" : "violation";
        break;
      }
      case PredictionKind::lower_bound:
        rec.verdict = table.s_m >= rec.pred.lo ? "lb-only-ok" : "violation";
        break;
      case PredictionKind::no_rule:
        rec.verdict = "lb-only-ok";
        break;
    }
    if (rec.verdict == "violation") rec.failures.push_back("predictor");
    if (rec.pred.lb_status == "proven-here" && table.s_m < rec.pred.conjecture_lb)
      rec.failures.push_back("predictor-lb");

    if (enabled(Check::conjecture) && !rec.inv.ordinary) {
      if (table.s_m < rec.pred.conjecture_lb) {
        if (rec.pred.lb_status == "proven-here") {
          rec.failures.push_back("conjecture-proven-class");
        } else {
          finding = true;
        }
      }
    }
    if (enabled(Check::tail)) {
      for (auto& id : check_tail(rec.inv, table)) rec.failures.push_back("tail:" + id);
    }
    if (enabled(Check::relations)) {
      for (auto& id : check_relations(s, rec.inv, table))
        rec.failures.push_back("relations:" + id);
    }
    if (enabled(Check::table33) && !rec.inv.ordinary) {
      for (const auto& entry : table.entries) {
        if (entry.element >= 2 * rec.inv.c) break;
        try {
          decompose_eta(s, rec.inv, entry.element);
        } catch (const table_mismatch_error& err) {
          rec.failures.push_back("table33:" + err.rule + "@" + std::to_string(err.s));
        }
      }
    }
    if (enabled(Check::diffbounds) && !rec.inv.ordinary) {
      for (std::int64_t v = 0; v < 2 * rec.inv.d; ++v) {
        if (!s.contains(v) || !s.contains(v + 1)) continue;
        if (!diff_bounds_check(s, v))
          rec.failures.push_back("diffbounds:" + std::to_string(v));
      }
    }
    if (enabled(Check::apery)) {
      const bool pairing = symmetric_via_apery(s);
      if (pairing != rec.inv.symmetric || pairing != (rec.inv.tau == 1))
        rec.failures.push_back("apery:pairing");
    }
  } catch (const inconsistent_rules_error& err) {
    rec.failures.push_back("InconsistentRules:" + err.rule_a + "/" + err.rule_b);
  } catch (const table_mismatch_error& err) {
    rec.failures.push_back("TableMismatch:" + err.rule);
  } catch (const error& err) {
    rec.failures.push_back(std::string("error:") + err.code());
  }
  if (!rec.failures.empty()) rec.verdict = "violation";
}

}  // namespace

VerificationReport verify_campaign(const CampaignConfig& cfg) {
  if (cfg.checks.empty()) throw error("BadInput", "at least one check must be selected");

  std::vector<Semigroup> population;
  if (cfg.genus_bound) {
    // N (genus 0) is excluded from verification populations: every predicate
    // assumes S != N.
    for (auto& s : enumerate_collect(*cfg.genus_bound, cfg.genus_cap))
      if (!s.is_naturals()) population.push_back(std::move(s));
  } else {
    population = cfg.population;
  }

  VerificationReport report;
  report.version = "numsg 0.1.0";
  {
    std::string cfg_echo = cfg.genus_bound
                               ? "genus<=" + std::to_string(*cfg.genus_bound)
                               : "explicit[" + std::to_string(population.size()) + "]";
    cfg_echo += ";checks=";
    bool first = true;
    for (Check c : cfg.checks) {
      if (!first) cfg_echo += ",";
      cfg_echo += to_string(c);
      first = false;
    }
    report.config = cfg_echo;
  }

  const std::size_t n = population.size();
  report.records.resize(n);
  std::vector<char> finding_flags(n, 0);

  const int jobs = std::max(1, cfg.jobs);
  if (jobs == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) {
      report.records[i].id = static_cast<std::int64_t>(i);
      bool finding = false;
      run_checks(cfg, population[i], report.records[i], finding);
      finding_flags[i] = finding ? 1 : 0;
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= n) return;
        report.records[i].id = static_cast<std::int64_t>(i);
        bool finding = false;
        run_checks(cfg, population[i], report.records[i], finding);
        finding_flags[i] = finding ? 1 : 0;
      }
    };
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  report.population = static_cast<std::int64_t>(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& rec = report.records[i];
    if (rec.verdict == "violation") ++report.violations;
    if (!rec.pred.rule.empty()) ++report.rule_hits[rec.pred.rule];
    if (finding_flags[i])
      report.findings.push_back(
          {rec.id, rec.gaps, rec.oracle_sm, rec.pred.conjecture_lb});
  }
  return report;
}

}  // namespace numsg
