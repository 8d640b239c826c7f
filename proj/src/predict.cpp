#include "numsg/predict.hpp"

#include <algorithm>

namespace numsg {

const char* to_string(PredictionKind kind) {
  switch (kind) {
    case PredictionKind::exact: return "exact";
    case PredictionKind::range: return "range";
    case PredictionKind::lower_bound: return "lower";
    case PredictionKind::no_rule: return "none";
  }
  return "none";
}

namespace {

struct Ctx {
  const Semigroup& s;
  const InvariantRecord& r;
  std::int64_t e, c, d, cs, dp, ell, st, t;

  bool mem(std::int64_t x) const { return x >= 0 && s.contains(x); }
  bool sp(std::int64_t x) const { return x >= 0 && x <= dp && s.contains(x); }
  bool run(std::int64_t lo, std::int64_t hi) const {
    for (std::int64_t x = std::max<std::int64_t>(lo, 0); x <= hi; ++x)
      if (!s.contains(x)) return false;
    return true;
  }
};

class Rules {
 public:
  explicit Rules(std::vector<RuleHit>& out) : out_(out) {}
  void exact(std::string id, std::int64_t v) {
    out_.push_back({std::move(id), RuleHit::Kind::exact, v, v, {}, {}});
  }
  void range(std::string id, std::int64_t lo, std::int64_t hi) {
    out_.push_back({std::move(id), RuleHit::Kind::range, lo, hi, {}, {}});
  }
  void lower(std::string id, std::int64_t lo) {
    out_.push_back({std::move(id), RuleHit::Kind::lower, lo, 0, {}, {}});
  }
  void upper(std::string id, std::int64_t hi) {
    out_.push_back({std::move(id), RuleHit::Kind::upper, 0, hi, {}, {}});
  }
  void finite(std::string id, std::vector<std::int64_t> values) {
    std::sort(values.begin(), values.end());
    out_.push_back({std::move(id), RuleHit::Kind::range, values.front(), values.back(),
                    std::move(values), {}});
  }
  void info(std::string id, std::string note) {
    out_.push_back({std::move(id), RuleHit::Kind::info, 0, 0, {}, std::move(note)});
  }

 private:
  std::vector<RuleHit>& out_;
};

void ell2_table(const Ctx& x, Rules& rules) {
  // Prop 4.5, under the standing assumption s_tilde < c' + d' - d of section 4
  // (outside it Th 3.4.1 already pins s_m = s_tilde + d).
  const std::int64_t t = x.t, d = x.d;
  if (t <= 2 || t == 4 || (t >= 5 && x.mem(d - 3))) {
    rules.exact("Prop4.5", x.st + d);
  } else if ((t == 3 && !x.mem(d - 6)) || (t >= 5 && !x.mem(d - 3))) {
    rules.exact("Prop4.5", 2 * d - 4);
  } else {  // t == 3 and d-6 in S
    rules.exact("Prop4.5", 2 * d - 6);
  }
}

void ell3_table(const Ctx& x, Rules& rules) {
  // Prop 4.7, same standing assumption.  The hypotheses force d-3 in S and
  // d' in {d-3, d-2}; the three shapes are told apart by d-1 and d-2.
  const std::int64_t t = x.t, d = x.d;
  if (!x.mem(d - 3)) throw table_mismatch_error("Prop4.7-structure", d, "d-3 not a member");
  const bool m1 = x.mem(d - 1), m2 = x.mem(d - 2);
  if (m1 && m2) throw table_mismatch_error("Prop4.7-structure", d, "no case matches");

  if (m1) {  // Case A: d' = d-3, c' = d-1
    if (x.dp != d - 3 || x.cs != d - 1)
      throw table_mismatch_error("Prop4.7-structure", d, "case A marks");
    if ((t >= 0 && t <= 7 && t != 5) || (t >= 8 && x.mem(d - 5))) {
      rules.exact("Prop4.7.A", x.st + d);
    } else if (t >= 8) {
      rules.exact("Prop4.7.A", 2 * d - 7);
    } else {  // t == 5
      if (!x.mem(d - 9)) rules.exact("Prop4.7.A", 2 * d - 6);
      else if (!x.mem(d - 10)) rules.exact("Prop4.7.A", 2 * d - 7);
      else if (!x.mem(d - 12)) rules.exact("Prop4.7.A", 2 * d - 9);
      else rules.exact("Prop4.7.A", 2 * d - 10);
    }
  } else if (!m2) {  // Case B: d' = d-3, c' = d
    if (x.dp != d - 3 || x.cs != d)
      throw table_mismatch_error("Prop4.7-structure", d, "case B marks");
    if (t <= 3) {
      rules.exact("Prop4.7.B", x.st + d);
    } else if (!x.mem(d - 5)) {
      rules.exact("Prop4.7.B", 2 * d - 6);
    } else if (x.mem(d - 4)) {
      if (t == 4 || t == 5) rules.range("Prop4.7.B", 2 * d - 9, 2 * d - 6);
      else rules.exact("Prop4.7.B", x.st + d);
    } else {  // d-5 in S, d-4 not, t >= 5
      if (t == 5 || t == 6 || t == 8) rules.exact("Prop4.7.B", x.st + d);
      else if (t == 7) rules.finite("Prop4.7.B", {2 * d - 11, 2 * d - 8});
      else if (t >= 10 && x.mem(d - 7)) rules.exact("Prop4.7.B", x.st + d);
      else if (t == 9 && x.mem(d - 7))
        rules.finite("Prop4.7.B", {2 * d - 13, 2 * d - 11, 2 * d - 10});
      else rules.exact("Prop4.7.B", 2 * d - 8);  // t >= 9, d-7 not in S
    }
  } else {  // Case C: d' = d-2, c' = d
    if (x.dp != d - 2 || x.cs != d)
      throw table_mismatch_error("Prop4.7-structure", d, "case C marks");
    if (t == 3) {
      if (x.mem(d - 4) && !x.mem(d - 7)) rules.exact("Prop4.7.C", 2 * d - 4);
      else if (!x.mem(d - 4) || !x.mem(d - 8)) rules.exact("Prop4.7.C", 2 * d - 5);
      else rules.exact("Prop4.7.C", 2 * d - 7);  // {d-4, d-7, d-8} in S
    } else {  // t >= 4
      if (x.mem(d - 4)) rules.exact("Prop4.7.C", x.st + d);
      else rules.exact("Prop4.7.C", 2 * d - 5);
    }
  }
}

void theorem_3_4(const Ctx& x, Rules& rules) {
  const std::int64_t th1 = x.dp + x.cs - x.d;  // s_tilde >= th1 gives equality
  if (x.st >= th1) {
    rules.exact("Th3.4.1", x.st + x.d);
  } else if (x.st == th1 - 1) {
    rules.upper("Th3.4.2", x.st + x.d - 1);
  } else if (x.st > 2 * x.dp - x.d) {
    std::vector<std::int64_t> u;
    for (std::int64_t v = std::max<std::int64_t>(2 * x.dp + 1 - x.d, 0); v <= x.st; ++v)
      if (x.mem(v) && !x.mem(v - x.ell) && !x.mem(v + x.d + 1 - x.cs)) u.push_back(v);
    if (!u.empty()) rules.exact("Th3.4.3a", x.d + u.back());
    else rules.upper("Th3.4.3b", 2 * x.dp);
  } else if (x.st == 2 * x.dp - x.d) {
    rules.exact("Th3.4.4", x.st + x.d);
  } else {
    // s_tilde < 2d'-d: s_m = 2d' iff 2d' satisfies row 3 or row 4 of
    // Table 3.3 (c); rows 1 and 2 cannot occur here.
    const std::int64_t si = 2 * x.dp;
    const std::int64_t sn = x.s.next_member(si);
    const bool col_c = x.mem(sn - x.c);
    const bool col_d = x.sp(si - x.d);
    const bool col_cs = x.sp(sn - x.cs);
    if (!col_c && col_d)
      throw table_mismatch_error("Th3.4.5-row12", si, "excluded row of Table 3.3 (c) holds");
    if ((!col_c && !col_d && !col_cs) || (col_c && col_d && !col_cs))
      rules.exact("Th3.4.5", 2 * x.dp);
    else
      rules.upper("Th3.4.5", 2 * x.dp - 1);

    if (!x.mem(x.st + x.d + 1 - x.cs)) {
      if (x.st >= 2 * x.dp - x.d - 2) {
        rules.range("Th3.4.5a", x.st + x.d, 2 * x.dp);
      } else {
        const std::int64_t j = 2 * x.dp - x.d - x.st;
        if (j == 3 || j == 4) {
          std::vector<std::int64_t> window;
          for (std::int64_t v = x.dp - j; v <= x.dp - 1; ++v)
            if (x.mem(v)) window.push_back(v);
          const bool only_one = window.size() == 1 && window[0] == x.dp - j + 1;
          if (!only_one) rules.range("Th3.4.5b", x.st + x.d, 2 * x.dp);
        }
      }
    }
  }
  rules.upper("Th3.4.0", x.st >= 2 * x.dp - x.d ? x.st + x.d : 2 * x.dp);
}

void eval_rules(const Ctx& x, std::vector<RuleHit>& out) {
  Rules rules(out);
  if (x.r.ordinary) {
    rules.exact("Th2.3.3", 0);
    return;
  }
  const std::int64_t th1 = x.dp + x.cs - x.d;

  if (x.st >= x.dp) rules.exact("Th2.3.4", x.st + x.d);
  if (x.r.acute) rules.exact("Th2.3.4b", x.st + x.d);
  if (x.r.symmetric) rules.exact("Prop4.14", x.st + x.d);

  if (x.ell == 2 && x.st < th1) ell2_table(x, rules);
  if (x.ell == 3 && x.st < th1) ell3_table(x, rules);

  theorem_3_4(x, rules);

  // Prop 3.8: s_tilde <= d'-2 with no gap in [s_tilde+2, d'].
  if (x.st <= x.dp - 2 && x.run(x.st + 2, x.dp)) {
    rules.upper("Prop3.8", x.st + x.d);
    if (2 * x.dp - x.d < x.st && x.st < th1) {
      if (!x.mem(x.st + 1) && x.cs == x.d) rules.exact("Prop3.8.1", x.st + x.d);
      else rules.upper("Prop3.8.1", x.st + x.d - 1);
    } else if (x.st <= 2 * x.dp - x.d) {
      rules.exact("Prop3.8.2", x.st + x.d);
    }
  }

  // Th 3.11 with the sharper Prop 3.10 bounds inside its range case.
  if (x.run(x.dp - x.ell, x.dp)) {
    rules.lower("Th3.11", x.c + x.d - x.e);
    if (2 * x.dp - x.d < x.st && x.st < th1) {
      rules.range("Th3.11.1", x.st + x.dp - x.ell + 1, 2 * x.dp);
      std::vector<std::int64_t> w;
      for (std::int64_t v = std::max<std::int64_t>(x.st - 2 * x.ell + 1, 1);
           v <= 2 * x.dp - x.d - x.ell; ++v)
        if (!x.mem(v)) w.push_back(v);
      if (!w.empty()) rules.range("Prop3.10.2e", w.back() + x.ell + x.d, 2 * x.dp);
      else rules.range("Prop3.10.2g", x.st + x.dp - x.ell + 1, 2 * x.dp);
    } else {
      rules.exact("Th3.11.2", x.st + x.d);
    }
  }

  // Prop 4.1: empty holes window, or the full-interval window.
  if (x.r.holes.empty()) {
    rules.exact("Prop4.1.1", x.st + x.d);
  } else if (x.st < x.dp) {
    std::vector<std::int64_t> interval;
    for (std::int64_t v = x.dp + 1; v <= x.cs - 1; ++v) interval.push_back(v);
    if (x.r.holes == interval) {
      if (2 * x.dp - x.d + 1 <= x.st && x.st <= th1 - 1) rules.exact("Prop4.1.2", 2 * x.dp);
      else rules.exact("Prop4.1.2", x.st + x.d);
    }
  }

  if (x.st == x.dp - 1 && x.cs != x.d) rules.exact("Cor3.7.2", x.st + x.d);

  // Prop 4.10.1: CM type at most 3, under the section-4 standing assumption.
  if (x.r.tau <= 3 && x.st < th1) {
    if (!x.r.acute && x.r.tau == 3 && x.t == 3 && x.ell == 2)
      rules.exact("Prop4.10.1", 2 * x.d - 4);
    else
      rules.exact("Prop4.10.1", x.st + x.d);
  }

  // Prop 4.3: first gap below d'.
  if (x.st < th1) {
    std::int64_t gap_k = 1;
    while (x.mem(x.dp - gap_k)) ++gap_k;
    const std::int64_t h = x.d - x.cs;
    const std::int64_t s43 = x.dp + x.cs - gap_k - 1;
    if (x.st < x.dp - gap_k && x.ell <= gap_k + h + 1) rules.lower("Prop4.3.2", s43);
    if (1 <= gap_k && gap_k < x.ell && x.cs - x.dp <= gap_k + 1) {
      bool punctured_run = true;
      for (std::int64_t v = x.dp - x.ell; v <= x.dp && punctured_run; ++v)
        if (v != x.dp - gap_k && !x.mem(v)) punctured_run = false;
      if (punctured_run) rules.range("Prop4.3.3", s43, 2 * x.dp);
    }
  }

  // Cor 3.12 (lower bounds only; exactness of 2b left to the oracle).
  if (2 * x.dp - x.d < x.st && x.st < th1 && x.run(x.st - 2 * x.ell + 1, 2 * x.dp - x.d - x.ell) &&
      x.run(x.dp - x.ell, x.dp)) {
    std::int64_t sigma = x.st - x.ell - 1;
    while (sigma > 0 && !x.mem(sigma)) --sigma;
    const bool p1 = x.mem(x.cs - x.ell - x.t - 1);
    const bool p2 = x.mem(x.cs - 2 * x.ell - x.t - 1);
    if (p1 || !p2) {
      rules.lower("Cor3.12.1", x.st + x.cs - x.ell - 1);
    } else {  // p2 and not p1
      if (sigma <= x.cs - x.ell - x.t - 2) rules.lower("Cor3.12.2a", sigma + x.d);
      else if (sigma >= x.cs - x.ell - x.t) {
        if (!x.mem(sigma - x.ell)) rules.lower("Cor3.12.2b", sigma + x.d);
        else if (!x.mem(2 * x.dp - 2 * x.ell - x.d) || !x.mem(2 * x.dp - x.ell + 1 - x.cs))
          rules.lower("Cor3.12.2c", 2 * x.dp - x.ell);
      }
    }
  }

  // Informational audit hooks for the CM-type lemmas.
  if (x.r.tau == x.r.ell + 1) rules.info("Lemma4.8.3", "tau == ell+1, H must equal {c'-1}");
  if (x.st <= x.dp && x.r.tau == x.r.ell + 1)
    rules.info("Lemma4.8.4", "e constrained to 2ell+t (or 2ell+t-1 when s_tilde == d')");

  rules.range("Rem2.4.2", 1, 2 * x.d);
}

Ctx make_ctx(const Semigroup& s, const InvariantRecord& rec) {
  return Ctx{s,
             rec,
             rec.e,
             rec.c,
             rec.d,
             rec.c_sub,
             rec.d_prime.value_or(0),
             rec.ell,
             rec.s_tilde,
             rec.t};
}

}  // namespace

std::vector<RuleHit> applicable_rules(const Semigroup& s, const InvariantRecord& rec) {
  std::vector<RuleHit> hits;
  eval_rules(make_ctx(s, rec), hits);
  std::stable_sort(hits.begin(), hits.end(),
                   [](const RuleHit& a, const RuleHit& b) { return a.id < b.id; });
  return hits;
}

ConjectureBound conjecture_bound(const Semigroup& s, const InvariantRecord& rec) {
  ConjectureBound out;
  out.bound = rec.c + rec.d - rec.e;
  if (rec.ordinary) {
    out.proven = true;
    out.rule = "Th2.3.3";
    return out;
  }
  const Ctx x = make_ctx(s, rec);
  const std::int64_t th1 = x.dp + x.cs - x.d;
  auto certify = [&](const char* rule) {
    out.proven = true;
    out.rule = rule;
  };
  if (x.st >= x.dp || rec.acute || x.st >= th1 || x.st == 2 * x.dp - x.d) certify("Prop3.6");
  else if (x.run(x.dp - x.ell, x.dp)) certify("Th3.11");
  else if (static_cast<std::int64_t>(rec.holes.size()) <= 2 && x.st < th1) certify("Cor4.4");
  else if (rec.e <= 8) certify("Cor4.11");
  else if (rec.ell == 2) certify("Prop4.5");
  else if (rec.ell == 3) certify("Prop4.7");
  else if (rec.tau <= 7) certify("Prop4.10");
  return out;
}

Prediction predict_sm(const Semigroup& s, const InvariantRecord& rec) {
  std::vector<RuleHit> hits;
  eval_rules(make_ctx(s, rec), hits);

  Prediction pred;
  const ConjectureBound cb = conjecture_bound(s, rec);
  pred.conjecture_lb = cb.bound;
  pred.lb_status = cb.proven ? "proven-here" : "conjectured";
  pred.lb_rule = cb.rule;

  if (rec.ordinary) {
    pred.kind = PredictionKind::exact;
    pred.lo = pred.hi = 0;
    pred.rule = "Th2.3.3";
    return pred;
  }

  std::int64_t lo = 0, hi = std::int64_t{1} << 62;
  std::string lo_rule, hi_rule;
  bool constrained = false;
  const std::vector<std::int64_t>* candidates = nullptr;
  std::string cand_rule;

  for (const auto& hit : hits) {
    if (hit.kind == RuleHit::Kind::info) continue;
    constrained = constrained || hit.id != "Rem2.4.2";
    const bool has_lo = hit.kind != RuleHit::Kind::upper;
    const bool has_hi = hit.kind != RuleHit::Kind::lower;
    if (has_lo && hit.lo > lo) {
      lo = hit.lo;
      lo_rule = hit.id;
    }
    if (has_hi && hit.hi < hi) {
      hi = hit.hi;
      hi_rule = hit.id;
    }
    if (!hit.candidates.empty() && candidates == nullptr) {
      candidates = &hit.candidates;
      cand_rule = hit.id;
    }
  }
  if (lo > hi)
    throw inconsistent_rules_error(lo_rule, hi_rule,
                                   "disjoint conclusions: " + lo_rule + " gives s_m >= " +
                                       std::to_string(lo) + " but " + hi_rule +
                                       " gives s_m <= " + std::to_string(hi));
  if (candidates != nullptr) {
    for (std::int64_t v : *candidates)
      if (lo <= v && v <= hi) pred.candidates.push_back(v);
    if (pred.candidates.empty())
      throw inconsistent_rules_error(cand_rule, lo_rule.empty() ? hi_rule : lo_rule,
                                     "candidate set of " + cand_rule +
                                         " is disjoint from the intersected interval");
    if (pred.candidates.size() == 1) {
      lo = hi = pred.candidates.front();
      lo_rule = hi_rule = cand_rule;
    }
  }

  if (!constrained) {
    pred.kind = PredictionKind::no_rule;
    return pred;
  }
  pred.lo = lo;
  pred.hi = hi;
  if (lo == hi) {
    pred.kind = PredictionKind::exact;
    pred.rule = lo_rule;
  } else {
    pred.kind = PredictionKind::range;
    pred.rule = lo_rule == hi_rule ? lo_rule : lo_rule + "+" + hi_rule;
  }
  return pred;
}

}  // namespace numsg
