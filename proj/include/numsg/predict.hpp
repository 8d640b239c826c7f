#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "numsg/core.hpp"

namespace numsg {

enum class PredictionKind { exact, range, lower_bound, no_rule };

const char* to_string(PredictionKind kind);

/// Outcome of the rule cascade for s_m: an exact value, an interval, a bare
/// lower bound, or nothing.  `rule` names the statement(s) that pinned the
/// final bounds.  `candidates`, when nonempty, is a finite set the value must
/// lie in (already intersected with [lo, hi]).
struct Prediction {
  PredictionKind kind = PredictionKind::no_rule;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::string rule;
  std::vector<std::int64_t> candidates;
  std::int64_t conjecture_lb = 0;     // c + d - e
  std::string lb_status;              // "proven-here" | "conjectured"
  std::string lb_rule;                // certificate id when proven
};

/// One rule whose hypotheses hold on the input, with its conclusion.
struct RuleHit {
  enum class Kind { exact, range, lower, upper, info };
  std::string id;
  Kind kind = Kind::info;
  std::int64_t lo = 0;  // meaningful for exact/range/lower
  std::int64_t hi = 0;  // meaningful for exact/range/upper
  std::vector<std::int64_t> candidates;
  std::string note;
};

struct ConjectureBound {
  std::int64_t bound = 0;  // c + d - e
  bool proven = false;
  std::string rule;        // certificate id when proven
};

/// Every encoded rule whose hypotheses hold, ordered by rule id.
std::vector<RuleHit> applicable_rules(const Semigroup& s, const InvariantRecord& rec);

/// Intersection of all applicable conclusions; the tightest sound statement.
/// Throws inconsistent_rules_error when two verified rules are disjoint.
Prediction predict_sm(const Semigroup& s, const InvariantRecord& rec);

/// The c+d-e lower bound with its provenance: proven-here when one of the
/// certified hypothesis classes holds, conjectured otherwise.
ConjectureBound conjecture_bound(const Semigroup& s, const InvariantRecord& rec);

}  // namespace numsg
