#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace numsg {

/// Error with a stable machine-readable code alongside the human message.
class error : public std::runtime_error {
 public:
  error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// A pair of members whose sum lands in the claimed gap set.
class not_closed_error : public error {
 public:
  not_closed_error(std::int64_t a, std::int64_t b, const std::string& message)
      : error("NotClosed", message), a(a), b(b) {}
  std::int64_t a, b;
};

/// Direct set counts disagree with one of the closed-form case formulas.
class table_mismatch_error : public error {
 public:
  table_mismatch_error(std::string rule, std::int64_t s, const std::string& message)
      : error("TableMismatch", message), rule(std::move(rule)), s(s) {}
  std::string rule;
  std::int64_t s;
};

/// Two rules with verified hypotheses produced disjoint conclusions.
class inconsistent_rules_error : public error {
 public:
  inconsistent_rules_error(std::string rule_a, std::string rule_b, const std::string& message)
      : error("InconsistentRules", message), rule_a(std::move(rule_a)), rule_b(std::move(rule_b)) {}
  std::string rule_a, rule_b;
};

/// Numerical semigroup: additively closed subset of the nonnegative integers
/// containing 0 with finite complement.  Canonical representation is the gap
/// set plus the conductor; membership is cached up to a bound B large enough
/// for every computation in this library (B = max(2c, 2d+2)+1) and answered
/// by the "n >= c" rule beyond that.
class Semigroup {
 public:
  /// Smallest additively closed set containing 0 and the generators.
  /// Throws EmptyGenerators, NonCoprimeGenerators, GeneratorTooLarge,
  /// SemigroupIsN (when 1 is generated).
  static Semigroup from_generators(const std::vector<std::int64_t>& gens);

  /// Semigroup with exactly the given gap set.  Throws SemigroupIsN on an
  /// empty set and NotClosed (with a witness pair) when the complement is
  /// not additively closed.
  static Semigroup from_gaps(const std::vector<std::int64_t>& gaps);

  /// Trusted constructor for callers that already guarantee closure
  /// (the genus-tree enumerator).  `gaps` must be sorted and closed.
  static Semigroup from_gaps_unchecked(std::vector<std::int64_t> gaps);

  /// The semigroup N itself (gap set empty).  Only the enumerator emits it;
  /// every invariant routine rejects it.
  static Semigroup naturals();

  bool contains(std::int64_t n) const noexcept {
    if (n < 0) return false;
    if (n >= static_cast<std::int64_t>(members_.size())) return true;
    return members_[static_cast<std::size_t>(n)];
  }

  bool is_naturals() const noexcept { return conductor_ == 0; }
  std::int64_t conductor() const noexcept { return conductor_; }
  std::int64_t genus() const noexcept { return static_cast<std::int64_t>(gaps_.size()); }
  const std::vector<std::int64_t>& gaps() const noexcept { return gaps_; }

  /// Multiplicity e: least nonzero member (1 for N).
  std::int64_t multiplicity() const noexcept;

  /// Dominant d: greatest member below the conductor.  Throws SemigroupIsN.
  std::int64_t dominant() const;

  /// Least member strictly greater than n.
  std::int64_t next_member(std::int64_t n) const noexcept;

  /// Members in [0, conductor), ascending.
  std::vector<std::int64_t> small_members() const;

  /// Members x that are not the sum of two nonzero members.
  std::vector<std::int64_t> minimal_generators() const;

  /// Apery set w.r.t. a nonzero member: {w in S : w - base not in S}.
  /// Exactly `base` elements, one per residue class mod base.
  std::vector<std::int64_t> apery_set(std::int64_t base) const;

  std::int64_t membership_bound() const noexcept {
    return static_cast<std::int64_t>(members_.size()) - 1;
  }

  bool operator==(const Semigroup& other) const noexcept { return gaps_ == other.gaps_; }

 private:
  Semigroup() = default;
  void rebuild_membership();

  std::vector<std::int64_t> gaps_;  // sorted
  std::int64_t conductor_ = 0;      // max(gaps)+1, or 0 for N
  std::vector<bool> members_;       // [0, B]
};

/// Every scalar invariant of Setting 2.1 / Definition 2.2 plus the holes
/// window H and the classification flags.
struct InvariantRecord {
  std::int64_t e = 0;      // multiplicity
  std::int64_t c = 0;      // conductor
  std::int64_t d = 0;      // dominant
  std::int64_t c_sub = 0;  // subconductor c'
  std::optional<std::int64_t> d_prime;  // greatest member below c'; absent iff ordinary
  std::int64_t k = 0;      // d - c'
  std::optional<std::int64_t> q;        // d - d'
  std::int64_t ell = 0;    // gaps strictly between d and c
  std::int64_t genus = 0;
  std::int64_t tau = 0;    // Cohen-Macaulay type
  std::int64_t s_tilde = 0;
  std::int64_t t = 0;      // d - s_tilde
  std::vector<std::int64_t> holes;  // gaps in [c-e, c']
  bool ordinary = false;
  bool acute = false;
  bool symmetric = false;
};

struct ClassFlags {
  bool ordinary = false;
  bool acute = false;
  bool symmetric = false;
};

/// Full invariant extraction.  Throws SemigroupIsN for N.
InvariantRecord invariants(const Semigroup& s);

/// Gaps in the closed interval [c-e, c'].
std::vector<std::int64_t> holes(const Semigroup& s);

/// (s_tilde, t): largest member s <= d with s - ell not in S, and d - s.
std::pair<std::int64_t, std::int64_t> s_tilde(const Semigroup& s);

ClassFlags classify(const Semigroup& s);

}  // namespace numsg
