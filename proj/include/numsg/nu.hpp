#pragma once

#include <cstdint>
#include <vector>

#include "numsg/core.hpp"

namespace numsg {

/// nu-sequence for all members s_i <= max(2c-1, 2d+2), plus the last-descent
/// position m (the order-bound stabilization point) and the member s_m there.
/// Exact: descents cannot occur past 2d, and the stored window covers every
/// member up to 2d plus its successor.
struct NuTable {
  struct Entry {
    std::int64_t index;    // i in the enumeration s_0 = 0 < s_1 < ...
    std::int64_t element;  // s_i
    std::int64_t nu;       // nu(s_i)
  };
  std::vector<Entry> entries;
  std::int64_t m = 0;    // last index with nu(s_m) > nu(s_{m+1}); 0 if none
  std::int64_t s_m = 0;  // element at index m (0 when m == 0)
  std::int64_t genus = 0;

  /// nu at an arbitrary index, using the i+1-g tail beyond the stored window.
  std::int64_t nu_at_index(std::int64_t i) const;
};

/// Number of ordered pairs of members summing to s.  Throws NotAMember.
/// Valid for arbitrarily large s (tail handled in closed form).
std::int64_t nu(const Semigroup& s, std::int64_t element);

NuTable nu_table(const Semigroup& s);

/// Feng-Rao order bound d_ORD(i) = min{nu(s_j) : j > i}, exact via the
/// monotone tail.
std::int64_t order_bound(const Semigroup& s, const NuTable& table, std::int64_t i);
std::int64_t order_bound(const Semigroup& s, std::int64_t i);

/// A/B/C/D decomposition of N(s_i) and the component differences
/// alpha/beta/gamma/delta at a member s_i < 2c.  Every applicable case
/// formula and row of the difference tables is cross-checked against the
/// direct counts; a disagreement throws table_mismatch_error.
struct EtaDecomposition {
  std::int64_t s_i = 0;
  std::int64_t s_next = 0;
  std::int64_t alpha = 0, beta = 0, gamma = 0, delta = 0, eta = 0;
  std::int64_t count_a = 0, count_b = 0, count_c = 0, count_d = 0;  // at s_i
  std::int64_t next_a = 0, next_b = 0, next_c = 0, next_d = 0;      // at s_{i+1}
  // Row descriptor of the difference tables.
  bool next_minus_c_in_s = false;         // s_{i+1} - c in S
  bool si_minus_d_in_sprime = false;      // s_i - d in S'
  bool next_minus_csub_in_sprime = false; // s_{i+1} - c' in S'
};

EtaDecomposition decompose_eta(const Semigroup& s, const InvariantRecord& rec,
                               std::int64_t s_i);

/// Difference bounds at s = 2d-k < 2d with s, s+1 both members:
/// -floor(k/2)-1 <= nu(s+1)-nu(s) <= floor((k+5)/2).
/// Throws NotEligible when the preconditions fail.
bool diff_bounds_check(const Semigroup& s, std::int64_t element);

}  // namespace numsg
