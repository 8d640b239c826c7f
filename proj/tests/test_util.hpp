#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "numsg/core.hpp"
#include "numsg/families.hpp"

namespace testutil {

using std::int64_t;

/// Gap list for [lo, hi] unions; convenience for fixture literals.
inline std::vector<int64_t> ranges(std::initializer_list<std::pair<int64_t, int64_t>> rs) {
  std::vector<int64_t> out;
  for (auto [lo, hi] : rs)
    for (int64_t v = lo; v <= hi; ++v) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

/// Semigroup from its members below the conductor (closure re-validated).
inline numsg::Semigroup sg_members(const std::vector<int64_t>& members_below_c, int64_t c) {
  std::set<int64_t> m(members_below_c.begin(), members_below_c.end());
  std::vector<int64_t> gaps;
  for (int64_t v = 1; v < c; ++v)
    if (!m.count(v)) gaps.push_back(v);
  return numsg::Semigroup::from_gaps(gaps);
}

/// Independent enumeration oracle: count genus-g semigroups by brute force
/// over all g-subsets of [1, 2g-1] whose complement is additively closed.
/// Shares nothing with the genus-tree enumerator.
inline int64_t brute_force_genus_count(int64_t g) {
  if (g == 0) return 1;
  const int64_t top = 2 * g - 1;
  std::vector<int> pick(static_cast<std::size_t>(top), 0);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(g), 1);
  std::sort(pick.begin(), pick.end());
  int64_t count = 0;
  do {
    // pick[i] == 1 means i+1 is a gap.
    const int64_t c = [&] {
      for (int64_t v = top; v >= 1; --v)
        if (pick[static_cast<std::size_t>(v - 1)]) return v + 1;
      return int64_t{1};
    }();
    auto member = [&](int64_t v) {
      if (v <= 0) return v == 0;
      if (v > top) return true;
      return pick[static_cast<std::size_t>(v - 1)] == 0;
    };
    bool closed = true;
    for (int64_t a = 1; a < c && closed; ++a) {
      if (!member(a)) continue;
      for (int64_t b = a; a + b < c && closed; ++b)
        if (member(b) && !member(a + b)) closed = false;
    }
    if (closed) ++count;
  } while (std::next_permutation(pick.begin(), pick.end()));
  return count;
}

/// Pair-count oracle for nu over explicit member lists.
inline int64_t naive_nu(const numsg::Semigroup& s, int64_t value) {
  std::vector<int64_t> members;
  for (int64_t v = 0; v <= value; ++v)
    if (s.contains(v)) members.push_back(v);
  int64_t count = 0;
  for (int64_t a : members)
    for (int64_t b : members)
      if (a + b == value) ++count;
  return count;
}

/// Seeded stream of AAS instances whose recomputed embedding dimension lies
/// in [3, 6]; used for the Prop 4.12 bound checks.
inline std::vector<std::pair<numsg::Semigroup, int64_t>> random_aas_instances(
    std::size_t want, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int64_t> m0_dist(3, 14);
  std::uniform_int_distribution<int64_t> rho_dist(1, 5);
  std::uniform_int_distribution<int64_t> p_dist(0, 3);
  std::uniform_int_distribution<int64_t> n_dist(3, 45);
  std::vector<std::pair<numsg::Semigroup, int64_t>> out;
  while (out.size() < want) {
    numsg::AasSpec spec{m0_dist(rng), rho_dist(rng), p_dist(rng), n_dist(rng)};
    try {
      numsg::Semigroup s = numsg::aas_semigroup(spec);
      const int64_t mu = static_cast<int64_t>(s.minimal_generators().size());
      if (mu >= 3 && mu <= 6) out.emplace_back(std::move(s), mu);
    } catch (const numsg::error&) {
      continue;  // non-coprime or degenerate draw
    }
  }
  return out;
}

}  // namespace testutil
