#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "numsg/core.hpp"

namespace numsg {

/// Generators m0, m0+rho, ..., m0+(p+1)*rho together with the extra
/// generator n.  gcd(rho, m0, n) must be 1.
struct AasSpec {
  std::int64_t m0 = 2;
  std::int64_t rho = 1;
  std::int64_t p = 0;
  std::int64_t n = 3;

  std::vector<std::int64_t> generators() const;
};

/// Closure of the AAS generators.  Throws NonCoprime.
Semigroup aas_semigroup(const AasSpec& spec);

struct AperySet {
  std::int64_t base = 0;                  // the multiplicity used
  std::vector<std::int64_t> elements;     // sorted, one per residue class mod base
  std::int64_t max_element = 0;           // s_e
};

/// Apery set of the Suzuki-parameter AAS semigroup (m0 = 2a^2, rho = a,
/// p = 1, n = m2+1) via the closed-form matrix {g_t + h*n}.  a must be 1 or
/// a power of two; a = 1 yields <2,3> with Apery {0,3}.
AperySet apery_set_suzuki_form(std::int64_t a);

/// Weierstrass semigroup of the Suzuki curve with parameter a = 2^n:
/// <2a^2, 2a^2+a, 2a^2+2a, 2a^2+2a+1>.
Semigroup suzuki(std::int64_t n);

/// Apery pairing criterion: every nonzero non-maximal Apery element pairs
/// with another to the maximum.  Equivalent to the mirror symmetry test.
bool symmetric_via_apery(const Semigroup& s);

/// Genus-tree enumeration: every numerical semigroup of genus <= g_max,
/// each exactly once, in canonical order (by genus, then lexicographic gap
/// set).  N itself is emitted as the genus-0 root.  Throws CapExceeded when
/// g_max exceeds `cap`.
void enumerate_by_genus(std::int64_t g_max,
                        const std::function<void(const Semigroup&)>& emit,
                        std::int64_t cap = 20);

std::vector<Semigroup> enumerate_collect(std::int64_t g_max, std::int64_t cap = 20);

}  // namespace numsg
