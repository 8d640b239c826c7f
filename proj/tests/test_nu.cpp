#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "numsg/families.hpp"
#include "numsg/nu.hpp"
#include "test_util.hpp"

using numsg::Semigroup;
using testutil::naive_nu;
using testutil::sg_members;

namespace {
const Semigroup kTens = sg_members({0, 10, 20, 30}, 40);  // Example 3.2
}

TEST_CASE("nu: Example 3.2 values") {
  CHECK(numsg::nu(kTens, 59) == 4);
  CHECK(numsg::nu(kTens, 60) == 7);
  CHECK(numsg::nu(kTens, 61) == 6);
  CHECK(numsg::nu(kTens, 0) == 1);
  // Tail: 79 >= 2c-1, nu = i+1-g with g = 36.
  CHECK(kTens.genus() == 36);
  CHECK(numsg::nu(kTens, 79) == 8);
  CHECK(numsg::nu(kTens, 79) == naive_nu(kTens, 79));
  CHECK_THROWS_AS(numsg::nu(kTens, 15), numsg::error);
}

TEST_CASE("nu agrees with the pair-count oracle") {
  for (const Semigroup& s : numsg::enumerate_collect(6)) {
    if (s.is_naturals()) continue;
    const auto table = numsg::nu_table(s);
    for (const auto& entry : table.entries) CHECK(entry.nu == naive_nu(s, entry.element));
  }
}

TEST_CASE("nu_table: stabilization points") {
  const auto ord = numsg::nu_table(Semigroup::from_gaps({1, 2, 3, 4}));
  CHECK(ord.m == 0);
  CHECK(ord.s_m == 0);

  const auto tens = numsg::nu_table(kTens);
  CHECK(tens.m == 24);
  CHECK(tens.s_m == 60);

  const auto s493 = numsg::nu_table(sg_members({0, 8, 9, 11, 12}, 16));
  CHECK(s493.s_m == 21);  // = s_tilde + d with s_tilde = d'
}

TEST_CASE("order bound") {
  const auto table = numsg::nu_table(kTens);
  CHECK(numsg::order_bound(kTens, table, 24) == 6);
  CHECK(numsg::order_bound(kTens, table, 23) == 6);

  const Semigroup ord = Semigroup::from_gaps({1, 2, 3, 4});
  const auto otab = numsg::nu_table(ord);
  for (std::int64_t i = 0; i <= 10; ++i)
    CHECK(numsg::order_bound(ord, otab, i) == otab.nu_at_index(i + 1));
}

TEST_CASE("decompose_eta: Example 3.2 rows") {
  const auto rec = numsg::invariants(kTens);

  const auto at59 = numsg::decompose_eta(kTens, rec, 59);
  CHECK(at59.alpha == 0);
  CHECK(at59.beta == 1);
  CHECK(at59.gamma == 0);
  CHECK(at59.delta == 2);
  CHECK(at59.eta == 3);

  const auto at60 = numsg::decompose_eta(kTens, rec, 60);
  CHECK(at60.alpha == 0);
  CHECK(at60.beta == -1);
  CHECK(at60.gamma == 0);
  CHECK(at60.delta == 0);
  CHECK(at60.eta == -1);

  const auto at0 = numsg::decompose_eta(kTens, rec, 0);
  CHECK(at0.alpha == 0);
  CHECK(at0.beta == 0);
  CHECK(at0.gamma == 1);
  CHECK(at0.delta == 0);
  CHECK(at0.eta == 1);
}

TEST_CASE("decompose_eta: partition and identity over a population") {
  for (const Semigroup& s : numsg::enumerate_collect(8)) {
    if (s.is_naturals()) continue;
    const auto rec = numsg::invariants(s);
    if (rec.ordinary) continue;
    const auto table = numsg::nu_table(s);
    for (const auto& entry : table.entries) {
      if (entry.element >= 2 * rec.c) break;
      const auto dec = numsg::decompose_eta(s, rec, entry.element);
      CHECK(dec.eta == dec.alpha + dec.beta + dec.gamma + dec.delta);
      CHECK(dec.count_a + dec.count_b + dec.count_c + dec.count_d == entry.nu);
    }
  }
}

TEST_CASE("diff_bounds_check: sharp instance and preconditions") {
  CHECK(numsg::diff_bounds_check(kTens, 59));  // diff +3 == floor((1+5)/2), sharp
  CHECK_THROWS_AS(numsg::diff_bounds_check(kTens, 60), numsg::error);  // s = 2d
  CHECK_THROWS_AS(numsg::diff_bounds_check(kTens, 30), numsg::error);  // 31 not a member

  for (const Semigroup& s : numsg::enumerate_collect(8)) {
    if (s.is_naturals()) continue;
    const std::int64_t d = s.dominant();
    if (d == 0) continue;
    for (std::int64_t v = 0; v < 2 * d; ++v)
      if (s.contains(v) && s.contains(v + 1)) CHECK(numsg::diff_bounds_check(s, v));
  }
}
