#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "numsg/core.hpp"
#include "test_util.hpp"

using numsg::Semigroup;
using testutil::ranges;
using testutil::sg_members;

TEST_CASE("from_generators: basics and errors") {
  const Semigroup s23 = Semigroup::from_generators({2, 3});
  CHECK(s23.gaps() == std::vector<std::int64_t>{1});
  CHECK(s23.conductor() == 2);

  const Semigroup suz = Semigroup::from_generators({8, 10, 12, 13});
  CHECK(suz.gaps() == ranges({{1, 7}, {9, 9}, {11, 11}, {14, 15}, {17, 17}, {19, 19}, {27, 27}}));
  CHECK(suz.conductor() == 28);
  CHECK(suz.genus() == 14);

  CHECK_THROWS_WITH_AS(Semigroup::from_generators({4, 6}), doctest::Contains("gcd"),
                       numsg::error);
  CHECK_THROWS_AS(Semigroup::from_generators({}), numsg::error);
  CHECK_THROWS_AS(Semigroup::from_generators({1, 5}), numsg::error);  // S would be N
  CHECK_THROWS_AS(Semigroup::from_generators({(std::int64_t{1} << 20) + 1, 2}), numsg::error);
}

TEST_CASE("from_gaps: closure validation") {
  const Semigroup s = Semigroup::from_gaps({1, 2, 5});
  for (std::int64_t v : {0, 3, 4, 6, 7, 8, 100}) CHECK(s.contains(v));
  for (std::int64_t v : {1, 2, 5}) CHECK(!s.contains(v));
  CHECK(s == Semigroup::from_generators({3, 4}));

  CHECK_THROWS_AS(Semigroup::from_gaps({}), numsg::error);

  const Semigroup s13 = Semigroup::from_gaps({1, 3});
  CHECK(s13.contains(2));
  CHECK(s13.contains(4));
  CHECK(!s13.contains(3));

  try {
    Semigroup::from_gaps({2, 3});  // 1 is a member, 1+1 = 2 is a gap
    FAIL("expected NotClosed");
  } catch (const numsg::not_closed_error& e) {
    CHECK(e.a == 1);
    CHECK(e.b == 1);
  }
}

TEST_CASE("invariants: worked fixtures") {
  // Example 2.9.2, S1 = {0,10,17,18,19,20,27->}
  const Semigroup s1 = sg_members({0, 10, 17, 18, 19, 20}, 27);
  const auto r1 = numsg::invariants(s1);
  CHECK(r1.e == 10);
  CHECK(r1.d_prime == 10);
  CHECK(r1.c_sub == 17);
  CHECK(r1.d == 20);
  CHECK(r1.c == 27);
  CHECK(r1.ell == 6);
  CHECK(r1.t == 0);
  CHECK(r1.acute);
  CHECK(r1.holes.empty());

  // Example 4.9.3, S = {0,8,9,11,12,16->}
  const Semigroup s493 = sg_members({0, 8, 9, 11, 12}, 16);
  const auto r2 = numsg::invariants(s493);
  CHECK(r2.e == 8);
  CHECK(r2.d_prime == 9);
  CHECK(r2.c_sub == 11);
  CHECK(r2.d == 12);
  CHECK(r2.c == 16);
  CHECK(r2.ell == 3);
  CHECK(r2.t == 3);
  CHECK(r2.s_tilde == 9);
  CHECK(r2.tau == 4);
  CHECK(r2.holes == std::vector<std::int64_t>{10});

  // Example 4.9.1: tau = 5 != ell
  const Semigroup s491 = sg_members({0, 10, 16, 17, 18, 19, 20, 21, 22, 23, 24}, 26);
  const auto r3 = numsg::invariants(s491);
  CHECK(r3.tau == 5);
  CHECK(r3.ell == 1);

  // Ordinary {0} + [5, inf)
  const Semigroup ord = Semigroup::from_gaps({1, 2, 3, 4});
  const auto r4 = numsg::invariants(ord);
  CHECK(r4.ordinary);
  CHECK(r4.e == 5);
  CHECK(r4.c == 5);
  CHECK(r4.d == 0);
  CHECK(r4.ell == 4);
  CHECK(!r4.d_prime.has_value());
  CHECK(r4.tau == 4);
  CHECK(r4.acute);
}

TEST_CASE("invariants: Example 2.9.3 trichotomy instances") {
  const Semigroup s5 = sg_members({0, 13, 15, 20}, 26);
  const auto r5 = numsg::invariants(s5);
  CHECK(r5.ell == 5);
  CHECK(r5.t == 5);
  CHECK(r5.e < 2 * r5.ell + r5.t);

  const Semigroup s6 = sg_members({0, 15, 19, 24}, 30);
  const auto r6 = numsg::invariants(s6);
  CHECK(r6.ell == 5);
  CHECK(r6.t == 5);
  CHECK(r6.e == 2 * r6.ell + r6.t);
  CHECK(r6.s_tilde == r6.d_prime);

  const Semigroup s7 = sg_members({0, 26, 28, 31, 33}, 39);
  const auto r7 = numsg::invariants(s7);
  CHECK(r7.ell == 5);
  CHECK(r7.t == 5);
  CHECK(r7.e > 2 * r7.ell + r7.t);
  CHECK(r7.d_prime == 31);
  CHECK(r7.c_sub == 33);
}

TEST_CASE("holes") {
  CHECK(numsg::holes(sg_members({0, 10, 17, 18, 19, 20}, 27)).empty());
  CHECK(numsg::holes(sg_members({0, 8, 9, 11, 12}, 16)) == std::vector<std::int64_t>{10});
  CHECK(numsg::holes(Semigroup::from_generators({2, 3})).empty());
}

TEST_CASE("s_tilde") {
  const Semigroup s = sg_members({0, 10, 20, 30}, 40);
  CHECK(numsg::s_tilde(s) == std::pair<std::int64_t, std::int64_t>{30, 0});

  const Semigroup s7 = sg_members({0, 26, 28, 31, 33}, 39);
  CHECK(numsg::s_tilde(s7) == std::pair<std::int64_t, std::int64_t>{28, 5});

  const Semigroup s493 = sg_members({0, 8, 9, 11, 12}, 16);
  CHECK(numsg::s_tilde(s493).first == 9);
}

TEST_CASE("classify") {
  CHECK(numsg::classify(sg_members({0, 10, 17, 18, 19, 20}, 27)).acute);
  // Example 2.9.2, S2 non-acute
  CHECK(!numsg::classify(sg_members({0, 8, 12, 14, 15, 16}, 20)).acute);
  // Example 2.9.2, S3 and S4 non-acute
  CHECK(!numsg::classify(sg_members({0, 7, 12, 14}, 19)).acute);
  CHECK(!numsg::classify(sg_members({0, 10, 14}, 20)).acute);
  CHECK(numsg::classify(Semigroup::from_generators({8, 10, 12, 13})).symmetric);
  CHECK(!numsg::classify(Semigroup::from_generators({3, 5, 7})).symmetric);
}

TEST_CASE("minimal generators and Apery sets") {
  const Semigroup suz = Semigroup::from_generators({8, 10, 12, 13});
  CHECK(suz.minimal_generators() == std::vector<std::int64_t>{8, 10, 12, 13});
  CHECK(suz.apery_set(8) ==
        std::vector<std::int64_t>{0, 10, 12, 13, 22, 23, 25, 35});

  const Semigroup s347 = Semigroup::from_generators({3, 4, 7});
  CHECK(s347.minimal_generators() == std::vector<std::int64_t>{3, 4});

  CHECK(Semigroup::naturals().minimal_generators() == std::vector<std::int64_t>{1});
}

TEST_CASE("naturals is rejected by the invariant routines") {
  const Semigroup nat = Semigroup::naturals();
  CHECK(nat.is_naturals());
  CHECK(nat.contains(0));
  CHECK(nat.contains(12345));
  CHECK_THROWS_AS(numsg::invariants(nat), numsg::error);
}
