#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "numsg/families.hpp"
#include "numsg/nu.hpp"
#include "test_util.hpp"

using numsg::Semigroup;

TEST_CASE("enumeration counts match the independent gap-set oracle") {
  const std::vector<std::int64_t> expected = {1, 1, 2, 4, 7, 12, 23, 39, 67};
  std::vector<std::int64_t> per_genus(9, 0);
  numsg::enumerate_by_genus(8, [&](const Semigroup& s) {
    ++per_genus[static_cast<std::size_t>(s.genus())];
  });
  CHECK(per_genus == expected);
  for (std::int64_t g = 0; g <= 8; ++g)
    CHECK(testutil::brute_force_genus_count(g) == expected[static_cast<std::size_t>(g)]);
}

TEST_CASE("enumeration is canonical and duplicate-free") {
  std::vector<std::vector<std::int64_t>> gap_sets;
  numsg::enumerate_by_genus(3, [&](const Semigroup& s) { gap_sets.push_back(s.gaps()); });
  const std::vector<std::vector<std::int64_t>> expected = {
      {}, {1}, {1, 2}, {1, 3}, {1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {1, 3, 5}};
  CHECK(gap_sets == expected);

  std::set<std::vector<std::int64_t>> seen;
  std::int64_t total = 0;
  numsg::enumerate_by_genus(10, [&](const Semigroup& s) {
    seen.insert(s.gaps());
    ++total;
  });
  CHECK(static_cast<std::int64_t>(seen.size()) == total);

  CHECK_THROWS_AS(numsg::enumerate_collect(25), numsg::error);  // default cap 20
}

TEST_CASE("aas_semigroup") {
  const Semigroup a = numsg::aas_semigroup({8, 2, 1, 13});
  CHECK(a == numsg::suzuki(1));
  CHECK(a.minimal_generators().size() == 4);

  const Semigroup b = numsg::aas_semigroup({3, 1, 0, 7});  // 7 = 3+4, not minimal
  CHECK(b.minimal_generators() == std::vector<std::int64_t>{3, 4});

  CHECK_THROWS_AS(numsg::aas_semigroup({4, 2, 0, 8}), numsg::error);  // gcd 2
}

TEST_CASE("apery_set_suzuki_form matches the definitional Apery set") {
  const auto a2 = numsg::apery_set_suzuki_form(2);
  CHECK(a2.elements == std::vector<std::int64_t>{0, 10, 12, 13, 22, 23, 25, 35});
  CHECK(a2.max_element == 35);
  std::set<std::int64_t> residues;
  for (std::int64_t w : a2.elements) residues.insert(w % 8);
  CHECK(residues.size() == 8);
  CHECK(a2.elements == numsg::suzuki(1).apery_set(8));

  const auto a1 = numsg::apery_set_suzuki_form(1);
  CHECK(a1.elements == std::vector<std::int64_t>{0, 3});
  CHECK(a1.elements == Semigroup::from_generators({2, 3}).apery_set(2));

  const auto a4 = numsg::apery_set_suzuki_form(4);
  CHECK(a4.elements == numsg::suzuki(2).apery_set(32));

  CHECK_THROWS_AS(numsg::apery_set_suzuki_form(3), numsg::error);
  CHECK_THROWS_AS(numsg::apery_set_suzuki_form(0), numsg::error);
}

TEST_CASE("suzuki semigroups") {
  const Semigroup s1 = numsg::suzuki(1);
  CHECK(s1.conductor() == 28);
  CHECK(s1.genus() == 14);
  const auto r1 = numsg::invariants(s1);
  CHECK(r1.symmetric);
  CHECK(r1.tau == 1);
  CHECK(r1.s_tilde == 20);
  CHECK(r1.d == 26);
  CHECK(numsg::nu_table(s1).s_m == 46);

  const Semigroup s2 = numsg::suzuki(2);
  for (std::int64_t g : {32, 36, 40, 41}) CHECK(s2.contains(g));
  const auto r2 = numsg::invariants(s2);
  CHECK(r2.symmetric);
  CHECK(r2.tau == 1);
  CHECK(numsg::nu_table(s2).s_m == r2.s_tilde + r2.d);
}

TEST_CASE("symmetric_via_apery") {
  CHECK(numsg::symmetric_via_apery(Semigroup::from_generators({8, 10, 12, 13})));
  CHECK(!numsg::symmetric_via_apery(Semigroup::from_generators({3, 5, 7})));
  CHECK(numsg::symmetric_via_apery(Semigroup::from_generators({2, 3})));

  for (const Semigroup& s : numsg::enumerate_collect(8)) {
    if (s.is_naturals()) continue;
    CHECK(numsg::symmetric_via_apery(s) == numsg::classify(s).symmetric);
  }
}

TEST_CASE("Prop 4.12 bound on randomized AAS instances") {
  const auto instances = testutil::random_aas_instances(200, 20260809u);
  CHECK(instances.size() == 200);
  for (const auto& [s, mu] : instances) {
    const auto rec = numsg::invariants(s);
    CAPTURE(s.gaps());
    CHECK(rec.tau <= 2 * (mu - 2));
  }
}
