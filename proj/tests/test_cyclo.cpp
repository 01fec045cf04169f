#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "qvariety/cyclo.hpp"

using namespace qvariety;

TEST_CASE("univariate orbits, frozen examples", "[cyclo]") {
  REQUIRE(flat_elements(set_containing(80, 9, 1)) == std::vector<long>{1, 9});
  REQUIRE(flat_elements(set_containing(93, 4, 1)) ==
          std::vector<long>{1, 4, 16, 64, 70});
  REQUIRE(flat_elements(set_containing(91, 16, 3)) == std::vector<long>{3, 40, 48});
  REQUIRE(flat_elements(set_containing(91, 16, 4)) == std::vector<long>{4, 23, 64});
  REQUIRE(flat_elements(set_containing(91, 16, 5)) == std::vector<long>{5, 6, 80});
  // 13 * 25 = 325 = 3 * 104 + 13: a fixed point.
  REQUIRE(flat_elements(set_containing(104, 25, 13)) == std::vector<long>{13});
}

TEST_CASE("orbits partition the residues", "[cyclo]") {
  auto sets = minimal_sets(80, 9);
  std::set<long> seen;
  for (const auto& s : sets) {
    std::vector<long> els = flat_elements(s);
    REQUIRE(s.rep()[0] == els.front());
    for (long v : els) {
      REQUIRE(v >= 0);
      REQUIRE(v < 80);
      REQUIRE(seen.insert(v).second);  // no overlap between orbits
    }
    // closure under multiplication by the base
    for (long v : els)
      REQUIRE(std::count(els.begin(), els.end(), v * 9 % 80) == 1);
  }
  REQUIRE(seen.size() == 80);
}

TEST_CASE("ordered representatives", "[cyclo]") {
  REQUIRE(ordered_representatives(15, 4) ==
          std::vector<long>{0, 1, 2, 3, 5, 6, 7, 10, 11});
  REQUIRE(ordered_representatives(15, 2) == std::vector<long>{0, 1, 3, 5, 7});
}

TEST_CASE("companions, including negative multipliers", "[cyclo]") {
  auto coords93 = one_coord(93);
  auto s1 = set_containing(93, 4, 1);
  REQUIRE(companion(coords93, 4, s1, -1).rep()[0] == 23);

  auto coords91 = one_coord(91);
  const long expected[] = {27, 45, 22, 17, 44};
  const long reps[] = {1, 2, 3, 4, 5};
  for (int i = 0; i < 5; ++i) {
    auto s = set_containing(91, 16, reps[i]);
    REQUIRE(companion(coords91, 16, s, -4).rep()[0] == expected[i]);
  }

  auto coords15 = one_coord(15);
  auto s = set_containing(15, 4, 1);
  REQUIRE(flat_elements(companion(coords15, 4, s, 2)) == std::vector<long>{2, 8});
}

TEST_CASE("extended convention", "[cyclo]") {
  // 0 is its own orbit, and the exponent M is reached instead of 0.
  REQUIRE(flat_elements(set_containing(7, 2, 0, true)) == std::vector<long>{0});
  REQUIRE(flat_elements(set_containing(7, 2, 7, true)) == std::vector<long>{7});
  REQUIRE(flat_elements(set_containing(7, 2, 1, true)) == std::vector<long>{1, 2, 4});
  // Without the extension the same value is out of range.
  REQUIRE_THROWS_AS(set_containing(7, 2, 7, false), std::invalid_argument);

  auto sets = minimal_sets(7, 2, true);
  std::size_t total = 0;
  for (const auto& s : sets) total += s.cardinality();
  REQUIRE(total == 8);  // residues 0..6 plus the exponent 7
}

TEST_CASE("multivariate orbits", "[cyclo]") {
  std::vector<coord_spec> coords{{3, false}, {5, false}};
  auto s = set_containing(coords, 2, {1, 1});
  REQUIRE(s.cardinality() == 4);
  REQUIRE(s.elements == std::vector<std::vector<long>>{{1, 1}, {1, 4}, {2, 2}, {2, 3}});

  auto sets = minimal_sets(coords, 2);
  std::size_t total = 0;
  for (const auto& q : sets) total += q.cardinality();
  REQUIRE(total == 15);
  // representatives come out in lex order
  for (std::size_t i = 1; i < sets.size(); ++i)
    REQUIRE(sets[i - 1].rep() < sets[i].rep());
}

TEST_CASE("argument validation", "[cyclo]") {
  REQUIRE_THROWS_AS(minimal_sets(8, 2), std::invalid_argument);  // base not invertible
  REQUIRE_THROWS_AS(set_containing(15, 4, 15), std::invalid_argument);
  REQUIRE_THROWS_AS(set_containing(15, 4, -1), std::invalid_argument);
  REQUIRE_THROWS_AS(set_containing(15, 0, 1), std::invalid_argument);
  std::vector<coord_spec> coords{{3, false}, {5, false}};
  REQUIRE_THROWS_AS(set_containing(coords, 2, {1}), std::invalid_argument);
}
