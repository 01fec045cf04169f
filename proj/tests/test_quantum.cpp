#include <catch2/catch_amalgamated.hpp>

#include "qvariety/ortho.hpp"
#include "qvariety/quantum.hpp"

using namespace qvariety;

TEST_CASE("stabilizer parameters from a certified code", "[quantum]") {
  variety_spec spec(field::get(2, 4), {16}, {true});
  classical_code c = build_code(spec, {{1}, {2}, {4}, {8}});

  metric e = metric::euclidean();
  stabilizer_params pe = css_params(c, 3, e, certify_self_orthogonal(c, e));
  REQUIRE(pe.n == 15);
  REQUIRE(pe.k == 7);
  REQUIRE(pe.d_lower == 3);
  REQUIRE(pe.base_q == 16);
  REQUIRE(pe.certified);

  metric h = metric::hermitian(4);
  stabilizer_params ph = css_params(c, 3, h, certify_self_orthogonal(c, h));
  REQUIRE(ph.base_q == 4);

  certification failed{false, {{0, 0}}};
  REQUIRE_THROWS_AS(css_params(c, 3, e, failed), std::invalid_argument);

  // dimension above n/2 cannot give a stabilizer code
  classical_code wide = build_code(spec, {{0}, {1}, {2}, {3}, {4}, {5}, {6}, {7}});
  REQUIRE_THROWS_AS(css_params(wide, 2, e, certification{true, {}}),
                    std::invalid_argument);
}

TEST_CASE("enlargement distance", "[quantum]") {
  REQUIRE(enlarged_distance(10, 7, 3) == 10);
  REQUIRE(enlarged_distance(5, 3, 4) == 4);
  REQUIRE(enlarged_distance(6, 4, 4) == 5);
  REQUIRE(enlarged_distance(3, 2, 7) == 3);
}

TEST_CASE("enlargement parameters", "[quantum]") {
  stabilizer_params p = enlargement_params(94, 6, 1, 3, 4);
  REQUIRE(p.n == 94);
  REQUIRE(p.k == 87);
  REQUIRE(p.d_lower == 3);
  REQUIRE(p.base_q == 4);
  REQUIRE_THROWS_AS(enlargement_params(94, 3, 3, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(enlargement_params(4, 3, 2, 2), std::invalid_argument);
}

TEST_CASE("subcode relation", "[quantum]") {
  variety_spec spec(field::get(2, 3), {8}, {true});
  classical_code small = build_code(spec, {{0}, {1}});
  classical_code large = build_code(spec, {{0}, {1}, {2}});
  REQUIRE(is_subcode(small, large));
  REQUIRE_FALSE(is_subcode(large, small));

  classical_code other(build_code(variety_spec(field::get(2, 2), {4}, {true}),
                                  {{0}}));
  REQUIRE_FALSE(is_subcode(other, large));
}
