#include <catch2/catch_amalgamated.hpp>

#include "qvariety/affine.hpp"
#include "qvariety/cyclo.hpp"
#include "qvariety/quantum.hpp"

using namespace qvariety;

TEST_CASE("variety spec shapes", "[affine]") {
  variety_spec spec(field::get(2, 4), {16, 4}, {true, false});
  REQUIRE(spec.m() == 2);
  REQUIRE(spec.epsilon(0) == 1);
  REQUIRE(spec.epsilon(1) == 0);
  REQUIRE(spec.box_limit(0) == 14);
  REQUIRE(spec.box_limit(1) == 3);
  REQUIRE(spec.n() == 15 * 4);

  auto coords = spec.coords();
  REQUIRE(coords[0].modulus == 15);
  REQUIRE_FALSE(coords[0].extended);
  REQUIRE(coords[1].modulus == 3);
  REQUIRE(coords[1].extended);

  REQUIRE(spec.exponent_in_box({14, 3}));
  REQUIRE_FALSE(spec.exponent_in_box({15, 0}));
  REQUIRE_FALSE(spec.exponent_in_box({0}));

  REQUIRE_THROWS_AS(variety_spec(field::get(2, 4), {7}, {true}),
                    std::invalid_argument);  // 6 does not divide 15
  REQUIRE_THROWS_AS(variety_spec(field::get(2, 4), {16}, {true, false}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(variety_spec(field::get(2, 4), {}, {}), std::invalid_argument);
}

TEST_CASE("full box enumeration", "[affine]") {
  variety_spec spec(field::get(2, 4), {4, 4}, {true, false});
  auto box = full_box(spec);
  REQUIRE(box.size() == 3 * 4);
  REQUIRE(box.front() == exponent_tuple{0, 0});
  REQUIRE(box.back() == exponent_tuple{2, 3});
  REQUIRE(std::is_sorted(box.begin(), box.end()));
}

TEST_CASE("points and monomial evaluation", "[affine]") {
  variety_spec spec(field::get(2, 2), {4}, {false});
  auto pts = point_set(spec);
  REQUIRE(pts.size() == 4);
  REQUIRE(pts[0] == std::vector<gf_elem>{1});
  REQUIRE(pts[1] == std::vector<gf_elem>{2});
  REQUIRE(pts[2] == std::vector<gf_elem>{3});
  REQUIRE(pts[3] == std::vector<gf_elem>{0});  // zero comes last

  // 0^0 = 1, and x^3 is the indicator of a nonzero point.
  REQUIRE(evaluate_monomial(spec, {0}) == std::vector<gf_elem>{1, 1, 1, 1});
  REQUIRE(evaluate_monomial(spec, {3}) == std::vector<gf_elem>{1, 1, 1, 0});
  REQUIRE_THROWS_AS(evaluate_monomial(spec, {4}), std::invalid_argument);
}

TEST_CASE("code construction", "[affine]") {
  variety_spec spec(field::get(2, 3), {8}, {true});
  classical_code code = build_code(spec, {{1}, {1}, {2}});
  REQUIRE(code.n() == 7);
  REQUIRE(code.dim() == 2);  // duplicates are dropped
  REQUIRE(&code.F() == &field::get(2, 3));

  REQUIRE_THROWS_AS(build_code(spec, {}), std::invalid_argument);
  REQUIRE_THROWS_AS(build_code(spec, {{7}}), std::invalid_argument);
}

TEST_CASE("subfield embedding is a field homomorphism", "[affine]") {
  subfield_embedding emb(field::get(2, 4), 2);
  const field& B = *emb.big;
  const field& S = *emb.small;
  for (gf_elem a = 0; a < S.q(); ++a) {
    REQUIRE(emb.to_small[emb.to_big[a]] == a);
    for (gf_elem b = 0; b < S.q(); ++b) {
      REQUIRE(emb.to_big[S.add(a, b)] == B.add(emb.to_big[a], emb.to_big[b]));
      REQUIRE(emb.to_big[S.mul(a, b)] == B.mul(emb.to_big[a], emb.to_big[b]));
    }
  }
  REQUIRE_THROWS_AS(subfield_embedding(field::get(2, 4), 3), std::invalid_argument);
}

TEST_CASE("subfield subcode of a closed exponent set", "[affine]") {
  // Exponents {0} and {1,2,4,8} are closed under doubling mod 15, so the
  // binary subcode keeps the full dimension 5.
  variety_spec spec(field::get(2, 4), {16}, {true});
  delta_set delta{{0}, {1}, {2}, {4}, {8}};
  classical_code big = build_code(spec, delta);
  classical_code sub = subfield_subcode(big, 1);
  REQUIRE(sub.n() == 15);
  REQUIRE(sub.dim() == 5);
  REQUIRE(sub.F().q() == 2);

  // Every subcode word, re-read over GF(16), lies in the big code.
  gf_matrix lifted(big.F(), 15);
  for (const auto& row : sub.gen.rows) {
    std::vector<gf_elem> w(row.begin(), row.end());  // 0,1 encode identically
    lifted.append_row(std::move(w));
  }
  REQUIRE(is_subcode(classical_code{std::move(lifted)}, big));

  // Without closure the dimension drops below the span's.
  classical_code open_code = build_code(spec, {{0}, {1}});
  REQUIRE(subfield_subcode(open_code, 1).dim() < 2);

  // sub_exp equal to the field exponent returns the code unchanged.
  REQUIRE(subfield_subcode(big, 4).dim() == big.dim());
}
