#include <catch2/catch_amalgamated.hpp>

#include "qvariety/designer.hpp"

using namespace qvariety;

namespace {

univariate_design base_design(uni_rule rule, long p, int r, int s, long N, long t) {
  univariate_design d;
  d.rule = rule;
  d.p = p;
  d.r = r;
  d.s = s;
  d.N = N;
  d.t = t;
  return d;
}

void expect_params(const stabilizer_params& got, long n, long k, long d, long q,
                   const std::string& rule) {
  CHECK(got.n == n);
  CHECK(got.k == k);
  CHECK(got.d_lower == d);
  CHECK(got.base_q == q);
  CHECK(got.rule == rule);
  CHECK(got.certified);
}

}  // namespace

TEST_CASE("binary length-15 ladder", "[designer]") {
  univariate_result res = design_univariate(base_design(uni_rule::prop_a, 2, 4, 1, 16, 1));
  expect_params(res.params, 15, 7, 3, 2, "PropA");
  REQUIRE(res.designed_d == 3);
  REQUIRE(res.a_seq == std::vector<long>{1, 3, 5, 7});
  std::vector<long> flat;
  for (const auto& a : res.delta) flat.push_back(a[0]);
  REQUIRE(flat == std::vector<long>{1, 2, 4, 8});
  REQUIRE(res.subcode.dim() == 4);
  REQUIRE(res.subcode.F().q() == 2);
}

TEST_CASE("enlarged pair with a failing gap inequality", "[designer]") {
  univariate_design d = base_design(uni_rule::prop_a, 2, 4, 1, 16, 1);
  d.t2 = 0;
  univariate_result res = design_univariate(d);
  expect_params(res.params, 15, 11, 2, 2, "PropA+Hamada");
  REQUIRE_FALSE(res.gap_inequality_ok);
  REQUIRE(res.delta2.empty());
  REQUIRE(res.subcode2.dim() == 0);
}

TEST_CASE("doubled-base rules on length 15", "[designer]") {
  univariate_result pd = design_univariate(base_design(uni_rule::prop_d, 2, 2, 1, 16, 1));
  expect_params(pd.params, 15, 11, 2, 2, "PropD");

  univariate_result py1 = design_univariate(base_design(uni_rule::prop_y, 2, 2, 1, 16, 1));
  expect_params(py1.params, 15, 11, 2, 2, "PropY");
  univariate_result py2 = design_univariate(base_design(uni_rule::prop_y, 2, 2, 1, 16, 2));
  expect_params(py2.params, 15, 7, 3, 2, "PropY");
}

TEST_CASE("ternary length-80 rows", "[designer]") {
  univariate_result t1 = design_univariate(base_design(uni_rule::thm_z, 3, 0, 1, 81, 1));
  expect_params(t1.params, 80, 76, 2, 3, "ThmZ");

  univariate_design d = base_design(uni_rule::thm_z, 3, 0, 1, 81, 8);
  d.t2 = 7;
  univariate_result t8 = design_univariate(d);
  expect_params(t8.params, 80, 50, 10, 3, "ThmZ+Hamada");
}

TEST_CASE("full-support rules and their alias", "[designer]") {
  univariate_design d = base_design(uni_rule::thm_c, 2, 10, 2, 94, 1);
  d.full_support = true;
  d.t2 = 0;
  univariate_result res = design_univariate(d);
  expect_params(res.params, 94, 87, 3, 4, "ThmC+RemarkN+Hamada");
  REQUIRE(res.gap_inequality_ok);

  // remark_n is thm_c with the zero point and exponent included.
  univariate_design plain = base_design(uni_rule::thm_c, 2, 10, 2, 94, 1);
  plain.full_support = true;
  univariate_design alias = base_design(uni_rule::remark_n, 2, 10, 2, 94, 1);
  univariate_result a = design_univariate(plain);
  univariate_result b = design_univariate(alias);
  REQUIRE(a.params.k == b.params.k);
  REQUIRE(a.params.d_lower == b.params.d_lower);
  REQUIRE(a.params.rule == "ThmC+RemarkN");
  REQUIRE(b.params.rule == "ThmC+RemarkN");

  univariate_design e = base_design(uni_rule::thm_e, 2, 6, 2, 92, 1);
  e.full_support = true;
  expect_params(design_univariate(e).params, 92, 84, 3, 4, "ThmE+RemarkN");
}

TEST_CASE("designer argument validation", "[designer]") {
  // the zero exponent needs p | N
  univariate_design bad = base_design(uni_rule::remark_n, 2, 4, 1, 15, 1);
  REQUIRE_THROWS_AS(design_univariate(bad), std::invalid_argument);

  univariate_design fs = base_design(uni_rule::prop_a, 2, 4, 1, 16, 1);
  fs.full_support = true;
  REQUIRE_THROWS_AS(design_univariate(fs), std::invalid_argument);

  REQUIRE_THROWS_AS(design_univariate(base_design(uni_rule::prop_a, 2, 4, 1, 16, 0)),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(design_univariate(base_design(uni_rule::prop_a, 2, 4, 1, 16, 400)),
                    std::invalid_argument);
}

TEST_CASE("designs carry a trace", "[designer]") {
  univariate_result res = design_univariate(base_design(uni_rule::prop_a, 2, 4, 1, 16, 1));
  REQUIRE_FALSE(res.trace.empty());
}
