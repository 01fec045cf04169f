#include <catch2/catch_amalgamated.hpp>

#include "qvariety/galois.hpp"
#include "qvariety/matrix.hpp"

using namespace qvariety;

namespace {

gf_matrix make(const field& F, std::vector<std::vector<gf_elem>> rows) {
  gf_matrix m(F, rows.empty() ? 0 : rows[0].size());
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

}  // namespace

TEST_CASE("row reduction and rank", "[matrix]") {
  const field& F2 = field::get(2, 1);
  gf_matrix m = make(F2, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  REQUIRE(rank_of(m) == 2);

  const field& F9 = field::get(3, 2);
  gf_matrix id = make(F9, {{1, 0}, {0, 1}});
  REQUIRE(rank_of(id) == 2);
  REQUIRE(F9.mul(4, 4) == 6);
  REQUIRE(F9.mul(4, 8) == 3);
  gf_matrix scaled = make(F9, {{4, 8}, {6, 3}});  // second row = gen * first
  REQUIRE(rank_of(scaled) == 1);
}

TEST_CASE("kernel is the right null space", "[matrix]") {
  const field& F2 = field::get(2, 1);
  gf_matrix m = make(F2, {{1, 1, 0}, {0, 1, 1}});
  gf_matrix ker = kernel(m);
  REQUIRE(ker.nrows() == 1);
  REQUIRE(ker.rows[0] == std::vector<gf_elem>{1, 1, 1});

  const field& F9 = field::get(3, 2);
  gf_matrix a = make(F9, {{1, 2, 3, 4, 5}, {0, 1, 0, 2, 0}, {1, 0, 3, 2, 5}});
  std::size_t r = rank_of(a);
  gf_matrix k = kernel(a);
  REQUIRE(r + k.nrows() == 5);
  REQUIRE(is_zero(gram(a, k)));
}

TEST_CASE("inner products and conjugation", "[matrix]") {
  const field& F4 = field::get(2, 2);
  std::vector<gf_elem> u{2, 3}, v{2, 1};
  REQUIRE(inner_product(F4, u, v) == F4.add(F4.mul(2, 2), F4.mul(3, 1)));
  // Hermitian form on GF(4): conjugation is squaring.
  REQUIRE(inner_product(F4, {2}, {2}, 2) == F4.mul(2, 3));
  REQUIRE_THROWS_AS(inner_product(F4, {1, 2}, {1}), std::invalid_argument);
}

TEST_CASE("gram, stacking, zero test", "[matrix]") {
  const field& F4 = field::get(2, 2);
  gf_matrix a = make(F4, {{1, 1, 0}});
  gf_matrix b = make(F4, {{1, 1, 1}, {0, 0, 2}});
  gf_matrix g = gram(a, b);
  REQUIRE(g.nrows() == 1);
  REQUIRE(g.ncols == 2);
  REQUIRE(g.rows[0][0] == 0);
  REQUIRE(g.rows[0][1] == 0);
  REQUIRE(is_zero(g));

  gf_matrix s = stacked(a, b);
  REQUIRE(s.nrows() == 3);
  // the difference of the first two rows is a multiple of the third
  REQUIRE(rank_of(s) == 2);

  gf_matrix other(field::get(3, 1), 3);
  REQUIRE_THROWS_AS(stacked(a, other), std::invalid_argument);
  REQUIRE_THROWS_AS(a.append_row({1}), std::invalid_argument);
}
