#include <doctest.h>

#include "hcube/bitmatrix.hpp"
#include "hcube/errors.hpp"
#include "support.hpp"

using namespace hcube;
using hcube::testing::random_matrix;
using hcube::testing::random_permaut;
using hcube::testing::random_permutation;

TEST_SUITE("bitmatrix") {
  TEST_CASE("bit strings order lexicographically, position 0 first") {
    const auto a = BitString::from_string("0111");
    const auto b = BitString::from_string("1000");
    CHECK(a < b);
    CHECK(a.to_uint() == 7);
    CHECK(BitString::from_uint(7, 4) == a);
    CHECK(a.complemented() == b);
    CHECK(a.count() == 3);
    CHECK(a.to_string() == "0111");
    CHECK_THROWS_AS(BitString::from_string("01a"), PreconditionError);
  }

  TEST_CASE("long bit strings keep a zero tail") {
    BitString s(130);
    s.set(129);
    const BitString c = s.complemented();
    CHECK(c.count() == 129);
    CHECK(c.complemented() == s);
    CHECK(BitString::from_string(s.to_string()) == s);
  }

  TEST_CASE("lex order of from_uint matches numeric order") {
    std::mt19937_64 rng(1);
    for (int it = 0; it < 1000; ++it) {
      const std::uint64_t x = rng() >> 4, y = rng() >> 4;
      CHECK((BitString::from_uint(x, 60) < BitString::from_uint(y, 60)) == (x < y));
    }
  }

  TEST_CASE("rows, columns and weights") {
    const auto x = BinaryMatrix::from_strings({"110", "011", "001"});
    CHECK(x.rows() == 3);
    CHECK(x.cols() == 3);
    CHECK(x.column(1).to_string() == "110");
    CHECK(x.row_weights() == std::vector<std::size_t>{2, 2, 1});
    CHECK(x.column_weights() == std::vector<std::size_t>{1, 2, 2});
    CHECK(x.is_low_weight() == false);
    CHECK(BinaryMatrix::from_columns(x.column_list(), 3) == x);
    CHECK(transpose(transpose(x)) == x);
    CHECK_THROWS_AS(BinaryMatrix::from_strings({"10", "1"}), PreconditionError);
  }

  TEST_CASE("permutations reject non-bijections") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), PreconditionError);
    CHECK_THROWS_AS(Permutation({0, 3}), PreconditionError);
    const Permutation p({2, 0, 1});
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());
  }

  TEST_CASE("apply_permaut follows the source-column convention") {
    // Column 0 moves to position 2 and is flipped.
    const auto x = BinaryMatrix::from_strings({"100", "010"});
    const Permaut phi{Permutation({2, 0, 1}), {true, false, false}};
    CHECK(apply_permaut(x, phi) == BinaryMatrix::from_strings({"000", "101"}));
    const auto sigma = Permutation({1, 0});
    CHECK(apply_row_permutation(x, sigma) == BinaryMatrix::from_strings({"010", "100"}));
  }

  TEST_CASE("composition and inverses act consistently") {
    std::mt19937_64 rng(2);
    for (int it = 0; it < 300; ++it) {
      const std::size_t m = 1 + rng() % 6, n = 1 + rng() % 7;
      const auto x = random_matrix(rng, m, n);
      const auto a = random_permaut(rng, n), b = random_permaut(rng, n);
      CHECK(apply_permaut(apply_permaut(x, a), b) == apply_permaut(x, compose(b, a)));
      CHECK(apply_permaut(apply_permaut(x, a), a.inverse()) == x);
      CHECK(compose(a, a.inverse()).is_identity());
      const auto s = random_permutation(rng, m), t = random_permutation(rng, m);
      CHECK(apply_row_permutation(apply_row_permutation(x, s), t) == apply_row_permutation(x, compose(t, s)));
    }
  }

  TEST_CASE("normalize_low_weight flips exactly the heavy columns") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
      const std::size_t m = 1 + rng() % 7, n = 1 + rng() % 6;
      const auto x = random_matrix(rng, m, n);
      const auto [low, flips] = normalize_low_weight(x);
      CHECK(low.is_low_weight());
      CHECK(apply_permaut(x, Permaut::flipping(flips)) == low);
      for (std::size_t j = 0; j < n; ++j) CHECK(flips[j] == (2 * x.column_weight(j) > m));
    }
  }

  TEST_CASE("columns are isomorphic when equal or complementary") {
    const auto a = BitString::from_string("0011");
    CHECK(columns_isomorphic(a, a));
    CHECK(columns_isomorphic(a, a.complemented()));
    CHECK_FALSE(columns_isomorphic(a, BitString::from_string("0111")));
    CHECK(class_weight(3, 5) == 2);
    CHECK(class_weight(2, 4) == 2);
  }

  TEST_CASE("concat_columns_checked rejects weight collisions and isomorphic pairs") {
    const auto x = BinaryMatrix::from_strings({"10", "01", "00", "00", "00"});
    CHECK(concat_columns_checked(x, BinaryMatrix::from_strings({"1", "1", "0", "0", "0"})).cols() == 3);
    try {
      concat_columns_checked(x, BinaryMatrix::from_strings({"0", "0", "1", "0", "0"}));
      FAIL("expected a weight collision");
    } catch (const PreconditionError& e) {
      CHECK(e.kind() == PreconditionError::Kind::kWeightCollision);
    }
    // Weight 4 in 5 rows is class weight 1, the same class as X's columns.
    CHECK_THROWS_AS(concat_columns_checked(x, BinaryMatrix::from_strings({"1", "1", "1", "1", "0"})),
                    PreconditionError);
    try {
      concat_columns_checked(x, BinaryMatrix::from_strings({"10", "10", "01", "01", "01"}));
      FAIL("expected isomorphic columns");
    } catch (const PreconditionError& e) {
      CHECK(e.kind() == PreconditionError::Kind::kIsomorphicColumns);
    }
    CHECK_THROWS_AS(concat_columns_checked(x, BinaryMatrix(4, 1)), PreconditionError);
  }

  TEST_CASE("concat_rows_checked enforces distinct rows, no half-weight column, distinct row weights") {
    const auto x = BinaryMatrix::from_strings({"1100", "0110", "0011", "0001", "0000"});
    CHECK(concat_rows_checked(x, BinaryMatrix::from_strings({"1011", "1101"})).rows() == 7);
    auto kind_of = [&](std::initializer_list<std::string_view> z) {
      try {
        concat_rows_checked(x, BinaryMatrix::from_strings(z));
      } catch (const PreconditionError& e) {
        return e.kind();
      }
      return PreconditionError::Kind::kParse;  // no error
    };
    CHECK(kind_of({"1110", "1110"}) == PreconditionError::Kind::kDuplicateRows);
    CHECK(kind_of({"1000"}) == PreconditionError::Kind::kRowWeightCollision);
    // Column 1 of the stack would have weight 3 of 6.
    CHECK(kind_of({"0100"}) == PreconditionError::Kind::kHalfWeightColumn);
    CHECK_THROWS_AS(concat_rows_checked(x, BinaryMatrix(1, 3)), PreconditionError);
  }

  TEST_CASE("column_prefix and unchecked concatenation") {
    const auto x = BinaryMatrix::from_strings({"101", "011"});
    CHECK(column_prefix(x, 2) == BinaryMatrix::from_strings({"10", "01"}));
    CHECK(hconcat(column_prefix(x, 1), BinaryMatrix::from_strings({"01", "11"})) == x);
    CHECK(vconcat(BinaryMatrix::from_strings({"101"}), BinaryMatrix::from_strings({"011"})) == x);
  }
}
