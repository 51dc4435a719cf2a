#include <doctest.h>

#include <set>

#include "hcube/complement.hpp"
#include "hcube/construct.hpp"
#include "hcube/errors.hpp"
#include "hcube/symmetry.hpp"
#include "support.hpp"

using namespace hcube;
using hcube::testing::random_matrix;

namespace {

std::set<BitString> classes_of(const BinaryMatrix& x) {
  std::set<BitString> out;
  for (const auto& c : x.column_list()) out.insert(canonical_representative(c));
  return out;
}

}  // namespace

TEST_SUITE("complement") {
  TEST_CASE("canonical representative is the lexicographically smaller string") {
    CHECK(canonical_representative(BitString::from_string("11000")).to_string() == "00111");
    CHECK(canonical_representative(BitString::from_string("00111")).to_string() == "00111");
    CHECK(canonical_representative(BitString::from_string("0101")).to_string() == "0101");
    std::mt19937_64 rng(21);
    for (int it = 0; it < 500; ++it) {
      const auto c = BitString::from_uint(rng() % 1024, 10);
      const auto r = canonical_representative(c);
      CHECK(r == canonical_representative(r));
      CHECK(r == canonical_representative(c.complemented()));
      CHECK_FALSE(r.test(0));
    }
  }

  TEST_CASE("column complement of staircase 5x4") {
    const auto y = column_complement(staircase(5, 4));
    CHECK(y.rows() == 5);
    CHECK(y.cols() == 12);
    // Canonical representatives start with 0; in the low-weight normalization
    // the row weights are 3, 4 and 5.
    const auto [low, flips] = normalize_low_weight(y);
    const auto w = low.row_weights();
    CHECK(std::set<std::size_t>(w.begin(), w.end()) == std::set<std::size_t>{3, 4, 5});
    CHECK(is_asymmetric(y));
  }

  TEST_CASE("column complement covers every class exactly once") {
    std::mt19937_64 rng(22);
    for (int it = 0; it < 200; ++it) {
      const std::size_t m = 2 + rng() % 6;
      std::set<BitString> reps;
      const std::size_t want = 1 + rng() % ((std::size_t{1} << (m - 1)) - 1);
      while (reps.size() < want) reps.insert(canonical_representative(BitString::from_uint(rng() % (1u << m), m)));
      std::vector<BitString> cols(reps.begin(), reps.end());
      const auto x = BinaryMatrix::from_columns(cols, m);
      const auto y = column_complement(x);
      CHECK(y.cols() + x.cols() == (std::size_t{1} << (m - 1)));
      auto cx = classes_of(x), cy = classes_of(y);
      CHECK(cy.size() == y.cols());
      for (const auto& c : cy) CHECK(cx.count(c) == 0);
      const auto ycols = y.column_list();
      CHECK(std::is_sorted(ycols.begin(), ycols.end()));
      CHECK(classes_of(column_complement(y)) == cx);
    }
  }

  TEST_CASE("row complement lists the absent rows in order") {
    const auto x = BinaryMatrix::from_strings({"01", "10"});
    CHECK(row_complement(x) == BinaryMatrix::from_strings({"00", "11"}));
    std::mt19937_64 rng(23);
    for (int it = 0; it < 100; ++it) {
      const std::size_t n = 1 + rng() % 7;
      std::set<std::uint64_t> codes;
      const std::size_t want = 1 + rng() % ((std::size_t{1} << n) - 1);
      while (codes.size() < want) codes.insert(rng() % (1u << n));
      std::vector<BitString> rows;
      for (auto c : codes) rows.push_back(BitString::from_uint(c, n));
      const auto x = BinaryMatrix::from_rows(rows, n);
      const auto z = row_complement(x);
      CHECK(z.rows() + x.rows() == (std::size_t{1} << n));
      CHECK(std::is_sorted(z.row_list().begin(), z.row_list().end()));
      CHECK(row_complement(z) == x);
    }
  }

  TEST_CASE("complements preserve asymmetry") {
    std::mt19937_64 rng(24);
    int tested = 0;
    while (tested < 300) {
      const std::size_t s = 4 + rng() % 9;
      const auto x = random_matrix(rng, 5, s);
      try {
        const auto y = column_complement(x);
        const auto z = row_complement(x);
        const bool asym = is_asymmetric(x);
        CHECK(is_asymmetric(y) == asym);
        CHECK(is_asymmetric(z) == asym);
        ++tested;
      } catch (const PreconditionError&) {
        // repeated rows or isomorphic columns; draw again
      }
    }
  }

  TEST_CASE("precondition and guard errors") {
    try {
      column_complement(BinaryMatrix::from_strings({"10", "01"}));
      FAIL("expected isomorphic columns");
    } catch (const PreconditionError& e) {
      CHECK(e.kind() == PreconditionError::Kind::kIsomorphicColumns);
    }
    try {
      row_complement(BinaryMatrix::from_strings({"10", "10"}));
      FAIL("expected duplicate rows");
    } catch (const PreconditionError& e) {
      CHECK(e.kind() == PreconditionError::Kind::kDuplicateRows);
    }
    CHECK_THROWS_AS(column_complement(BinaryMatrix(31, 1)), BudgetExceeded);
    CHECK_THROWS_AS(row_complement(BinaryMatrix(1, 31)), BudgetExceeded);
    CHECK_THROWS_AS(column_complement(BinaryMatrix(8, 2), ComplementOptions{7}), BudgetExceeded);
  }
}
