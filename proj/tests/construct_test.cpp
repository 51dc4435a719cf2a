#include <doctest.h>

#include <json.hpp>
#include <set>

#include "hcube/complement.hpp"
#include "hcube/construct.hpp"
#include "hcube/errors.hpp"
#include "hcube/symmetry.hpp"

using namespace hcube;

namespace {

DomainError::Kind domain_kind(std::size_t m, std::size_t n) {
  try {
    asymmetric_witness(m, n);
  } catch (const DomainError& e) {
    return e.kind();
  }
  FAIL("expected a DomainError for " << m << "x" << n);
  return DomainError::Kind::kOutOfRange;
}

const ConstructionPlan* find_case(const ConstructionPlan& p, CaseTag tag) {
  if (p.case_tag == tag) return &p;
  for (const auto& s : p.sources)
    if (auto* found = find_case(s, tag)) return found;
  return nullptr;
}

}  // namespace

TEST_SUITE("construct") {
  TEST_CASE("staircase 7x7 bit for bit") {
    const auto fig = BinaryMatrix::from_strings(
        {"1100000", "0110000", "0011000", "0001100", "0000110", "0000011", "0000001"});
    CHECK(staircase(7, 7) == fig);
    CHECK(staircase(7, 6) == column_prefix(fig, 6));
  }

  TEST_CASE("staircases are asymmetric from five rows on") {
    for (std::size_t m = 5; m <= 16; ++m) {
      CHECK(is_asymmetric(staircase(m, m)));
      CHECK(is_asymmetric(staircase(m, m - 1)));
    }
    CHECK_FALSE(is_asymmetric(staircase(4, 4)));
    CHECK_THROWS_AS(staircase(5, 3), PreconditionError);
  }

  TEST_CASE("band matrix for m = 14") {
    CHECK(band_matrix(7) == BinaryMatrix::from_strings({"0001111", "1000111", "1100011", "1110001", "1111000",
                                                        "0111100", "0011110"}));
    CHECK(half_width(14) == vconcat(staircase(7, 7), band_matrix(7)));
  }

  TEST_CASE("half_width is asymmetric and strictly low weight") {
    for (std::size_t m = 12; m <= 40; ++m) {
      const auto x = half_width(m);
      CHECK(x.rows() == m);
      CHECK(x.cols() == m / 2);
      CHECK(x.is_strictly_low_weight());
      CHECK(is_asymmetric(x));
    }
    CHECK_THROWS_AS(half_width(11), DomainError);
  }

  TEST_CASE("half_height is asymmetric") {
    for (std::size_t n = 12; n <= 40; ++n) {
      const auto x = half_height(n);
      CHECK(x.rows() == n / 2);
      CHECK(x.cols() == n);
      CHECK(is_asymmetric(x));
    }
    CHECK_THROWS_AS(half_height(11), DomainError);
  }

  TEST_CASE("the band layout fails for six-row half_height") {
    // Rows 0 and 3 of the 6x6 band are complementary, so the transposed band
    // has an isomorphic column pair.
    const auto z = band_matrix(6);
    CHECK(z.row(0).complemented() == z.row(3));
    CHECK_FALSE(is_asymmetric(hconcat(staircase(6, 6), transpose(z))));
    CHECK(is_asymmetric(hconcat(staircase(7, 7), transpose(band_matrix(7)))));
  }

  TEST_CASE("fixed tables") {
    CHECK(small_table(5, 4) == BinaryMatrix::from_strings({"1100", "0110", "0011", "0001", "0000"}));
    CHECK(small_table(6, 4) == BinaryMatrix::from_strings({"1100", "0110", "0011", "0001", "0010", "0000"}));
    CHECK(small_table(7, 4) ==
          BinaryMatrix::from_strings({"1100", "0110", "0011", "0001", "0010", "0100", "0000"}));
    CHECK(small_table(8, 4) ==
          BinaryMatrix::from_strings({"1100", "0100", "1000", "0001", "1010", "1110", "0111", "0000"}));
    CHECK(small_table(5, 8) ==
          BinaryMatrix::from_strings({"11000100", "01100001", "00110110", "00011001", "00001010"}));
    for (std::size_t m = 5; m <= 11; ++m) {
      const auto x = small_table(m, 4);
      CHECK(x.rows() == m);
      CHECK(is_asymmetric(x));
      if (m <= 8) CHECK_FALSE(naive_symmetry_oracle(x, OracleOptions{1ull << 40}).has_value());
    }
    for (std::size_t m = 9; m <= 11; ++m) {
      const auto w = small_table(m, 4).column_weights();
      CHECK(std::find(w.begin(), w.end(), 1u) == w.end());
    }
    for (std::size_t n = 4; n <= 8; ++n) CHECK(is_asymmetric(small_table(5, n)));
    const auto t = small_table(12, 5);
    CHECK(t.is_strictly_low_weight());
    CHECK(is_asymmetric(t));
    CHECK_THROWS_AS(small_table(12, 4), DomainError);
    CHECK_THROWS_AS(small_table(6, 5), DomainError);
  }

  TEST_CASE("padding columns come in weight order, then lexicographically") {
    const auto x = pad_with_unused_weight_columns(small_table(8, 4), 3);
    const auto cols = x.column_list();
    CHECK(cols[4].to_string() == "00000000");
    CHECK(cols[5].to_string() == "00000001");
    CHECK(cols[6].to_string() == "00000010");
    CHECK(is_asymmetric(x));

    // Staircase 6x6 uses class weights 1 and 2; weight 3 gives only the ten
    // representatives with a leading 0.
    const auto s = staircase(6, 6);
    CHECK(unused_weight_column_count(s) == 1 + 10);
    const auto padded = pad_with_unused_weight_columns(s, 11);
    for (std::size_t j = 7; j < 17; ++j) {
      CHECK(padded.column_weight(j) == 3);
      CHECK_FALSE(padded(0, j));
    }
    try {
      pad_with_unused_weight_columns(s, 12);
      FAIL("expected too few columns");
    } catch (const DomainError& e) {
      CHECK(e.kind() == DomainError::Kind::kInsufficientColumns);
    }
  }

  TEST_CASE("witness sweep for five to eight rows, both halves") {
    for (std::size_t m = 5; m <= 8; ++m) {
      for (std::size_t n = 4; n <= (std::size_t{1} << (m - 1)) - 4; ++n) {
        const auto w = asymmetric_witness(m, n);
        REQUIRE(w.matrix.rows() == m);
        REQUIRE(w.matrix.cols() == n);
        CHECK(w.plan.rows == m);
        CHECK(w.plan.cols == n);
        CHECK(is_asymmetric(w.matrix));
        if (n > (std::size_t{1} << (m - 2))) CHECK(w.plan.case_tag == CaseTag::kComplement);
      }
    }
  }

  TEST_CASE("lower-half witnesses for nine to eleven rows are re-checked") {
    for (std::size_t m = 9; m <= 11; ++m) {
      for (std::size_t n = 4; n <= (std::size_t{1} << (m - 2)); n += (n < 16 ? 1 : 37)) {
        const auto w = asymmetric_witness(m, n);
        CHECK(w.plan.verification == "checked");
      }
    }
  }

  TEST_CASE("upper-half witnesses inherit from a checked source") {
    const auto w = asymmetric_witness(9, 200);
    CHECK(w.plan.case_tag == CaseTag::kComplement);
    CHECK(w.plan.verification == "inherited");
    REQUIRE(w.plan.sources.size() == 1);
    CHECK(w.plan.sources[0].cols == 56);
    CHECK(w.plan.sources[0].verification == "checked");
    CHECK(is_asymmetric(w.matrix));
  }

  TEST_CASE("column-direction cases from twelve rows on") {
    auto w = asymmetric_witness(12, 5);
    CHECK(w.plan.case_tag == CaseTag::kTransposeTrick);
    w = asymmetric_witness(14, 7);
    CHECK(w.plan.case_tag == CaseTag::kHalfWidthPad);
    w = asymmetric_witness(14, 11);
    CHECK(w.plan.case_tag == CaseTag::kHalfWidthPad);
    CHECK(is_asymmetric(w.matrix));
    w = asymmetric_witness(14, 13);
    CHECK(w.plan.case_tag == CaseTag::kStaircasePad);
    w = asymmetric_witness(20, 100);
    CHECK(w.plan.case_tag == CaseTag::kStaircasePad);
    CHECK(is_asymmetric(w.matrix));
  }

  TEST_CASE("row-direction witnesses for narrow widths") {
    for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{
             {13, 5}, {16, 5}, {20, 5}, {24, 6}, {30, 6}, {40, 6}, {59, 6}, {60, 7}, {100, 7}, {123, 7}}) {
      const auto w = asymmetric_witness(m, n);
      CHECK(w.matrix.rows() == m);
      CHECK(w.matrix.cols() == n);
      // These come from padded narrower bases or from row complements of fixed tables.
      const bool no_search = (m == 20 && n == 5) || (m == 24 && n == 6) || (m == 59 && n == 6) || (m == 123 && n == 7);
      CHECK((find_case(w.plan, CaseTag::kRowDirection) != nullptr) == !no_search);
      const std::set<BitString> rows(w.matrix.row_list().begin(), w.matrix.row_list().end());
      CHECK(rows.size() == m);
      CHECK(is_asymmetric(w.matrix));
    }
    // Wider than the narrowest asymmetric width: a padded row-direction base.
    const auto w = asymmetric_witness(30, 9);
    CHECK(w.plan.case_tag == CaseTag::kColumnPad);
    CHECK(is_asymmetric(w.matrix));
  }

  TEST_CASE("infeasible shapes") {
    CHECK(domain_kind(4, 4) == DomainError::Kind::kInfeasible);
    CHECK(domain_kind(5, 3) == DomainError::Kind::kInfeasible);
    CHECK(domain_kind(5, 13) == DomainError::Kind::kInfeasible);
    CHECK(domain_kind(12, 4) == DomainError::Kind::kInfeasible);
    CHECK(domain_kind(64, 6) == DomainError::Kind::kInfeasible);
    CHECK_NOTHROW(asymmetric_witness(5, 12));
    CHECK_NOTHROW(asymmetric_witness(59, 6));
  }

  TEST_CASE("memory guard") {
    WitnessOptions opts;
    opts.memory_guard_bits = 100;
    CHECK_THROWS_AS(asymmetric_witness(20, 100, opts), BudgetExceeded);
    CHECK_NOTHROW(asymmetric_witness(5, 8, opts));
  }

  TEST_CASE("plans serialize and outputs are reproducible") {
    const auto a = asymmetric_witness(11, 300);
    const auto b = asymmetric_witness(11, 300);
    CHECK(a.matrix == b.matrix);
    CHECK(a.plan.to_json() == b.plan.to_json());
    const auto j = nlohmann::json::parse(a.plan.to_json());
    CHECK(j["case"] == "staircase_pad");
    CHECK(j["dims"] == nlohmann::json::array({11, 300}));
    CHECK(j["base"] == nlohmann::json::array({11, 10}));
    CHECK(j["r"] == 5);
    CHECK(j["s"] == 150);
  }

  TEST_CASE("forced verification") {
    WitnessOptions opts;
    opts.verify = Verify::kAlways;
    const auto w = asymmetric_witness(8, 100, opts);
    CHECK(w.plan.case_tag == CaseTag::kComplement);
    CHECK(w.plan.verification == "checked");
    opts.verify = Verify::kNever;
    CHECK(asymmetric_witness(8, 20, opts).plan.verification == "lemma");
  }
}
