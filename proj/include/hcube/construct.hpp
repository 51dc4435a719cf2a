#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hcube/bitmatrix.hpp"
#include "hcube/cost.hpp"
#include "hcube/symmetry.hpp"

namespace hcube {

enum class CaseTag {
  kSmallTable,
  kColumnPad,
  kHalfWidthPad,
  kStaircasePad,
  kComplement,
  kRowDirection,
  kTransposeTrick,
};

std::string to_string(CaseTag tag);

/// How a witness was obtained. Every entry of `audit` names a precondition
/// that was actually checked while building it.
struct ConstructionPlan {
  CaseTag case_tag = CaseTag::kSmallTable;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t r = 0;  // floor(rows / 2)
  std::size_t s = 0;  // floor(cols / 2)
  std::size_t base_rows = 0;
  std::size_t base_cols = 0;
  /// "checked" (find_symmetry ran on this matrix), "inherited" (complement of
  /// a verified source) or "lemma" (concatenation lemmas only).
  std::string verification = "lemma";
  std::vector<std::string> audit;
  std::vector<ConstructionPlan> sources;

  /// {"case": ..., "dims": [m, n], "r": .., "s": .., "base": [m0, n0], ...}
  std::string to_json(int indent = -1) const;
};

struct Witness {
  BinaryMatrix matrix;
  ConstructionPlan plan;
};

/// m x cols matrix, cols in {m, m-1}: column 0 is e_0, column j >= 1 has ones
/// at rows j-1 and j. Asymmetric for m >= 5.
BinaryMatrix staircase(std::size_t m, std::size_t cols);

/// r x r matrix whose row i has zeros at columns i, i+1, i+2 (mod r) and ones
/// elsewhere.
BinaryMatrix band_matrix(std::size_t r);

/// Asymmetric m x floor(m/2) matrix for m >= 12: the r x r staircase stacked on
/// the band matrix, plus a zero row when m is odd.
BinaryMatrix half_width(std::size_t m);

/// Asymmetric floor(n/2) x n matrix for n >= 12: the s x s staircase next to
/// the transposed (padded) band matrix. For s = 6 the band matrix has
/// complementary rows, so those two widths pad the staircase with unused-weight
/// columns instead.
BinaryMatrix half_height(std::size_t n);

/// Fixed small asymmetric matrices: (5, n) for n in [4, 8], (m, 4) for m in
/// [5, 11], and (12, 5). DomainError (kNotInTable) otherwise.
BinaryMatrix small_table(std::size_t m, std::size_t n);

/// Number of columns pad_with_unused_weight_columns can add to X.
std::uint64_t unused_weight_column_count(const BinaryMatrix& x);

/// X followed by the first j columns, in order of increasing weight and then
/// increasing lexicographic value, whose class weight does not occur in X. For
/// weight m/2 only class representatives (leading 0) are used. DomainError
/// (kInsufficientColumns) when fewer than j exist.
BinaryMatrix pad_with_unused_weight_columns(const BinaryMatrix& x, std::size_t j);

enum class Verify { kAuto, kAlways, kNever };

struct WitnessOptions {
  /// kAuto re-checks every non-complement witness with m <= 12 and n <= 4096
  /// and every row-direction base with at most 4096 rows.
  Verify verify = Verify::kAuto;
  SearchOptions search;
  /// Largest m * n (in bits) that may be materialized.
  std::uint64_t memory_guard_bits = std::uint64_t{1} << 28;
  /// Largest m for which a column complement may be formed.
  std::size_t complement_guard = 30;
  /// Combinations tried by the row-direction padding search.
  std::uint64_t row_search_budget = 1'000'000;
  CostTable* costs = nullptr;  // default_cost_table() when null
};

/// An asymmetric m x n matrix, for m >= 5, n >= 4 and
/// nu_m <= n <= 2^{m-1} - nu_m. DomainError (kInfeasible) outside that range,
/// BudgetExceeded past the memory guard.
Witness asymmetric_witness(std::size_t m, std::size_t n, const WitnessOptions& options = {});

}  // namespace hcube
