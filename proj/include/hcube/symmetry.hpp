#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>

#include "hcube/bitmatrix.hpp"

namespace hcube {

struct SearchOptions {
  /// Maximum number of row assignments tried before BudgetExceeded.
  std::uint64_t node_budget = 100'000'000;
};

/// True iff X_sigma == X^phi.
bool is_symmetry(const BinaryMatrix& x, const Symmetry& s);

/// Some nontrivial symmetry of X, or nullopt when X is asymmetric.
///
/// Duplicate rows and isomorphic column pairs are reported directly. Otherwise
/// the shorter side is searched in lexicographic order. When n < m that is the
/// permaut, as the sequence (pi(0), flip 0), (pi(1), flip 1), ..., pruned by
/// comparing row multisets on the columns placed so far. Otherwise it is the
/// row permutation; each partial assignment narrows, per column, the set of
/// (target column, flip) pairs it can map to, and the search resolves as soon
/// as the permaut is forced. The first nontrivial symmetry in that order is
/// returned, and it is re-verified before returning. Requires at least one row
/// and one column.
std::optional<Symmetry> find_symmetry(const BinaryMatrix& x, const SearchOptions& options = {});

bool is_asymmetric(const BinaryMatrix& x, const SearchOptions& options = {});

struct OracleOptions {
  /// Upper bound on m! * n! * 2^n; the default admits every matrix with m, n <= 5.
  std::uint64_t max_pairs = 120ull * 120ull * 32ull;
};

/// Brute force over every sigma in S_m and every permaut. Independent of
/// find_symmetry; intended for cross-checking small matrices.
std::optional<Symmetry> naive_symmetry_oracle(const BinaryMatrix& x, const OracleOptions& options = {});

struct ExhaustiveOptions {
  /// Largest m * n accepted.
  std::size_t max_bits = 24;
  SearchOptions search;
  /// When set, receives "checked K of 2^{mn}" lines.
  std::ostream* progress = nullptr;
  std::uint64_t progress_every = std::uint64_t{1} << 22;
};

/// True iff no m x n binary matrix is asymmetric. Matrices are enumerated as
/// integers 0 .. 2^{mn}-1 (row 0 in the high bits); only those with strictly
/// increasing rows are passed to the checker, since every other matrix either
/// has equal rows or is a row permutation of one that is checked.
bool exhaustive_nonexistence(std::size_t m, std::size_t n, const ExhaustiveOptions& options = {});

}  // namespace hcube
