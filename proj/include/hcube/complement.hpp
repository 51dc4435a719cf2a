#pragma once

#include <cstddef>

#include "hcube/bitmatrix.hpp"

namespace hcube {

/// The lexicographically smaller of c and its complement. Always starts with 0.
BitString canonical_representative(const BitString& c);

struct ComplementOptions {
  /// Largest m (column complement) or n (row complement) accepted; the output
  /// has up to 2^{m-1} columns or 2^n rows.
  std::size_t width_guard = 30;
};

/// m x (2^{m-1} - n) matrix whose columns are the canonical representatives of
/// every column class absent from X, in increasing order. Throws
/// PreconditionError (kIsomorphicColumns) when X has an isomorphic column pair
/// and BudgetExceeded when m exceeds the guard.
BinaryMatrix column_complement(const BinaryMatrix& x, const ComplementOptions& options = {});

/// (2^n - m) x n matrix of every n-bit string that is not a row of X, in
/// increasing order. Throws PreconditionError (kDuplicateRows) when X has two
/// equal rows and BudgetExceeded when n exceeds the guard.
BinaryMatrix row_complement(const BinaryMatrix& x, const ComplementOptions& options = {});

}  // namespace hcube
