#include "hcube/complement.hpp"

#include <algorithm>
#include <unordered_set>

#include "hcube/errors.hpp"

namespace hcube {

BitString canonical_representative(const BitString& c) {
  BitString flipped = c.complemented();
  return flipped < c ? flipped : c;
}

namespace {

// Representatives of length m (m <= 63) are exactly the strings with a leading
// 0, so class r in increasing order is the m-bit string with value r.
std::uint64_t representative_code(const BitString& c) { return canonical_representative(c).to_uint(); }

}  // namespace

BinaryMatrix column_complement(const BinaryMatrix& x, const ComplementOptions& options) {
  const std::size_t m = x.rows();
  if (m == 0) throw PreconditionError(PreconditionError::Kind::kDimensionMismatch, "column complement needs m >= 1");
  if (m > options.width_guard || m > 63)
    throw BudgetExceeded("column complement of a matrix with " + std::to_string(m) + " rows exceeds the width guard of " +
                         std::to_string(options.width_guard));
  const std::uint64_t classes = std::uint64_t{1} << (m - 1);
  std::vector<bool> present(classes, false);
  for (const auto& c : x.column_list()) {
    const auto code = representative_code(c);
    if (present[code])
      throw PreconditionError(PreconditionError::Kind::kIsomorphicColumns, "input has an isomorphic column pair");
    present[code] = true;
  }
  BinaryMatrix out(m, static_cast<std::size_t>(classes - x.cols()));
  std::size_t j = 0;
  for (std::uint64_t code = 0; code < classes; ++code) {
    if (present[code]) continue;
    for (std::size_t i = 0; i < m; ++i)
      if ((code >> (m - 1 - i)) & 1u) out.set(i, j);
    ++j;
  }
  return out;
}

BinaryMatrix row_complement(const BinaryMatrix& x, const ComplementOptions& options) {
  const std::size_t n = x.cols();
  if (n > options.width_guard || n > 63)
    throw BudgetExceeded("row complement of a matrix with " + std::to_string(n) + " columns exceeds the width guard of " +
                         std::to_string(options.width_guard));
  const std::uint64_t strings = std::uint64_t{1} << n;
  std::vector<bool> present(strings, false);
  for (const auto& r : x.row_list()) {
    const auto code = r.to_uint();
    if (present[code]) throw PreconditionError(PreconditionError::Kind::kDuplicateRows, "input has two equal rows");
    present[code] = true;
  }
  std::vector<BitString> rows;
  rows.reserve(static_cast<std::size_t>(strings - x.rows()));
  for (std::uint64_t code = 0; code < strings; ++code)
    if (!present[code]) rows.push_back(BitString::from_uint(code, n));
  return BinaryMatrix::from_rows(std::move(rows), n);
}

}  // namespace hcube
