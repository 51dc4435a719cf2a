#include "hcube/bitmatrix.hpp"

#include <algorithm>
#include <unordered_set>

#include "hcube/errors.hpp"

namespace hcube {

using Kind = PreconditionError::Kind;

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows, BitString(cols)) {}

BinaryMatrix BinaryMatrix::from_rows(std::vector<BitString> rows, std::size_t cols) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw PreconditionError(Kind::kDimensionMismatch, "row " + std::to_string(i) + " has length " +
                                                            std::to_string(rows[i].size()) + ", expected " +
                                                            std::to_string(cols));
  }
  BinaryMatrix out;
  out.rows_ = rows.size();
  out.cols_ = cols;
  out.data_ = std::move(rows);
  return out;
}

BinaryMatrix BinaryMatrix::from_rows(std::vector<BitString> rows) {
  if (rows.empty()) throw PreconditionError(Kind::kDimensionMismatch, "matrix needs at least one row");
  const std::size_t cols = rows.front().size();
  return from_rows(std::move(rows), cols);
}

BinaryMatrix BinaryMatrix::from_columns(std::span<const BitString> columns, std::size_t rows) {
  BinaryMatrix out(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows)
      throw PreconditionError(Kind::kDimensionMismatch, "column " + std::to_string(j) + " has length " +
                                                            std::to_string(columns[j].size()) + ", expected " +
                                                            std::to_string(rows));
    for (std::size_t i = 0; i < rows; ++i)
      if (columns[j].test(i)) out.set(i, j);
  }
  return out;
}

BinaryMatrix BinaryMatrix::from_strings(std::span<const std::string> rows) {
  std::vector<BitString> parsed;
  parsed.reserve(rows.size());
  for (const auto& r : rows) parsed.push_back(BitString::from_string(r));
  return from_rows(std::move(parsed));
}

BinaryMatrix BinaryMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitString> parsed;
  parsed.reserve(rows.size());
  for (auto r : rows) parsed.push_back(BitString::from_string(r));
  return from_rows(std::move(parsed));
}

BitString BinaryMatrix::column(std::size_t j) const {
  BitString c(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    if (data_[i].test(j)) c.set(i);
  return c;
}

std::vector<BitString> BinaryMatrix::column_list() const {
  std::vector<BitString> out(cols_, BitString(rows_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (data_[i].test(j)) out[j].set(i);
  return out;
}

std::size_t BinaryMatrix::column_weight(std::size_t j) const noexcept {
  std::size_t w = 0;
  for (const auto& r : data_) w += r.test(j);
  return w;
}

std::vector<std::size_t> BinaryMatrix::row_weights() const {
  std::vector<std::size_t> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = data_[i].count();
  return out;
}

std::vector<std::size_t> BinaryMatrix::column_weights() const {
  std::vector<std::size_t> out(cols_, 0);
  for (const auto& r : data_)
    for (std::size_t j = 0; j < cols_; ++j) out[j] += r.test(j);
  return out;
}

bool BinaryMatrix::is_low_weight() const {
  const auto w = column_weights();
  return std::all_of(w.begin(), w.end(), [&](std::size_t x) { return x <= rows_ / 2; });
}

bool BinaryMatrix::is_strictly_low_weight() const {
  const auto w = column_weights();
  return std::all_of(w.begin(), w.end(), [&](std::size_t x) { return 2 * x < rows_; });
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<std::size_t> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || seen[v])
      throw PreconditionError(Kind::kInvalidPermutation, "not a permutation of [0, " + std::to_string(image_.size()) + ")");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t size) {
  Permutation p;
  p.image_.resize(size);
  for (std::size_t i = 0; i < size; ++i) p.image_[i] = i;
  return p;
}

Permutation Permutation::transposition(std::size_t size, std::size_t a, std::size_t b) {
  Permutation p = identity(size);
  std::swap(p.image_[a], p.image_[b]);
  return p;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image_.resize(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) p.image_[image_[i]] = i;
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) throw PreconditionError(Kind::kDimensionMismatch, "composing permutations of different sizes");
  std::vector<std::size_t> image(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) image[i] = outer(inner(i));
  return Permutation(std::move(image));
}

Permaut Permaut::flipping(std::vector<bool> flips) {
  const std::size_t n = flips.size();
  return {Permutation::identity(n), std::move(flips)};
}

bool Permaut::is_identity() const noexcept {
  return pi.is_identity() && std::none_of(flips.begin(), flips.end(), [](bool f) { return f; });
}

Permaut Permaut::inverse() const {
  // X^phi moves column j to pi(j) flipped by flips[j]; undoing it moves pi(j)
  // back to j with the same flip.
  Permaut inv{pi.inverse(), std::vector<bool>(size(), false)};
  for (std::size_t j = 0; j < size(); ++j) inv.flips[pi(j)] = flips[j];
  return inv;
}

Permaut compose(const Permaut& outer, const Permaut& inner) {
  if (outer.size() != inner.size()) throw PreconditionError(Kind::kDimensionMismatch, "composing permauts of different sizes");
  Permaut out{compose(outer.pi, inner.pi), std::vector<bool>(inner.size(), false)};
  for (std::size_t j = 0; j < inner.size(); ++j) out.flips[j] = inner.flips[j] != outer.flips[inner.pi(j)];
  return out;
}

// ---------------------------------------------------------------------------

BinaryMatrix apply_row_permutation(const BinaryMatrix& x, const Permutation& sigma) {
  if (sigma.size() != x.rows())
    throw PreconditionError(Kind::kDimensionMismatch, "row permutation of size " + std::to_string(sigma.size()) +
                                                          " applied to " + std::to_string(x.rows()) + " rows");
  std::vector<BitString> rows(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) rows[sigma(i)] = x.row(i);
  return BinaryMatrix::from_rows(std::move(rows), x.cols());
}

BinaryMatrix apply_permaut(const BinaryMatrix& x, const Permaut& phi) {
  if (phi.size() != x.cols() || phi.flips.size() != x.cols())
    throw PreconditionError(Kind::kDimensionMismatch, "permaut of size " + std::to_string(phi.size()) + " applied to " +
                                                          std::to_string(x.cols()) + " columns");
  BinaryMatrix out(x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j) != phi.flips[j]) out.set(i, phi.pi(j));
  return out;
}

BinaryMatrix transpose(const BinaryMatrix& x) {
  BinaryMatrix out(x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j)) out.set(j, i);
  return out;
}

std::pair<BinaryMatrix, std::vector<bool>> normalize_low_weight(const BinaryMatrix& x) {
  const auto weights = x.column_weights();
  std::vector<bool> flips(x.cols(), false);
  for (std::size_t j = 0; j < x.cols(); ++j) flips[j] = weights[j] > x.rows() / 2;
  BinaryMatrix out = apply_permaut(x, Permaut::flipping(flips));
  return {std::move(out), std::move(flips)};
}

bool columns_isomorphic(const BitString& a, const BitString& b) {
  return a == b || a == b.complemented();
}

BinaryMatrix hconcat(const BinaryMatrix& x, const BinaryMatrix& y) {
  if (x.rows() != y.rows())
    throw PreconditionError(Kind::kRowCountMismatch, "row counts differ: " + std::to_string(x.rows()) + " vs " +
                                                         std::to_string(y.rows()));
  BinaryMatrix out(x.rows(), x.cols() + y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (std::size_t j = 0; j < x.cols(); ++j)
      if (x(i, j)) out.set(i, j);
    for (std::size_t j = 0; j < y.cols(); ++j)
      if (y(i, j)) out.set(i, x.cols() + j);
  }
  return out;
}

BinaryMatrix vconcat(const BinaryMatrix& x, const BinaryMatrix& z) {
  if (x.cols() != z.cols())
    throw PreconditionError(Kind::kColCountMismatch, "column counts differ: " + std::to_string(x.cols()) + " vs " +
                                                         std::to_string(z.cols()));
  std::vector<BitString> rows = x.row_list();
  rows.insert(rows.end(), z.row_list().begin(), z.row_list().end());
  return BinaryMatrix::from_rows(std::move(rows), x.cols());
}

BinaryMatrix column_prefix(const BinaryMatrix& x, std::size_t cols) {
  if (cols > x.cols()) throw PreconditionError(Kind::kDimensionMismatch, "prefix wider than matrix");
  BinaryMatrix out(x.rows(), cols);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (x(i, j)) out.set(i, j);
  return out;
}

BinaryMatrix concat_columns_checked(const BinaryMatrix& x, const BinaryMatrix& y) {
  if (x.rows() != y.rows())
    throw PreconditionError(Kind::kRowCountMismatch, "row counts differ: " + std::to_string(x.rows()) + " vs " +
                                                         std::to_string(y.rows()));
  const std::size_t m = x.rows();
  std::vector<bool> used(m + 1, false);
  for (auto w : x.column_weights()) used[class_weight(w, m)] = true;
  const auto y_weights = y.column_weights();
  for (std::size_t j = 0; j < y.cols(); ++j) {
    if (used[class_weight(y_weights[j], m)])
      throw PreconditionError(Kind::kWeightCollision, "column " + std::to_string(j) + " of Y has weight " +
                                                          std::to_string(y_weights[j]) + ", which collides with X");
  }
  std::unordered_set<BitString, BitStringHash> classes;
  for (const auto& c : y.column_list()) {
    const BitString rep = std::min(c, c.complemented());
    if (!classes.insert(rep).second)
      throw PreconditionError(Kind::kIsomorphicColumns, "Y contains an isomorphic column pair");
  }
  return hconcat(x, y);
}

BinaryMatrix concat_rows_checked(const BinaryMatrix& x, const BinaryMatrix& z) {
  if (x.cols() != z.cols())
    throw PreconditionError(Kind::kColCountMismatch, "column counts differ: " + std::to_string(x.cols()) + " vs " +
                                                         std::to_string(z.cols()));
  std::unordered_set<BitString, BitStringHash> seen;
  for (const auto& r : z.row_list())
    if (!seen.insert(r).second) throw PreconditionError(Kind::kDuplicateRows, "Z contains two equal rows");

  BinaryMatrix stacked = vconcat(x, z);
  const std::size_t total = stacked.rows();
  const auto weights = stacked.column_weights();
  std::vector<bool> heavy(stacked.cols(), false);
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (2 * weights[j] == total)
      throw PreconditionError(Kind::kHalfWeightColumn, "stacked column " + std::to_string(j) + " has weight exactly " +
                                                           std::to_string(total / 2));
    heavy[j] = 2 * weights[j] > total;
  }
  // Row weights are compared in the strictly-low-weight normalization of the
  // stack, where every symmetry is a pure column permutation.
  auto normalized_weight = [&](const BitString& r) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < r.size(); ++j) w += r.test(j) != heavy[j];
    return w;
  };
  std::vector<bool> used(stacked.cols() + 1, false);
  for (const auto& r : x.row_list()) used[normalized_weight(r)] = true;
  for (std::size_t i = 0; i < z.rows(); ++i) {
    const std::size_t w = normalized_weight(z.row(i));
    if (used[w])
      throw PreconditionError(Kind::kRowWeightCollision, "row " + std::to_string(i) + " of Z has weight " +
                                                             std::to_string(w) + ", which collides with X");
  }
  return stacked;
}

}  // namespace hcube
