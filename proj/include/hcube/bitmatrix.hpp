#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hcube/bitstring.hpp"

namespace hcube {

/// m x n matrix over {0,1}, stored as packed rows. Row i of the
/// characteristic matrix of an ordered vertex set is the i-th vertex.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  /// All-zero matrix.
  BinaryMatrix(std::size_t rows, std::size_t cols);

  /// Rows must all have length `cols`.
  static BinaryMatrix from_rows(std::vector<BitString> rows, std::size_t cols);
  /// Non-empty list of equal-length rows.
  static BinaryMatrix from_rows(std::vector<BitString> rows);
  /// Columns must all have length `rows`.
  static BinaryMatrix from_columns(std::span<const BitString> columns, std::size_t rows);
  /// Convenience for tests and fixed tables: each string is one row.
  static BinaryMatrix from_strings(std::span<const std::string> rows);
  static BinaryMatrix from_strings(std::initializer_list<std::string_view> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  bool operator()(std::size_t i, std::size_t j) const noexcept { return data_[i].test(j); }
  void set(std::size_t i, std::size_t j, bool value = true) noexcept { data_[i].set(j, value); }

  const BitString& row(std::size_t i) const noexcept { return data_[i]; }
  const std::vector<BitString>& row_list() const noexcept { return data_; }
  BitString column(std::size_t j) const;
  std::vector<BitString> column_list() const;

  std::size_t row_weight(std::size_t i) const noexcept { return data_[i].count(); }
  std::size_t column_weight(std::size_t j) const noexcept;
  std::vector<std::size_t> row_weights() const;
  std::vector<std::size_t> column_weights() const;

  /// Every column weight <= floor(m/2).
  bool is_low_weight() const;
  /// Every column weight < m/2.
  bool is_strictly_low_weight() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitString> data_;
};

/// Bijection on {0, ..., size-1}; image()[i] is the image of i.
class Permutation {
 public:
  Permutation() = default;
  /// Throws PreconditionError unless `image` is a permutation.
  explicit Permutation(std::vector<std::size_t> image);
  static Permutation identity(std::size_t size);
  static Permutation transposition(std::size_t size, std::size_t a, std::size_t b);

  std::size_t size() const noexcept { return image_.size(); }
  std::size_t operator()(std::size_t i) const noexcept { return image_[i]; }
  const std::vector<std::size_t>& image() const noexcept { return image_; }
  bool is_identity() const noexcept;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::size_t> image_;
};

/// outer o inner: first apply `inner`, then `outer`.
Permutation compose(const Permutation& outer, const Permutation& inner);

/// Column action of a hypercube automorphism: source column j moves to
/// position pi(j) and is complemented when flips[j] is set.
struct Permaut {
  Permutation pi;
  std::vector<bool> flips;

  static Permaut identity(std::size_t size) { return {Permutation::identity(size), std::vector<bool>(size, false)}; }
  /// Pure flips, no permutation.
  static Permaut flipping(std::vector<bool> flips);

  std::size_t size() const noexcept { return pi.size(); }
  bool is_identity() const noexcept;
  Permaut inverse() const;

  friend bool operator==(const Permaut&, const Permaut&) = default;
};

/// outer o inner as permauts: X^(compose(w, f)) == (X^f)^w.
Permaut compose(const Permaut& outer, const Permaut& inner);

/// A pair (sigma, phi) with X_sigma == X^phi.
struct Symmetry {
  Permutation sigma;
  Permaut phi;

  bool is_trivial() const noexcept { return sigma.is_identity() && phi.is_identity(); }
  friend bool operator==(const Symmetry&, const Symmetry&) = default;
};

/// Row i of X becomes row sigma(i) of the result.
BinaryMatrix apply_row_permutation(const BinaryMatrix& x, const Permutation& sigma);
/// Column j of X becomes column pi(j) of the result, complemented when j is flipped.
BinaryMatrix apply_permaut(const BinaryMatrix& x, const Permaut& phi);
BinaryMatrix transpose(const BinaryMatrix& x);

/// Flips every column of weight > floor(m/2). Returns the low-weight matrix and
/// the flip set; the matrix equals X^(id, flips).
std::pair<BinaryMatrix, std::vector<bool>> normalize_low_weight(const BinaryMatrix& x);

/// Columns are isomorphic iff equal or complementary.
bool columns_isomorphic(const BitString& a, const BitString& b);

/// Isomorphism-invariant weight of a length-m column: min(w, m - w).
inline std::size_t class_weight(std::size_t weight, std::size_t m) { return weight < m - weight ? weight : m - weight; }

/// [X | Y]. Throws PreconditionError when the row counts differ, Y has an
/// isomorphic column pair, or a column class weight of Y occurs in X.
BinaryMatrix concat_columns_checked(const BinaryMatrix& x, const BinaryMatrix& y);

/// [X ; Z]. Throws PreconditionError when the column counts differ, Z has two
/// equal rows, the stack has a column of weight exactly (k+l)/2, or, after
/// flipping the heavy columns of the stack, a row weight of Z occurs in X.
BinaryMatrix concat_rows_checked(const BinaryMatrix& x, const BinaryMatrix& z);

/// Unchecked concatenations.
BinaryMatrix hconcat(const BinaryMatrix& x, const BinaryMatrix& y);
BinaryMatrix vconcat(const BinaryMatrix& x, const BinaryMatrix& z);

/// First `cols` columns of X.
BinaryMatrix column_prefix(const BinaryMatrix& x, std::size_t cols);

}  // namespace hcube
