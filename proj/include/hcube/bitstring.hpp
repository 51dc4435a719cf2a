#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hcube {

/// Fixed-length string of bits, packed into 64-bit words.
///
/// Position 0 is stored in the most significant bit of the first word and
/// unused trailing bits are kept zero, so comparing the word vectors compares
/// the strings lexicographically (reading position 0 first, 0 < 1).
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  /// Parses a string of '0'/'1' characters. Throws PreconditionError on any
  /// other character.
  static BitString from_string(std::string_view text);

  /// The `size`-bit string whose binary value is `value`, most significant
  /// digit at position 0. Requires size <= 64.
  static BitString from_uint(std::uint64_t value, std::size_t size);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (63 - (i & 63))) & 1u; }
  bool operator[](std::size_t i) const noexcept { return test(i); }

  void set(std::size_t i, bool value = true) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (63 - (i & 63));
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (63 - (i & 63)); }

  /// Number of ones.
  std::size_t count() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  BitString complemented() const;

  /// Binary value with position 0 as the most significant digit. Requires
  /// size <= 64.
  std::uint64_t to_uint() const;

  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const BitString&, const BitString&) = default;
  friend std::strong_ordering operator<=>(const BitString&, const BitString&) = default;

 private:
  void clear_tail() noexcept;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitStringHash {
  std::size_t operator()(const BitString& b) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ b.size();
    for (auto w : b.words()) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace hcube
