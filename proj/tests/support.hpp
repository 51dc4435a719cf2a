#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hcube/bitmatrix.hpp"

namespace hcube::testing {

inline BinaryMatrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  BinaryMatrix x(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rng() & 1u) x.set(i, j);
  return x;
}

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t size) {
  std::vector<std::size_t> image(size);
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

inline Permaut random_permaut(std::mt19937_64& rng, std::size_t size) {
  std::vector<bool> flips(size);
  for (std::size_t j = 0; j < size; ++j) flips[j] = rng() & 1u;
  return {random_permutation(rng, size), std::move(flips)};
}

// The bits of `code`, most significant first, fill the matrix row by row.
inline BinaryMatrix matrix_from_code(std::uint64_t code, std::size_t m, std::size_t n) {
  BinaryMatrix x(m, n);
  for (std::size_t b = 0; b < m * n; ++b)
    if ((code >> (m * n - 1 - b)) & 1u) x.set(b / n, b % n);
  return x;
}

}  // namespace hcube::testing
