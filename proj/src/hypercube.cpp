#include "hcube/hypercube.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "hcube/errors.hpp"

namespace hcube {

using Kind = PreconditionError::Kind;

LabelClass::LabelClass(std::size_t n, std::vector<BitString> vertices) : n_(n), vertices_(std::move(vertices)) {
  std::unordered_set<BitString, BitStringHash> seen;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].size() != n_)
      throw PreconditionError(Kind::kDimensionMismatch, "vertex " + std::to_string(i) + " has length " +
                                                            std::to_string(vertices_[i].size()) + ", expected " +
                                                            std::to_string(n_));
    if (!seen.insert(vertices_[i]).second)
      throw PreconditionError(Kind::kDuplicateRows, "vertex " + vertices_[i].to_string() + " occurs twice");
  }
}

LabelClass LabelClass::all_vertices(std::size_t n) {
  if (n > 20) throw BudgetExceeded("refusing to list the 2^" + std::to_string(n) + " vertices of Q_n");
  std::vector<BitString> v;
  v.reserve(std::size_t{1} << n);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) v.push_back(BitString::from_uint(code, n));
  return LabelClass(n, std::move(v));
}

BitString apply_automorphism(const HypercubeAutomorphism& phi, const BitString& v) {
  if (phi.size() != v.size())
    throw PreconditionError(Kind::kDimensionMismatch, "automorphism of Q_" + std::to_string(phi.size()) +
                                                          " applied to a vertex of length " + std::to_string(v.size()));
  BitString out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out.set(phi.pi(j), v.test(j) != phi.flips[j]);
  return out;
}

LabelClass apply_automorphism(const HypercubeAutomorphism& phi, const LabelClass& s) {
  std::vector<BitString> image;
  image.reserve(s.size());
  for (const auto& v : s.vertices()) image.push_back(apply_automorphism(phi, v));
  return LabelClass(s.dimension(), std::move(image));
}

BinaryMatrix characteristic_matrix(const LabelClass& s) {
  if (s.empty()) throw PreconditionError(Kind::kEmptyClass, "characteristic matrix of an empty class");
  return BinaryMatrix::from_rows(s.vertices(), s.dimension());
}

bool is_distinguishing_class(const LabelClass& s, const SearchOptions& options) {
  if (s.empty() || s.dimension() == 0) return false;
  return is_asymmetric(characteristic_matrix(s), options);
}

namespace {

// Vertex codes use the BitString value convention: coordinate 0 is the most
// significant bit.
std::vector<std::uint32_t> image_table(const std::vector<std::size_t>& pi, std::uint32_t mask, std::size_t n) {
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<std::uint32_t> table(size);
  for (std::uint32_t v = 0; v < size; ++v) {
    std::uint32_t w = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t bit = ((v >> (n - 1 - j)) ^ (mask >> j)) & 1u;
      w |= bit << (n - 1 - pi[j]);
    }
    table[v] = w;
  }
  return table;
}

HypercubeAutomorphism make_automorphism(const std::vector<std::size_t>& pi, std::uint32_t mask, std::size_t n) {
  std::vector<bool> flips(n);
  for (std::size_t j = 0; j < n; ++j) flips[j] = (mask >> j) & 1u;
  return {Permutation(pi), std::move(flips)};
}

}  // namespace

std::vector<HypercubeAutomorphism> aut_preservers(const LabelClass& s) {
  const std::size_t n = s.dimension();
  if (n > 8) throw BudgetExceeded("aut_preservers enumerates n! 2^n automorphisms and is limited to n <= 8");
  std::vector<bool> member(std::size_t{1} << n, false);
  std::vector<std::uint32_t> codes;
  for (const auto& v : s.vertices()) {
    codes.push_back(static_cast<std::uint32_t>(v.to_uint()));
    member[codes.back()] = true;
  }
  std::vector<HypercubeAutomorphism> out;
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  auto image = [&](std::uint32_t v, std::uint32_t mask) {
    std::uint32_t w = 0;
    for (std::size_t j = 0; j < n; ++j) w |= (((v >> (n - 1 - j)) ^ (mask >> j)) & 1u) << (n - 1 - pi[j]);
    return w;
  };
  do {
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
      const bool preserved =
          std::all_of(codes.begin(), codes.end(), [&](std::uint32_t v) { return member[image(v, mask)]; });
      if (preserved) out.push_back(make_automorphism(pi, mask, n));
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return out;
}

LabelClass distinguishing_class(const BigInt& n, const WitnessOptions& options) {
  CostTable& costs = options.costs ? *options.costs : default_cost_table();
  const int m = costs.rho(n);
  if (n > BigInt(options.memory_guard_bits))
    throw BudgetExceeded("Q_" + n.str() + " is beyond the memory guard");
  const auto width = static_cast<std::size_t>(n);
  Witness w = asymmetric_witness(static_cast<std::size_t>(m), width, options);
  return LabelClass(width, w.matrix.row_list());
}

MinimalityReport minimality_q4_report() {
  constexpr std::size_t n = 4;
  std::vector<std::vector<std::uint32_t>> tables;  // non-identity automorphisms
  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::size_t group_order = 0;
  do {
    for (std::uint32_t mask = 0; mask < 16; ++mask) {
      ++group_order;
      const bool identity = mask == 0 && std::is_sorted(pi.begin(), pi.end());
      if (!identity) tables.push_back(image_table(pi, mask, n));
    }
  } while (std::next_permutation(pi.begin(), pi.end()));

  auto group_distinguishes = [&](const std::vector<std::uint32_t>& verts) {
    std::uint32_t set = 0;
    for (auto v : verts) set |= 1u << v;
    for (const auto& t : tables) {
      std::uint32_t image = 0;
      for (auto v : verts) image |= 1u << t[v];
      if (image == set) return false;
    }
    return true;
  };
  auto matrix_distinguishes = [&](const std::vector<std::uint32_t>& verts) {
    std::vector<BitString> rows;
    for (auto v : verts) rows.push_back(BitString::from_uint(v, n));
    return is_distinguishing_class(LabelClass(n, std::move(rows)));
  };

  MinimalityReport report;
  if (group_order != 384) return report;
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = a + 1; b < 16; ++b)
      for (std::uint32_t c = b + 1; c < 16; ++c)
        for (std::uint32_t d = c + 1; d < 16; ++d) {
          const std::vector<std::uint32_t> verts{a, b, c, d};
          const bool g = group_distinguishes(verts);
          const bool x = matrix_distinguishes(verts);
          ++report.subsets;
          report.group_distinguishing += g;
          report.matrix_distinguishing += x;
          report.disagreements += g != x;
        }
  const LabelClass witness = distinguishing_class(BigInt(4));
  std::vector<std::uint32_t> verts;
  for (const auto& v : witness.vertices()) verts.push_back(static_cast<std::uint32_t>(v.to_uint()));
  report.witness_group = verts.size() == 5 && group_distinguishes(verts);
  report.witness_matrix = verts.size() == 5 && is_distinguishing_class(witness);
  return report;
}

bool verify_minimality_q4() { return minimality_q4_report().holds(); }

}  // namespace hcube
