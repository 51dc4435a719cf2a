#include "hcube/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "hcube/errors.hpp"

namespace hcube {

bool is_symmetry(const BinaryMatrix& x, const Symmetry& s) {
  if (s.sigma.size() != x.rows() || s.phi.size() != x.cols()) return false;
  return apply_row_permutation(x, s.sigma) == apply_permaut(x, s.phi);
}

namespace {

std::optional<Symmetry> duplicate_row_symmetry(const BinaryMatrix& x) {
  std::unordered_map<BitString, std::size_t, BitStringHash> first;
  for (std::size_t j = 0; j < x.rows(); ++j) {
    auto [it, inserted] = first.emplace(x.row(j), j);
    if (!inserted)
      return Symmetry{Permutation::transposition(x.rows(), it->second, j), Permaut::identity(x.cols())};
  }
  return std::nullopt;
}

std::optional<Symmetry> isomorphic_column_symmetry(const std::vector<BitString>& columns, std::size_t rows) {
  std::unordered_map<BitString, std::size_t, BitStringHash> first;
  for (std::size_t k = 0; k < columns.size(); ++k) {
    const BitString rep = std::min(columns[k], columns[k].complemented());
    auto [it, inserted] = first.emplace(rep, k);
    if (inserted) continue;
    const std::size_t j = it->second;
    Permaut phi = Permaut::identity(columns.size());
    phi.pi = Permutation::transposition(columns.size(), j, k);
    if (columns[j] != columns[k]) {
      phi.flips[j] = true;
      phi.flips[k] = true;
    }
    return Symmetry{Permutation::identity(rows), std::move(phi)};
  }
  return std::nullopt;
}

// Backtracking over the row permutation for a matrix with distinct rows and
// pairwise non-isomorphic columns. For such a matrix a symmetry is determined
// by sigma alone; the search tracks, for every source column j, the pairs
// (k, f) such that column j, flipped by f, can still land on column k.
class RowSearch {
 public:
  RowSearch(const BinaryMatrix& x, const SearchOptions& options) : x_(x), options_(options), m_(x.rows()), n_(x.cols()) {
    for (std::size_t i = 0; i < m_; ++i) row_index_.emplace(x_.row(i), i);
    build_row_domains();
    build_root_candidates();
  }

  std::optional<Symmetry> run() {
    sigma_.assign(m_, 0);
    used_.assign(m_, false);
    if (levels_[0].empty_column) return std::nullopt;
    return descend(0);
  }

 private:
  struct Level {
    std::vector<std::uint32_t> data;
    std::vector<std::uint32_t> offset;  // n + 1 entries
    bool all_single = false;
    bool empty_column = false;
  };

  void build_row_domains() {
    // When no column has weight exactly m/2, the low-weight normalization is
    // strictly low weight, every symmetry acts there as a pure column
    // permutation, and sigma must preserve normalized row weights.
    const auto weights = x_.column_weights();
    bool has_half = false;
    std::vector<bool> heavy(n_, false);
    for (std::size_t j = 0; j < n_; ++j) {
      if (2 * weights[j] == m_) has_half = true;
      heavy[j] = 2 * weights[j] > m_;
    }
    domains_.assign(m_, {});
    if (has_half) {
      std::vector<std::size_t> all(m_);
      std::iota(all.begin(), all.end(), 0);
      for (auto& d : domains_) d = all;
      return;
    }
    std::vector<std::size_t> rw(m_, 0);
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < n_; ++j) rw[i] += x_(i, j) != heavy[j];
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t t = 0; t < m_; ++t)
        if (rw[t] == rw[i]) domains_[i].push_back(t);
  }

  void build_root_candidates() {
    const auto weights = x_.column_weights();
    levels_.assign(m_ + 1, Level{});
    Level& root = levels_[0];
    root.offset.assign(n_ + 1, 0);
    bool all_single = true;
    for (std::size_t j = 0; j < n_; ++j) {
      root.offset[j] = static_cast<std::uint32_t>(root.data.size());
      for (std::size_t k = 0; k < n_; ++k) {
        if (weights[k] == weights[j]) root.data.push_back(static_cast<std::uint32_t>(k << 1));
        if (weights[k] == m_ - weights[j]) root.data.push_back(static_cast<std::uint32_t>((k << 1) | 1u));
      }
      const auto size = root.data.size() - root.offset[j];
      if (size == 0) root.empty_column = true;
      if (size != 1) all_single = false;
    }
    root.offset[n_] = static_cast<std::uint32_t>(root.data.size());
    root.all_single = all_single;
  }

  // Narrows `from` into `to` under the extra assignment sigma(i) = t.
  // Returns false if some column loses every candidate.
  bool narrow(const Level& from, Level& to, std::size_t i, std::size_t t) {
    to.data.clear();
    to.offset.resize(n_ + 1);
    bool all_single = true;
    const BitString& source_row = x_.row(i);
    const BitString& target_row = x_.row(t);
    for (std::size_t j = 0; j < n_; ++j) {
      to.offset[j] = static_cast<std::uint32_t>(to.data.size());
      const bool want = target_row.test(j);
      for (std::uint32_t p = from.offset[j]; p < from.offset[j + 1]; ++p) {
        const std::uint32_t c = from.data[p];
        if ((source_row.test(c >> 1) != static_cast<bool>(c & 1u)) == want) to.data.push_back(c);
      }
      const auto size = to.data.size() - to.offset[j];
      if (size == 0) return false;
      if (size != 1) all_single = false;
    }
    to.offset[n_] = static_cast<std::uint32_t>(to.data.size());
    to.all_single = all_single;
    return true;
  }

  // Every column has exactly one candidate: the permaut is forced. Recover
  // sigma from it and check it extends the current prefix.
  std::optional<Symmetry> resolve(const Level& level, std::size_t depth) {
    std::vector<std::size_t> pi(n_);
    std::vector<bool> flips(n_);
    std::vector<bool> hit(n_, false);
    for (std::size_t j = 0; j < n_; ++j) {
      const std::uint32_t c = level.data[level.offset[j]];
      pi[j] = c >> 1;
      flips[j] = c & 1u;
      if (hit[pi[j]]) return std::nullopt;
      hit[pi[j]] = true;
    }
    Permaut phi{Permutation(std::move(pi)), std::move(flips)};
    const BinaryMatrix image = apply_permaut(x_, phi);
    std::vector<std::size_t> sigma(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      auto it = row_index_.find(image.row(r));
      if (it == row_index_.end()) return std::nullopt;
      sigma[it->second] = r;
    }
    for (std::size_t i = 0; i < depth; ++i)
      if (sigma[i] != sigma_[i]) return std::nullopt;
    Symmetry s{Permutation(std::move(sigma)), std::move(phi)};
    if (s.sigma.is_identity()) return std::nullopt;
    if (!is_symmetry(x_, s)) throw InternalError("symmetry search produced an invalid certificate");
    return s;
  }

  std::optional<Symmetry> descend(std::size_t i) {
    const Level& current = levels_[i];
    if (current.all_single) return resolve(current, i);
    if (i == m_) return std::nullopt;
    for (std::size_t t : domains_[i]) {
      if (used_[t]) continue;
      if (++nodes_ > options_.node_budget)
        throw BudgetExceeded("symmetry search exceeded the node budget of " + std::to_string(options_.node_budget));
      if (!narrow(current, levels_[i + 1], i, t)) continue;
      used_[t] = true;
      sigma_[i] = t;
      auto found = descend(i + 1);
      used_[t] = false;
      if (found) return found;
    }
    return std::nullopt;
  }

  const BinaryMatrix& x_;
  const SearchOptions& options_;
  std::size_t m_;
  std::size_t n_;
  std::unordered_map<BitString, std::size_t, BitStringHash> row_index_;
  std::vector<std::vector<std::size_t>> domains_;
  std::vector<Level> levels_;
  std::vector<std::size_t> sigma_;
  std::vector<bool> used_;
  std::uint64_t nodes_ = 0;
};

// Backtracking over the permaut, one source column at a time, for a matrix
// with distinct rows. After columns 0..j are placed, the rows of X^phi seen on
// the placed targets must form the same multiset as the rows of X seen there;
// both sides are tracked as refinement class ids. Cheaper than RowSearch when
// n < m.
class ColumnSearch {
 public:
  ColumnSearch(const BinaryMatrix& x, const SearchOptions& options)
      : x_(x), options_(options), m_(x.rows()), n_(x.cols()), weights_(x.column_weights()) {
    for (std::size_t i = 0; i < m_; ++i) row_index_.emplace(x_.row(i), i);
    image_ids_.assign(n_ + 1, std::vector<std::uint32_t>(m_, 0));
    source_ids_.assign(n_ + 1, std::vector<std::uint32_t>(m_, 0));
    balance_.assign(2 * m_, 0);
    remap_.assign(2 * m_, kUnset);
    pi_.assign(n_, 0);
    flips_.assign(n_, false);
    used_.assign(n_, false);
  }

  std::optional<Symmetry> run() { return descend(0); }

 private:
  static constexpr std::uint32_t kUnset = 0xffffffffu;

  // Refines level j by "source column j, flipped by f, lands on column k".
  bool refine(std::size_t j, std::size_t k, bool f) {
    const auto& image_in = image_ids_[j];
    const auto& source_in = source_ids_[j];
    auto& image_out = image_ids_[j + 1];
    auto& source_out = source_ids_[j + 1];
    for (std::size_t i = 0; i < m_; ++i) {
      image_out[i] = 2 * image_in[i] + ((x_(i, j) != f) ? 1u : 0u);
      source_out[i] = 2 * source_in[i] + (x_(i, k) ? 1u : 0u);
      ++balance_[image_out[i]];
      --balance_[source_out[i]];
    }
    // Keys absent from the image side only go negative, so checking the image
    // keys suffices.
    bool ok = true;
    for (std::size_t i = 0; i < m_ && ok; ++i) ok = balance_[image_out[i]] == 0;
    for (std::size_t i = 0; i < m_; ++i) {
      balance_[image_out[i]] = 0;
      balance_[source_out[i]] = 0;
    }
    if (!ok) return false;
    // The two multisets agree, so one renumbering serves both sides.
    std::uint32_t next = 0;
    touched_.clear();
    for (std::size_t i = 0; i < m_; ++i) {
      std::uint32_t& id = remap_[image_out[i]];
      if (id == kUnset) {
        id = next++;
        touched_.push_back(image_out[i]);
      }
      image_out[i] = id;
    }
    for (std::size_t i = 0; i < m_; ++i) source_out[i] = remap_[source_out[i]];
    for (auto key : touched_) remap_[key] = kUnset;
    return true;
  }

  std::optional<Symmetry> resolve() {
    Permaut phi{Permutation(pi_), flips_};
    if (phi.is_identity()) return std::nullopt;  // distinct rows force sigma = id
    const BinaryMatrix image = apply_permaut(x_, phi);
    std::vector<std::size_t> sigma(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      auto it = row_index_.find(image.row(r));
      if (it == row_index_.end()) throw InternalError("column search accepted a permaut that is not a symmetry");
      sigma[it->second] = r;
    }
    Symmetry s{Permutation(std::move(sigma)), std::move(phi)};
    if (!is_symmetry(x_, s)) throw InternalError("symmetry search produced an invalid certificate");
    return s;
  }

  std::optional<Symmetry> descend(std::size_t j) {
    if (j == n_) return resolve();
    for (std::size_t k = 0; k < n_; ++k) {
      if (used_[k]) continue;
      for (int f = 0; f < 2; ++f) {
        if (weights_[k] != (f ? m_ - weights_[j] : weights_[j])) continue;
        if (++nodes_ > options_.node_budget)
          throw BudgetExceeded("symmetry search exceeded the node budget of " + std::to_string(options_.node_budget));
        if (!refine(j, k, f)) continue;
        used_[k] = true;
        pi_[j] = k;
        flips_[j] = f;
        auto found = descend(j + 1);
        used_[k] = false;
        if (found) return found;
      }
    }
    return std::nullopt;
  }

  const BinaryMatrix& x_;
  const SearchOptions& options_;
  std::size_t m_;
  std::size_t n_;
  std::vector<std::size_t> weights_;
  std::unordered_map<BitString, std::size_t, BitStringHash> row_index_;
  std::vector<std::vector<std::uint32_t>> image_ids_;
  std::vector<std::vector<std::uint32_t>> source_ids_;
  std::vector<int> balance_;
  std::vector<std::uint32_t> remap_;
  std::vector<std::uint32_t> touched_;
  std::vector<std::size_t> pi_;
  std::vector<bool> flips_;
  std::vector<bool> used_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<Symmetry> find_symmetry(const BinaryMatrix& x, const SearchOptions& options) {
  if (x.rows() == 0 || x.cols() == 0)
    throw PreconditionError(PreconditionError::Kind::kDimensionMismatch, "symmetry search needs m >= 1 and n >= 1");
  if (auto s = duplicate_row_symmetry(x)) return s;
  if (auto s = isomorphic_column_symmetry(x.column_list(), x.rows())) return s;
  if (x.cols() < x.rows()) return ColumnSearch(x, options).run();
  return RowSearch(x, options).run();
}

bool is_asymmetric(const BinaryMatrix& x, const SearchOptions& options) { return !find_symmetry(x, options).has_value(); }

// ---------------------------------------------------------------------------

std::optional<Symmetry> naive_symmetry_oracle(const BinaryMatrix& x, const OracleOptions& options) {
  const std::size_t m = x.rows();
  const std::size_t n = x.cols();
  if (m == 0 || n == 0 || n > 20)
    throw BudgetExceeded("naive oracle supports 1 <= n <= 20 only");
  // m! * n! * 2^n, saturating.
  std::uint64_t pairs = std::uint64_t{1} << n;
  auto times = [&](std::uint64_t k) {
    if (pairs > options.max_pairs) return;
    pairs *= k;
  };
  for (std::size_t k = 2; k <= m; ++k) times(k);
  for (std::size_t k = 2; k <= n; ++k) times(k);
  if (pairs > options.max_pairs)
    throw BudgetExceeded("naive oracle: m! * n! * 2^n exceeds the budget of " + std::to_string(options.max_pairs));

  std::vector<std::uint32_t> rows(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (x(i, j)) rows[i] |= 1u << j;

  std::vector<std::size_t> pi(n);
  std::iota(pi.begin(), pi.end(), 0);
  std::vector<std::uint32_t> image(m);
  std::vector<std::size_t> sigma(m);
  do {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t r = 0;
        for (std::size_t j = 0; j < n; ++j) {
          const bool bit = ((rows[i] >> j) & 1u) != ((mask >> j) & 1u);
          if (bit) r |= 1u << pi[j];
        }
        image[i] = r;
      }
      const bool phi_trivial = mask == 0 && std::is_sorted(pi.begin(), pi.end());
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        bool sigma_trivial = std::is_sorted(sigma.begin(), sigma.end());
        if (phi_trivial && sigma_trivial) continue;
        bool match = true;
        for (std::size_t i = 0; i < m && match; ++i) match = image[sigma[i]] == rows[i];
        if (!match) continue;
        std::vector<bool> flips(n);
        for (std::size_t j = 0; j < n; ++j) flips[j] = (mask >> j) & 1u;
        return Symmetry{Permutation(sigma), Permaut{Permutation(pi), std::move(flips)}};
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
  } while (std::next_permutation(pi.begin(), pi.end()));
  return std::nullopt;
}

// ---------------------------------------------------------------------------

bool exhaustive_nonexistence(std::size_t m, std::size_t n, const ExhaustiveOptions& options) {
  if (m == 0 || n == 0)
    throw PreconditionError(PreconditionError::Kind::kDimensionMismatch, "exhaustive search needs m, n >= 1");
  if (m * n > options.max_bits || m * n > 62)
    throw BudgetExceeded("exhaustive search over " + std::to_string(m) + "x" + std::to_string(n) +
                         " matrices exceeds the bit budget of " + std::to_string(options.max_bits));
  const std::uint64_t total = std::uint64_t{1} << (m * n);
  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  std::vector<std::uint64_t> rows(m);
  for (std::uint64_t code = 0; code < total; ++code) {
    if (options.progress && code % options.progress_every == 0)
      *options.progress << "checked " << code << " of 2^" << m * n << '\n';
    bool increasing = true;
    for (std::size_t i = 0; i < m; ++i) {
      rows[i] = (code >> (n * (m - 1 - i))) & row_mask;
      if (i > 0 && rows[i] <= rows[i - 1]) {
        increasing = false;
        break;
      }
    }
    if (!increasing) continue;
    std::vector<BitString> bits;
    bits.reserve(m);
    for (auto r : rows) bits.push_back(BitString::from_uint(r, n));
    if (is_asymmetric(BinaryMatrix::from_rows(std::move(bits), n), options.search)) return false;
  }
  if (options.progress) *options.progress << "checked " << total << " of 2^" << m * n << '\n';
  return true;
}

}  // namespace hcube
