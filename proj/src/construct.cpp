#include "hcube/construct.hpp"

#include <algorithm>
#include <array>
#include <json.hpp>
#include <limits>

#include "hcube/complement.hpp"
#include "hcube/errors.hpp"

namespace hcube {

namespace {

using Json = nlohmann::ordered_json;

std::string dims(std::size_t m, std::size_t n) { return std::to_string(m) + "x" + std::to_string(n); }

void json_plan(const ConstructionPlan& p, Json& out) {
  out["case"] = to_string(p.case_tag);
  out["dims"] = {p.rows, p.cols};
  out["r"] = p.r;
  out["s"] = p.s;
  out["base"] = {p.base_rows, p.base_cols};
  out["verification"] = p.verification;
  out["audit"] = p.audit;
  if (!p.sources.empty()) {
    out["sources"] = Json::array();
    for (const auto& src : p.sources) {
      Json child;
      json_plan(src, child);
      out["sources"].push_back(std::move(child));
    }
  }
}

ConstructionPlan make_plan(CaseTag tag, std::size_t m, std::size_t n, std::size_t m0, std::size_t n0) {
  ConstructionPlan p;
  p.case_tag = tag;
  p.rows = m;
  p.cols = n;
  p.r = m / 2;
  p.s = n / 2;
  p.base_rows = m0;
  p.base_cols = n0;
  return p;
}

// Saturating binomial coefficient.
std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(acc);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

// Weight-w strings of length m in increasing lexicographic order. `ones` holds
// the significance (m-1-position) of each 1, ascending; advancing it in colex
// order increases the value.
class WeightEnumerator {
 public:
  WeightEnumerator(std::size_t m, std::size_t w) : m_(m), ones_(w) {
    for (std::size_t i = 0; i < w; ++i) ones_[i] = i;
    done_ = w > m;
  }
  bool done() const { return done_; }
  BitString current() const {
    BitString b(m_);
    for (auto q : ones_) b.set(m_ - 1 - q);
    return b;
  }
  void advance() {
    const std::size_t w = ones_.size();
    std::size_t i = 0;
    while (i < w) {
      const std::size_t limit = i + 1 < w ? ones_[i + 1] : m_;
      if (ones_[i] + 1 < limit) break;
      ++i;
    }
    if (i == w) {
      done_ = true;
      return;
    }
    ++ones_[i];
    for (std::size_t k = 0; k < i; ++k) ones_[k] = k;
  }

 private:
  std::size_t m_;
  std::vector<std::size_t> ones_;
  bool done_ = false;
};

std::vector<bool> used_class_weights(const BinaryMatrix& x) {
  const std::size_t m = x.rows();
  std::vector<bool> used(m / 2 + 1, false);
  for (auto w : x.column_weights()) used[class_weight(w, m)] = true;
  return used;
}

BinaryMatrix table_from(std::initializer_list<std::string_view> rows) { return BinaryMatrix::from_strings(rows); }

BinaryMatrix four_column_table(std::size_t m) {
  switch (m) {
    case 5:
      return table_from({"1100", "0110", "0011", "0001", "0000"});
    case 6:
      return table_from({"1100", "0110", "0011", "0001", "0010", "0000"});
    case 7:
      return table_from({"1100", "0110", "0011", "0001", "0010", "0100", "0000"});
    case 8:
      return table_from({"1100", "0100", "1000", "0001", "1010", "1110", "0111", "0000"});
    default:
      throw DomainError(DomainError::Kind::kNotInTable, "no fixed " + dims(m, 4) + " table");
  }
}

const std::array<std::string_view, 5> kFiveByEight = {"11000100", "01100001", "00110110", "00011001", "00001010"};

BinaryMatrix flip_all_columns(const BinaryMatrix& x) {
  return apply_permaut(x, Permaut::flipping(std::vector<bool>(x.cols(), true)));
}

void guard_memory(std::size_t m, std::size_t n, const WitnessOptions& options) {
  const unsigned __int128 bits = static_cast<unsigned __int128>(m) * n;
  if (bits > options.memory_guard_bits)
    throw BudgetExceeded("a " + dims(m, n) + " matrix exceeds the memory guard of " +
                         std::to_string(options.memory_guard_bits) + " bits");
}

bool should_verify(const WitnessOptions& options, CaseTag tag, std::size_t m, std::size_t n) {
  if (options.verify != Verify::kAuto) return false;  // kAlways is handled once, at the top
  if (tag == CaseTag::kComplement) return false;
  if (tag == CaseTag::kRowDirection) return m <= 4096;
  return m <= 12 && n <= 4096;
}

void verify_into(Witness& w, const WitnessOptions& options) {
  if (auto s = find_symmetry(w.matrix, options.search))
    throw InternalError("constructed " + dims(w.matrix.rows(), w.matrix.cols()) + " matrix (" +
                        to_string(w.plan.case_tag) + ") is symmetric");
  w.plan.verification = "checked";
  w.plan.audit.push_back("find_symmetry: asymmetric");
}

// 2^e as a size_t, saturating.
std::size_t pow2(std::size_t e) {
  return e >= std::numeric_limits<std::size_t>::digits - 1 ? std::numeric_limits<std::size_t>::max() / 2 + 1
                                                           : std::size_t{1} << e;
}

class Builder {
 public:
  explicit Builder(const WitnessOptions& options)
      : options_(options), costs_(options.costs ? *options.costs : default_cost_table()) {}

  Witness columns(std::size_t m, std::size_t n);
  Witness rows(std::size_t m, std::size_t n0);

 private:
  Witness finish(Witness w) {
    if (should_verify(options_, w.plan.case_tag, w.matrix.rows(), w.matrix.cols())) verify_into(w, options_);
    return w;
  }
  Witness padded(Witness base, std::size_t n, CaseTag tag);
  Witness row_search(std::size_t m, std::size_t n0);

  const WitnessOptions& options_;
  CostTable& costs_;
};

Witness Builder::padded(Witness base, std::size_t n, CaseTag tag) {
  const std::size_t m = base.matrix.rows();
  const std::size_t j = n - base.matrix.cols();
  Witness w{pad_with_unused_weight_columns(base.matrix, j),
            make_plan(tag, m, n, m, base.matrix.cols())};
  w.plan.audit.push_back("concat_columns_checked: " + std::to_string(j) +
                         " padding columns of class weights unused by the base");
  w.plan.sources.push_back(std::move(base.plan));
  return finish(std::move(w));
}

Witness Builder::columns(std::size_t m, std::size_t n) {
  guard_memory(m, n, options_);
  const std::size_t quarter = pow2(m - 2);
  if (n > quarter) {
    const std::size_t n_src = pow2(m - 1) - n;
    Witness src = columns(m, n_src);
    Witness w{column_complement(src.matrix, ComplementOptions{options_.complement_guard}),
              make_plan(CaseTag::kComplement, m, n, m, n_src)};
    w.plan.verification = "inherited";
    w.plan.audit.push_back("column_complement of asymmetric " + dims(m, n_src));
    w.plan.sources.push_back(std::move(src.plan));
    return w;
  }
  if (m <= 11) {
    if (n == 4 || (m == 5 && n <= 8)) {
      Witness w{small_table(m, n), make_plan(CaseTag::kSmallTable, m, n, m, n)};
      w.plan.audit.push_back("fixed table " + dims(m, n));
      return finish(std::move(w));
    }
    if (n <= m - 2) {
      Witness base{small_table(m, 4), make_plan(CaseTag::kSmallTable, m, 4, m, 4)};
      base.plan.audit.push_back("fixed table " + dims(m, 4));
      return padded(std::move(base), n, CaseTag::kColumnPad);
    }
    Witness base{staircase(m, m - 1), make_plan(CaseTag::kStaircasePad, m, m - 1, m, m - 1)};
    base.plan.audit.push_back("staircase " + dims(m, m - 1));
    if (n == m - 1) return finish(std::move(base));
    return padded(std::move(base), n, CaseTag::kStaircasePad);
  }
  const std::size_t r = m / 2;
  if (n <= r - 1) {
    const auto nu_m = static_cast<std::size_t>(costs_.nu(BigInt(m)));
    Witness base = rows(m, nu_m);
    if (n == nu_m) return base;
    return padded(std::move(base), n, CaseTag::kColumnPad);
  }
  if (n <= m - 2) {
    Witness base{half_width(m), make_plan(CaseTag::kHalfWidthPad, m, r, m, r)};
    base.plan.audit.push_back("concat_rows_checked: staircase " + dims(r, r) + " over band " + dims(r, r) +
                              (m % 2 ? " and a zero row" : ""));
    if (n == r) return finish(std::move(base));
    return padded(std::move(base), n, CaseTag::kHalfWidthPad);
  }
  Witness base{staircase(m, m - 1), make_plan(CaseTag::kStaircasePad, m, m - 1, m, m - 1)};
  base.plan.audit.push_back("staircase " + dims(m, m - 1));
  if (n == m - 1) return finish(std::move(base));
  return padded(std::move(base), n, CaseTag::kStaircasePad);
}

// An asymmetric m x n0 matrix with m possibly far above 2^{n0/2}: the width
// is left alone and rows are added to a staircase instead.
Witness Builder::rows(std::size_t m, std::size_t n0) {
  guard_memory(m, n0, options_);
  if (m <= 11 || n0 >= m / 2) return columns(m, n0);
  if (m == 12 && n0 == 5) {
    Witness w{small_table(12, 5), make_plan(CaseTag::kTransposeTrick, 12, 5, 5, 12)};
    w.plan.audit.push_back("transpose of the normalized column complement of staircase 5x4");
    return finish(std::move(w));
  }
  if (n0 < 63 && m > (std::size_t{1} << (n0 - 1))) {
    const std::size_t m_src = (std::size_t{1} << n0) - m;
    Witness src = rows(m_src, n0);
    Witness w{row_complement(src.matrix, ComplementOptions{options_.complement_guard}),
              make_plan(CaseTag::kComplement, m, n0, m_src, n0)};
    w.plan.verification = "inherited";
    w.plan.audit.push_back("row_complement of asymmetric " + dims(m_src, n0));
    w.plan.sources.push_back(std::move(src.plan));
    return w;
  }
  return finish(row_search(m, n0));
}

Witness Builder::row_search(std::size_t m, std::size_t n0) {
  const BinaryMatrix base = staircase(n0 + 1, n0);
  const std::size_t k = m - base.rows();
  Witness w{base, make_plan(CaseTag::kRowDirection, m, n0, n0 + 1, n0)};
  w.plan.audit.push_back("staircase " + dims(n0 + 1, n0));
  if (k == 0) return w;

  // Candidate rows: weight n0 down to 3, increasing within a weight.
  std::vector<BitString> candidates;
  for (std::size_t weight = n0; weight >= 3; --weight) {
    for (WeightEnumerator e(n0, weight); !e.done(); e.advance()) {
      candidates.push_back(e.current());
      if (candidates.size() > (std::size_t{1} << 24))
        throw BudgetExceeded("row-direction candidate list for width " + std::to_string(n0) + " is too large");
    }
  }
  if (candidates.size() < k)
    throw DomainError(DomainError::Kind::kInsufficientColumns,
                      "only " + std::to_string(candidates.size()) + " candidate rows for " + std::to_string(k));

  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (std::uint64_t tries = 1;; ++tries) {
    if (tries > options_.row_search_budget)
      throw BudgetExceeded("row-direction search for " + dims(m, n0) + " exceeded " +
                           std::to_string(options_.row_search_budget) + " combinations");
    std::vector<BitString> chosen;
    chosen.reserve(k);
    for (auto idx : pick) chosen.push_back(candidates[idx]);
    try {
      w.matrix = concat_rows_checked(base, BinaryMatrix::from_rows(std::move(chosen), n0));
      w.plan.audit.push_back("concat_rows_checked: " + std::to_string(k) + " rows of weight >= 3 after " +
                             std::to_string(tries) + " combination(s)");
      return w;
    } catch (const PreconditionError&) {
    }
    // Next k-combination of candidate indices in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == candidates.size() - k + (i - 1)) --i;
    if (i == 0)
      throw DomainError(DomainError::Kind::kInsufficientColumns,
                        "no admissible row set for " + dims(m, n0));
    ++pick[i - 1];
    for (std::size_t t = i; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
}

}  // namespace

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::kSmallTable:
      return "small_table";
    case CaseTag::kColumnPad:
      return "column_pad";
    case CaseTag::kHalfWidthPad:
      return "half_width_pad";
    case CaseTag::kStaircasePad:
      return "staircase_pad";
    case CaseTag::kComplement:
      return "complement";
    case CaseTag::kRowDirection:
      return "row_direction";
    case CaseTag::kTransposeTrick:
      return "transpose_trick";
  }
  return "unknown";
}

std::string ConstructionPlan::to_json(int indent) const {
  Json out;
  json_plan(*this, out);
  return out.dump(indent);
}

BinaryMatrix staircase(std::size_t m, std::size_t cols) {
  if (m < 2 || (cols != m && cols + 1 != m))
    throw PreconditionError(PreconditionError::Kind::kDimensionMismatch,
                            "staircase needs m >= 2 and cols in {m, m-1}, got " + dims(m, cols));
  BinaryMatrix x(m, cols);
  x.set(0, 0);
  for (std::size_t j = 1; j < cols; ++j) {
    x.set(j - 1, j);
    x.set(j, j);
  }
  return x;
}

BinaryMatrix band_matrix(std::size_t r) {
  if (r < 3) throw PreconditionError(PreconditionError::Kind::kDimensionMismatch, "band matrix needs r >= 3");
  BinaryMatrix z(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      const std::size_t d = (j + r - i) % r;
      if (d > 2) z.set(i, j);
    }
  return z;
}

BinaryMatrix half_width(std::size_t m) {
  if (m < 12) throw DomainError(DomainError::Kind::kOutOfRange, "half_width needs m >= 12");
  const std::size_t r = m / 2;
  BinaryMatrix z = band_matrix(r);
  if (m % 2) z = vconcat(z, BinaryMatrix(1, r));
  return concat_rows_checked(staircase(r, r), z);
}

BinaryMatrix half_height(std::size_t n) {
  if (n < 12) throw DomainError(DomainError::Kind::kOutOfRange, "half_height needs n >= 12");
  const std::size_t s = n / 2;
  const BinaryMatrix stairs = staircase(s, s);
  // Rows i and i+3 of the 6 x 6 band are complementary.
  if (s == 6) return pad_with_unused_weight_columns(stairs, n - s);
  BinaryMatrix z = band_matrix(s);
  if (n % 2) z = vconcat(z, BinaryMatrix(1, s));
  return concat_columns_checked(stairs, transpose(z));
}

BinaryMatrix small_table(std::size_t m, std::size_t n) {
  if (m == 5 && n >= 4 && n <= 8) {
    std::vector<std::string> rows;
    for (auto row : kFiveByEight) {
      std::string r(row);
      if (n == 7)
        r.erase(2, 1);
      else
        r.resize(n);
      rows.push_back(std::move(r));
    }
    return BinaryMatrix::from_strings(rows);
  }
  if (n == 4 && m >= 5 && m <= 8) return four_column_table(m);
  if (n == 4 && m >= 9 && m <= 11) return flip_all_columns(row_complement(four_column_table(16 - m)));
  if (m == 12 && n == 5) {
    auto [low, flips] = normalize_low_weight(column_complement(staircase(5, 4)));
    return transpose(low);
  }
  throw DomainError(DomainError::Kind::kNotInTable, "no fixed " + dims(m, n) + " table");
}

std::uint64_t unused_weight_column_count(const BinaryMatrix& x) {
  const std::size_t m = x.rows();
  const auto used = used_class_weights(x);
  std::uint64_t total = 0;
  for (std::size_t w = 0; w <= m / 2; ++w) {
    if (used[w]) continue;
    std::uint64_t c = binomial(m, w);
    if (2 * w == m) c /= 2;
    total = saturating_add(total, c);
  }
  return total;
}

BinaryMatrix pad_with_unused_weight_columns(const BinaryMatrix& x, std::size_t j) {
  const std::size_t m = x.rows();
  if (j == 0) return x;
  const std::uint64_t available = unused_weight_column_count(x);
  if (available < j)
    throw DomainError(DomainError::Kind::kInsufficientColumns,
                      std::to_string(j) + " padding columns requested, " + std::to_string(available) + " available");
  const auto used = used_class_weights(x);
  std::vector<BitString> extra;
  extra.reserve(j);
  for (std::size_t w = 0; w <= m / 2 && extra.size() < j; ++w) {
    if (used[w]) continue;
    for (WeightEnumerator e(m, w); !e.done() && extra.size() < j; e.advance()) {
      BitString c = e.current();
      if (2 * w == m && c.test(0)) break;  // the rest of this weight starts with 1
      extra.push_back(std::move(c));
    }
  }
  return concat_columns_checked(x, BinaryMatrix::from_columns(extra, m));
}

Witness asymmetric_witness(std::size_t m, std::size_t n, const WitnessOptions& options) {
  CostTable& costs = options.costs ? *options.costs : default_cost_table();
  if (m < 5 || n < 4)
    throw DomainError(DomainError::Kind::kInfeasible, "no asymmetric " + dims(m, n) + " matrix (needs m >= 5, n >= 4)");
  const auto nu_m = static_cast<std::size_t>(costs.nu(BigInt(m)));
  const BigInt upper = (BigInt(1) << (m - 1)) - nu_m;
  if (n < nu_m)
    throw DomainError(DomainError::Kind::kInfeasible,
                      "no asymmetric " + dims(m, n) + " matrix: nu_" + std::to_string(m) + " = " + std::to_string(nu_m));
  if (BigInt(n) > upper)
    throw DomainError(DomainError::Kind::kInfeasible, "no asymmetric " + dims(m, n) + " matrix: n exceeds 2^" +
                                                          std::to_string(m - 1) + " - " + std::to_string(nu_m));
  guard_memory(m, n, options);
  Builder builder(options);
  Witness w = builder.columns(m, n);
  if (options.verify == Verify::kAlways) verify_into(w, options);
  return w;
}

}  // namespace hcube
