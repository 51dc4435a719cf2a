#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <mutex>
#include <string>
#include <utility>

namespace hcube {

using BigInt = boost::multiprecision::cpp_int;

/// Number of binary digits of n (0 for n = 0).
std::size_t bit_length(const BigInt& n);
/// Exact ceil(log2 n) for n >= 1.
std::size_t ceil_log2(const BigInt& n);

/// Memoized values of nu_m (fewest columns of an asymmetric m-row matrix) and
/// mu_n = rho(Q_n) (fewest rows of an asymmetric n-column matrix).
///
/// Both sequences are evaluated through their interval characterizations:
/// rho(Q_n) = m iff n lies in [2^{m-2} - nu_{m-1} + 1, 2^{m-1} - nu_m], and
/// nu_m = n iff m lies in [2^{n-1} - mu_{n-1} + 1, 2^n - mu_n]. Each query
/// probes the two or three candidates next to the bit length of its argument
/// and throws InternalError unless exactly one matches. Thread-safe.
class CostTable {
 public:
  CostTable() = default;
  CostTable(const CostTable&) = delete;
  CostTable& operator=(const CostTable&) = delete;

  /// rho(Q_n) for n >= 4; DomainError (kNotTwoDistinguishable) below that.
  int rho(const BigInt& n);
  /// nu_m for m >= 5; DomainError (kOutOfRange) below that.
  int nu(const BigInt& m);
  /// Integer interval of n with rho(Q_n) = m, for m >= 6.
  std::pair<BigInt, BigInt> rho_interval(int m);
  /// Integer interval of m with nu_m = n, for n >= 5.
  std::pair<BigInt, BigInt> nu_interval(int n);

  /// {"format": 1, "nu": {"5": 4, ...}, "mu": {"4": 5, ...}}
  std::string to_json() const;
  /// Merges a cache produced by to_json. Every entry is checked against the
  /// two-value bound (mu) or the range 4 <= nu_m <= max(4, floor(m/2)) before
  /// it is accepted; PreconditionError (kParse) otherwise.
  void load_json(const std::string& text);

  std::size_t memo_size() const;

 private:
  std::optional<int> lookup(const std::map<BigInt, int>& memo, const BigInt& key) const;
  void store(std::map<BigInt, int>& memo, const BigInt& key, int value);

  mutable std::mutex mutex_;
  std::map<BigInt, int> mu_memo_;
  std::map<BigInt, int> nu_memo_;
};

/// Process-wide table used by the free functions below.
CostTable& default_cost_table();

int rho(const BigInt& n);
int nu(const BigInt& m);
std::pair<BigInt, BigInt> rho_interval(int m);
/// Det(Q_n) = 1 + ceil(log2 n), for n >= 2.
int det_qn(const BigInt& n);

/// Parses a non-negative decimal integer (digits only).
BigInt parse_decimal(const std::string& text);

}  // namespace hcube
