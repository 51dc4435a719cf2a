#include "hcube/cost.hpp"

#include <json.hpp>

#include "hcube/errors.hpp"

namespace hcube {

namespace {

BigInt pow2(std::size_t k) { return BigInt(1) << k; }

bool in_interval(const BigInt& x, const std::pair<BigInt, BigInt>& range) {
  return range.first <= x && x <= range.second;
}

bool two_value_ok(const BigInt& n, int value) {
  if (n == 4) return value == 5;
  const int base = 1 + static_cast<int>(ceil_log2(n));
  return value == base || value == base + 1;
}

bool nu_value_ok(const BigInt& m, int value) {
  if (m < 12) return value == 4;
  return value >= 4 && BigInt(value) <= m / 2;
}

}  // namespace

std::size_t bit_length(const BigInt& n) {
  if (n <= 0) return 0;
  return static_cast<std::size_t>(boost::multiprecision::msb(n)) + 1;
}

std::size_t ceil_log2(const BigInt& n) {
  if (n < 1) throw DomainError(DomainError::Kind::kOutOfRange, "log2 of a non-positive integer");
  return n == 1 ? 0 : bit_length(n - 1);
}

std::optional<int> CostTable::lookup(const std::map<BigInt, int>& memo, const BigInt& key) const {
  std::lock_guard lock(mutex_);
  auto it = memo.find(key);
  if (it == memo.end()) return std::nullopt;
  return it->second;
}

void CostTable::store(std::map<BigInt, int>& memo, const BigInt& key, int value) {
  std::lock_guard lock(mutex_);
  memo.emplace(key, value);
}

std::size_t CostTable::memo_size() const {
  std::lock_guard lock(mutex_);
  return mu_memo_.size() + nu_memo_.size();
}

std::pair<BigInt, BigInt> CostTable::rho_interval(int m) {
  if (m < 6) throw DomainError(DomainError::Kind::kOutOfRange, "rho_interval needs m >= 6, got " + std::to_string(m));
  const auto k = static_cast<std::size_t>(m);
  return {pow2(k - 2) - nu(m - 1) + 1, pow2(k - 1) - nu(m)};
}

std::pair<BigInt, BigInt> CostTable::nu_interval(int n) {
  if (n < 5) throw DomainError(DomainError::Kind::kOutOfRange, "nu_interval needs n >= 5, got " + std::to_string(n));
  const auto k = static_cast<std::size_t>(n);
  return {pow2(k - 1) - rho(n - 1) + 1, pow2(k) - rho(n)};
}

int CostTable::rho(const BigInt& n) {
  if (n < 4)
    throw DomainError(DomainError::Kind::kNotTwoDistinguishable,
                      "Q_n is 2-distinguishable only for n >= 4, got n = " + n.str());
  if (n <= 12) return 5;
  if (auto hit = lookup(mu_memo_, n)) return *hit;

  const int first = 1 + static_cast<int>(ceil_log2(n));
  int found = 0;
  int matches = 0;
  for (int m : {first, first + 1}) {
    if (m < 6) continue;
    if (in_interval(n, rho_interval(m))) {
      found = m;
      ++matches;
    }
  }
  if (matches != 1)
    throw InternalError("rho(" + n.str() + "): " + std::to_string(matches) + " candidate intervals matched");
  store(mu_memo_, n, found);
  return found;
}

int CostTable::nu(const BigInt& m) {
  if (m < 5) throw DomainError(DomainError::Kind::kOutOfRange, "nu_m is defined for m >= 5, got m = " + m.str());
  if (m <= 11) return 4;
  if (auto hit = lookup(nu_memo_, m)) return *hit;

  const int bits = static_cast<int>(bit_length(m));
  int found = 0;
  int matches = 0;
  for (int n : {bits - 1, bits, bits + 1}) {
    if (n < 5) continue;
    if (in_interval(m, nu_interval(n))) {
      found = n;
      ++matches;
    }
  }
  if (matches != 1)
    throw InternalError("nu(" + m.str() + "): " + std::to_string(matches) + " candidate intervals matched");
  store(nu_memo_, m, found);
  return found;
}

std::string CostTable::to_json() const {
  nlohmann::ordered_json doc;
  doc["format"] = 1;
  doc["nu"] = nlohmann::ordered_json::object();
  doc["mu"] = nlohmann::ordered_json::object();
  std::lock_guard lock(mutex_);
  for (const auto& [k, v] : nu_memo_) doc["nu"][k.str()] = v;
  for (const auto& [k, v] : mu_memo_) doc["mu"][k.str()] = v;
  return doc.dump(2);
}

void CostTable::load_json(const std::string& text) {
  using Kind = PreconditionError::Kind;
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(Kind::kParse, std::string("cost cache is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", 0) != 1)
    throw PreconditionError(Kind::kParse, "cost cache must be an object with \"format\": 1");
  auto read = [&](const char* key, auto&& valid) {
    std::map<BigInt, int> entries;
    if (!doc.contains(key)) return entries;
    if (!doc[key].is_object()) throw PreconditionError(Kind::kParse, std::string("cost cache field ") + key + " must be an object");
    for (const auto& [k, v] : doc[key].items()) {
      if (!v.is_number_integer()) throw PreconditionError(Kind::kParse, std::string("non-integer value in ") + key);
      const BigInt arg = parse_decimal(k);
      const int value = v.template get<int>();
      if (!valid(arg, value))
        throw PreconditionError(Kind::kParse, std::string("cost cache entry ") + key + "[" + k + "] = " +
                                                  std::to_string(value) + " fails revalidation");
      entries.emplace(arg, value);
    }
    return entries;
  };
  auto mu = read("mu", [](const BigInt& n, int v) { return n >= 4 && two_value_ok(n, v); });
  auto nu = read("nu", [](const BigInt& m, int v) { return m >= 5 && nu_value_ok(m, v); });
  std::lock_guard lock(mutex_);
  mu_memo_.insert(mu.begin(), mu.end());
  nu_memo_.insert(nu.begin(), nu.end());
}

CostTable& default_cost_table() {
  static CostTable table;
  return table;
}

int rho(const BigInt& n) { return default_cost_table().rho(n); }
int nu(const BigInt& m) { return default_cost_table().nu(m); }
std::pair<BigInt, BigInt> rho_interval(int m) { return default_cost_table().rho_interval(m); }

int det_qn(const BigInt& n) {
  if (n < 2) throw DomainError(DomainError::Kind::kOutOfRange, "det_qn needs n >= 2, got n = " + n.str());
  return 1 + static_cast<int>(ceil_log2(n));
}

BigInt parse_decimal(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw PreconditionError(PreconditionError::Kind::kParse, "expected a decimal integer, got '" + text + "'");
  return BigInt(text);
}

}  // namespace hcube
