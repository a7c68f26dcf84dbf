#include "odisc/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "odisc/combinatorics.hpp"

namespace odisc {

namespace {

std::string balanced_count_text(int n) {
  if (n <= 6) return std::to_string(balanced_count(n));
  // lgamma keeps the message meaningful where the exact count overflows
  const double big = double(Index{1} << n);
  const double log10b =
      (std::lgamma(big + 1) - 2 * std::lgamma(big / 2 + 1)) / std::log(10.0);
  std::ostringstream text;
  text << "about 1e" << std::llround(log10b);
  return text.str();
}

void require_cap(int n, int cap, const char* who) {
  if (n < 1) throw std::invalid_argument(std::string(who) + ": n must be >= 1");
  if (n > cap) {
    std::ostringstream msg;
    msg << who << ": n = " << n << " exceeds enumeration cap " << cap << " (B = "
        << balanced_count_text(n) << " balanced functions)";
    throw std::domain_error(msg.str());
  }
}

int checked_enumeration_n(int n, int cap) {
  require_cap(n, cap, "BalancedEnumerator");
  return n;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string to_string(FunctionClass c) {
  switch (c) {
    case FunctionClass::Constant: return "constant";
    case FunctionClass::Balanced: return "balanced";
    case FunctionClass::Neither: return "neither";
  }
  return "unknown";
}

OracleFunction::OracleFunction(int n, std::vector<std::uint8_t> table)
    : n_(n), table_(std::move(table)) {
  const Index dim = qubit_dim(n);
  if (Index(table_.size()) != dim) {
    std::ostringstream msg;
    msg << "OracleFunction: table length " << table_.size() << " does not match 2^"
        << n << " = " << dim;
    throw std::invalid_argument(msg.str());
  }
  for (auto& bit : table_) {
    if (bit > 1) throw std::invalid_argument("OracleFunction: table entries must be bits");
  }
}

OracleFunction OracleFunction::constant(int n, int value) {
  if (value != 0 && value != 1) {
    throw std::invalid_argument("OracleFunction::constant: value must be 0 or 1");
  }
  return OracleFunction(
      n, std::vector<std::uint8_t>(std::size_t(qubit_dim(n)), std::uint8_t(value)));
}

OracleFunction OracleFunction::from_ones(int n, const std::vector<int>& ones) {
  const Index dim = qubit_dim(n);
  std::vector<std::uint8_t> table(std::size_t(dim), 0);
  int prev = -1;
  for (int x : ones) {
    if (x <= prev || x >= dim) {
      throw std::invalid_argument(
          "OracleFunction::from_ones: arguments must be strictly increasing and < 2^n");
    }
    table[std::size_t(x)] = 1;
    prev = x;
  }
  return OracleFunction(n, std::move(table));
}

OracleFunction OracleFunction::from_hex(int n, std::string_view hex) {
  const Index dim = qubit_dim(n);
  if (hex.empty()) throw std::invalid_argument("OracleFunction::from_hex: empty string");
  std::vector<std::uint8_t> table(std::size_t(dim), 0);
  for (std::size_t i = 0; i < hex.size(); ++i) {
    const int v = hex_value(hex[hex.size() - 1 - i]);
    if (v < 0) {
      throw std::invalid_argument("OracleFunction::from_hex: invalid hex digit '" +
                                  std::string(1, hex[hex.size() - 1 - i]) + "'");
    }
    for (int b = 0; b < 4; ++b) {
      if ((v >> b) & 1) {
        const std::size_t x = 4 * i + std::size_t(b);
        if (x >= std::size_t(dim)) {
          throw std::invalid_argument(
              "OracleFunction::from_hex: bit set beyond table length 2^" +
              std::to_string(n));
        }
        table[x] = 1;
      }
    }
  }
  return OracleFunction(n, std::move(table));
}

std::string OracleFunction::to_hex() const {
  const std::size_t digits = (table_.size() + 3) / 4;
  std::string hex(digits, '0');
  static constexpr char kDigits[] = "0123456789abcdef";
  for (std::size_t d = 0; d < digits; ++d) {
    int v = 0;
    for (int b = 0; b < 4; ++b) {
      const std::size_t x = 4 * d + std::size_t(b);
      if (x < table_.size() && table_[x]) v |= 1 << b;
    }
    hex[digits - 1 - d] = kDigits[v];
  }
  return hex;
}

FunctionClass classify(const OracleFunction& f) {
  const auto& table = f.table();
  const auto ones = std::size_t(
      std::count(table.begin(), table.end(), std::uint8_t(1)));
  if (ones == 0 || ones == table.size()) return FunctionClass::Constant;
  if (2 * ones == table.size()) return FunctionClass::Balanced;
  return FunctionClass::Neither;
}

std::uint64_t balanced_count(int n) {
  const Index dim = qubit_dim(n);
  return binomial(int(dim), int(dim / 2));
}

BalancedEnumerator::BalancedEnumerator(int n, int cap)
    : n_(checked_enumeration_n(n, cap)),
      rank_(0),
      count_(balanced_count(n)),
      done_(false),
      ones_(std::size_t(qubit_dim(n) / 2)),
      current_(OracleFunction::constant(n, 0)) {
  std::iota(ones_.begin(), ones_.end(), 0);
  rebuild();
}

void BalancedEnumerator::rebuild() { current_ = OracleFunction::from_ones(n_, ones_); }

void BalancedEnumerator::advance() {
  if (done_) return;
  if (!next_subset(int(qubit_dim(n_)), ones_)) {
    done_ = true;
    return;
  }
  ++rank_;
  rebuild();
}

void BalancedEnumerator::seek(std::uint64_t rank) {
  if (rank >= count_) {
    done_ = true;
    rank_ = count_;
    return;
  }
  ones_ = subset_at_rank(int(qubit_dim(n_)), int(qubit_dim(n_) / 2), rank);
  rank_ = rank;
  done_ = false;
  rebuild();
}

OracleFunction balanced_at_rank(int n, std::uint64_t rank, int cap) {
  BalancedEnumerator e(n, cap);
  e.seek(rank);
  if (e.done()) throw std::out_of_range("balanced_at_rank: rank out of range");
  return e.value();
}

std::vector<OracleFunction> enumerate_balanced(int n, int cap) {
  std::vector<OracleFunction> out;
  for (BalancedEnumerator e(n, cap); !e.done(); e.advance()) {
    out.push_back(e.value());
  }
  return out;
}

std::vector<OracleFunction> enumerate_constant(int n) {
  return {OracleFunction::constant(n, 0), OracleFunction::constant(n, 1)};
}

StateVector apply_oracle(const OracleFunction& f, const StateVector& state) {
  if (f.dim() != state.dim()) {
    std::ostringstream msg;
    msg << "apply_oracle: oracle on 2^" << f.n() << " arguments does not match state dimension "
        << state.dim();
    throw std::invalid_argument(msg.str());
  }
  Vector out = state.amplitudes();
  for (Index x = 0; x < out.size(); ++x) {
    if (f(x)) out[x] = -out[x];
  }
  return StateVector(std::move(out));
}

DensityOperator apply_oracle_density(const OracleFunction& f,
                                     const DensityOperator& rho, double tol) {
  if (f.dim() != rho.dim()) {
    std::ostringstream msg;
    msg << "apply_oracle_density: oracle on 2^" << f.n()
        << " arguments does not match operator dimension " << rho.dim();
    throw std::invalid_argument(msg.str());
  }
  Matrix out = rho.matrix();
  for (Index y = 0; y < out.cols(); ++y) {
    for (Index x = 0; x < out.rows(); ++x) {
      if (f(x) != f(y)) out(x, y) = -out(x, y);
    }
  }
  return DensityOperator(std::move(out), tol);
}

std::int64_t balanced_pair_sum(int n, Index x, Index y, int cap) {
  require_cap(n, cap, "balanced_pair_sum");
  const Index dim = qubit_dim(n);
  if (x < 0 || x >= dim || y < 0 || y >= dim) {
    throw std::out_of_range("balanced_pair_sum: argument out of range");
  }
  std::int64_t sum = 0;
  for (BalancedEnumerator e(n, cap); !e.done(); e.advance()) {
    const auto& f = e.value();
    sum += (f(x) == f(y)) ? 1 : -1;
  }
  return sum;
}

std::array<std::int64_t, 4> balanced_pair_counts(int n, Index x, Index y, int cap) {
  require_cap(n, cap, "balanced_pair_counts");
  const Index dim = qubit_dim(n);
  if (x < 0 || x >= dim || y < 0 || y >= dim) {
    throw std::out_of_range("balanced_pair_counts: argument out of range");
  }
  std::array<std::int64_t, 4> counts{0, 0, 0, 0};
  for (BalancedEnumerator e(n, cap); !e.done(); e.advance()) {
    const auto& f = e.value();
    ++counts[std::size_t(2 * f(x) + f(y))];
  }
  return counts;
}

}  // namespace odisc
