#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "odisc/linalg.hpp"
#include "odisc/types.hpp"

namespace odisc {

enum class FunctionClass { Constant, Balanced, Neither };

std::string to_string(FunctionClass c);

// Boolean function f: {0,1}^n -> {0,1} as an explicit truth table,
// table[x] = f(x).
class OracleFunction {
 public:
  OracleFunction(int n, std::vector<std::uint8_t> table);

  static OracleFunction constant(int n, int value);
  // Arguments in `ones` (strictly increasing) map to 1, the rest to 0.
  static OracleFunction from_ones(int n, const std::vector<int>& ones);
  // Hex-packed truth table, LSB = f(0).
  static OracleFunction from_hex(int n, std::string_view hex);

  int n() const { return n_; }
  Index dim() const { return Index(table_.size()); }
  std::uint8_t operator()(Index x) const { return table_[std::size_t(x)]; }
  const std::vector<std::uint8_t>& table() const { return table_; }
  std::string to_hex() const;

  bool operator==(const OracleFunction&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

// Constant iff every bit equal; Balanced iff exactly half are 1.
FunctionClass classify(const OracleFunction& f);

// Past this point balanced enumeration leaves desk scale (n = 5 already has
// ~6e8 functions); raisable per call.
inline constexpr int kEnumerationCap = 4;

// B = C(N, N/2) with N = 2^n. Exact up to n = 6.
std::uint64_t balanced_count(int n);

// Streams the balanced functions in lexicographic order of the argument set
// mapped to 1, holding one function at a time.
class BalancedEnumerator {
 public:
  explicit BalancedEnumerator(int n, int cap = kEnumerationCap);

  bool done() const { return done_; }
  const OracleFunction& value() const { return current_; }
  std::uint64_t rank() const { return rank_; }
  void advance();
  void seek(std::uint64_t rank);

 private:
  void rebuild();

  int n_;
  std::uint64_t rank_;
  std::uint64_t count_;
  bool done_;
  std::vector<int> ones_;
  OracleFunction current_;
};

// The balanced function at lexicographic `rank` (random access).
OracleFunction balanced_at_rank(int n, std::uint64_t rank,
                                int cap = kEnumerationCap);

// Materialized enumerations; the streaming form above is preferred in sums.
std::vector<OracleFunction> enumerate_balanced(int n, int cap = kEnumerationCap);
// The all-zeros function, then the all-ones function.
std::vector<OracleFunction> enumerate_constant(int n);

// Phase-oracle action: amplitude_x -> (-1)^f(x) amplitude_x.
StateVector apply_oracle(const OracleFunction& f, const StateVector& state);
// Conjugation by the same diagonal unitary: rho_xy -> (-1)^(f(x)+f(y)) rho_xy.
DensityOperator apply_oracle_density(const OracleFunction& f,
                                     const DensityOperator& rho,
                                     double tol = kDefaultTol);

// sum over balanced f of (-1)^(f(x)+f(y)), by brute-force enumeration.
// Equals B when x = y and -B/(N-1) otherwise.
std::int64_t balanced_pair_sum(int n, Index x, Index y,
                               int cap = kEnumerationCap);

// Counts of balanced f with (f(x), f(y)) = (0,0), (0,1), (1,0), (1,1).
std::array<std::int64_t, 4> balanced_pair_counts(int n, Index x, Index y,
                                                 int cap = kEnumerationCap);

}  // namespace odisc
