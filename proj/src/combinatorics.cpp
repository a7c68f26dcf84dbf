#include "odisc/combinatorics.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace odisc {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("binomial: negative input");
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i is integral at every step; divide by
    // gcd pieces implicitly by multiplying before dividing with overflow check.
    const std::uint64_t numer = std::uint64_t(n - k + i);
    if (result > std::numeric_limits<std::uint64_t>::max() / numer) {
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " +
                                std::to_string(k) + ") exceeds uint64");
    }
    result = result * numer / std::uint64_t(i);
  }
  return result;
}

std::vector<int> subset_at_rank(int m, int k, std::uint64_t rank) {
  if (rank >= binomial(m, k)) {
    throw std::out_of_range("subset_at_rank: rank out of range");
  }
  std::vector<int> subset;
  subset.reserve(std::size_t(k));
  int c = 0;
  for (int pos = 0; pos < k; ++pos) {
    for (;; ++c) {
      // Subsets starting with c at this position: choose the remaining
      // k - pos - 1 elements from {c+1, ..., m-1}.
      const std::uint64_t block = binomial(m - 1 - c, k - pos - 1);
      if (rank < block) break;
      rank -= block;
    }
    subset.push_back(c);
    ++c;
  }
  return subset;
}

std::uint64_t subset_rank(int m, const std::vector<int>& subset) {
  const int k = int(subset.size());
  std::uint64_t rank = 0;
  int prev = -1;
  for (int pos = 0; pos < k; ++pos) {
    if (subset[pos] <= prev || subset[pos] >= m) {
      throw std::invalid_argument("subset_rank: not a strictly increasing subset");
    }
    for (int c = prev + 1; c < subset[pos]; ++c) {
      rank += binomial(m - 1 - c, k - pos - 1);
    }
    prev = subset[pos];
  }
  return rank;
}

bool next_subset(int m, std::vector<int>& subset) {
  const int k = int(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[std::size_t(i)] == m - k + i) --i;
  if (i < 0) return false;
  ++subset[std::size_t(i)];
  for (int j = i + 1; j < k; ++j) {
    subset[std::size_t(j)] = subset[std::size_t(j - 1)] + 1;
  }
  return true;
}

}  // namespace odisc
