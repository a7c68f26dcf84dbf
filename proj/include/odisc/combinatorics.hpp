#pragma once

#include <cstdint>
#include <vector>

namespace odisc {

// Exact C(n, k); throws std::overflow_error when the value exceeds uint64.
std::uint64_t binomial(int n, int k);

// The k-subset of {0,...,m-1} at lexicographic `rank` among all k-subsets,
// returned in increasing order. Ranks count subsets as sorted tuples.
std::vector<int> subset_at_rank(int m, int k, std::uint64_t rank);

// Inverse of subset_at_rank; `subset` must be strictly increasing.
std::uint64_t subset_rank(int m, const std::vector<int>& subset);

// Advances `subset` to its lexicographic successor. Returns false (leaving
// the subset untouched) when it is already the last one.
bool next_subset(int m, std::vector<int>& subset);

}  // namespace odisc
