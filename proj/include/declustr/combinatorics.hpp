#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace declustr {

// Binomial coefficient C(n, r); zero when r < 0 or r > n. Exact for every
// value that fits in 64 bits.
std::uint64_t binomial(int n, int r);

// Calls visit(subset) for every r-subset of {0, ..., n-1} in lexicographic
// order. The span is only valid for the duration of the call.
void for_each_subset(int n, int r, const std::function<void(std::span<const int>)>& visit);

// All r-subsets of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> all_subsets(int n, int r);

// Position of a sorted subset in colexicographic order; a dense index into
// an array of size C(n, r).
std::uint64_t colex_rank(std::span<const int> sorted_subset);

}  // namespace declustr
