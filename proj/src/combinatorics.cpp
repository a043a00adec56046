#include "declustr/combinatorics.hpp"

#include <numeric>

namespace declustr {

std::uint64_t binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t result = 1;
  for (int i = 1; i <= r; ++i) {
    // result * (n - r + i) is divisible by i at every step.
    const std::uint64_t num = static_cast<std::uint64_t>(n - r + i);
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    result = (result / g) * (num / (i / g));
  }
  return result;
}

void for_each_subset(int n, int r, const std::function<void(std::span<const int>)>& visit) {
  if (r < 0 || r > n) return;
  std::vector<int> current(r);
  std::iota(current.begin(), current.end(), 0);
  while (true) {
    visit(current);
    int i = r - 1;
    while (i >= 0 && current[i] == n - r + i) --i;
    if (i < 0) return;
    ++current[i];
    for (int j = i + 1; j < r; ++j) current[j] = current[j - 1] + 1;
  }
}

std::vector<std::vector<int>> all_subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  out.reserve(binomial(n, r));
  for_each_subset(n, r, [&](std::span<const int> s) { out.emplace_back(s.begin(), s.end()); });
  return out;
}

std::uint64_t colex_rank(std::span<const int> sorted_subset) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < sorted_subset.size(); ++i) {
    rank += binomial(sorted_subset[i], static_cast<int>(i) + 1);
  }
  return rank;
}

}  // namespace declustr
