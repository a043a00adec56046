#include "declustr/design.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "declustr/combinatorics.hpp"
#include "declustr/error.hpp"

namespace declustr {
namespace {

using Wide = unsigned __int128;

std::string format_subset(std::span<const int> subset) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < subset.size(); ++i) os << (i ? "," : "") << subset[i];
  os << '}';
  return os.str();
}

std::uint64_t mask_of(std::span<const int> points) {
  std::uint64_t mask = 0;
  for (int p : points) mask |= std::uint64_t{1} << p;
  return mask;
}

// lambda * C(a, b) / C(n - t, k - t), requiring exact division.
std::int64_t scaled_ratio(const DesignParams& p, int a, int b) {
  const Wide num = Wide(static_cast<std::uint64_t>(p.lambda)) * binomial(a, b);
  const Wide den = binomial(p.n - p.t, p.k - p.t);
  if (den == 0 || num % den != 0) {
    throw ParamError("non-integral block count for " + p.to_string());
  }
  return static_cast<std::int64_t>(num / den);
}

}  // namespace

std::string DesignParams::to_string() const {
  std::ostringstream os;
  os << t << "-(" << n << ',' << k << ',' << lambda << ')';
  return os.str();
}

void check_params(const DesignParams& p) {
  if (p.t < 1 || p.t > p.k || p.k > p.n) {
    throw ParamError("design parameters must satisfy 1 <= t <= k <= n, got " + p.to_string());
  }
  if (p.n > kMaxPoints) {
    throw ParamError("at most " + std::to_string(kMaxPoints) + " points are supported");
  }
  if (p.lambda < 1) throw ParamError("lambda must be positive, got " + p.to_string());
  const Wide num = Wide(static_cast<std::uint64_t>(p.lambda)) * binomial(p.n, p.t);
  if (num % binomial(p.k, p.t) != 0) {
    throw ParamError("lambda*C(n,t) is not divisible by C(k,t) for " + p.to_string());
  }
}

std::int64_t expected_block_count(const DesignParams& p) {
  check_params(p);
  const Wide num = Wide(static_cast<std::uint64_t>(p.lambda)) * binomial(p.n, p.t);
  return static_cast<std::int64_t>(num / binomial(p.k, p.t));
}

Design validate_design(const DesignParams& params, std::vector<Block> blocks) {
  check_params(params);
  const auto [t, n, k, lambda] = params;

  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Block& b = blocks[i];
    std::sort(b.begin(), b.end());
    const bool in_range = std::all_of(b.begin(), b.end(), [n](int x) { return x >= 0 && x < n; });
    const bool distinct = std::adjacent_find(b.begin(), b.end()) == b.end();
    if (static_cast<int>(b.size()) != k || !in_range || !distinct) {
      throw BlockSizeError("block " + std::to_string(i) + " " + format_subset(b) +
                           " is not a " + std::to_string(k) + "-subset of {0.." +
                           std::to_string(n - 1) + "}");
    }
  }

  // Tally every t-subset of every block, then sweep all C(n,t) subsets.
  std::vector<std::int64_t> counts(binomial(n, t), 0);
  for (const Block& b : blocks) {
    for_each_subset(k, t, [&](std::span<const int> idx) {
      std::vector<int> sub(idx.size());
      for (std::size_t j = 0; j < idx.size(); ++j) sub[j] = b[idx[j]];
      ++counts[colex_rank(sub)];
    });
  }
  for_each_subset(n, t, [&](std::span<const int> sub) {
    const std::int64_t c = counts[colex_rank(sub)];
    if (c != lambda) {
      throw CoverageError(std::to_string(t) + "-subset " + format_subset(sub) + " occurs in " +
                          std::to_string(c) + " blocks, expected " + std::to_string(lambda));
    }
  });

  // Implied by full coverage, but cheap to state.
  if (static_cast<std::int64_t>(blocks.size()) != expected_block_count(params)) {
    throw CoverageError("block count " + std::to_string(blocks.size()) + " differs from " +
                        std::to_string(expected_block_count(params)));
  }
  return Design(params, std::move(blocks));
}

Design complete_design(int n, int k, int t) {
  if (t < 1 || t > k || k > n) {
    throw ParamError("complete design needs 1 <= t <= k <= n");
  }
  if (n > kMaxPoints) throw ParamError("too many points");
  const DesignParams params{t, n, k, static_cast<std::int64_t>(binomial(n - t, k - t))};
  return validate_design(params, all_subsets(n, k));
}

Design hadamard_3design(int n) {
  if (n < 8 || n > kMaxPoints || !std::has_single_bit(static_cast<unsigned>(n))) {
    throw ParamError("Sylvester Hadamard design needs n a power of two in [8, " +
                     std::to_string(kMaxPoints) + "], got " + std::to_string(n));
  }
  // Sylvester matrix entry (i, j) is +1 iff popcount(i & j) is even.
  std::vector<Block> blocks;
  blocks.reserve(2 * (n - 1));
  for (int row = 1; row < n; ++row) {
    Block plus, minus;
    for (int col = 0; col < n; ++col) {
      (std::popcount(static_cast<unsigned>(row & col)) % 2 == 0 ? plus : minus).push_back(col);
    }
    blocks.push_back(std::move(plus));
    blocks.push_back(std::move(minus));
  }
  return validate_design({3, n, n / 2, n / 4 - 1}, std::move(blocks));
}

bool is_self_complementary(const Design& design) {
  const auto& p = design.params();
  if (2 * p.k != p.n) {
    throw ParamError("self-complementarity needs 2k = n, got " + p.to_string());
  }
  return is_self_complementary(p.n, design.blocks());
}

bool is_self_complementary(int n, const std::vector<Block>& blocks) {
  if (n < 2 || n > kMaxPoints) throw ParamError("point count out of range");
  std::map<std::uint64_t, int> multiset;
  for (const Block& b : blocks) {
    if (2 * static_cast<int>(b.size()) != n) {
      throw ParamError("self-complementarity needs blocks of size n/2");
    }
    for (int x : b) {
      if (x < 0 || x >= n) throw BlockSizeError("block point out of range");
    }
    ++multiset[mask_of(b)];
  }
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return std::all_of(multiset.begin(), multiset.end(), [&](const auto& entry) {
    auto it = multiset.find(full & ~entry.first);
    return it != multiset.end() && it->second == entry.second;
  });
}

std::int64_t count_lambda(const DesignParams& params, int i, int j) {
  check_params(params);
  if (i < 0 || j < 0 || i + j > params.t) {
    throw ParamError("count_lambda needs i, j >= 0 and i + j <= t");
  }
  return scaled_ratio(params, params.n - i - j, params.k - i);
}

std::int64_t count_blocks(const Design& design, std::span<const int> inside,
                          std::span<const int> outside) {
  const std::uint64_t in = mask_of(inside);
  const std::uint64_t out = mask_of(outside);
  return std::count_if(design.blocks().begin(), design.blocks().end(), [&](const Block& b) {
    const std::uint64_t m = mask_of(b);
    return (m & in) == in && (m & out) == 0;
  });
}

Design reduce_design(const Design& design, int s) {
  const auto& p = design.params();
  if (s < 1 || s > p.t) throw ParamError("reduce_design needs 1 <= s <= t");
  const DesignParams reduced{s, p.n, p.k, count_lambda(p, s, 0)};
  return validate_design(reduced, design.blocks());
}

}  // namespace declustr
