#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace declustr {

// Parameters of a t-(n,k,lambda) design.
struct DesignParams {
  int t = 0;
  int n = 0;
  int k = 0;
  std::int64_t lambda = 0;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;

  // "3-(8,4,1)"
  std::string to_string() const;
};

// Throws ParamError unless 1 <= t <= k <= n <= kMaxPoints, lambda >= 1 and the
// implied block count is integral.
void check_params(const DesignParams& params);

// Points are tracked in 64-bit masks during validation.
inline constexpr int kMaxPoints = 64;

// lambda * C(n,t) / C(k,t).
std::int64_t expected_block_count(const DesignParams& params);

using Block = std::vector<int>;

// A validated t-design. Blocks are stored sorted; the collection keeps its
// input order and may contain repeats. Only obtainable through the
// constructors below, so every instance satisfies the coverage invariant.
class Design {
 public:
  const DesignParams& params() const { return params_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  const Block& block(std::size_t i) const { return blocks_.at(i); }

  friend bool operator==(const Design&, const Design&) = default;

 private:
  friend Design validate_design(const DesignParams&, std::vector<Block>);
  Design(DesignParams params, std::vector<Block> blocks)
      : params_(params), blocks_(std::move(blocks)) {}

  DesignParams params_;
  std::vector<Block> blocks_;
};

// Exhaustive validation: every block must be a k-subset of {0..n-1}
// (BlockSizeError) and every t-subset must lie in exactly lambda blocks
// (CoverageError naming the first offending subset in lexicographic order).
Design validate_design(const DesignParams& params, std::vector<Block> blocks);

// All C(n,k) k-subsets in lexicographic order; lambda = C(n-t, k-t).
Design complete_design(int n, int k, int t);

// 3-(n, n/2, n/4 - 1) design from the rows of the Sylvester Hadamard matrix of
// order n. Each non-constant row contributes its +1 support then its -1
// support. n must be a power of two, n >= 8.
Design hadamard_3design(int n);

// True iff the block multiset is closed under complementation. Requires 2k = n.
bool is_self_complementary(const Design& design);
// Same test on an unvalidated collection of k-subsets of {0..n-1}.
bool is_self_complementary(int n, const std::vector<Block>& blocks);

// lambda_i^(j): number of blocks containing a fixed i-set and avoiding a
// disjoint j-set, lambda * C(n-i-j, k-i) / C(n-t, k-t). Requires i + j <= t.
std::int64_t count_lambda(const DesignParams& params, int i, int j);

// Direct count of blocks that contain every point of `inside` and none of
// `outside`.
std::int64_t count_blocks(const Design& design, std::span<const int> inside,
                          std::span<const int> outside);

// Same blocks read as an s-design with lambda_s = count_lambda(params, s, 0).
Design reduce_design(const Design& design, int s);

}  // namespace declustr
