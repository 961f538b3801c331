#ifndef TOMOROUTE_ACTION_HPP_
#define TOMOROUTE_ACTION_HPP_

#include <string>
#include <vector>

namespace tomoroute {

// Product of probability simplices: one block per prefix (egress picking) or
// per source-destination pair (segment routing). Split actions live on this
// polytope.
class BlockSimplexSpace {
 public:
  BlockSimplexSpace() = default;
  explicit BlockSimplexSpace(std::vector<int> block_sizes);

  int n_blocks() const { return static_cast<int>(sizes_.size()); }
  int block_size(int b) const { return sizes_[b]; }
  int block_offset(int b) const { return offsets_[b]; }
  int total_dim() const { return total_; }
  const std::vector<int>& block_sizes() const { return sizes_; }

  bool operator==(const BlockSimplexSpace&) const = default;

 private:
  std::vector<int> sizes_;
  std::vector<int> offsets_;
  int total_ = 0;
};

// Flat vector of split fractions, partitioned per BlockSimplexSpace.
struct SplitAction {
  std::vector<double> values;

  double& operator[](int i) { return values[i]; }
  double operator[](int i) const { return values[i]; }
  int dim() const { return static_cast<int>(values.size()); }
};

inline constexpr double kBlockSumTolerance = 1e-6;

// True when every entry is non-negative and each block sums to 1 within
// kBlockSumTolerance.
bool is_feasible(const SplitAction& action, const BlockSimplexSpace& space);

// Throws ConstraintError naming the first offending block.
void check_feasible(const SplitAction& action, const BlockSimplexSpace& space,
                    const std::string& context = "");

// Uniform 1/size split in every block.
SplitAction equal_split(const BlockSimplexSpace& space);

double euclidean_distance(const SplitAction& a, const SplitAction& b);

}  // namespace tomoroute

#endif  // TOMOROUTE_ACTION_HPP_
