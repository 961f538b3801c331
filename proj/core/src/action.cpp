#include "tomoroute/action.hpp"

#include <cmath>

#include "tomoroute/errors.hpp"

namespace tomoroute {

BlockSimplexSpace::BlockSimplexSpace(std::vector<int> block_sizes)
    : sizes_(std::move(block_sizes)) {
  offsets_.reserve(sizes_.size());
  for (int s : sizes_) {
    if (s < 1) throw ConfigError("block size must be >= 1");
    offsets_.push_back(total_);
    total_ += s;
  }
}

bool is_feasible(const SplitAction& action, const BlockSimplexSpace& space) {
  if (action.dim() != space.total_dim()) return false;
  for (int b = 0; b < space.n_blocks(); ++b) {
    double sum = 0.0;
    for (int i = 0; i < space.block_size(b); ++i) {
      double v = action[space.block_offset(b) + i];
      if (!(v >= 0.0) || !std::isfinite(v)) return false;
      sum += v;
    }
    if (std::abs(sum - 1.0) > kBlockSumTolerance) return false;
  }
  return true;
}

void check_feasible(const SplitAction& action, const BlockSimplexSpace& space,
                    const std::string& context) {
  const std::string where = context.empty() ? "" : context + ": ";
  if (action.dim() != space.total_dim())
    throw ConstraintError(where + "action dimension " +
                          std::to_string(action.dim()) + " != space dimension " +
                          std::to_string(space.total_dim()));
  for (int b = 0; b < space.n_blocks(); ++b) {
    double sum = 0.0;
    for (int i = 0; i < space.block_size(b); ++i) {
      double v = action[space.block_offset(b) + i];
      if (!(v >= 0.0) || !std::isfinite(v))
        throw ConstraintError(where + "negative or non-finite entry in block " +
                              std::to_string(b));
      sum += v;
    }
    if (std::abs(sum - 1.0) > kBlockSumTolerance)
      throw ConstraintError(where + "block " + std::to_string(b) +
                            " sums to " + std::to_string(sum));
  }
}

SplitAction equal_split(const BlockSimplexSpace& space) {
  SplitAction a;
  a.values.resize(space.total_dim());
  for (int b = 0; b < space.n_blocks(); ++b) {
    double v = 1.0 / space.block_size(b);
    for (int i = 0; i < space.block_size(b); ++i)
      a[space.block_offset(b) + i] = v;
  }
  return a;
}

double euclidean_distance(const SplitAction& a, const SplitAction& b) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

}  // namespace tomoroute
