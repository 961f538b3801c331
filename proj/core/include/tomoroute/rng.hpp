#ifndef TOMOROUTE_RNG_HPP_
#define TOMOROUTE_RNG_HPP_

#include <cstdint>
#include <random>

namespace tomoroute {

// splitmix64 step; used for seed derivation so that independent components
// (environment, agents, buffers, ...) get decorrelated streams from one
// master seed.
std::uint64_t splitmix64(std::uint64_t& state);

// Deterministic sub-seed for a named stream of a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

// mt19937_64 with hand-rolled distributions. The standard library's
// distribution objects are implementation-defined, so every draw here is
// spelled out to keep runs reproducible across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // [0, n), unbiased
  int uniform_int(int n);

  double exponential(double mean);

  // Box-Muller; consumes two uniforms per draw.
  double gaussian(double mean, double stddev);

 private:
  std::mt19937_64 gen_;
};

}  // namespace tomoroute

#endif  // TOMOROUTE_RNG_HPP_
