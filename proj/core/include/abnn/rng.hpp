#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace abnn {

// Hash-combines seeds into independent stream ids (splitmix64 finalizer).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d);

// Deterministic PRNG (splitmix64 core). Owns its own distributions so every
// stream replays bit-identically regardless of platform or standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform();                    // [0, 1)
  double uniform(double lo, double hi);
  double normal();                     // N(0, 1) via Box-Muller
  std::size_t below(std::size_t n);    // uniform integer in [0, n)
  int bernoulli(double p);             // 1 with probability p

  std::vector<double> normal_vec(std::size_t n);
  std::vector<std::size_t> permutation(std::size_t n);  // Fisher-Yates

 private:
  std::uint64_t state_;
};

}  // namespace abnn
