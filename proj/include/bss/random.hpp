#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace bss {

/// Per-work-item seed derived from a master seed (splitmix64 finalizer over
/// the pair), so path i gets the same stream regardless of thread layout.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Standard normal draws from a seeded 64-bit Mersenne twister.
/// `negated` flips the sign of every draw (antithetic stream).
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed, bool negated = false)
      : engine_(seed), sign_(negated ? -1.0 : 1.0) {}

  double operator()() { return sign_ * normal_(engine_); }

  void fill(std::span<double> out) {
    for (double& x : out) x = (*this)();
  }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  double sign_;
};

}  // namespace bss
