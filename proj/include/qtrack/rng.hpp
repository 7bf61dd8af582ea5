#pragma once

#include <cstdint>
#include <random>

namespace qtrack {

/// Deterministic random stream. All draws go through explicit helpers
/// (never std::*_distribution, whose output is implementation-defined),
/// so identical seeds give identical sequences on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Uniform integer in [0, n). n must be >= 1.
  int uniform_int(int n) {
    return static_cast<int>((static_cast<unsigned __int128>(next_u64()) *
                             static_cast<unsigned __int128>(n)) >> 64);
  }

  /// Standard normal via Marsaglia's polar method.
  double gaussian();

  /// Poisson sample, exact for any mean >= 0.
  int poisson(double mean);

  /// Poisson sample given exp(-mean), for callers that precompute it.
  int poisson_from_expneg(double exp_neg_mean) {
    int k = 0;
    double p = 1.0;
    do {
      p *= uniform01();
      ++k;
    } while (p > exp_neg_mean);
    return k - 1;
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Derive an independent stream seed from a base seed and a stream index.
/// splitmix64 finalizer; used to give every ensemble member / worker its
/// own stream regardless of job count.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace qtrack
