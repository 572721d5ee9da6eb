#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace gas3km {

/// Seeded random stream. The engine is std::mt19937_64, whose output sequence
/// is fixed by the standard; the distributions are implemented here rather than
/// taken from <random> so that results match across standard libraries.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform in (0, 1).
  double uniform_open();
  /// Uniform integer in [0, bound). bound must be positive.
  std::size_t below(std::size_t bound);
  /// Standard normal deviate (Marsaglia polar method).
  double normal();

  /// k distinct values from [0, n), skipping `exclude` when it is < n.
  /// Order is the draw order.
  std::vector<std::size_t> sample_distinct(std::size_t n, std::size_t k,
                                           std::size_t exclude = npos);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::mt19937_64 engine_;
  double spare_normal_ = 0.0;
  bool has_spare_ = false;
};

/// SplitMix64 finalizer; used to derive independent seeds.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace gas3km
