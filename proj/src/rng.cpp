#include "gas3km/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace gas3km {

RngStream::RngStream(std::uint64_t seed) : engine_(splitmix64(seed)) {}

double RngStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::uniform_open() {
  double u;
  do {
    u = uniform();
  } while (u == 0.0);
  return u;
}

std::size_t RngStream::below(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("RngStream::below: bound must be positive");
  const std::uint64_t b = bound;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % b;
  std::uint64_t r;
  do {
    r = engine_();
  } while (r >= limit);
  return static_cast<std::size_t>(r % b);
}

double RngStream::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * uniform() - 1.0;
    v = 2.0 * uniform() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double scale = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * scale;
  has_spare_ = true;
  return u * scale;
}

std::vector<std::size_t> RngStream::sample_distinct(std::size_t n, std::size_t k,
                                                    std::size_t exclude) {
  const std::size_t available = n - (exclude < n ? 1 : 0);
  if (k > available) throw std::invalid_argument("sample_distinct: not enough candidates");
  std::vector<std::size_t> out;
  out.reserve(k);
  if (4 * k <= available) {
    while (out.size() < k) {
      const std::size_t c = below(n);
      if (c == exclude || std::find(out.begin(), out.end(), c) != out.end()) continue;
      out.push_back(c);
    }
    return out;
  }
  std::vector<std::size_t> pool;
  pool.reserve(available);
  for (std::size_t i = 0; i < n; ++i)
    if (i != exclude) pool.push_back(i);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + below(pool.size() - i);
    std::swap(pool[i], pool[j]);
    out.push_back(pool[i]);
  }
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ (b + 0x632be59bd9b4e019ULL + (a << 6) + (a >> 2)));
}

}  // namespace gas3km
