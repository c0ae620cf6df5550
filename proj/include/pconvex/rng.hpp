#pragma once

#include "pconvex/geometry.hpp"

#include <cstdint>
#include <vector>

namespace pconvex {

/// splitmix64 finalizer; used to derive independent sub-streams from
/// (seed, index) or (seed, quantized direction) pairs.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return mix64(seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2)));
}

/// Quantize a unit vector to 12 decimal digits; doubles as a cache key and
/// as hash input for per-direction sub-streams.
std::vector<std::int64_t> quantize_direction(const Vec& u);
std::uint64_t direction_hash(std::uint64_t seed, const Vec& u);

/// Deterministic generator (xoshiro256**). The output stream is pinned by
/// this implementation, not by the platform's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform01();
  /// Uniform in (0, 1) (both endpoints excluded).
  double uniform_open();
  /// Standard normal via Box-Muller.
  double normal();

  Vec normal_vec(int dim);
  /// Uniform point on S^{dim-1}; dim >= 1 (dim == 1 gives +-1).
  Vec sphere_point(int dim);

 private:
  std::uint64_t s_[4];
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Uniform sample on S^{m-1}, deterministic for a fixed seed.
std::vector<Vec> sphere_sample(int m, long long count, std::uint64_t seed);

}  // namespace pconvex
