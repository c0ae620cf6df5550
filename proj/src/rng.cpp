#include "pconvex/rng.hpp"

#include <cmath>

namespace pconvex {

std::vector<std::int64_t> quantize_direction(const Vec& u) {
  std::vector<std::int64_t> q(static_cast<size_t>(u.size()));
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const double scaled = u[i] * 1e12;
    std::int64_t v = static_cast<std::int64_t>(std::llround(scaled));
    if (v == 0) v = 0;  // normalize -0
    q[static_cast<size_t>(i)] = v;
  }
  return q;
}

std::uint64_t direction_hash(std::uint64_t seed, const Vec& u) {
  std::uint64_t h = mix64(seed);
  for (std::int64_t v : quantize_direction(u)) {
    h = hash_combine(h, static_cast<std::uint64_t>(v));
  }
  return h;
}

Rng::Rng(std::uint64_t seed) {
  // splitmix64 seeding as recommended for xoshiro
  std::uint64_t x = seed;
  for (auto& s : s_) {
    x += 0x9e3779b97f4a7c15ULL;
    s = mix64(x);
  }
}

static inline std::uint64_t rotl(std::uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

std::uint64_t Rng::next_u64() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

double Rng::uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform_open() {
  double u;
  do {
    u = uniform01();
  } while (u <= 0.0);
  return u;
}

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_open();
  const double u2 = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Vec Rng::normal_vec(int dim) {
  Vec v(dim);
  for (int i = 0; i < dim; ++i) v[i] = normal();
  return v;
}

Vec Rng::sphere_point(int dim) {
  while (true) {
    Vec v = normal_vec(dim);
    const double norm = v.norm();
    if (norm > 1e-300) return v / norm;
  }
}

std::vector<Vec> sphere_sample(int m, long long count, std::uint64_t seed) {
  require(m >= 1, "sphere_sample: dimension must be >= 1");
  require(count >= 0, "sphere_sample: negative count");
  Rng rng(seed);
  std::vector<Vec> out;
  out.reserve(static_cast<size_t>(count));
  for (long long i = 0; i < count; ++i) out.push_back(rng.sphere_point(m));
  return out;
}

}  // namespace pconvex
