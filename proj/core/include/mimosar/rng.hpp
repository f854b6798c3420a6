#ifndef MIMOSAR_RNG_HPP
#define MIMOSAR_RNG_HPP

#include <cstdint>
#include <utility>

namespace mimosar {

/// Counter-based substream derivation: a master seed plus a stream id
/// (e.g. "noise", slow-time index, Monte Carlo rep) yields an independent
/// generator, so stage outputs do not depend on worker count or call order.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                 std::uint64_t index = 0) {
  return splitmix64(splitmix64(master ^ splitmix64(stream)) ^ index);
}

/// xoshiro256++; deterministic across platforms, unlike the distributions
/// in <random>.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    for (auto& w : s_) w = splitmix64(seed = splitmix64(seed));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform in (0, 1]; never exactly 0 so log() below is safe.
  double uniform() { return double((next() >> 11) + 1) * 0x1.0p-53; }

  /// Pair of independent standard normals (Box-Muller).
  std::pair<double, double> normal_pair() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4];
};

}  // namespace mimosar

#endif
