#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace fogcell {

// Counter-free deterministic RNG built on splitmix64. Every stochastic
// operation derives its stream from (master_seed, stream_label, index), so
// trials can run in any order and still reproduce bit-identical results.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  // Substream derivation: master seed is mixed with an FNV-1a hash of the
  // label, then with the index. Two distinct (label, index) pairs yield
  // independent-looking streams.
  static Rng stream(std::uint64_t master, std::string_view label,
                    std::uint64_t index) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : label) {
      h ^= static_cast<unsigned char>(c);
      h *= 1099511628211ull;
    }
    std::uint64_t s = mix(master ^ h);
    s = mix(s ^ index);
    return Rng(s);
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return mix_z(state_);
  }

  // Uniform on [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform on (0, 1]; avoids log(0) in Box-Muller and exponential draws.
  double next_open_double() {
    return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  }

  // Box-Muller, cosine branch only. Two uniforms per normal draw, so the
  // stream position is a pure function of how many normals were taken.
  double next_normal() {
    const double u1 = next_open_double();
    const double u2 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  double next_uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  double next_exponential(double rate) {
    return -std::log(next_open_double()) / rate;
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    return mix_z(x + 0x9E3779B97F4A7C15ull);
  }
  static std::uint64_t mix_z(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace fogcell
