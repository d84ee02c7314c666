#pragma once

#include <cstdint>
#include <random>

namespace collide {

struct Seed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// Seeded generator with explicit streams.
///
/// The engine is std::mt19937_64 (bit-exact across conforming standard
/// libraries) initialized through std::seed_seq from the four 32-bit halves
/// of (seed, stream). Conversions to uniform doubles, bounded integers and
/// exponentials are done here rather than through <random> distributions,
/// whose algorithms are implementation-defined.
class Rng {
 public:
  explicit Rng(Seed seed);

  std::uint64_t next() { return engine_(); }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform();

  /// Uniform integer in [0, bound), bound >= 1 (Lemire's multiply-shift with
  /// rejection).
  std::uint64_t below(std::uint64_t bound);

  /// Exponential(1).
  double exponential();

 private:
  std::mt19937_64 engine_;
};

}  // namespace collide
