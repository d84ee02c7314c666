#include "collide/random.hpp"

#include <cmath>

namespace collide {
namespace {

std::seed_seq make_seed_seq(Seed s) {
  return std::seed_seq{static_cast<std::uint32_t>(s.seed), static_cast<std::uint32_t>(s.seed >> 32),
                       static_cast<std::uint32_t>(s.stream), static_cast<std::uint32_t>(s.stream >> 32)};
}

}  // namespace

Rng::Rng(Seed seed) {
  auto seq = make_seed_seq(seed);
  engine_.seed(seq);
}

double Rng::uniform() {
  constexpr double kScale = 0x1.0p-53;
  return (static_cast<double>(engine_() >> 11) + 0.5) * kScale;
}

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  std::uint64_t x = engine_();
  u128 m = static_cast<u128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      x = engine_();
      m = static_cast<u128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double Rng::exponential() { return -std::log(uniform()); }

}  // namespace collide
