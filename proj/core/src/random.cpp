#include "punctnet/random.hpp"

#include <limits>

namespace punctnet {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, SeedStream stream, std::uint64_t index) {
  return splitmix64(splitmix64(base ^ splitmix64(static_cast<std::uint64_t>(stream))) + index);
}

Rng make_rng(std::uint64_t base, SeedStream stream, std::uint64_t index) {
  return Rng(derive_seed(base, stream, index));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  // reject the top partial block so every residue is equally likely
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % bound;
}

}  // namespace punctnet
