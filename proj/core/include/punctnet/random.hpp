#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>

namespace punctnet {

/// The library's random source. mt19937_64 is fully specified by the C++
/// standard, so a seed reproduces the same stream on every platform.
using Rng = std::mt19937_64;

inline constexpr std::string_view kRngName = "mt19937_64";

/// Streams used when deriving per-task seeds from a run seed.
enum class SeedStream : std::uint64_t {
  Sampling = 1,
  NullShuffle = 2,
  SourceSampling = 4,
  RemovalNull = 5,
};

/// splitmix64 finaliser over (base, stream, index). Task i of a stream gets
/// derive_seed(run_seed, stream, i).
std::uint64_t derive_seed(std::uint64_t base, SeedStream stream, std::uint64_t index);

Rng make_rng(std::uint64_t base, SeedStream stream, std::uint64_t index);

/// Unbiased integer in [0, bound) by rejection; bound must be > 0.
/// Used instead of std::uniform_int_distribution, whose output is
/// implementation-defined.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

/// Fisher-Yates shuffle driven by uniform_below().
template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace punctnet
