#pragma once

#include <cstdint>

namespace cpair {

/// splitmix64 output finalizer; also used to derive per-trial seeds.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Vigna's splitmix64 stream. Reproducible across languages, so point sets
/// generated from a seed are the same in every implementation.
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t operator()() noexcept
    {
        state_ += 0x9e3779b97f4a7c15ULL;
        return splitmix64_mix(state_);
    }

    /// Top 53 bits scaled by 2^-53, uniform in [0, 1).
    constexpr double next_unit() noexcept
    {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

}  // namespace cpair
