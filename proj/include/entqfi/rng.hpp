// SPDX-License-Identifier: Apache-2.0
//
// Deterministic per-index random streams.
//
// Algorithm (pinned; CSV fixtures depend on it):
//   * stream state is a SplitMix64 counter; each draw adds the golden gamma
//     0x9e3779b97f4a7c15 and returns the SplitMix64 finalizer of the counter
//   * derive_stream(seed, i) starts the counter at
//       mix(mix(seed) + (i + 1) * 0xd1b54a32d192ed03)
//   * uniform(): top 53 bits of a draw times 2^-53, in [0, 1)
//   * normal(): Box-Muller on (1 - uniform(), uniform()), both outputs used in order
#pragma once

#include <cstdint>

namespace entqfi {

/// SplitMix64 output finalizer.
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) noexcept
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

class RngStream
{
  public:
    explicit RngStream(std::uint64_t counter) noexcept : counter_(counter) {}

    std::uint64_t next_u64() noexcept
    {
        counter_ += 0x9e3779b97f4a7c15ull;
        return splitmix64_mix(counter_);
    }

    double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal deviate.
    double normal() noexcept;

    std::uint64_t counter() const noexcept { return counter_; }

    friend bool operator==(const RngStream&, const RngStream&) = default;

  private:
    std::uint64_t counter_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

RngStream derive_stream(std::uint64_t master_seed, std::uint64_t index) noexcept;

}  // namespace entqfi
