// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>

namespace spatialq {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// The generator is a pure function of (counter, key), which makes streams
/// splittable: every (seed, stream) pair owns the disjoint counter space
/// {stream} x [0, 2^64) and can be consumed independently of all others.
struct Philox4x32 {
    static std::array<std::uint32_t, 4> block(const std::array<std::uint32_t, 4>& counter,
                                              const std::array<std::uint32_t, 2>& key);
};

/// Stream identifiers: (domain, index) pairs packed into the upper counter
/// half so that independent parts of a run never share Philox blocks.
enum class StreamDomain : std::uint64_t {
    blocks = 1,     // one stream per protocol block, index = block number
    sweep = 2,      // one stream per voltage-sweep point
    extractor = 3,  // Toeplitz seed material, index = block number
    aux = 4,        // scratch streams for tests and tools
};

constexpr std::uint64_t stream_id(StreamDomain d, std::uint64_t index) {
    return (static_cast<std::uint64_t>(d) << 48) | (index & 0xFFFFFFFFFFFFull);
}

/// A deterministic random stream: Philox4x32-10 keyed by a 64-bit seed, with
/// the 128-bit counter split as (draw counter | stream id).
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();

    bool bernoulli(double p) { return next_double() < p; }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

  private:
    void refill();

    std::uint64_t seed_;
    std::uint64_t stream_;
    std::uint64_t block_index_ = 0;
    std::array<std::uint32_t, 4> buf_{};
    int pos_ = 4;  // buffer exhausted; first draw refills
};

}  // namespace spatialq
