// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "spatialq/errors.hpp"

namespace spatialq {

/// Fibonacci linear-feedback shift register over GF(2).
///
/// The feedback polynomial is given as a list of tap positions (1-based,
/// highest = register width). With a primitive polynomial the sequence is
/// maximal length, period 2^width - 1, and the state never reaches zero.
class Lfsr {
  public:
    Lfsr(int width, std::vector<int> taps, std::uint64_t seed);

    /// Width-32 register with the primitive polynomial
    /// x^32 + x^22 + x^2 + x + 1 (taps 32, 22, 2, 1).
    static Lfsr max_length_32(std::uint64_t seed);

    /// Width-16 register with x^16 + x^14 + x^13 + x^11 + 1; small enough to
    /// enumerate its full period in tests.
    static Lfsr max_length_16(std::uint64_t seed);

    int next_bit();

    /// Uniform double in [0, 1) from the next 24 output bits.
    double next_uniform();

    std::uint64_t state() const { return state_; }
    int width() const { return width_; }

  private:
    int width_;
    std::uint64_t mask_;
    std::uint64_t tap_mask_;
    std::uint64_t state_;
};

}  // namespace spatialq
