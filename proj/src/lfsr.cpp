// SPDX-License-Identifier: Apache-2.0
#include "spatialq/lfsr.hpp"

#include <bit>

namespace spatialq {

Lfsr::Lfsr(int width, std::vector<int> taps, std::uint64_t seed) : width_(width) {
    if (width < 2 || width > 63) throw ParameterError("lfsr: width must be in [2, 63]");
    mask_ = (std::uint64_t{1} << width) - 1;
    tap_mask_ = 0;
    for (int t : taps) {
        if (t < 1 || t > width) throw ParameterError("lfsr: tap position out of range");
        tap_mask_ |= std::uint64_t{1} << (t - 1);
    }
    state_ = seed & mask_;
    if (state_ == 0) state_ = 0xACE1u & mask_;  // the all-zero state is absorbing
    if (state_ == 0) state_ = 1;
}

Lfsr Lfsr::max_length_32(std::uint64_t seed) { return Lfsr(32, {32, 22, 2, 1}, seed); }

Lfsr Lfsr::max_length_16(std::uint64_t seed) { return Lfsr(16, {16, 14, 13, 11}, seed); }

int Lfsr::next_bit() {
    const int out = static_cast<int>(state_ & 1);
    const int fb = std::popcount(state_ & tap_mask_) & 1;
    state_ = (state_ >> 1) | (static_cast<std::uint64_t>(fb) << (width_ - 1));
    return out;
}

double Lfsr::next_uniform() {
    std::uint32_t v = 0;
    for (int i = 0; i < 24; ++i) v = (v << 1) | static_cast<std::uint32_t>(next_bit());
    return static_cast<double>(v) * 0x1.0p-24;
}

}  // namespace spatialq
