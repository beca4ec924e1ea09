// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "spatialq/errors.hpp"

namespace spatialq {

/// Packed bit buffer, most-significant-bit-first within each byte.
///
/// Bit i lives in byte i/8 at position 7 - (i % 8); this is the file order
/// used by all bit-stream artifacts of the toolchain.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : bytes_((nbits + 7) / 8, 0), nbits_(nbits) {}

    static BitVec from_bytes(std::vector<std::uint8_t> bytes, std::size_t nbits);
    static BitVec read_file(const std::filesystem::path& path);

    void push_back(bool bit);
    bool get(std::size_t i) const { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1; }
    void set(std::size_t i, bool bit);

    std::size_t size() const { return nbits_; }
    bool empty() const { return nbits_ == 0; }
    const std::vector<std::uint8_t>& bytes() const { return bytes_; }

    void append(const BitVec& other);
    BitVec slice(std::size_t begin, std::size_t count) const;

    /// Pointwise XOR; sizes must match.
    BitVec operator^(const BitVec& other) const;
    bool operator==(const BitVec& other) const;

    /// Repack as 64-bit limbs with polynomial-coefficient order: bit k of
    /// limb w holds buffer bit 64*w + k (LSB-first within the limb).
    std::vector<std::uint64_t> to_limbs() const;
    static BitVec from_limbs(const std::vector<std::uint64_t>& limbs, std::size_t nbits);

    void write_file(const std::filesystem::path& path) const;

    /// Histogram of byte values over the first size()/8 whole bytes.
    std::array<std::uint64_t, 256> byte_histogram() const;

  private:
    std::vector<std::uint8_t> bytes_;
    std::size_t nbits_ = 0;
};

}  // namespace spatialq
