// SPDX-License-Identifier: Apache-2.0
#include "spatialq/bits.hpp"

#include <fstream>

namespace spatialq {

BitVec BitVec::from_bytes(std::vector<std::uint8_t> bytes, std::size_t nbits) {
    if (nbits > bytes.size() * 8) throw ParameterError("bitvec: nbits exceeds byte payload");
    BitVec v;
    v.bytes_ = std::move(bytes);
    v.bytes_.resize((nbits + 7) / 8);
    v.nbits_ = nbits;
    // clear any tail bits beyond nbits
    if (nbits % 8 != 0 && !v.bytes_.empty()) {
        const std::uint8_t keep = static_cast<std::uint8_t>(0xFF << (8 - nbits % 8));
        v.bytes_.back() &= keep;
    }
    return v;
}

BitVec BitVec::read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open bit file for reading: " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    const std::size_t n = bytes.size() * 8;
    return from_bytes(std::move(bytes), n);
}

void BitVec::push_back(bool bit) {
    if (nbits_ % 8 == 0) bytes_.push_back(0);
    if (bit) bytes_.back() |= static_cast<std::uint8_t>(1u << (7 - (nbits_ & 7)));
    ++nbits_;
}

void BitVec::set(std::size_t i, bool bit) {
    const std::uint8_t mask = static_cast<std::uint8_t>(1u << (7 - (i & 7)));
    if (bit)
        bytes_[i >> 3] |= mask;
    else
        bytes_[i >> 3] &= static_cast<std::uint8_t>(~mask);
}

void BitVec::append(const BitVec& other) {
    if (nbits_ % 8 == 0) {
        bytes_.insert(bytes_.end(), other.bytes_.begin(), other.bytes_.end());
        nbits_ += other.nbits_;
        bytes_.resize((nbits_ + 7) / 8);
        return;
    }
    for (std::size_t i = 0; i < other.nbits_; ++i) push_back(other.get(i));
}

BitVec BitVec::slice(std::size_t begin, std::size_t count) const {
    if (begin + count > nbits_) throw ParameterError("bitvec: slice out of range");
    BitVec out;
    out.bytes_.reserve((count + 7) / 8);
    for (std::size_t i = 0; i < count; ++i) out.push_back(get(begin + i));
    return out;
}

BitVec BitVec::operator^(const BitVec& other) const {
    if (nbits_ != other.nbits_) throw ParameterError("bitvec: xor size mismatch");
    BitVec out = *this;
    for (std::size_t i = 0; i < bytes_.size(); ++i) out.bytes_[i] ^= other.bytes_[i];
    return out;
}

bool BitVec::operator==(const BitVec& other) const {
    return nbits_ == other.nbits_ && bytes_ == other.bytes_;
}

std::vector<std::uint64_t> BitVec::to_limbs() const {
    std::vector<std::uint64_t> limbs((nbits_ + 63) / 64, 0);
    for (std::size_t i = 0; i < nbits_; ++i)
        if (get(i)) limbs[i >> 6] |= std::uint64_t{1} << (i & 63);
    return limbs;
}

BitVec BitVec::from_limbs(const std::vector<std::uint64_t>& limbs, std::size_t nbits) {
    BitVec out(nbits);
    for (std::size_t i = 0; i < nbits; ++i)
        if ((limbs[i >> 6] >> (i & 63)) & 1) out.set(i, true);
    return out;
}

void BitVec::write_file(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open bit file for writing: " + path.string());
    out.write(reinterpret_cast<const char*>(bytes_.data()),
              static_cast<std::streamsize>(bytes_.size()));
    if (!out) throw IoError("short write to bit file: " + path.string());
}

std::array<std::uint64_t, 256> BitVec::byte_histogram() const {
    std::array<std::uint64_t, 256> hist{};
    const std::size_t whole = nbits_ / 8;
    for (std::size_t i = 0; i < whole; ++i) ++hist[bytes_[i]];
    return hist;
}

}  // namespace spatialq
