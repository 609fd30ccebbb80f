#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace rdcirc {

/// Fixed-width vector over Z2. Addition is componentwise XOR.
/// Bits are indexed 0-based; bit 0 is the first (topmost) wire.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(int width) : width_(width), words_((width + 63) / 64, 0) {}
    BitVec(std::initializer_list<int> bits);

    static BitVec from_bits(const std::vector<int>& bits);
    /// Inverse of to_index: the width-bit big-endian representation of value.
    static BitVec from_index(int width, std::uint64_t value);

    int width() const { return width_; }

    bool get(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(int i, bool v) {
        std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }
    void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    BitVec& operator^=(const BitVec& other);
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool is_zero() const;
    int popcount() const;
    /// popcount(a AND b); both operands must have equal width.
    static int popcount_and(const BitVec& a, const BitVec& b);
    /// Parity of popcount(a AND b): the Z2 dot product.
    static bool dot(const BitVec& a, const BitVec& b) { return popcount_and(a, b) & 1; }

    BitVec slice(int begin, int len) const;
    BitVec concat(const BitVec& other) const;

    /// Reads the bits as a big-endian binary number: bit 0 is the most
    /// significant digit. Width must be <= 63.
    std::uint64_t to_index() const;

    /// Hex encoding, 4 bits per digit, bit 0 in the MSB of the first digit;
    /// the final digit is zero-padded on the right.
    std::string to_hex() const;
    std::string to_string() const;  // e.g. "0110"

    bool operator==(const BitVec& other) const = default;

private:
    int width_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace rdcirc
