#include "rdcirc/bitvec.hpp"

#include <bit>
#include <cassert>

#include "rdcirc/errors.hpp"

namespace rdcirc {

BitVec::BitVec(std::initializer_list<int> bits) : BitVec(static_cast<int>(bits.size())) {
    int i = 0;
    for (int b : bits) set(i++, b != 0);
}

BitVec BitVec::from_bits(const std::vector<int>& bits) {
    BitVec v(static_cast<int>(bits.size()));
    for (int i = 0; i < v.width_; ++i) v.set(i, bits[i] != 0);
    return v;
}

BitVec BitVec::from_index(int width, std::uint64_t value) {
    BitVec v(width);
    for (int i = 0; i < width; ++i) v.set(i, (value >> (width - 1 - i)) & 1);
    return v;
}

BitVec& BitVec::operator^=(const BitVec& other) {
    if (width_ != other.width_)
        throw WidthMismatch("xor of widths " + std::to_string(width_) + " and " +
                            std::to_string(other.width_));
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
    return *this;
}

bool BitVec::is_zero() const {
    for (auto w : words_)
        if (w != 0) return false;
    return true;
}

int BitVec::popcount() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
}

int BitVec::popcount_and(const BitVec& a, const BitVec& b) {
    if (a.width_ != b.width_)
        throw WidthMismatch("popcount_and of widths " + std::to_string(a.width_) + " and " +
                            std::to_string(b.width_));
    int n = 0;
    for (std::size_t w = 0; w < a.words_.size(); ++w) n += std::popcount(a.words_[w] & b.words_[w]);
    return n;
}

BitVec BitVec::slice(int begin, int len) const {
    assert(begin >= 0 && len >= 0 && begin + len <= width_);
    BitVec out(len);
    for (int i = 0; i < len; ++i) out.set(i, get(begin + i));
    return out;
}

BitVec BitVec::concat(const BitVec& other) const {
    BitVec out(width_ + other.width_);
    for (int i = 0; i < width_; ++i) out.set(i, get(i));
    for (int i = 0; i < other.width_; ++i) out.set(width_ + i, other.get(i));
    return out;
}

std::uint64_t BitVec::to_index() const {
    assert(width_ <= 63);
    std::uint64_t v = 0;
    for (int i = 0; i < width_; ++i) v = (v << 1) | (get(i) ? 1u : 0u);
    return v;
}

std::string BitVec::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    for (int i = 0; i < width_; i += 4) {
        int nibble = 0;
        for (int j = 0; j < 4 && i + j < width_; ++j)
            if (get(i + j)) nibble |= 8 >> j;
        s.push_back(digits[nibble]);
    }
    return s;
}

std::string BitVec::to_string() const {
    std::string s(width_, '0');
    for (int i = 0; i < width_; ++i)
        if (get(i)) s[i] = '1';
    return s;
}

}  // namespace rdcirc
