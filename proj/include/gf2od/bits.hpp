#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace gf2od {

// Dense bit-packed vector over F2. Logical length is tracked separately
// from the physical word count; bits past the logical length are kept zero.
class BitVector {
public:
    using word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t n) : len_(n), w_((n + word_bits - 1) / word_bits, 0) {}

    static BitVector from_bits(std::initializer_list<int> bits) {
        BitVector v(bits.size());
        std::size_t i = 0;
        for (int b : bits) v.set(i++, b != 0);
        return v;
    }

    static BitVector from_string(const std::string& s) {
        BitVector v(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '1') v.set(i, true);
            else if (s[i] != '0') throw std::invalid_argument("bit string must contain only 0/1");
        }
        return v;
    }

    static BitVector unit(std::size_t n, std::size_t i) {
        BitVector v(n);
        v.set(i, true);
        return v;
    }

    std::size_t size() const { return len_; }

    bool get(std::size_t i) const {
        check_index(i);
        return (w_[i / word_bits] >> (i % word_bits)) & 1u;
    }

    void set(std::size_t i, bool v) {
        check_index(i);
        word mask = word(1) << (i % word_bits);
        if (v) w_[i / word_bits] |= mask;
        else   w_[i / word_bits] &= ~mask;
    }

    void flip(std::size_t i) {
        check_index(i);
        w_[i / word_bits] ^= word(1) << (i % word_bits);
    }

    BitVector& operator^=(const BitVector& o) {
        check_len(o);
        for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) {
        a ^= b;
        return a;
    }

    bool is_zero() const {
        for (word x : w_) if (x) return false;
        return true;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (word x : w_) c += std::size_t(std::popcount(x));
        return c;
    }

    // Index of the first set bit, or size() if none.
    std::size_t first_set() const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k]) return k * word_bits + std::size_t(std::countr_zero(w_[k]));
        return len_;
    }

    bool operator==(const BitVector& o) const { return len_ == o.len_ && w_ == o.w_; }

    std::string to_string() const {
        std::string s(len_, '0');
        for (std::size_t i = 0; i < len_; ++i)
            if (get(i)) s[i] = '1';
        return s;
    }

    const std::vector<word>& words() const { return w_; }

private:
    void check_index(std::size_t i) const {
        if (i >= len_) throw std::out_of_range("BitVector index out of range");
    }
    void check_len(const BitVector& o) const {
        if (len_ != o.len_) throw std::invalid_argument("BitVector length mismatch");
    }

    std::size_t len_ = 0;
    std::vector<word> w_;
};

// Parity of the coordinatewise product.
inline int dot(const BitVector& a, const BitVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    BitVector::word acc = 0;
    const auto& wa = a.words();
    const auto& wb = b.words();
    for (std::size_t k = 0; k < wa.size(); ++k) acc ^= wa[k] & wb[k];
    return std::popcount(acc) & 1;
}

} // namespace gf2od
