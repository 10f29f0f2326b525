#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "graybox/errors.hpp"

namespace graybox {

// Fixed-length bitstring. Solutions, flip masks and parent-difference masks
// are all BitVecs of the landscape's variable count.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(std::size_t n, bool value = false)
        : n_(n), words_((n + 63) / 64, value ? ~std::uint64_t{0} : 0) {
        trim();
    }

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    bool operator[](std::size_t i) const { return test(i); }

    void set(std::size_t i, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (i & 63);
        if (v)
            words_[i >> 6] |= bit;
        else
            words_[i >> 6] &= ~bit;
    }

    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    void reset() {
        for (auto& w : words_)
            w = 0;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    BitVec& operator^=(const BitVec& o) {
        check_same_length(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] ^= o.words_[i];
        return *this;
    }

    BitVec& operator&=(const BitVec& o) {
        check_same_length(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    BitVec& operator|=(const BitVec& o) {
        check_same_length(o);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
    friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }

    BitVec complement() const {
        BitVec r(n_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

    std::size_t hamming(const BitVec& o) const {
        check_same_length(o);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] ^ o.words_[i]));
        return c;
    }

    // Calls f(i) for every set bit, ascending.
    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                const int b = std::countr_zero(w);
                f(wi * 64 + static_cast<std::size_t>(b));
                w &= w - 1;
            }
        }
    }

    std::uint64_t fnv1a() const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (auto w : words_) {
            for (int b = 0; b < 8; ++b) {
                h ^= (w >> (8 * b)) & 0xff;
                h *= 0x100000001b3ULL;
            }
        }
        return h;
    }

  private:
    void trim() {
        if (n_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
    }
    void check_same_length(const BitVec& o) const {
        if (n_ != o.n_)
            throw ContractViolation("bit vector length mismatch");
    }

    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

// A candidate assignment of the landscape's n binary variables.
using Solution = BitVec;

} // namespace graybox
