#pragma once

#include <cstdint>
#include <random>

#include "graybox/bitvec.hpp"

namespace graybox {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// mt19937_64 with bounded draws implemented here so that results depend only
// on the seed, not on the standard library's distribution internals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next() { return gen_(); }

    // Uniform in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling on the top of the range keeps the draw unbiased
        const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return x % bound;
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    bool coin() { return (gen_() >> 63) != 0; }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    Solution random_solution(std::size_t n) {
        Solution s(n);
        for (std::size_t i = 0; i < n; ++i)
            s.set(i, coin());
        return s;
    }

    // Deterministic substream: same (seed, tags) always yields the same stream.
    static Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                      std::uint64_t c = 0) {
        std::uint64_t s = splitmix64(seed ^ 0x6a09e667f3bcc909ULL);
        s = splitmix64(s ^ a);
        s = splitmix64(s ^ b);
        s = splitmix64(s ^ c);
        return Rng(s);
    }

  private:
    std::mt19937_64 gen_;
};

} // namespace graybox
