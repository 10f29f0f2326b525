#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "graybox/errors.hpp"

namespace graybox {

// Exact ratio of 64-bit integers, normalized (gcd 1, positive denominator).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0)
            throw ContractViolation("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    bool negative() const { return num < 0; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    // Exact decimal expansion rounded to `sig` significant digits, e.g.
    // Rational(1,3).decimal(4) == "0.3333".
    std::string decimal(int sig = 12) const;
};

// (fz - max(fx,fy)) / max(fx,fy). The best parent fitness must be positive
// or the ratio cannot be normalized.
inline Rational qir(std::int64_t fx, std::int64_t fy, std::int64_t fz) {
    const std::int64_t best = fx > fy ? fx : fy;
    if (best <= 0)
        throw ContractViolation("qir: best parent fitness must be positive");
    return Rational(fz - best, best);
}

} // namespace graybox
