#include "graybox/rational.hpp"

#include <algorithm>

namespace graybox {

std::string Rational::decimal(int sig) const {
    if (sig < 1)
        sig = 1;
    if (num == 0)
        return "0";

    using u128 = unsigned __int128;
    const bool neg = num < 0;
    u128 n = neg ? static_cast<u128>(-(num + 1)) + 1 : static_cast<u128>(num);
    const u128 d = static_cast<u128>(den);

    // long division, one digit at a time
    std::string digits;
    int exponent = 0; // position of the decimal point relative to first digit
    u128 rem;
    if (n >= d) {
        u128 ip = n / d;
        rem = n % d;
        std::string head;
        while (ip > 0) {
            head.push_back(static_cast<char>('0' + static_cast<int>(ip % 10)));
            ip /= 10;
        }
        std::reverse(head.begin(), head.end());
        digits = head;
        exponent = static_cast<int>(head.size());
    } else {
        rem = n;
        // skip leading zeros after the point
        while (rem * 10 < d) {
            rem *= 10;
            --exponent;
        }
    }
    while (static_cast<int>(digits.size()) < sig + 1 && rem != 0) {
        rem *= 10;
        digits.push_back(static_cast<char>('0' + static_cast<int>(rem / d)));
        rem %= d;
    }
    bool exact = rem == 0 && static_cast<int>(digits.size()) <= sig;

    if (static_cast<int>(digits.size()) > sig) {
        // round half away from zero on the digit after the last kept one
        bool round_up = digits[static_cast<std::size_t>(sig)] >= '5';
        digits.resize(static_cast<std::size_t>(sig));
        if (round_up) {
            int i = sig - 1;
            while (i >= 0 && digits[static_cast<std::size_t>(i)] == '9') {
                digits[static_cast<std::size_t>(i)] = '0';
                --i;
            }
            if (i < 0) {
                digits.insert(digits.begin(), '1');
                ++exponent;
                digits.resize(static_cast<std::size_t>(sig));
            } else {
                ++digits[static_cast<std::size_t>(i)];
            }
        }
    }
    if (exact) {
        while (digits.size() > 1 && digits.back() == '0' &&
               static_cast<int>(digits.size()) > exponent)
            digits.pop_back();
    }

    std::string out;
    if (neg)
        out.push_back('-');
    if (exponent <= 0) {
        out += "0.";
        out.append(static_cast<std::size_t>(-exponent), '0');
        out += digits;
    } else if (exponent >= static_cast<int>(digits.size())) {
        out += digits;
        out.append(static_cast<std::size_t>(exponent) - digits.size(), '0');
    } else {
        out.append(digits, 0, static_cast<std::size_t>(exponent));
        out.push_back('.');
        out.append(digits, static_cast<std::size_t>(exponent), std::string::npos);
    }
    return out;
}

} // namespace graybox
