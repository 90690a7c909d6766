#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "lsg/errors.hpp"

namespace lsg {

// Exact nonnegative rational. Operands stay small (numerators are edge
// counts, denominators are vertex counts), comparisons cross-multiply in
// 128 bits so they are never subject to floating-point rounding.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Ratio of(std::int64_t num, std::int64_t den) {
        if (den <= 0)
            throw DomainError("ratio denominator must be positive");
        if (num < 0)
            throw DomainError("ratio numerator must be nonnegative");
        std::int64_t g = std::gcd(num, den);
        if (g == 0)
            g = 1;
        return Ratio{num / g, den / g};
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Ratio& a, const Ratio& b) {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
        __int128 lhs = static_cast<__int128>(a.num) * b.den;
        __int128 rhs = static_cast<__int128>(b.num) * a.den;
        if (lhs < rhs)
            return std::strong_ordering::less;
        if (lhs > rhs)
            return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

// Exact test of num/den <= bound for a finite double bound, by decomposing
// the double into mantissa * 2^exponent and cross-multiplying integers.
// No rounding in either direction, so boundary cases like 2/1 <= 2.0 hold
// exactly and a PASS can never be produced by floating-point slack.
inline bool ratio_at_most(const Ratio& r, double bound) {
    if (std::isnan(bound))
        return false;
    if (std::isinf(bound))
        return bound > 0;
    if (bound < 0)
        return false;
    if (bound == 0)
        return r.num == 0;

    int exponent = 0;
    const double frac = std::frexp(bound, &exponent);
    const auto mantissa = static_cast<__int128>(std::ldexp(frac, 53)); // exact, 53-bit
    exponent -= 53;

    // r.num / r.den <= mantissa * 2^exponent
    __int128 lhs = r.num;
    __int128 rhs = mantissa * static_cast<__int128>(r.den);
    if (exponent >= 0) {
        for (; exponent > 0; --exponent) {
            if (rhs > (static_cast<__int128>(1) << 125))
                return true;
            rhs <<= 1;
        }
    } else {
        for (; exponent < 0; ++exponent) {
            if (lhs > (static_cast<__int128>(1) << 125))
                return false;
            lhs <<= 1;
        }
    }
    return lhs <= rhs;
}

} // namespace lsg
