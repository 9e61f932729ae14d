#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrc {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt big_pow(BigInt base, std::uint64_t exp) {
    BigInt r = 1;
    while (exp) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

// Renders a rational as a fixed-point decimal with the given number of digits,
// rounding ties to the even last digit (the rule the printed tables follow).
inline std::string render_decimal(const BigRat& value, unsigned digits) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    BigInt whole = num * scale / den;
    BigInt rem = num * scale % den;
    // round half to even
    BigInt twice = rem * 2;
    if (twice > den || (twice == den && whole % 2 == 1)) ++whole;
    BigInt int_part = whole / scale, frac = whole % scale;
    std::string out = negative && whole != 0 ? "-" : "";
    out += int_part.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += "." + std::string(digits - f.size(), '0') + f;
    }
    return out;
}

// Floor division for possibly negative numerators.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

}  // namespace lrc
