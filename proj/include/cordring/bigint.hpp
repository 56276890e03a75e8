#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace cordring {

// Exact integer coefficients. Intermediate coefficients in plat computations
// exceed 64 bits, so everything arithmetic runs on cpp_int.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }
inline BigInt big_abs(const BigInt& a) { return boost::multiprecision::abs(a); }

// Floor division and the matching remainder (0 <= rem < |d| when d > 0).
// cpp_int's operator/ truncates toward zero, which is the wrong convention
// for canonical coefficient reduction.
inline BigInt floor_div(const BigInt& a, const BigInt& d) {
    BigInt q = a / d;
    if ((a % d) != 0 && ((a < 0) != (d < 0))) --q;
    return q;
}
inline BigInt floor_mod(const BigInt& a, const BigInt& d) { return a - floor_div(a, d) * d; }

// Extended gcd: g = u*a + v*b, g >= 0.
inline BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& u, BigInt& v) {
    if (b == 0) {
        u = (a < 0) ? -1 : 1;
        v = 0;
        return big_abs(a);
    }
    BigInt u1, v1;
    BigInt g = ext_gcd(b, a % b, u1, v1);
    u = v1;
    v = u1 - (a / b) * v1;
    return g;
}

inline std::string to_string(const BigInt& a) { return a.str(); }

inline bool fits_int64(const BigInt& a) {
    return a >= std::numeric_limits<std::int64_t>::min() && a <= std::numeric_limits<std::int64_t>::max();
}

} // namespace cordring
