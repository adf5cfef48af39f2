#pragma once

// Exact integer helpers shared across the library. Everything here is
// overflow-safe: 64-bit fast paths widen to __int128, anything larger goes
// through GMP (Zint).

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "brieskorn/errors.hpp"

namespace brieskorn {

using i64 = long long;
using i128 = __int128;

// numeric_limits<__int128> is unspecialized on some standard libraries in
// strict-ANSI mode, so spell the bound out.
inline constexpr i128 i128_max = ((i128(1) << 126) - 1) | (i128(1) << 126);

// Arbitrary-precision signed integer.
using Zint = mpz_class;

inline std::string zstr(const Zint& z) { return z.get_str(); }

inline Zint zint_of(i64 v) {
    Zint z;
    mpz_set_si(z.get_mpz_t(), v); // mpz_class has no long long constructor pre-GMP 6.2
    return z;
}

inline bool fits_i64(const Zint& z) {
    static const Zint lo = zint_of(std::numeric_limits<i64>::min());
    static const Zint hi = zint_of(std::numeric_limits<i64>::max());
    return z >= lo && z <= hi;
}

inline i64 to_i64(const Zint& z, const char* what) {
    if (!fits_i64(z)) fail(Errc::profile_too_large, std::string(what) + " exceeds 64-bit range: " + zstr(z));
    return static_cast<i64>(z.get_si());
}

// floor(a/b) for b > 0.
inline i64 floor_div(i64 a, i64 b) {
    i64 q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

// ceil(a/b) for a >= 0, b > 0, computed as floor((a+b-1)/b).
inline i64 ceil_div_nonneg(i128 a, i64 b) { return static_cast<i64>((a + b - 1) / b); }

inline i64 gcd_ll(i64 a, i64 b) { return std::gcd(a, b); }

inline i64 mul_mod(i64 a, i64 b, i64 m) { return static_cast<i64>((i128(a) * b) % m); }

// x with a*x == 1 (mod m), m > 1, gcd(a, m) == 1. Extended Euclid.
i64 mod_inverse(i64 a, i64 m);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(i64 n);

// Distinct prime factors, ascending. Trial division; inputs here are always
// desk scale (exponents or group orders).
std::vector<i64> prime_factors(i64 n);

// Primes in [2, n].
std::vector<i64> primes_upto(i64 n);

// Exact rational with canonical form (den > 0, reduced). Wide enough for
// every quantity this library derives from feasible inputs; operations check
// for overflow rather than wrap.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n) : num(n), den(1) {}
    Rational(i64 n, i64 d);

    bool is_integer() const { return den == 1; }
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational rat_max(const Rational& a, const Rational& b);

} // namespace brieskorn
