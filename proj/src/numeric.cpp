#include "brieskorn/numeric.hpp"

#include <algorithm>

namespace brieskorn {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::not_pairwise_coprime: return "NotPairwiseCoprime";
        case Errc::exponent_too_small: return "ExponentTooSmall";
        case Errc::too_few_exponents: return "TooFewExponents";
        case Errc::not_prime: return "NotPrime";
        case Errc::prime_does_not_divide: return "PrimeDoesNotDivide";
        case Errc::degenerate_base: return "DegenerateBase";
        case Errc::prime_divides_exponent: return "PrimeDividesExponent";
        case Errc::prime_divides_product: return "PrimeDividesProduct";
        case Errc::not_in_semigroup: return "NotInSemigroup";
        case Errc::out_of_range: return "OutOfRange";
        case Errc::unsupported_case: return "UnsupportedCase";
        case Errc::unsupported_scenario: return "UnsupportedScenario";
        case Errc::action_free_on_summand: return "ActionFreeOnSummand";
        case Errc::empty_reduced: return "EmptyReduced";
        case Errc::profile_too_large: return "ProfileTooLarge";
        case Errc::integrality_violation: return "IntegralityViolation";
        case Errc::parity_violation: return "ParityViolation";
        case Errc::negative_difference: return "NegativeDifference";
        case Errc::negative_bound: return "NegativeBound";
        case Errc::cross_check_failure: return "CrossCheckFailure";
        case Errc::property_violation: return "PropertyViolation";
    }
    return "Error";
}

i64 mod_inverse(i64 a, i64 m) {
    a %= m;
    if (a < 0) a += m;
    i64 r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        i64 q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= q * s1;
        std::swap(s0, s1);
    }
    if (r0 != 1) fail(Errc::property_violation, "modular inverse of non-unit");
    s0 %= m;
    if (s0 < 0) s0 += m;
    return s0;
}

namespace {

i64 pow_mod(i64 b, i64 e, i64 m) {
    i64 r = 1;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

} // namespace

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL, 29LL, 31LL, 37LL}) {
        if (n % p == 0) return n == p;
    }
    i64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Sufficient witness set for all n < 2^64 (Sinclair).
    for (i64 a : {2LL, 325LL, 9375LL, 28178LL, 450775LL, 9780504LL, 1795265022LL}) {
        i64 x = pow_mod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

// Pollard rho (Brent variant) for the cofactor left after trial division.
i64 pollard_rho(i64 n, i64 seed) {
    auto step = [n](i64 x, i64 c) { return static_cast<i64>((i128(x) * x + c) % n); };
    i64 x = seed % n, y = x, c = seed | 1, d = 1;
    while (d == 1) {
        x = step(x, c);
        y = step(step(y, c), c);
        d = std::gcd(x > y ? x - y : y - x, n);
    }
    return d == n ? 0 : d;
}

void factor_into(i64 n, std::vector<i64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    i64 d = 0;
    for (i64 seed = 2; d == 0; ++seed) d = pollard_rho(n, seed);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::vector<i64> prime_factors(i64 n) {
    std::vector<i64> out;
    for (i64 p : {2LL, 3LL, 5LL, 7LL, 11LL, 13LL}) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1 && n < 17 * 17) {
        out.push_back(n);
        n = 1;
    }
    for (i64 p = 17; n > 1 && p * p <= n && p < 100000; p += 2) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) {
        std::vector<i64> rest;
        factor_into(n, rest);
        std::sort(rest.begin(), rest.end());
        rest.erase(std::unique(rest.begin(), rest.end()), rest.end());
        for (i64 p : rest) out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<i64> primes_upto(i64 n) {
    std::vector<i64> out;
    if (n < 2) return out;
    std::vector<uint8_t> sieve(static_cast<size_t>(n) + 1, 1);
    for (i64 p = 2; p <= n; ++p) {
        if (!sieve[p]) continue;
        out.push_back(p);
        for (i64 q = p * p; q <= n; q += p) sieve[q] = 0;
    }
    return out;
}

Rational::Rational(i64 n, i64 d) {
    if (d == 0) fail(Errc::property_violation, "rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i64 g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = n;
    den = d;
}

std::string Rational::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

Rational rat_max(const Rational& a, const Rational& b) {
    // Cross-multiply exactly; denominators are positive.
    if (i128(a.num) * b.den >= i128(b.num) * a.den) return a;
    return b;
}

} // namespace brieskorn
