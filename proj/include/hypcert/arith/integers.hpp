#pragma once

// Arbitrary-precision integers/rationals plus the small fixed-width modular
// kernels everything else is built on. Field moduli stay below 2^31, so all
// residue arithmetic fits in uint64_t with 128-bit intermediates.

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hypcert/errors.hpp"

namespace hypcert::arith {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline uint64_t addmod(uint64_t a, uint64_t b, uint64_t m) {
    a %= m;
    b %= m;
    uint64_t s = a + b; // m < 2^63, no overflow
    return s >= m ? s - m : s;
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t m) {
    a %= m;
    b %= m;
    return a >= b ? a - b : a + m - b;
}

inline uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Inverse modulo m (m need not be prime; p^2 moduli are used for unit
// residues). Throws if gcd(a, m) != 1.
inline uint64_t invmod(uint64_t a, uint64_t m) {
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(m), nr = static_cast<int64_t>(a % m);
    while (nr != 0) {
        int64_t q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (r != 1) throw precondition_error("invmod: argument not invertible");
    if (t < 0) t += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t);
}

// Deterministic Miller-Rabin; the base set below is known to decide
// primality for all 64-bit inputs.
inline bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a % n, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

inline void ensure_odd_prime(uint64_t p) {
    if (p < 3 || !is_prime_u64(p)) throw invalid_modulus_error("modulus must be an odd prime");
}

// Moduli for the congruence checks must additionally avoid 2 and 3.
inline void ensure_prime_coprime_6(uint64_t p) {
    if (p == 2 || p == 3 || !is_prime_u64(p)) throw invalid_modulus_error("modulus must be a prime coprime to 6");
}

inline std::vector<uint64_t> primes_in_range(uint64_t lo, uint64_t hi) {
    std::vector<uint64_t> out;
    for (uint64_t n = lo; n <= hi; ++n)
        if (is_prime_u64(n)) out.push_back(n);
    return out;
}

inline uint64_t checked_pow_u64(uint64_t base, uint32_t exp) {
    uint64_t r = 1;
    for (uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw resource_limit_error("power exceeds 64-bit range");
        r *= base;
    }
    return r;
}

inline int64_t padic_valuation(BigInt n, uint64_t p) {
    if (n == 0) throw undefined_valuation_error("p-adic valuation of zero is undefined");
    int64_t v = 0;
    BigInt q, r;
    for (;;) {
        boost::multiprecision::divide_qr(n, BigInt(p), q, r);
        if (r != 0) break;
        n = q;
        ++v;
    }
    return v;
}

// v_p(numerator) - v_p(denominator); x must be nonzero.
inline int64_t rational_p_valuation(const Rational& x, uint64_t p) {
    if (x == 0) throw undefined_valuation_error("p-adic valuation of zero is undefined");
    ensure_odd_prime(p);
    const BigInt num = numerator(x);
    const BigInt den = denominator(x);
    // The fraction is stored reduced, so at most one part carries p.
    if (num % p == 0) return padic_valuation(num, p);
    if (den % p == 0) return -padic_valuation(den, p);
    return 0;
}

inline uint64_t mod_reduce(const BigInt& n, uint64_t m) {
    BigInt r = n % m;
    if (r < 0) r += m;
    return r.convert_to<uint64_t>();
}

// x mod m for a rational with denominator invertible mod m.
inline uint64_t rational_mod(const Rational& x, uint64_t m) {
    uint64_t num = mod_reduce(numerator(x), m);
    uint64_t den = mod_reduce(denominator(x), m);
    return mulmod(num, invmod(den, m), m);
}

} // namespace hypcert::arith
