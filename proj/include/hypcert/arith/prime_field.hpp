#pragma once

// Prime field F_p. Elements carry their modulus, so values from different
// fields cannot be combined silently. p is expected to be an odd prime below
// 2^31; primality is validated at the API boundaries that receive p from
// outside, not in every element operation.

#include <cstdint>
#include <optional>

#include "hypcert/arith/integers.hpp"
#include "hypcert/errors.hpp"

namespace hypcert::arith {

class Fp {
  public:
    Fp() = default;
    Fp(uint64_t value, uint64_t p) : v_(value % p), p_(p) {}

    static Fp from_int(int64_t value, uint64_t p) {
        int64_t r = value % static_cast<int64_t>(p);
        if (r < 0) r += static_cast<int64_t>(p);
        return Fp(static_cast<uint64_t>(r), p);
    }

    // Reduction of n/d mod p; requires v_p(x) >= 0.
    static Fp from_rational(const Rational& x, uint64_t p) {
        if (x == 0) return Fp(0, p);
        if (rational_p_valuation(x, p) < 0)
            throw precondition_error("from_rational: negative p-adic valuation");
        return Fp(rational_mod(x, p), p);
    }

    uint64_t value() const { return v_; }
    uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp zero() const { return Fp(0, p_); }
    Fp one() const { return Fp(1, p_); }
    Fp from_residue(uint64_t r) const { return Fp(r, p_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp::raw(addmod(a.v_, b.v_, a.p_), a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp::raw(submod(a.v_, b.v_, a.p_), a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        a.match(b);
        return Fp::raw(mulmod(a.v_, b.v_, a.p_), a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inv(); }
    Fp operator-() const { return Fp::raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Fp inv() const {
        if (v_ == 0) throw precondition_error("division by zero in F_p");
        return Fp::raw(invmod(v_, p_), p_);
    }

    Fp pow(uint64_t e) const { return Fp::raw(powmod(v_, e, p_), p_); }

    friend bool operator==(const Fp& a, const Fp& b) {
        a.match(b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  private:
    static Fp raw(uint64_t v, uint64_t p) {
        Fp e;
        e.v_ = v;
        e.p_ = p;
        return e;
    }
    void match(const Fp& o) const {
        if (p_ != o.p_) throw precondition_error("mixed moduli in F_p arithmetic");
    }

    uint64_t v_ = 0;
    uint64_t p_ = 0;
};

// Three-valued quadratic residue symbol on F_p, computed by Euler's
// criterion: a^((p-1)/2) is 1 for nonzero squares, p-1 for non-squares.
inline int legendre_symbol(const Fp& a) {
    if (a.is_zero()) return 0;
    uint64_t e = powmod(a.value(), (a.modulus() - 1) / 2, a.modulus());
    return e == 1 ? 1 : -1;
}

// Symbol for a rational argument; requires a p-integral argument and a
// prime modulus coprime to 6.
inline int legendre_symbol(const Rational& a, uint64_t p) {
    ensure_prime_coprime_6(p);
    if (a == 0) return 0;
    if (rational_p_valuation(a, p) < 0)
        throw precondition_error("legendre_symbol: argument has negative p-adic valuation");
    return legendre_symbol(Fp::from_rational(a, p));
}

// Tonelli-Shanks. Returns the canonical root (integer representative in
// [0, (p-1)/2]) or nullopt for a non-residue.
inline std::optional<Fp> sqrt_mod_p(const Fp& a) {
    const uint64_t p = a.modulus();
    ensure_odd_prime(p);
    if (a.is_zero()) return a;
    if (legendre_symbol(a) != 1) return std::nullopt;

    uint64_t r;
    if (p % 4 == 3) {
        r = powmod(a.value(), (p + 1) / 4, p);
    } else {
        uint64_t q = p - 1;
        uint64_t s = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++s;
        }
        uint64_t z = 2;
        while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
        uint64_t m = s;
        uint64_t c = powmod(z, q, p);
        uint64_t t = powmod(a.value(), q, p);
        r = powmod(a.value(), (q + 1) / 2, p);
        while (t != 1) {
            uint64_t i = 0;
            uint64_t t2 = t;
            while (t2 != 1) {
                t2 = mulmod(t2, t2, p);
                ++i;
            }
            uint64_t b = powmod(c, uint64_t(1) << (m - i - 1), p);
            m = i;
            c = mulmod(b, b, p);
            t = mulmod(t, c, p);
            r = mulmod(r, b, p);
        }
    }
    if (r > p - r) r = p - r;
    return Fp(r, p);
}

// Smallest positive quadratic non-residue mod p.
inline uint64_t find_nonresidue(uint64_t p) {
    ensure_odd_prime(p);
    for (uint64_t n = 2;; ++n) {
        if (legendre_symbol(Fp(n, p)) == -1) return n;
    }
}

} // namespace hypcert::arith
