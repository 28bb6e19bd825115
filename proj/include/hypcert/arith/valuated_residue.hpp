#pragma once

// A p-adic number stored as p^val * unit with the unit tracked modulo p^k,
// k in {1, 2}. This is the carrier for factorial and Pochhammer ratios: the
// valuation is exact, the unit is a residue. A distinguished "zero at
// precision k" state represents quantities known only to be divisible by
// p^bound; it absorbs in products and arises from cancellation in sums.

#include <cstdint>
#include <limits>

#include "hypcert/arith/integers.hpp"
#include "hypcert/errors.hpp"

namespace hypcert::arith {

class ValuatedResidue {
  public:
    ValuatedResidue() = default;

    static ValuatedResidue make(int64_t val, uint64_t unit, uint64_t p, uint32_t k) {
        check_precision(k);
        ValuatedResidue r;
        r.p_ = p;
        r.k_ = k;
        r.pk_ = pk_of(p, k);
        if (unit % p == 0)
            throw precondition_error("valuated residue unit must be coprime to p");
        r.val_ = val;
        r.unit_ = unit % r.pk_;
        return r;
    }

    // Exact zero.
    static ValuatedResidue zero(uint64_t p, uint32_t k) {
        check_precision(k);
        ValuatedResidue r;
        r.p_ = p;
        r.k_ = k;
        r.pk_ = pk_of(p, k);
        r.zero_ = true;
        r.val_ = std::numeric_limits<int64_t>::max();
        return r;
    }

    static ValuatedResidue one(uint64_t p, uint32_t k) { return make(0, 1, p, k); }

    static ValuatedResidue from_integer(const BigInt& n, uint64_t p, uint32_t k) {
        check_precision(k);
        if (n == 0) return zero(p, k);
        int64_t v = padic_valuation(n, p);
        BigInt u = n;
        for (int64_t i = 0; i < v; ++i) u /= p;
        return make(v, mod_reduce(u, pk_of(p, k)), p, k);
    }

    static ValuatedResidue from_integer(int64_t n, uint64_t p, uint32_t k) {
        return from_integer(BigInt(n), p, k);
    }

    static ValuatedResidue from_rational(const Rational& x, uint64_t p, uint32_t k) {
        if (x == 0) return zero(p, k);
        return from_integer(numerator(x), p, k) / from_integer(denominator(x), p, k);
    }

    bool is_zero() const { return zero_; }

    int64_t valuation() const {
        if (zero_) throw undefined_valuation_error("valuation of the zero state is undefined");
        return val_;
    }

    // For the zero state: the proven lower bound on the valuation.
    int64_t valuation_bound() const { return val_; }

    uint64_t unit() const {
        if (zero_) throw undefined_valuation_error("zero state has no unit");
        return unit_;
    }

    uint64_t p() const { return p_; }
    uint32_t precision() const { return k_; }
    uint64_t unit_modulus() const { return pk_; }

    friend ValuatedResidue operator*(const ValuatedResidue& a, const ValuatedResidue& b) {
        a.match(b);
        if (a.zero_ || b.zero_) {
            ValuatedResidue r = zero(a.p_, a.k_);
            r.val_ = sat_add(a.val_, b.val_);
            return r;
        }
        return make(a.val_ + b.val_, mulmod(a.unit_, b.unit_, a.pk_), a.p_, a.k_);
    }

    ValuatedResidue inv() const {
        if (zero_) throw precondition_error("division by a zero valuated residue");
        return make(-val_, invmod(unit_, pk_), p_, k_);
    }

    friend ValuatedResidue operator/(const ValuatedResidue& a, const ValuatedResidue& b) {
        return a * b.inv();
    }

    // Lift both operands to the smaller valuation, add the units with the
    // higher one scaled by p^(gap); scale factors at or beyond p^k truncate
    // to 0. If the combined unit vanishes mod p^k the result is a zero
    // state with valuation bound min_val + k.
    friend ValuatedResidue operator+(const ValuatedResidue& a, const ValuatedResidue& b) {
        a.match(b);
        if (a.zero_ && b.zero_) {
            ValuatedResidue r = zero(a.p_, a.k_);
            r.val_ = std::min(a.val_, b.val_);
            return r;
        }
        if (a.zero_) return add_zero(b, a);
        if (b.zero_) return add_zero(a, b);
        int64_t v = std::min(a.val_, b.val_);
        uint64_t ta = a.lifted_unit(v);
        uint64_t tb = b.lifted_unit(v);
        uint64_t s = addmod(ta, tb, a.pk_);
        return renormalize(v, s, a.p_, a.k_);
    }

    ValuatedResidue operator-() const {
        if (zero_) return *this;
        return make(val_, pk_ - unit_, p_, k_);
    }

    friend ValuatedResidue operator-(const ValuatedResidue& a, const ValuatedResidue& b) {
        return a + (-b);
    }

    ValuatedResidue pow(uint64_t e) const {
        if (e == 0) return one(p_, k_);
        if (zero_) {
            ValuatedResidue r = zero(p_, k_);
            if (val_ != std::numeric_limits<int64_t>::max()) {
                __int128 b = static_cast<__int128>(val_) * static_cast<__int128>(e);
                r.val_ = b > std::numeric_limits<int64_t>::max()
                             ? std::numeric_limits<int64_t>::max()
                             : static_cast<int64_t>(b);
            }
            return r;
        }
        return make(val_ * static_cast<int64_t>(e), powmod(unit_, e, pk_), p_, k_);
    }

    // The value modulo p^j for j <= k; requires a nonnegative valuation.
    uint64_t residue_mod(uint32_t j) const {
        if (j == 0 || j > k_) throw precondition_error("residue precision out of range");
        uint64_t pj = pk_of(p_, j);
        if (zero_) {
            if (val_ < static_cast<int64_t>(j))
                throw precondition_error("zero state lacks precision for this residue");
            return 0;
        }
        if (val_ < 0) throw precondition_error("negative valuation has no residue");
        if (val_ >= static_cast<int64_t>(j)) return 0;
        uint64_t scale = 1;
        for (int64_t i = 0; i < val_; ++i) scale *= p_;
        return mulmod(scale, unit_, pj);
    }

    uint64_t residue_mod_p() const { return residue_mod(1); }
    uint64_t residue_mod_pk() const { return residue_mod(k_); }

    friend bool operator==(const ValuatedResidue& a, const ValuatedResidue& b) {
        a.match(b);
        if (a.zero_ || b.zero_) return a.zero_ == b.zero_;
        return a.val_ == b.val_ && a.unit_ == b.unit_;
    }
    friend bool operator!=(const ValuatedResidue& a, const ValuatedResidue& b) { return !(a == b); }

  private:
    static void check_precision(uint32_t k) {
        if (k != 1 && k != 2) throw precondition_error("precision k must be 1 or 2");
    }
    static uint64_t pk_of(uint64_t p, uint32_t k) { return k == 1 ? p : p * p; }
    static int64_t sat_add(int64_t a, int64_t b) {
        if (a == std::numeric_limits<int64_t>::max() || b == std::numeric_limits<int64_t>::max())
            return std::numeric_limits<int64_t>::max();
        return a + b;
    }
    void match(const ValuatedResidue& o) const {
        if (p_ != o.p_ || k_ != o.k_)
            throw precondition_error("mixed (p, k) in valuated-residue arithmetic");
    }

    uint64_t lifted_unit(int64_t base_val) const {
        int64_t gap = val_ - base_val;
        if (gap >= static_cast<int64_t>(k_)) return 0;
        uint64_t scale = 1;
        for (int64_t i = 0; i < gap; ++i) scale *= p_;
        return mulmod(scale, unit_, pk_);
    }

    static ValuatedResidue add_zero(const ValuatedResidue& x, const ValuatedResidue& z) {
        // x nonzero, z a zero state: the zero contributes nothing known
        // below its bound, so the sum keeps x up to precision min(bound, ..).
        if (z.val_ >= x.val_ + static_cast<int64_t>(x.k_)) return x;
        int64_t v = std::min(x.val_, z.val_);
        return renormalize(v, x.lifted_unit(v), x.p_, x.k_);
    }

    static ValuatedResidue renormalize(int64_t v, uint64_t s, uint64_t p, uint32_t k) {
        if (s == 0) {
            ValuatedResidue r = zero(p, k);
            r.val_ = v + k;
            return r;
        }
        while (s % p == 0) {
            s /= p;
            ++v;
        }
        return make(v, s, p, k);
    }

    int64_t val_ = 0;
    uint64_t unit_ = 1;
    uint64_t p_ = 0;
    uint64_t pk_ = 0;
    uint32_t k_ = 1;
    bool zero_ = false;
};

// v_p(n!) by Legendre's formula.
inline int64_t factorial_p_valuation(uint64_t n, uint64_t p) {
    int64_t v = 0;
    uint64_t q = p;
    for (;;) {
        v += static_cast<int64_t>(n / q);
        if (q > n / p) break; // next power would exceed n
        q *= p;
    }
    return v;
}

// (v_p(n!), unit(n!) mod p^k) with unit(n!) = n!/p^{v_p(n!)}.
inline ValuatedResidue factorial_valres(uint64_t n, uint64_t p, uint32_t k) {
    uint64_t pk = k == 1 ? p : p * p;
    uint64_t u = 1;
    for (uint64_t i = 2; i <= n; ++i) {
        uint64_t m = i;
        while (m % p == 0) m /= p;
        u = mulmod(u, m % pk, pk);
    }
    return ValuatedResidue::make(factorial_p_valuation(n, p), u, p, k);
}

} // namespace hypcert::arith
