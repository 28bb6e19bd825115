#pragma once

// Quadratic extension F_{p^2} = F_p[w]/(w^2 - n) with n the canonical
// (smallest) quadratic non-residue mod p. Elements are a0 + a1*w.

#include <cstdint>

#include "hypcert/arith/prime_field.hpp"
#include "hypcert/errors.hpp"

namespace hypcert::arith {

class Fp2 {
  public:
    Fp2() = default;
    Fp2(const Fp& a0, const Fp& a1, uint64_t nonresidue) : a0_(a0), a1_(a1), n_(nonresidue) {
        if (a0.modulus() != a1.modulus())
            throw precondition_error("F_{p^2} coordinates must share a modulus");
    }

    static Fp2 make(uint64_t a0, uint64_t a1, uint64_t p, uint64_t n) {
        return Fp2(Fp(a0, p), Fp(a1, p), n);
    }

    // Embedding of the base field.
    static Fp2 embed(const Fp& a, uint64_t n) { return Fp2(a, a.zero(), n); }

    static Fp2 from_int(int64_t v, uint64_t p, uint64_t n) {
        return embed(Fp::from_int(v, p), n);
    }

    const Fp& re() const { return a0_; }
    const Fp& im() const { return a1_; }
    uint64_t modulus() const { return a0_.modulus(); }
    uint64_t nonresidue() const { return n_; }
    bool is_zero() const { return a0_.is_zero() && a1_.is_zero(); }
    bool in_base_field() const { return a1_.is_zero(); }

    Fp2 zero() const { return Fp2(a0_.zero(), a0_.zero(), n_); }
    Fp2 one() const { return Fp2(a0_.one(), a0_.zero(), n_); }
    Fp2 from_residue(uint64_t r) const { return Fp2(a0_.from_residue(r), a0_.zero(), n_); }

    friend Fp2 operator+(const Fp2& x, const Fp2& y) {
        x.match(y);
        return Fp2(x.a0_ + y.a0_, x.a1_ + y.a1_, x.n_);
    }
    friend Fp2 operator-(const Fp2& x, const Fp2& y) {
        x.match(y);
        return Fp2(x.a0_ - y.a0_, x.a1_ - y.a1_, x.n_);
    }
    friend Fp2 operator*(const Fp2& x, const Fp2& y) {
        x.match(y);
        const Fp n(x.n_, x.modulus());
        return Fp2(x.a0_ * y.a0_ + n * x.a1_ * y.a1_, x.a0_ * y.a1_ + x.a1_ * y.a0_, x.n_);
    }
    friend Fp2 operator/(const Fp2& x, const Fp2& y) { return x * y.inv(); }
    Fp2 operator-() const { return Fp2(-a0_, -a1_, n_); }

    // N(a0 + a1 w) = a0^2 - n a1^2, an element of F_p.
    Fp norm() const {
        const Fp n(n_, modulus());
        return a0_ * a0_ - n * a1_ * a1_;
    }

    Fp2 conj() const { return Fp2(a0_, -a1_, n_); }

    // x^p; since n is a non-residue, w^p = -w and Frobenius is conjugation.
    Fp2 frobenius() const { return conj(); }

    Fp2 inv() const {
        Fp nm = norm();
        if (nm.is_zero()) throw precondition_error("division by zero in F_{p^2}");
        Fp ninv = nm.inv();
        return Fp2(a0_ * ninv, -a1_ * ninv, n_);
    }

    Fp2 pow(uint64_t e) const {
        Fp2 r = one();
        Fp2 b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    friend bool operator==(const Fp2& x, const Fp2& y) {
        x.match(y);
        return x.a0_ == y.a0_ && x.a1_ == y.a1_;
    }
    friend bool operator!=(const Fp2& x, const Fp2& y) { return !(x == y); }

  private:
    void match(const Fp2& o) const {
        if (modulus() != o.modulus() || n_ != o.n_)
            throw precondition_error("mixed fields in F_{p^2} arithmetic");
    }

    Fp a0_, a1_;
    uint64_t n_ = 0;
};

// Quadratic residue symbol on F_{p^2}^x via Euler's criterion at exponent
// (p^2 - 1)/2.
inline int legendre_symbol(const Fp2& x) {
    if (x.is_zero()) return 0;
    const uint64_t p = x.modulus();
    Fp2 e = x.pow((p * p - 1) / 2);
    return e == x.one() ? 1 : -1;
}

// A square root of a non-residue z in F_{p^2}: z/n is a residue mod p, so
// sqrt(z) = sqrt(z/n) * w. Returns the root with canonical (smaller)
// w-coordinate; the other root is its negative.
inline Fp2 sqrt_of_nonresidue(const Fp& z, uint64_t n) {
    if (legendre_symbol(z) != -1)
        throw precondition_error("sqrt_of_nonresidue: argument is a residue");
    Fp ratio = z / Fp(n, z.modulus());
    auto root = sqrt_mod_p(ratio);
    if (!root) throw error("sqrt_of_nonresidue: ratio of non-residues must be a residue");
    return Fp2(z.zero(), *root, n);
}

} // namespace hypcert::arith
