#pragma once

// Valuated-residue kernels for Pochhammer products and series coefficients.
// Linear factors a + j are processed with int64 arithmetic whenever the
// whole run of factors fits, falling back to big integers otherwise.

#include <cstdint>
#include <cstdlib>
#include <limits>

#include "hypcert/arith/integers.hpp"
#include "hypcert/arith/valuated_residue.hpp"
#include "hypcert/errors.hpp"
#include "hypcert/hyperseries/datum.hpp"

namespace hypcert::hyperseries {

using arith::ValuatedResidue;

namespace detail {

// Valuated residue of the integer num + j * den (den > 0). The int64 path
// assumes the caller has checked the magnitude bound.
inline ValuatedResidue linear_factor_small(int64_t num, int64_t den, uint64_t j, uint64_t p,
                                           uint32_t k) {
    int64_t f = num + static_cast<int64_t>(j) * den;
    if (f == 0) return ValuatedResidue::zero(p, k);
    bool neg = f < 0;
    uint64_t g = neg ? static_cast<uint64_t>(-f) : static_cast<uint64_t>(f);
    int64_t v = 0;
    while (g % p == 0) {
        g /= p;
        ++v;
    }
    uint64_t pk = k == 1 ? p : p * p;
    uint64_t u = g % pk;
    if (neg) u = pk - u;
    return ValuatedResidue::make(v, u, p, k);
}

inline ValuatedResidue linear_factor_big(const arith::BigInt& num, const arith::BigInt& den,
                                         uint64_t j, uint64_t p, uint32_t k) {
    return ValuatedResidue::from_integer(num + arith::BigInt(j) * den, p, k);
}

// One parameter a = num/den of a hypergeometric datum, prepared for
// repeated (a + j) factor extraction.
class LinearParameter {
  public:
    LinearParameter(const Rational& a, uint64_t p, uint32_t k, uint64_t max_j)
        : num_(numerator(a)), den_(denominator(a)), p_(p), k_(k) {
        constexpr int64_t lim = std::numeric_limits<int64_t>::max() / 4;
        small_ = num_ >= -lim && num_ <= lim && den_ <= lim / 4;
        if (small_) {
            int64_t n = num_.convert_to<int64_t>();
            int64_t d = den_.convert_to<int64_t>();
            // |num + j*den| <= |num| + max_j*den must stay well inside int64.
            if (max_j > 0 && d > (lim - std::abs(n)) / static_cast<int64_t>(max_j)) small_ = false;
            snum_ = n;
            sden_ = d;
        }
        // Denominator must be a p-adic unit so factors stay p-integral up to
        // the numerator contribution.
        if (den_ % p == 0) throw precondition_error("parameter has negative p-adic valuation");
        uint64_t pk = k == 1 ? p : p * p;
        den_unit_inv_ = arith::invmod(arith::mod_reduce(den_, pk), pk);
    }

    // Valuated residue of (a + j) = (num + j*den)/den.
    ValuatedResidue factor(uint64_t j) const {
        ValuatedResidue f = small_ ? linear_factor_small(snum_, sden_, j, p_, k_)
                                   : linear_factor_big(num_, den_, j, p_, k_);
        if (f.is_zero()) return f;
        return ValuatedResidue::make(f.valuation(), arith::mulmod(f.unit(), den_unit_inv_, pk()),
                                     p_, k_);
    }

  private:
    uint64_t pk() const { return k_ == 1 ? p_ : p_ * p_; }

    arith::BigInt num_, den_;
    int64_t snum_ = 0, sden_ = 1;
    bool small_ = false;
    uint64_t p_;
    uint32_t k_;
    uint64_t den_unit_inv_ = 1;
};

} // namespace detail

// (a)_m = prod_{j<m} (a + j) as a valuated residue. Requires v_p(a) >= 0;
// (a)_0 = 1, and a nonpositive integer a short-circuits to an exact zero
// once the zero factor is reached.
inline ValuatedResidue pochhammer_valres(const Rational& a, uint64_t m, uint64_t p, uint32_t k) {
    if (m == 0) return ValuatedResidue::one(p, k);
    if (a != 0 && arith::rational_p_valuation(a, p) < 0)
        throw precondition_error("pochhammer parameter has negative p-adic valuation");
    if (a == 0) return ValuatedResidue::zero(p, k);
    detail::LinearParameter param(a, p, k, m - 1);
    ValuatedResidue acc = ValuatedResidue::one(p, k);
    for (uint64_t j = 0; j < m; ++j) {
        ValuatedResidue f = param.factor(j);
        if (f.is_zero()) return ValuatedResidue::zero(p, k);
        acc = acc * f;
    }
    return acc;
}

// Streams the coefficients c_r = prod (alpha_i)_r / (prod (beta_j)_r * r!)
// of a truncated series, one advance per index.
class CoefficientStream {
  public:
    CoefficientStream(const HypergeometricDatum& datum, uint64_t p, uint32_t k,
                      uint64_t max_index)
        : p_(p), k_(k), value_(ValuatedResidue::one(p, k)) {
        for (const Rational& a : datum.alpha) upper_.emplace_back(a, p, k, max_index);
        for (const Rational& b : datum.beta) lower_.emplace_back(b, p, k, max_index);
    }

    uint64_t index() const { return r_; }
    const ValuatedResidue& value() const { return value_; }

    void advance() {
        for (const auto& a : upper_) value_ = value_ * a.factor(r_);
        for (const auto& b : lower_) value_ = value_ / b.factor(r_);
        value_ = value_ / detail::linear_factor_small(1, 1, r_, p_, k_); // r! step: divide by r+1
        ++r_;
    }

  private:
    std::vector<detail::LinearParameter> upper_, lower_;
    uint64_t p_;
    uint32_t k_;
    uint64_t r_ = 0;
    ValuatedResidue value_;
};

// Closed-form coefficient 432^{-r} (6r)! / (r! (2r)! (3r)!), the integral
// shape of the degree-2 series term.
inline ValuatedResidue closed_form_coeff_2f1(uint64_t r, uint64_t p, uint32_t k) {
    using arith::factorial_valres;
    ValuatedResidue num = factorial_valres(6 * r, p, k);
    ValuatedResidue den = factorial_valres(r, p, k) * factorial_valres(2 * r, p, k) *
                          factorial_valres(3 * r, p, k);
    ValuatedResidue scale = ValuatedResidue::from_integer(432, p, k).pow(r);
    return num / den / scale;
}

// Closed-form coefficient 1728^{-r} (6r)! / ((3r)! (r!)^3).
inline ValuatedResidue closed_form_coeff_3f2(uint64_t r, uint64_t p, uint32_t k) {
    using arith::factorial_valres;
    ValuatedResidue num = factorial_valres(6 * r, p, k);
    ValuatedResidue den = factorial_valres(3 * r, p, k) * factorial_valres(r, p, k).pow(3);
    ValuatedResidue scale = ValuatedResidue::from_integer(1728, p, k).pow(r);
    return num / den / scale;
}

// The Pochhammer route and the factorial closed forms must agree exactly as
// valuated residues; the two independent paths cross-check the kernels.
inline bool closed_form_term_identity_check(uint64_t r, uint64_t p, uint32_t k) {
    arith::ensure_prime_coprime_6(p);
    const Rational sixth(1, 6), five_sixth(5, 6), half(1, 2);
    ValuatedResidue rfact = arith::factorial_valres(r, p, k);
    ValuatedResidue lhs2 =
        pochhammer_valres(sixth, r, p, k) * pochhammer_valres(five_sixth, r, p, k) / rfact.pow(2);
    if (lhs2 != closed_form_coeff_2f1(r, p, k)) return false;
    ValuatedResidue lhs3 = pochhammer_valres(half, r, p, k) * pochhammer_valres(sixth, r, p, k) *
                           pochhammer_valres(five_sixth, r, p, k) / rfact.pow(3);
    return lhs3 == closed_form_coeff_3f2(r, p, k);
}

} // namespace hypcert::hyperseries
