#pragma once

// Weierstrass models over Q, F_p, or F_{p^2}, with the standard b/c
// invariants, plus the two specific models the trace congruences run on:
//
//   reference model   y^2 = x^3 - x/(48 z0^3) + 1/(864 z0^4)   over Q
//   layer model       y^2 + xy = x^3 - (1 - s)/864              with s^2 = z0
//
// Both have j-invariant 1728/(1 - z0); the layer model lives over the
// quadratic layer generated by the square root s.

#include <cstdint>

#include "hypcert/arith/integers.hpp"
#include "hypcert/arith/prime_field.hpp"
#include "hypcert/arith/quad_field.hpp"
#include "hypcert/errors.hpp"

namespace hypcert::curves {

using arith::BigInt;
using arith::Fp;
using arith::Fp2;
using arith::Rational;

namespace detail {

inline Rational k_const(const Rational&, int64_t c) { return Rational(c); }
inline Fp k_const(const Fp& like, int64_t c) { return Fp::from_int(c, like.modulus()); }
inline Fp2 k_const(const Fp2& like, int64_t c) {
    return Fp2::embed(Fp::from_int(c, like.modulus()), like.nonresidue());
}

inline bool k_is_zero(const Rational& x) { return x == 0; }
inline bool k_is_zero(const Fp& x) { return x.is_zero(); }
inline bool k_is_zero(const Fp2& x) { return x.is_zero(); }

inline Rational k_from_rational(const Rational&, const Rational& v) { return v; }
inline Fp k_from_rational(const Fp& like, const Rational& v) {
    return Fp::from_rational(v, like.modulus());
}
inline Fp2 k_from_rational(const Fp2& like, const Rational& v) {
    return Fp2::embed(Fp::from_rational(v, like.modulus()), like.nonresidue());
}

} // namespace detail

template <class K>
struct WeierstrassCurve {
    K a1, a2, a3, a4, a6;

    static WeierstrassCurve short_form(const K& A, const K& B) {
        K z = detail::k_const(A, 0);
        return {z, z, z, A, B};
    }

    bool is_short() const {
        return detail::k_is_zero(a1) && detail::k_is_zero(a2) && detail::k_is_zero(a3);
    }
};

template <class K>
K discriminant(const WeierstrassCurve<K>& e) {
    auto c = [&](int64_t v) { return detail::k_const(e.a6, v); };
    K b2 = e.a1 * e.a1 + c(4) * e.a2;
    K b4 = c(2) * e.a4 + e.a1 * e.a3;
    K b6 = e.a3 * e.a3 + c(4) * e.a6;
    K b8 = e.a1 * e.a1 * e.a6 + c(4) * e.a2 * e.a6 - e.a1 * e.a3 * e.a4 + e.a2 * e.a3 * e.a3 -
           e.a4 * e.a4;
    return c(-1) * b2 * b2 * b8 - c(8) * b4 * b4 * b4 - c(27) * b6 * b6 + c(9) * b2 * b4 * b6;
}

template <class K>
K j_invariant(const WeierstrassCurve<K>& e) {
    K disc = discriminant(e);
    if (detail::k_is_zero(disc)) throw singular_curve_error("j-invariant of a singular model");
    auto c = [&](int64_t v) { return detail::k_const(e.a6, v); };
    K b2 = e.a1 * e.a1 + c(4) * e.a2;
    K b4 = c(2) * e.a4 + e.a1 * e.a3;
    K c4 = b2 * b2 - c(24) * b4;
    return c4 * c4 * c4 / disc;
}

inline Rational z0_from_j(const Rational& j0) {
    if (j0 == 0) throw precondition_error("excluded j-invariant 0");
    return 1 - Rational(1728) / j0;
}

// The rational short model with j-invariant j0, nonzero away from j0 in
// {0, 1728}. Its discriminant is j0^8 (j0 - 1728)^{-9}.
inline WeierstrassCurve<Rational> build_reference_curve(const Rational& j0) {
    if (j0 == 0 || j0 == 1728) throw precondition_error("excluded j-invariant");
    const Rational z0 = z0_from_j(j0);
    const Rational A = Rational(-1) / (48 * z0 * z0 * z0);
    const Rational B = Rational(1) / (864 * z0 * z0 * z0 * z0);
    auto e = WeierstrassCurve<Rational>::short_form(A, B);
    if (j_invariant(e) != j0) throw error("reference model has wrong j-invariant");
    return e;
}

// The layer model and its two substitution steps down to a short model:
// completing the square gives y^2 = x^3 + x^2/4 - (1 - s)/864, and the
// shift x -> x - 1/12 leaves y^2 = x^3 - x/48 + s/864.
template <class K>
struct LayerReduction {
    WeierstrassCurve<K> start;
    WeierstrassCurve<K> midstep;
    WeierstrassCurve<K> short_model;
};

template <class K>
LayerReduction<K> build_layer_curve(const Rational& z0, const K& sqrt_z0) {
    const K z0k = detail::k_from_rational(sqrt_z0, z0);
    if (!detail::k_is_zero(sqrt_z0 * sqrt_z0 - z0k))
        throw precondition_error("square root does not square to z0");
    auto c = [&](int64_t v) { return detail::k_const(sqrt_z0, v); };
    const K one = c(1);
    const K cterm = (one - sqrt_z0) / c(864);

    LayerReduction<K> out;
    out.start = {one, c(0), c(0), c(0), c(0) - cterm};
    out.midstep = {c(0), one / c(4), c(0), c(0), c(0) - cterm};
    out.short_model =
        WeierstrassCurve<K>::short_form(c(0) - one / c(48), sqrt_z0 / c(864));

    K j = j_invariant(out.short_model);
    if (!detail::k_is_zero(j - j_invariant(out.start)) ||
        !detail::k_is_zero(j - j_invariant(out.midstep)))
        throw error("layer reduction steps disagree on the j-invariant");
    return out;
}

// Twist class of two short models with the same j-invariant away from
// {0, 1728}: gamma = (A1/B1)/(A2/B2). The models become isomorphic over the
// extension by sqrt(gamma).
template <class K>
K twist_gamma(const WeierstrassCurve<K>& e1, const WeierstrassCurve<K>& e2) {
    if (!e1.is_short() || !e2.is_short())
        throw precondition_error("twist class needs short models");
    if (detail::k_is_zero(e1.a4) || detail::k_is_zero(e1.a6) || detail::k_is_zero(e2.a4) ||
        detail::k_is_zero(e2.a6))
        throw precondition_error("twist class undefined for j in {0, 1728}");
    if (!detail::k_is_zero(j_invariant(e1) - j_invariant(e2)))
        throw precondition_error("twist class needs equal j-invariants");
    K ratio_a = e1.a4 / e2.a4;
    K ratio_b = e1.a6 / e2.a6;
    if (!detail::k_is_zero(ratio_a * ratio_a * ratio_a - ratio_b * ratio_b))
        throw error("coefficient ratios violate the cube-square relation");
    return (e1.a4 / e1.a6) / (e2.a4 / e2.a6);
}

// Coefficient-wise reduction mod p; every coefficient must be p-integral.
inline WeierstrassCurve<Fp> reduce_curve(const WeierstrassCurve<Rational>& e, uint64_t p) {
    auto r = [&](const Rational& x) { return Fp::from_rational(x, p); };
    return {r(e.a1), r(e.a2), r(e.a3), r(e.a4), r(e.a6)};
}

inline WeierstrassCurve<Fp2> extend_curve(const WeierstrassCurve<Fp>& e, uint64_t n) {
    auto x = [&](const Fp& v) { return Fp2::embed(v, n); };
    return {x(e.a1), x(e.a2), x(e.a3), x(e.a4), x(e.a6)};
}

// Minimal p-integral rescaling (A, B) -> (p^{4e} A, p^{6e} B) of a short
// rational model; other models are returned unchanged.
inline WeierstrassCurve<Rational> p_minimal_model(const WeierstrassCurve<Rational>& e,
                                                  uint64_t p) {
    if (!(e.is_short() && e.a4 != 0 && e.a6 != 0)) return e;
    int64_t va = arith::rational_p_valuation(e.a4, p);
    int64_t vb = arith::rational_p_valuation(e.a6, p);
    int64_t scale = 0;
    while (va + 4 * scale < 0 || vb + 6 * scale < 0) ++scale;
    if (scale == 0) return e;
    Rational pe = 1;
    for (int64_t i = 0; i < scale; ++i) pe *= Rational(BigInt(p));
    Rational p4 = pe * pe * pe * pe;
    return WeierstrassCurve<Rational>::short_form(e.a4 * p4, e.a6 * p4 * pe * pe);
}

// Good reduction at p: the minimally rescaled model is p-integral with a
// p-unit discriminant.
inline bool has_good_reduction(const WeierstrassCurve<Rational>& e, uint64_t p) {
    using arith::rational_p_valuation;
    WeierstrassCurve<Rational> m = p_minimal_model(e, p);
    for (const Rational* x : {&m.a1, &m.a2, &m.a3, &m.a4, &m.a6})
        if (*x != 0 && rational_p_valuation(*x, p) < 0) return false;
    Rational disc = discriminant(m);
    return disc != 0 && rational_p_valuation(disc, p) == 0;
}

// The pair driving one theorem instance: the rational reference curve and
// the z0 that defines the layer curve over the quadratic layer.
struct CurvePair {
    Rational j0;
    Rational z0;
    WeierstrassCurve<Rational> base;
};

inline CurvePair make_curve_pair(const Rational& j0) {
    return {j0, z0_from_j(j0), build_reference_curve(j0)};
}

} // namespace hypcert::curves
