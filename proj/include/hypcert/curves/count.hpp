#pragma once

// Exhaustive point counting over F_p and F_{p^2}. In characteristic >= 5
// every model completes the square to y^2 = x^3 + c2 x^2 + c1 x + c0, so a
// single kernel walks x over the field and adds the quadratic character of
// the cubic, evaluated through a precomputed square table.

#include <cstdint>
#include <vector>

#include "hypcert/curves/model.hpp"
#include "hypcert/errors.hpp"

namespace hypcert::curves {

struct TraceRecord {
    uint64_t q = 0;     // field size
    uint64_t count = 0; // |E(F_q)| including the point at infinity
    int64_t a = 0;      // q + 1 - count
};

namespace detail {

inline void hasse_check(const TraceRecord& t) {
    // a^2 <= 4q; a violation means the counting kernel itself is broken.
    if (static_cast<uint64_t>(t.a * t.a) > 4 * t.q)
        throw error("point count violates the Hasse bound");
}

template <class K>
struct CompletedCubic {
    K c2, c1, c0;
};

// y^2 + (a1 x + a3) y = x^3 + a2 x^2 + a4 x + a6 becomes, after replacing
// y by y - (a1 x + a3)/2, the curve y^2 = cubic(x).
template <class K>
CompletedCubic<K> complete_square(const WeierstrassCurve<K>& e) {
    auto c = [&](int64_t v) { return k_const(e.a6, v); };
    K inv4 = c(1) / c(4);
    K inv2 = c(1) / c(2);
    return {e.a2 + e.a1 * e.a1 * inv4, e.a4 + e.a1 * e.a3 * inv2, e.a6 + e.a3 * e.a3 * inv4};
}

} // namespace detail

inline TraceRecord count_points(const WeierstrassCurve<Fp>& e, uint64_t bound = 1000000) {
    const uint64_t p = e.a6.modulus();
    arith::ensure_prime_coprime_6(p);
    if (p > bound) throw resource_limit_error("field size exceeds the point-count bound");
    if (detail::k_is_zero(discriminant(e))) throw singular_curve_error("counting a singular model");

    auto cubic = detail::complete_square(e);
    const uint64_t c2 = cubic.c2.value(), c1 = cubic.c1.value(), c0 = cubic.c0.value();

    std::vector<int8_t> chi(p, -1);
    chi[0] = 0;
    for (uint64_t y = 1; y < p; ++y) chi[arith::mulmod(y, y, p)] = 1;

    int64_t acc = 0;
    for (uint64_t x = 0; x < p; ++x) {
        uint64_t f = arith::mulmod(arith::addmod(arith::mulmod(arith::addmod(x, c2, p), x, p), c1, p), x, p);
        f = arith::addmod(f, c0, p);
        acc += chi[f];
    }
    TraceRecord out;
    out.q = p;
    out.count = p + 1 + acc;
    out.a = -acc;
    detail::hasse_check(out);
    return out;
}

inline TraceRecord count_points(const WeierstrassCurve<Fp2>& e, uint64_t bound = 1000000) {
    const uint64_t p = e.a6.modulus();
    arith::ensure_prime_coprime_6(p);
    const uint64_t q = p * p;
    if (q > bound) throw resource_limit_error("field size exceeds the point-count bound");
    if (detail::k_is_zero(discriminant(e))) throw singular_curve_error("counting a singular model");

    auto cubic = detail::complete_square(e);
    const uint64_t n = e.a6.nonresidue();
    const uint64_t c2r = cubic.c2.re().value(), c2i = cubic.c2.im().value();
    const uint64_t c1r = cubic.c1.re().value(), c1i = cubic.c1.im().value();
    const uint64_t c0r = cubic.c0.re().value(), c0i = cubic.c0.im().value();

    using arith::addmod;
    using arith::mulmod;
    auto mul = [&](uint64_t ar, uint64_t ai, uint64_t br, uint64_t bi, uint64_t& rr, uint64_t& ri) {
        rr = addmod(mulmod(ar, br, p), mulmod(n, mulmod(ai, bi, p), p), p);
        ri = addmod(mulmod(ar, bi, p), mulmod(ai, br, p), p);
    };

    // Squares of all elements fill the character table for the extension.
    std::vector<uint8_t> is_square(q, 0);
    for (uint64_t br = 0; br < p; ++br)
        for (uint64_t bi = 0; bi < p; ++bi) {
            uint64_t sr, si;
            mul(br, bi, br, bi, sr, si);
            is_square[sr * p + si] = 1;
        }

    int64_t acc = 0;
    for (uint64_t xr = 0; xr < p; ++xr)
        for (uint64_t xi = 0; xi < p; ++xi) {
            uint64_t fr, fi;
            mul(addmod(xr, c2r, p), addmod(xi, c2i, p), xr, xi, fr, fi);
            fr = addmod(fr, c1r, p);
            fi = addmod(fi, c1i, p);
            uint64_t gr, gi;
            mul(fr, fi, xr, xi, gr, gi);
            gr = addmod(gr, c0r, p);
            gi = addmod(gi, c0i, p);
            if (gr == 0 && gi == 0) continue; // character 0
            acc += is_square[gr * p + gi] ? 1 : -1;
        }
    TraceRecord out;
    out.q = q;
    out.count = q + 1 + acc;
    out.a = -acc;
    detail::hasse_check(out);
    return out;
}

// Trace of the rational model at a good prime.
inline TraceRecord count_reduction(const WeierstrassCurve<Rational>& e, uint64_t p,
                                   uint64_t bound = 1000000) {
    if (!has_good_reduction(e, p)) throw precondition_error("bad reduction at p");
    return count_points(reduce_curve(p_minimal_model(e, p), p), bound);
}

} // namespace hypcert::curves
