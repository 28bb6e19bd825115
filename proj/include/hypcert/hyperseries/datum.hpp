#pragma once

// Hypergeometric data and truncation levels. Only two data are used by the
// congruence checks; the datum type exists to keep signatures explicit, not
// as a generic pFq framework.

#include <cstdint>
#include <vector>

#include "hypcert/arith/integers.hpp"
#include "hypcert/errors.hpp"

namespace hypcert::hyperseries {

using arith::BigInt;
using arith::Rational;

struct HypergeometricDatum {
    std::vector<Rational> alpha; // length n
    std::vector<Rational> beta;  // length n - 1

    HypergeometricDatum(std::vector<Rational> a, std::vector<Rational> b)
        : alpha(std::move(a)), beta(std::move(b)) {
        if (alpha.size() != beta.size() + 1)
            throw precondition_error("datum needs one more upper than lower parameter");
        for (const Rational& bj : beta) {
            if (denominator(bj) == 1 && bj <= 0)
                throw precondition_error("lower parameters must avoid nonpositive integers");
        }
    }
};

// ((1/6, 5/6), (1)): the series whose truncations match layer-curve traces.
inline const HypergeometricDatum& gauss_sixth_datum() {
    static const HypergeometricDatum d({Rational(1, 6), Rational(5, 6)}, {Rational(1)});
    return d;
}

// ((1/2, 1/6, 5/6), (1, 1)): the square side of Clausen's formula.
inline const HypergeometricDatum& clausen_3f2_datum() {
    static const HypergeometricDatum d({Rational(1, 2), Rational(1, 6), Rational(5, 6)},
                                       {Rational(1), Rational(1)});
    return d;
}

enum class TruncationRule {
    Explicit,        // caller-chosen r_max
    FloorSixth,      // floor((p^l - 1)/6)
    BlockEnd,        // p^l - 1
    SquaredBlockEnd, // p^{2l} - 1
};

struct TruncationLevel {
    uint64_t r_max = 0;
    TruncationRule rule = TruncationRule::Explicit;

    static TruncationLevel explicit_level(uint64_t r) { return {r, TruncationRule::Explicit}; }
    static TruncationLevel floor_sixth(uint64_t p, uint32_t l) {
        return {(arith::checked_pow_u64(p, l) - 1) / 6, TruncationRule::FloorSixth};
    }
    static TruncationLevel block_end(uint64_t p, uint32_t l) {
        return {arith::checked_pow_u64(p, l) - 1, TruncationRule::BlockEnd};
    }
    static TruncationLevel squared_block_end(uint64_t p, uint32_t l) {
        return {arith::checked_pow_u64(p, 2 * l) - 1, TruncationRule::SquaredBlockEnd};
    }
};

// For a p-adic unit a: the least nonnegative residue [a]_0 of a mod p^l and
// the shifted parameter a' = p^{-l} (a + [-a]_0), itself a p-adic integer.
struct ZpUnitParam {
    Rational a;
    uint64_t bracket_zero = 0; // [a]_0 in [0, p^l)
    Rational a_prime;
    uint64_t p = 0;
    uint32_t l = 1;
    uint64_t block = 0; // p^l

    uint64_t neg_bracket() const { return bracket_zero == 0 ? 0 : block - bracket_zero; }
};

inline ZpUnitParam compute_bracket_and_prime(const Rational& a, uint64_t p, uint32_t l) {
    arith::ensure_odd_prime(p);
    if (a == 0 || arith::rational_p_valuation(a, p) != 0)
        throw precondition_error("bracket parameter must be a p-adic unit");
    const uint64_t pl = arith::checked_pow_u64(p, l);
    ZpUnitParam out;
    out.a = a;
    out.p = p;
    out.l = l;
    out.block = pl;
    out.bracket_zero = arith::rational_mod(a, pl);
    const Rational shifted = a + Rational(BigInt(out.neg_bracket()));
    out.a_prime = shifted / Rational(BigInt(pl));
    if (out.a_prime != 0 && arith::rational_p_valuation(out.a_prime, p) < 0)
        throw error("shifted parameter failed to be p-integral");
    return out;
}

} // namespace hypcert::hyperseries
