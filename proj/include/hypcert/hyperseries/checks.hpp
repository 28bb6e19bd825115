#pragma once

// Executable congruence checks for the truncated-series identities. Each
// check verifies one identity for one parameter instance and returns a
// structured report; mismatches are recorded, never thrown.

#include <cstdint>
#include <string>

#include "hypcert/arith.hpp"
#include "hypcert/hyperseries/sums.hpp"
#include "hypcert/verify/encode.hpp"
#include "hypcert/verify/report.hpp"

namespace hypcert::hyperseries {

using arith::Fp;
using arith::Fp2;
using verify::CongruenceReport;
using verify::Verdict;

namespace detail {

inline void require_level(uint32_t l) {
    if (l != 1 && l != 2) throw precondition_error("residue degree l must be 1 or 2");
}

inline Fp sign_element(bool negative, uint64_t p) { return Fp(negative ? p - 1 : 1, p); }

} // namespace detail

// Suite id "4.vanish": every series coefficient c_r of both fixed data has
// positive valuation for floor((p^l-1)/6) < r <= p^l - 1.
inline CongruenceReport check_term_vanishing(uint64_t p, uint32_t l) {
    arith::ensure_prime_coprime_6(p);
    detail::require_level(l);
    CongruenceReport rep;
    rep.check_id = "4.vanish";
    rep.p = p;
    rep.l = l;

    const uint64_t block = arith::checked_pow_u64(p, l);
    const uint64_t lo = (block - 1) / 6 + 1;
    const uint64_t hi = block - 1;
    int64_t min_val = std::numeric_limits<int64_t>::max();
    bool ok = true;
    const HypergeometricDatum* data[] = {&gauss_sixth_datum(), &clausen_3f2_datum()};
    const char* names[] = {"2f1", "3f2"};
    for (int d = 0; d < 2; ++d) {
        CoefficientStream cs(*data[d], p, 1, hi);
        for (uint64_t r = 0; r <= hi; ++r) {
            if (r >= lo && !cs.value().is_zero()) {
                int64_t v = cs.value().valuation();
                if (v < min_val) min_val = v;
                if (v < 1 && ok) {
                    ok = false;
                    rep.note = std::string("first non-vanishing term: datum=") + names[d] +
                               " r=" + std::to_string(r);
                }
            }
            if (r < hi) cs.advance();
        }
    }
    rep.lhs = "min_valuation=" + std::to_string(min_val);
    rep.rhs = "min_valuation>=1";
    rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
    return rep;
}

// Suite id "4.3": truncated Clausen identity. The square of the degree-2
// truncation at floor((p^l-1)/6) equals the degree-3 truncation evaluated
// at 4t(1-t), coefficient for coefficient mod p.
inline CongruenceReport check_truncated_clausen(uint64_t p, uint32_t l) {
    arith::ensure_prime_coprime_6(p);
    detail::require_level(l);
    CongruenceReport rep;
    rep.check_id = "4.3";
    rep.p = p;
    rep.l = l;

    const uint64_t m = (arith::checked_pow_u64(p, l) - 1) / 6;
    auto left = truncated_series_poly(gauss_sixth_datum(), m, p);
    left = left * left;

    // sum c_r q(t)^r with q = 4t - 4t^2, accumulated without truncation.
    arith::DensePolynomial<Fp> q(std::vector<Fp>{Fp(0, p), Fp(4, p), Fp::from_int(-4, p)});
    arith::DensePolynomial<Fp> qpow = arith::DensePolynomial<Fp>::constant(Fp(1, p));
    arith::DensePolynomial<Fp> right;
    CoefficientStream cs(clausen_3f2_datum(), p, 1, m);
    for (uint64_t r = 0;; ++r) {
        uint64_t c = cs.value().residue_mod_p();
        if (c != 0) right = right + qpow.scaled(Fp(c, p));
        if (r == m) break;
        qpow = qpow * q;
        cs.advance();
    }

    rep.lhs = verify::poly_digest(left);
    rep.rhs = verify::poly_digest(right);
    if (left == right) {
        rep.verdict = Verdict::Pass;
    } else {
        rep.verdict = Verdict::Fail;
        auto idx = arith::first_coefficient_mismatch(left, right);
        rep.note = "first differing coefficient index: " + std::to_string(*idx);
    }
    return rep;
}

// Suite id "5.3": reflection of the truncated degree-2 series, P(t) equal
// to (-1)^{(p^l-1)/2} P(1-t) as polynomials mod p.
inline CongruenceReport check_reflection(uint64_t p, uint32_t l) {
    arith::ensure_prime_coprime_6(p);
    detail::require_level(l);
    CongruenceReport rep;
    rep.check_id = "5.3";
    rep.p = p;
    rep.l = l;

    const uint64_t block = arith::checked_pow_u64(p, l);
    const uint64_t m = (block - 1) / 6;
    auto poly = truncated_series_poly(gauss_sixth_datum(), m, p);
    arith::DensePolynomial<Fp> one_minus_t(std::vector<Fp>{Fp(1, p), Fp::from_int(-1, p)});
    auto reflected =
        poly.composed_with(one_minus_t).scaled(detail::sign_element((block - 1) / 2 % 2, p));

    rep.lhs = verify::poly_digest(poly);
    rep.rhs = verify::poly_digest(reflected);
    if (poly == reflected) {
        rep.verdict = Verdict::Pass;
    } else {
        rep.verdict = Verdict::Fail;
        auto idx = arith::first_coefficient_mismatch(poly, reflected);
        rep.note = "first differing coefficient index: " + std::to_string(*idx);
    }
    return rep;
}

// Suite id "5.2": the truncation at p^{2l}-1 splits as the product of the
// truncation at p^l-1 and the same truncation in t^{p^l}.
inline CongruenceReport check_block_factorization(uint64_t p, uint32_t l) {
    arith::ensure_prime_coprime_6(p);
    detail::require_level(l);
    CongruenceReport rep;
    rep.check_id = "5.2";
    rep.p = p;
    rep.l = l;

    const uint64_t block = arith::checked_pow_u64(p, l);
    const uint64_t full = arith::checked_pow_u64(p, 2 * l) - 1;
    auto left = truncated_series_poly(gauss_sixth_datum(), full, p);
    auto base = truncated_series_poly(gauss_sixth_datum(), block - 1, p);
    auto right = base * base.with_argument_power(block);

    rep.lhs = verify::poly_digest(left);
    rep.rhs = verify::poly_digest(right);
    if (left == right) {
        rep.verdict = Verdict::Pass;
    } else {
        rep.verdict = Verdict::Fail;
        auto idx = arith::first_coefficient_mismatch(left, right);
        rep.note = "first differing coefficient index: " + std::to_string(*idx);
    }
    return rep;
}

// Suite id "5.1": for a p-adic unit a with shifted parameter a', the ratios
// (a)_{m p^l}/(m p^l)! and (a')_m/m! agree mod p for 0 <= m <= p^l - 1
// (m capped by m_max).
inline CongruenceReport check_block_reduction(const Rational& a, uint64_t p, uint32_t l,
                                              uint64_t m_max = UINT64_MAX) {
    arith::ensure_odd_prime(p);
    detail::require_level(l);
    if (a == 0 || arith::rational_p_valuation(a, p) != 0)
        throw precondition_error("block reduction requires a p-adic unit parameter");

    CongruenceReport rep;
    rep.check_id = "5.1:a=" + verify::encode(a);
    rep.p = p;
    rep.l = l;

    const uint64_t block = arith::checked_pow_u64(p, l);
    const uint64_t m_hi = std::min(block - 1, m_max);
    const ZpUnitParam zp = compute_bracket_and_prime(a, p, l);

    detail::LinearParameter left_param(a, p, 1, m_hi * block);
    detail::LinearParameter right_param(zp.a_prime == 0 ? Rational(0) : zp.a_prime, p, 1, m_hi);
    // a' = 0 happens only for a = -[(-a)]_0 integral; not hit by unit a, but
    // keep the stream well-defined.

    ValuatedResidue lpoch = ValuatedResidue::one(p, 1);
    ValuatedResidue lfact = ValuatedResidue::one(p, 1);
    ValuatedResidue rpoch = ValuatedResidue::one(p, 1);
    ValuatedResidue rfact = ValuatedResidue::one(p, 1);

    verify::SequenceDigest ldig, rdig;
    bool ok = true;
    for (uint64_t m = 0;; ++m) {
        ValuatedResidue lv = lpoch / lfact;
        ValuatedResidue rv = rpoch / rfact;
        bool l_ok = lv.is_zero() || lv.valuation() >= 0;
        bool r_ok = rv.is_zero() || rv.valuation() >= 0;
        uint64_t lres = l_ok ? lv.residue_mod_p() : uint64_t(-1);
        uint64_t rres = r_ok ? rv.residue_mod_p() : uint64_t(-1);
        ldig.add(lres);
        rdig.add(rres);
        if ((lres != rres || !l_ok || !r_ok) && ok) {
            ok = false;
            rep.note = "first mismatch at m=" + std::to_string(m) + ": " + std::to_string(lres) +
                       " vs " + std::to_string(rres);
        }
        if (m == m_hi) break;
        for (uint64_t j = m * block; j < (m + 1) * block; ++j) {
            lpoch = lpoch * left_param.factor(j);
            lfact = lfact * detail::linear_factor_small(1, 1, j, p, 1); // multiply by j + 1
        }
        rpoch = rpoch * right_param.factor(m);
        rfact = rfact * detail::linear_factor_small(1, 1, m, p, 1);
    }

    rep.lhs = ldig.str();
    rep.rhs = rdig.str();
    rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
    return rep;
}

// Suite id "5.4": for a non-residue z0, the degree-2 truncation at p^2-1
// evaluated at (1 - sqrt(z0))/2 in F_{p^2} equals (-1/p) times the square
// of the truncation at p-1, for both square roots.
inline CongruenceReport check_inert_square_evaluation(const Rational& z0, uint64_t p) {
    arith::ensure_prime_coprime_6(p);
    if (z0 == 0 || arith::rational_p_valuation(z0, p) != 0)
        throw precondition_error("z0 must be a p-adic unit");
    Fp z = Fp::from_rational(z0, p);
    if (arith::legendre_symbol(z) != -1)
        throw precondition_error("z0 splits mod p; the inert evaluation needs a non-residue");

    CongruenceReport rep;
    rep.check_id = "5.4";
    rep.p = p;
    rep.l = 2;
    rep.z0 = verify::encode(z0);
    rep.branch = "inert";

    const uint64_t n = arith::find_nonresidue(p);
    const Fp2 root = arith::sqrt_of_nonresidue(z, n);
    const bool minus_one_square = (p % 4 == 1);
    bool ok = true;
    for (int pick = 0; pick < 2; ++pick) {
        Fp2 w = pick == 0 ? root : -root;
        Fp2 t = (w.one() - w) * Fp2::embed(Fp(2, p).inv(), n);
        Fp2 left = truncated_sum_value(gauss_sixth_datum(), t, p * p - 1);
        Fp2 s = truncated_sum_value(gauss_sixth_datum(), t, p - 1);
        Fp2 right = s * s;
        if (!minus_one_square) right = -right;
        if (pick == 0) {
            rep.lhs = verify::encode(left);
            rep.rhs = verify::encode(right);
        }
        if (left != right) {
            ok = false;
            rep.note = std::string("mismatch with root choice ") + (pick == 0 ? "+" : "-");
        }
    }
    rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
    return rep;
}

// Suite id "3.3": the central factorial congruence
// 4^{3r} ((p^l-1)/2)! / (r! (2r)! ((p^l-1)/2 - 3r)!)
//   = (-1)^{3r} (6r)! / (r! (2r)! (3r)!)  mod p,  0 <= r <= (p^l-1)/6.
inline CongruenceReport check_central_factorial_congruence(uint64_t p, uint32_t l) {
    arith::ensure_prime_coprime_6(p);
    detail::require_level(l);
    CongruenceReport rep;
    rep.check_id = "3.3";
    rep.p = p;
    rep.l = l;

    const uint64_t block = arith::checked_pow_u64(p, l);
    const uint64_t half = (block - 1) / 2;
    const uint64_t r_max = (block - 1) / 6;

    std::vector<ValuatedResidue> fact;
    fact.reserve(block);
    fact.push_back(ValuatedResidue::one(p, 1));
    for (uint64_t i = 1; i < block; ++i)
        fact.push_back(fact.back() * ValuatedResidue::from_integer(static_cast<int64_t>(i), p, 1));

    const ValuatedResidue sixty_four = ValuatedResidue::from_integer(64, p, 1);
    ValuatedResidue power = ValuatedResidue::one(p, 1);
    verify::SequenceDigest ldig, rdig;
    bool ok = true;
    for (uint64_t r = 0; r <= r_max; ++r) {
        ValuatedResidue left = power * fact[half] / (fact[r] * fact[2 * r] * fact[half - 3 * r]);
        ValuatedResidue right = fact[6 * r] / (fact[r] * fact[2 * r] * fact[3 * r]);
        if (r % 2 == 1) right = -right;
        uint64_t lres = left.residue_mod_p();
        uint64_t rres = right.residue_mod_p();
        ldig.add(lres);
        rdig.add(rres);
        if (lres != rres && ok) {
            ok = false;
            rep.note = "first mismatch at r=" + std::to_string(r) + ": " + std::to_string(lres) +
                       " vs " + std::to_string(rres);
        }
        power = power * sixty_four;
    }
    rep.lhs = ldig.str();
    rep.rhs = rdig.str();
    rep.verdict = ok ? Verdict::Pass : Verdict::Fail;
    return rep;
}

} // namespace hypcert::hyperseries
