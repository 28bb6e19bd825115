#pragma once

// Truncated hypergeometric sums evaluated in F_p or F_{p^2}, and the same
// truncations kept as polynomials in the argument.

#include <cstdint>

#include "hypcert/arith/polynomial.hpp"
#include "hypcert/arith/prime_field.hpp"
#include "hypcert/errors.hpp"
#include "hypcert/hyperseries/kernels.hpp"

namespace hypcert::hyperseries {

using arith::DensePolynomial;
using arith::Fp;

// sum_{r <= r_max} (c_r mod p) z^r in the field of z. Coefficients with
// positive valuation contribute nothing; a negative valuation means the
// kernels broke the p-integrality guarantee of the fixed data.
template <class E>
E truncated_sum_value(const HypergeometricDatum& datum, const E& z, uint64_t r_max) {
    const uint64_t p = z.modulus();
    CoefficientStream cs(datum, p, 1, r_max);
    E acc = z.zero();
    E zpow = z.one();
    for (uint64_t r = 0;; ++r) {
        const ValuatedResidue& c = cs.value();
        if (!c.is_zero() && c.valuation() < 0)
            throw integrality_error("series coefficient with negative valuation");
        uint64_t residue = c.residue_mod_p();
        if (residue != 0) acc = acc + zpow * z.from_residue(residue);
        if (r == r_max) break;
        zpow = zpow * z;
        cs.advance();
    }
    return acc;
}

template <class E>
E truncated_sum_value(const HypergeometricDatum& datum, const E& z, const TruncationLevel& t) {
    return truncated_sum_value(datum, z, t.r_max);
}

// The truncation as a polynomial over F_p: sum (c_r mod p) t^r.
inline DensePolynomial<Fp> truncated_series_poly(const HypergeometricDatum& datum,
                                                 uint64_t r_max, uint64_t p) {
    CoefficientStream cs(datum, p, 1, r_max);
    std::vector<Fp> coeffs;
    coeffs.reserve(r_max + 1);
    for (uint64_t r = 0;; ++r) {
        const ValuatedResidue& c = cs.value();
        if (!c.is_zero() && c.valuation() < 0)
            throw integrality_error("series coefficient with negative valuation");
        coeffs.emplace_back(c.residue_mod_p(), p);
        if (r == r_max) break;
        cs.advance();
    }
    return DensePolynomial<Fp>(std::move(coeffs));
}

inline DensePolynomial<Fp> truncated_series_poly(const HypergeometricDatum& datum,
                                                 const TruncationLevel& t, uint64_t p) {
    return truncated_series_poly(datum, t.r_max, p);
}

} // namespace hypcert::hyperseries
