#pragma once

// Canonical string encodings for report fields: F_p residues as decimals,
// F_{p^2} elements as "a0+a1*w", rationals as "n" or "n/d".

#include <sstream>
#include <string>

#include "hypcert/arith/polynomial.hpp"
#include "hypcert/arith/prime_field.hpp"
#include "hypcert/arith/quad_field.hpp"
#include "hypcert/verify/report.hpp"

namespace hypcert::verify {

inline std::string encode(const arith::Fp& x) { return std::to_string(x.value()); }

inline std::string encode(const arith::Fp2& x) {
    return std::to_string(x.re().value()) + "+" + std::to_string(x.im().value()) + "*w";
}

inline std::string encode(const arith::Rational& x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

inline uint64_t residue_word(const arith::Fp& x) { return x.value(); }
inline uint64_t residue_word(const arith::Fp2& x) {
    return x.re().value() * x.modulus() + x.im().value();
}

template <class E>
std::string poly_digest(const arith::DensePolynomial<E>& poly) {
    SequenceDigest d;
    for (const E& c : poly.coefficients()) d.add(residue_word(c));
    return "deg" + std::to_string(poly.degree()) + ":" + d.str();
}

} // namespace hypcert::verify
