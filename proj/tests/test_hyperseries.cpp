#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hypcert/hyperseries/checks.hpp"

using namespace hypcert;
using namespace hypcert::arith;
using namespace hypcert::hyperseries;
using hypcert::verify::Verdict;

namespace {

// Exact rational Pochhammer product, the independent reference for the
// valuated-residue kernel.
Rational pochhammer_rational(const Rational& a, uint64_t m) {
    Rational acc = 1;
    for (uint64_t j = 0; j < m; ++j) acc *= a + Rational(BigInt(j));
    return acc;
}

} // namespace

TEST_CASE("datum validation") {
    REQUIRE_THROWS_AS(HypergeometricDatum({Rational(1, 2)}, {Rational(0)}), precondition_error);
    REQUIRE_THROWS_AS(HypergeometricDatum({Rational(1, 2)}, {Rational(-2)}), precondition_error);
    REQUIRE_THROWS_AS(HypergeometricDatum({Rational(1, 2), Rational(1, 3)}, {}), precondition_error);
    REQUIRE(gauss_sixth_datum().alpha.size() == 2);
    REQUIRE(clausen_3f2_datum().beta.size() == 2);
}

TEST_CASE("truncation levels") {
    REQUIRE(TruncationLevel::floor_sixth(5, 1).r_max == 0);
    REQUIRE(TruncationLevel::floor_sixth(7, 1).r_max == 1);
    REQUIRE(TruncationLevel::floor_sixth(7, 2).r_max == 8);
    REQUIRE(TruncationLevel::block_end(7, 2).r_max == 48);
    REQUIRE(TruncationLevel::squared_block_end(7, 1).r_max == 48);
    REQUIRE(TruncationLevel::explicit_level(17).r_max == 17);
}

TEST_CASE("pochhammer valuated residues") {
    ValuatedResidue empty = pochhammer_valres(Rational(1, 6), 0, 7, 1);
    REQUIRE(empty.valuation() == 0);
    REQUIRE(empty.unit() == 1);

    // (1/6)_7 at p = 7 has valuation 1 and unit 1.
    ValuatedResidue p7 = pochhammer_valres(Rational(1, 6), 7, 7, 1);
    REQUIRE(p7.valuation() == 1);
    REQUIRE(p7.unit() == 1);

    // (1)_m = m!.
    for (uint64_t m : {0ull, 1ull, 5ull, 23ull, 100ull})
        REQUIRE(pochhammer_valres(Rational(1), m, 5, 2) == factorial_valres(m, 5, 2));

    // Nonpositive integer parameters hit a zero factor.
    REQUIRE(pochhammer_valres(Rational(-3), 5, 7, 1).is_zero());
    REQUIRE_FALSE(pochhammer_valres(Rational(-3), 3, 7, 1).is_zero());

    REQUIRE_THROWS_AS(pochhammer_valres(Rational(1, 5), 3, 5, 1), precondition_error);

    // Against the exact rational product.
    for (uint64_t p : {5ull, 7ull, 13ull}) {
        for (uint32_t k : {1u, 2u}) {
            for (const Rational& a : {Rational(1, 6), Rational(5, 6), Rational(1, 2), Rational(3)}) {
                for (uint64_t m : {1ull, 2ull, 7ull, 26ull, 125ull, 200ull}) {
                    REQUIRE(pochhammer_valres(a, m, p, k) ==
                            ValuatedResidue::from_rational(pochhammer_rational(a, m), p, k));
                }
            }
        }
    }
}

TEST_CASE("coefficient stream matches direct ratios") {
    // c_1 of the degree-3 datum is 5/72 along both routes.
    const Rational c1(5, 72);
    REQUIRE(Rational(1, 2) * Rational(1, 6) * Rational(5, 6) == c1);
    REQUIRE(Rational(720, 6 * 1728) == c1);

    CoefficientStream cs(clausen_3f2_datum(), 7, 2, 10);
    REQUIRE(cs.value() == ValuatedResidue::one(7, 2));
    cs.advance();
    REQUIRE(cs.value() == ValuatedResidue::from_rational(c1, 7, 2));

    // Stream equals the Pochhammer-quotient definition for both data.
    for (uint64_t p : {5ull, 11ull}) {
        for (const auto* datum : {&gauss_sixth_datum(), &clausen_3f2_datum()}) {
            CoefficientStream s(*datum, p, 2, 64);
            for (uint64_t r = 0; r <= 64; ++r) {
                ValuatedResidue expect = ValuatedResidue::one(p, 2);
                for (const Rational& a : datum->alpha) expect = expect * pochhammer_valres(a, r, p, 2);
                for (const Rational& b : datum->beta) expect = expect / pochhammer_valres(b, r, p, 2);
                expect = expect / factorial_valres(r, p, 2);
                REQUIRE(s.value() == expect);
                if (r < 64) s.advance();
            }
        }
    }
}

TEST_CASE("closed-form term identities") {
    REQUIRE(closed_form_coeff_2f1(0, 7, 2) == ValuatedResidue::one(7, 2));
    REQUIRE(closed_form_coeff_2f1(1, 7, 2) ==
            ValuatedResidue::from_rational(Rational(5, 36), 7, 2));
    REQUIRE(closed_form_coeff_3f2(1, 7, 2) ==
            ValuatedResidue::from_rational(Rational(5, 72), 7, 2));

    REQUIRE(closed_form_term_identity_check(0, 7, 1));
    REQUIRE(closed_form_term_identity_check(1, 7, 2));
    REQUIRE(closed_form_term_identity_check(10, 7, 1));
    for (uint64_t p : {5ull, 7ull, 11ull, 13ull})
        for (uint64_t r = 0; r <= 60; ++r) REQUIRE(closed_form_term_identity_check(r, p, 2));
}

TEST_CASE("series coefficients are p-integral") {
    for (uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        for (const auto* datum : {&gauss_sixth_datum(), &clausen_3f2_datum()}) {
            CoefficientStream s(*datum, p, 1, 1000);
            for (uint64_t r = 0; r <= 1000; ++r) {
                REQUIRE((s.value().is_zero() || s.value().valuation() >= 0));
                if (r < 1000) s.advance();
            }
        }
    }
}

TEST_CASE("truncated sum values") {
    // r_max = 0 is the constant term.
    for (uint64_t z = 0; z < 7; ++z)
        REQUIRE(truncated_sum_value(clausen_3f2_datum(), Fp(z, 7), 0) == Fp(1, 7));

    // All of c_1..c_4 of the degree-3 datum vanish mod 5.
    for (uint64_t r = 1; r <= 4; ++r) REQUIRE(closed_form_coeff_3f2(r, 5, 1).valuation() >= 1);
    REQUIRE(truncated_sum_value(clausen_3f2_datum(), Fp(4, 5), 4) == Fp(1, 5));

    // Sum value equals polynomial evaluation.
    std::mt19937_64 rng(3);
    for (uint64_t p : {7ull, 13ull}) {
        for (const auto* datum : {&gauss_sixth_datum(), &clausen_3f2_datum()}) {
            uint64_t r_max = 20;
            auto poly = truncated_series_poly(*datum, r_max, p);
            for (int i = 0; i < 10; ++i) {
                Fp z(rng() % p, p);
                REQUIRE(truncated_sum_value(*datum, z, r_max) == poly.eval(z));
            }
        }
    }
}

TEST_CASE("truncated series polynomials") {
    auto poly = truncated_series_poly(gauss_sixth_datum(), 1, 7);
    REQUIRE(poly.degree() == 1);
    REQUIRE(poly[0] == Fp(1, 7));
    REQUIRE(poly[1] == Fp(5, 7)); // 5/36 = 5 mod 7

    REQUIRE(truncated_series_poly(clausen_3f2_datum(), 0, 11).degree() == 0);
    REQUIRE(truncated_series_poly(gauss_sixth_datum(), TruncationLevel::floor_sixth(5, 1), 5) ==
            DensePolynomial<Fp>::constant(Fp(1, 5)));
}

TEST_CASE("sum truncation collapses to the sixth floor") {
    std::mt19937_64 rng(17);
    for (uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        for (uint32_t l : {1u, 2u}) {
            uint64_t block = l == 1 ? p : p * p;
            for (const auto* datum : {&gauss_sixth_datum(), &clausen_3f2_datum()}) {
                for (int i = 0; i < 4; ++i) {
                    Fp z(rng() % p, p);
                    REQUIRE(truncated_sum_value(*datum, z, block - 1) ==
                            truncated_sum_value(*datum, z, (block - 1) / 6));
                }
            }
        }
    }
}

TEST_CASE("bracket parameters") {
    auto zp = compute_bracket_and_prime(Rational(1, 6), 7, 1);
    REQUIRE(zp.bracket_zero == 6);
    REQUIRE(zp.neg_bracket() == 1);
    REQUIRE(zp.a_prime == Rational(1, 6));

    auto one = compute_bracket_and_prime(Rational(1), 13, 1);
    REQUIRE(one.bracket_zero == 1);
    REQUIRE(one.neg_bracket() == 12);
    REQUIRE(one.a_prime == Rational(1));

    auto fs = compute_bracket_and_prime(Rational(5, 6), 7, 1);
    REQUIRE(fs.bracket_zero == 2); // 5 * 6^{-1} = 5 * 6 = 30 = 2 mod 7
    REQUIRE(fs.neg_bracket() == 5);
    REQUIRE(fs.a_prime == Rational(5, 6));

    // The shifted parameters of {1/6, 5/6} form the same set, in an order
    // depending on p^l mod 6. (p = 5 divides the numerator of 5/6 and is
    // excluded by the unit precondition.)
    for (uint64_t p : {7ull, 11ull, 13ull}) {
        for (uint32_t l : {1u, 2u}) {
            auto a = compute_bracket_and_prime(Rational(1, 6), p, l);
            auto b = compute_bracket_and_prime(Rational(5, 6), p, l);
            uint64_t block = l == 1 ? p : p * p;
            if (block % 6 == 1) {
                REQUIRE(a.a_prime == Rational(1, 6));
                REQUIRE(b.a_prime == Rational(5, 6));
            } else {
                REQUIRE(a.a_prime == Rational(5, 6));
                REQUIRE(b.a_prime == Rational(1, 6));
            }
        }
    }

    REQUIRE_THROWS_AS(compute_bracket_and_prime(Rational(1, 5), 5, 1), precondition_error);
    REQUIRE_THROWS_AS(compute_bracket_and_prime(Rational(10), 5, 1), precondition_error);
}

TEST_CASE("term vanishing check") {
    for (uint64_t p : {5ull, 7ull, 13ull}) {
        auto rep = check_term_vanishing(p, 1);
        INFO(rep.note);
        REQUIRE(rep.verdict == Verdict::Pass);
    }
    REQUIRE(check_term_vanishing(5, 2).verdict == Verdict::Pass);

    // p = 7, r = 1: 5/36 is a unit, but r = 1 is inside the kept range, not
    // the vanishing range (floor(6/6) = 1).
    REQUIRE(closed_form_coeff_2f1(1, 7, 1).valuation() == 0);
    REQUIRE(check_term_vanishing(7, 1).verdict == Verdict::Pass);

    REQUIRE_THROWS_AS(check_term_vanishing(4, 1), invalid_modulus_error);
    REQUIRE_THROWS_AS(check_term_vanishing(5, 3), precondition_error);
}

TEST_CASE("truncated Clausen identity") {
    // p = 5: truncation level 0, both sides the constant 1.
    REQUIRE(check_truncated_clausen(5, 1).verdict == Verdict::Pass);

    // p = 7: both sides equal 1 + 3t + 4t^2.
    auto lhs = truncated_series_poly(gauss_sixth_datum(), 1, 7);
    lhs = lhs * lhs;
    DensePolynomial<Fp> expect(std::vector<Fp>{Fp(1, 7), Fp(3, 7), Fp(4, 7)});
    REQUIRE(lhs == expect);
    REQUIRE(check_truncated_clausen(7, 1).verdict == Verdict::Pass);

    REQUIRE(check_truncated_clausen(11, 1).verdict == Verdict::Pass);
    REQUIRE(check_truncated_clausen(7, 2).verdict == Verdict::Pass);
}

TEST_CASE("reflection identity") {
    // p = 7: 1 + 5t versus -(1 + 5(1 - t)).
    auto rep7 = check_reflection(7, 1);
    REQUIRE(rep7.verdict == Verdict::Pass);
    REQUIRE(check_reflection(5, 1).verdict == Verdict::Pass);
    REQUIRE(check_reflection(13, 1).verdict == Verdict::Pass);
    REQUIRE(check_reflection(11, 2).verdict == Verdict::Pass);
}

TEST_CASE("block factorization identity") {
    // Constant terms are 1 = 1*1; the t coefficient vanishes at p = 5.
    auto left = truncated_series_poly(gauss_sixth_datum(), 24, 5);
    REQUIRE(left.coeff_or_zero(0, Fp(0, 5)) == Fp(1, 5));
    REQUIRE(left.coeff_or_zero(1, Fp(0, 5)) == Fp(0, 5));
    REQUIRE(check_block_factorization(5, 1).verdict == Verdict::Pass);
    REQUIRE(check_block_factorization(7, 1).verdict == Verdict::Pass); // degree 48
    REQUIRE(check_block_factorization(11, 1).verdict == Verdict::Pass);
}

TEST_CASE("block reduction of Pochhammer ratios") {
    // m = 1, a = 1/6, p = 7: both ratios reduce to 6 mod 7.
    ValuatedResidue lhs = pochhammer_valres(Rational(1, 6), 7, 7, 1) / factorial_valres(7, 7, 1);
    REQUIRE(lhs.residue_mod_p() == 6);
    auto zp = compute_bracket_and_prime(Rational(1, 6), 7, 1);
    ValuatedResidue rhs = pochhammer_valres(zp.a_prime, 1, 7, 1) / factorial_valres(1, 7, 1);
    REQUIRE(rhs.residue_mod_p() == 6);

    for (const Rational& a :
         {Rational(1, 6), Rational(5, 6), Rational(1, 2), Rational(1, 3), Rational(2, 3), Rational(1, 4)}) {
        for (uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
            if (rational_p_valuation(a, p) != 0) continue;
            auto rep = check_block_reduction(a, p, 1);
            INFO("a=" << a << " p=" << p << " " << rep.note);
            REQUIRE(rep.verdict == Verdict::Pass);
        }
    }
    REQUIRE(check_block_reduction(Rational(1, 6), 5, 2, 24).verdict == Verdict::Pass);
    REQUIRE(check_block_reduction(Rational(5, 6), 7, 2, 48).verdict == Verdict::Pass);
    REQUIRE_THROWS_AS(check_block_reduction(Rational(1, 5), 5, 1), precondition_error);
    REQUIRE_THROWS_AS(check_block_reduction(Rational(5, 6), 5, 1), precondition_error);
}

TEST_CASE("inert square evaluation") {
    auto rep5 = check_inert_square_evaluation(Rational(2), 5);
    INFO(rep5.note);
    REQUIRE(rep5.verdict == Verdict::Pass);
    REQUIRE(rep5.branch == "inert");

    REQUIRE(check_inert_square_evaluation(Rational(3), 7).verdict == Verdict::Pass);

    // Split z0 violates the precondition.
    REQUIRE_THROWS_AS(check_inert_square_evaluation(Rational(4), 5), precondition_error);
    REQUIRE_THROWS_AS(check_inert_square_evaluation(Rational(5), 5), precondition_error);
}

TEST_CASE("central factorial congruence") {
    // p = 7, r = 1: 64 * 3!/2 = 192 = 3 and -720/12 = -60 = 3 mod 7.
    REQUIRE(192 % 7 == 3);
    REQUIRE((-60 % 7 + 7) % 7 == 3);
    REQUIRE(check_central_factorial_congruence(7, 1).verdict == Verdict::Pass);
    REQUIRE(check_central_factorial_congruence(13, 1).verdict == Verdict::Pass);
    REQUIRE(check_central_factorial_congruence(5, 2).verdict == Verdict::Pass);
    REQUIRE(check_central_factorial_congruence(37, 1).verdict == Verdict::Pass);
}
