#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <vector>

#include "hypcert/arith.hpp"

using namespace hypcert;
using namespace hypcert::arith;

namespace {

// Exhaustive set of nonzero square residues mod p.
std::set<uint64_t> square_set(uint64_t p) {
    std::set<uint64_t> s;
    for (uint64_t x = 1; x < p; ++x) s.insert(x * x % p);
    return s;
}

const std::vector<uint64_t> kSmallPrimes = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

} // namespace

TEST_CASE("modular kernels") {
    REQUIRE(mulmod(1234567890123ull, 9876543210987ull, 1000000007ull) ==
            (uint64_t)((unsigned __int128)1234567890123ull * 9876543210987ull % 1000000007ull));
    REQUIRE(powmod(2, 10, 1000) == 24);
    REQUIRE(powmod(3, 0, 7) == 1);
    for (uint64_t m : {7ull, 25ull, 49ull, 169ull}) {
        for (uint64_t a = 1; a < m; ++a) {
            if (std::gcd(a, m) != 1) continue;
            REQUIRE(mulmod(a, invmod(a, m), m) == 1);
        }
    }
    REQUIRE_THROWS_AS(invmod(5, 25), precondition_error);
}

TEST_CASE("primality") {
    REQUIRE(is_prime_u64(2));
    REQUIRE(is_prime_u64(199));
    REQUIRE_FALSE(is_prime_u64(1));
    REQUIRE_FALSE(is_prime_u64(561));        // Carmichael
    REQUIRE(is_prime_u64(2147483647ull));    // 2^31 - 1
    REQUIRE_FALSE(is_prime_u64(2147483649ull));
    REQUIRE(primes_in_range(5, 13) == std::vector<uint64_t>{5, 7, 11, 13});
}

TEST_CASE("legendre symbol definition and examples") {
    REQUIRE(legendre_symbol(Rational(1), 5) == 1);
    REQUIRE(legendre_symbol(Rational(0), 7) == 0);
    REQUIRE(legendre_symbol(Rational(2), 7) == 1); // 3^2 = 2 mod 7

    REQUIRE_THROWS_AS(legendre_symbol(Rational(2), 15), invalid_modulus_error);
    REQUIRE_THROWS_AS(legendre_symbol(Rational(2), 3), invalid_modulus_error);
    REQUIRE_THROWS_AS(legendre_symbol(Rational(1, 7), 7), precondition_error);
}

TEST_CASE("legendre symbol agrees with exhaustive squares and Euler criterion") {
    for (uint64_t p : primes_in_range(5, 97)) {
        auto squares = square_set(p);
        for (uint64_t a = 0; a < p; ++a) {
            int sym = legendre_symbol(Fp(a, p));
            int expected = a == 0 ? 0 : (squares.count(a) ? 1 : -1);
            REQUIRE(sym == expected);
            uint64_t euler = powmod(a, (p - 1) / 2, p);
            int euler_sym = euler == 1 ? 1 : (euler == 0 ? 0 : -1);
            REQUIRE(sym == euler_sym);
        }
    }
}

TEST_CASE("modular square roots") {
    REQUIRE(sqrt_mod_p(Fp(4, 7))->value() == 2);
    REQUIRE(sqrt_mod_p(Fp(0, 5))->value() == 0);
    REQUIRE(sqrt_mod_p(Fp(2, 7))->value() == 3); // canonical min(3, 4)

    for (uint64_t p : primes_in_range(5, 97)) {
        auto squares = square_set(p);
        for (uint64_t a = 0; a < p; ++a) {
            auto r = sqrt_mod_p(Fp(a, p));
            if (a != 0 && !squares.count(a)) {
                REQUIRE_FALSE(r.has_value());
            } else {
                REQUIRE(r.has_value());
                REQUIRE((*r * *r).value() == a);
                REQUIRE(r->value() <= (p - 1) / 2);
            }
        }
    }
}

TEST_CASE("smallest non-residue") {
    REQUIRE(find_nonresidue(5) == 2);
    REQUIRE(find_nonresidue(7) == 3);
    REQUIRE(find_nonresidue(13) == 2);
    for (uint64_t p : primes_in_range(5, 97)) {
        auto squares = square_set(p);
        uint64_t n = find_nonresidue(p);
        REQUIRE_FALSE(squares.count(n));
        for (uint64_t m = 1; m < n; ++m) REQUIRE(squares.count(m));
    }
}

TEST_CASE("prime field axioms") {
    for (uint64_t p : {5ull, 7ull, 13ull}) {
        for (uint64_t a = 0; a < p; ++a)
            for (uint64_t b = 0; b < p; ++b)
                for (uint64_t c = 0; c < p; ++c) {
                    Fp x(a, p), y(b, p), z(c, p);
                    REQUIRE((x + y) + z == x + (y + z));
                    REQUIRE((x * y) * z == x * (y * z));
                    REQUIRE(x * (y + z) == x * y + x * z);
                }
    }
    for (uint64_t p : kSmallPrimes) {
        for (uint64_t a = 0; a < p; ++a) {
            Fp x(a, p);
            REQUIRE(x + (-x) == x.zero());
            if (a != 0) {
                REQUIRE(x * x.inv() == x.one());
                REQUIRE(x.pow(p - 1) == x.one());
            }
            for (uint64_t b = 0; b < p; ++b) {
                Fp y(b, p);
                REQUIRE(x + y == y + x);
                REQUIRE(x * y == y * x);
            }
        }
    }
    REQUIRE_THROWS_AS(Fp(1, 5) + Fp(1, 7), precondition_error);
    REQUIRE_THROWS_AS(Fp(0, 5).inv(), precondition_error);
}

TEST_CASE("quadratic extension axioms") {
    // Exhaustive triples for the smallest field, sampled triples beyond.
    {
        const uint64_t p = 5, n = find_nonresidue(p);
        std::vector<Fp2> all;
        for (uint64_t a0 = 0; a0 < p; ++a0)
            for (uint64_t a1 = 0; a1 < p; ++a1) all.push_back(Fp2::make(a0, a1, p, n));
        for (const auto& x : all)
            for (const auto& y : all)
                for (const auto& z : all) {
                    REQUIRE((x + y) + z == x + (y + z));
                    REQUIRE((x * y) * z == x * (y * z));
                    REQUIRE(x * (y + z) == x * y + x * z);
                }
    }
    std::mt19937_64 rng(42);
    for (uint64_t p : kSmallPrimes) {
        uint64_t n = find_nonresidue(p);
        auto rand_elem = [&] { return Fp2::make(rng() % p, rng() % p, p, n); };
        for (int i = 0; i < 200; ++i) {
            Fp2 x = rand_elem(), y = rand_elem(), z = rand_elem();
            REQUIRE((x + y) + z == x + (y + z));
            REQUIRE((x * y) * z == x * (y * z));
            REQUIRE(x * (y + z) == x * y + x * z);
            REQUIRE(x + y == y + x);
            REQUIRE(x * y == y * x);
            if (!x.is_zero()) REQUIRE(x * x.inv() == x.one());
        }
    }
}

TEST_CASE("Frobenius fixes exactly the base field") {
    for (uint64_t p : kSmallPrimes) {
        uint64_t n = find_nonresidue(p);
        for (uint64_t a0 = 0; a0 < p; ++a0)
            for (uint64_t a1 = 0; a1 < p; ++a1) {
                Fp2 x = Fp2::make(a0, a1, p, n);
                REQUIRE(x.pow(p) == x.frobenius());
                REQUIRE(x.pow(p).pow(p) == x); // x^(p^2) = x
                if (a1 == 0) {
                    REQUIRE(x.pow(p) == x);
                } else {
                    REQUIRE(x.pow(p) != x);
                }
            }
    }
}

TEST_CASE("quadratic symbol on the extension") {
    const uint64_t p = 7, n = find_nonresidue(p);
    int residues = 0;
    for (uint64_t a0 = 0; a0 < p; ++a0)
        for (uint64_t a1 = 0; a1 < p; ++a1) {
            Fp2 x = Fp2::make(a0, a1, p, n);
            if (x.is_zero()) {
                REQUIRE(legendre_symbol(x) == 0);
                continue;
            }
            if (legendre_symbol(x) == 1) ++residues;
            REQUIRE(legendre_symbol(x * x) == 1);
        }
    REQUIRE(residues == (p * p - 1) / 2);
}

TEST_CASE("square root of a non-residue lives in the extension") {
    for (uint64_t p : kSmallPrimes) {
        uint64_t n = find_nonresidue(p);
        for (uint64_t z = 1; z < p; ++z) {
            Fp zf(z, p);
            if (legendre_symbol(zf) != -1) continue;
            Fp2 w = sqrt_of_nonresidue(zf, n);
            REQUIRE(w * w == Fp2::embed(zf, n));
        }
        REQUIRE_THROWS_AS(sqrt_of_nonresidue(Fp(1, p), n), precondition_error);
    }
}

TEST_CASE("rational p-adic valuation") {
    REQUIRE(rational_p_valuation(Rational(1728), 5) == 0);
    REQUIRE(rational_p_valuation(Rational(1, 7), 7) == -1);
    REQUIRE(rational_p_valuation(Rational(50, 3), 5) == 2);
    REQUIRE_THROWS_AS(rational_p_valuation(Rational(0), 5), undefined_valuation_error);
}

TEST_CASE("rational reduction into F_p") {
    REQUIRE(Fp::from_rational(Rational(1, 6), 7).value() == 6);
    REQUIRE(Fp::from_rational(Rational(-863), 5).value() == 2);
    REQUIRE_THROWS_AS(Fp::from_rational(Rational(1, 5), 5), precondition_error);
}

TEST_CASE("factorial valuated residues against big-integer oracle") {
    ValuatedResidue f0 = factorial_valres(0, 7, 1);
    REQUIRE(f0.valuation() == 0);
    REQUIRE(f0.unit() == 1);

    ValuatedResidue f7 = factorial_valres(7, 7, 1);
    REQUIRE(f7.valuation() == 1);
    REQUIRE(f7.unit() == 6); // 7! = 7 * 720, 720 = 6 mod 7

    ValuatedResidue f10 = factorial_valres(10, 5, 1);
    REQUIRE(f10.valuation() == 2); // floor(10/5) + floor(10/25)
    {
        BigInt fact = 1;
        for (int i = 2; i <= 10; ++i) fact *= i;
        BigInt unit = fact / 25;
        REQUIRE(f10.unit() == mod_reduce(unit, 5));
    }

    for (uint64_t p : {5ull, 7ull}) {
        for (uint32_t k : {1u, 2u}) {
            BigInt fact = 1;
            for (uint64_t n = 1; n <= 512; ++n) {
                fact *= n;
                ValuatedResidue vr = factorial_valres(n, p, k);
                BigInt reduced = fact;
                int64_t v = 0;
                while (reduced % p == 0) {
                    reduced /= p;
                    ++v;
                }
                REQUIRE(vr.valuation() == v);
                REQUIRE(vr.unit() == mod_reduce(reduced, vr.unit_modulus()));
            }
        }
    }
}

TEST_CASE("valuated residue multiplication is exact") {
    std::mt19937_64 rng(7);
    for (uint64_t p : {5ull, 13ull}) {
        for (uint32_t k : {1u, 2u}) {
            for (int i = 0; i < 500; ++i) {
                int64_t x = static_cast<int64_t>(rng() % 100000) - 50000;
                int64_t y = static_cast<int64_t>(rng() % 100000) - 50000;
                if (x == 0 || y == 0) continue;
                ValuatedResidue a = ValuatedResidue::from_integer(x, p, k);
                ValuatedResidue b = ValuatedResidue::from_integer(y, p, k);
                REQUIRE(a * b == ValuatedResidue::from_integer(BigInt(x) * y, p, k));
            }
        }
    }
}

TEST_CASE("valuated residue addition truncates to precision") {
    // Exact cases at k = 1.
    ValuatedResidue a = ValuatedResidue::make(0, 2, 5, 1);
    ValuatedResidue b = ValuatedResidue::make(0, 1, 5, 1);
    REQUIRE((a + b) == ValuatedResidue::make(0, 3, 5, 1));

    // Mismatched valuations: the higher-valuation term is beyond k = 1
    // precision, so 2 + 1*5 stays 2 mod 5.
    ValuatedResidue c = ValuatedResidue::make(1, 1, 5, 1);
    REQUIRE((a + c) == a);

    // At k = 2 the same sum is exact: 2 + 5 = 7.
    ValuatedResidue a2 = ValuatedResidue::make(0, 2, 5, 2);
    ValuatedResidue c2 = ValuatedResidue::make(1, 1, 5, 2);
    REQUIRE((a2 + c2) == ValuatedResidue::make(0, 7, 5, 2));

    // Cancellation produces the distinguished zero state.
    ValuatedResidue d = ValuatedResidue::make(0, 1, 5, 1);
    ValuatedResidue e = ValuatedResidue::make(0, 4, 5, 1);
    ValuatedResidue sum = d + e; // 1 + 4 = 5, zero mod 5
    REQUIRE(sum.is_zero());
    REQUIRE(sum.valuation_bound() == 1);
    REQUIRE(sum.residue_mod_p() == 0);

    ValuatedResidue x = ValuatedResidue::from_integer(17, 7, 2);
    REQUIRE((x - x).is_zero());

    // Carries renormalize: 1 + 24 = 25 = 5^2 at k = 2.
    ValuatedResidue u = ValuatedResidue::from_integer(1, 5, 2);
    ValuatedResidue v = ValuatedResidue::from_integer(24, 5, 2);
    REQUIRE((u + v).is_zero());
    REQUIRE((u + v).valuation_bound() == 2);

    // 1 + 9 = 10 = 5 * 2 renormalizes to valuation 1 at k = 2.
    ValuatedResidue w = ValuatedResidue::from_integer(9, 5, 2);
    ValuatedResidue s = u + w;
    REQUIRE(s.valuation() == 1);
    REQUIRE(s.unit() % 5 == 2);

    // Zero states absorb in products.
    ValuatedResidue z = ValuatedResidue::zero(5, 1);
    REQUIRE((z * a).is_zero());

    REQUIRE_THROWS_AS(a + a2, precondition_error);                       // mixed k
    REQUIRE_THROWS_AS(a + ValuatedResidue::one(7, 1), precondition_error); // mixed p
    REQUIRE_THROWS_AS(a / z, precondition_error);
}

TEST_CASE("valuated residue residues and negative valuations") {
    ValuatedResidue x = ValuatedResidue::from_rational(Rational(50, 3), 5, 2);
    REQUIRE(x.valuation() == 2);
    REQUIRE(x.residue_mod_p() == 0);
    REQUIRE(x.residue_mod(2) == 0);

    ValuatedResidue y = ValuatedResidue::from_rational(Rational(10, 3), 5, 2);
    REQUIRE(y.valuation() == 1);
    // 10/3 = 5 * (2/3); 2/3 = 2 * 17 = 34 mod 25 -> 5 * 34 = 170 = 20 mod 25.
    REQUIRE(y.residue_mod(2) == 20);
    REQUIRE(y.residue_mod_p() == 0);

    ValuatedResidue neg = ValuatedResidue::from_rational(Rational(1, 5), 5, 1);
    REQUIRE(neg.valuation() == -1);
    REQUIRE_THROWS_AS(neg.residue_mod_p(), precondition_error);
}

TEST_CASE("dense polynomial arithmetic against naive convolution") {
    const uint64_t p = 101;
    std::mt19937_64 rng(11);
    auto random_poly = [&](int maxdeg) {
        std::vector<Fp> c;
        int deg = static_cast<int>(rng() % (maxdeg + 1));
        for (int i = 0; i <= deg; ++i) c.emplace_back(rng() % p, p);
        return DensePolynomial<Fp>(std::move(c));
    };
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_poly(64);
        auto b = random_poly(64);
        auto prod = a * b;
        // Independent convolution.
        if (a.is_zero() || b.is_zero()) {
            REQUIRE(prod.is_zero());
            continue;
        }
        std::vector<uint64_t> conv(a.degree() + b.degree() + 1, 0);
        for (int64_t i = 0; i <= a.degree(); ++i)
            for (int64_t j = 0; j <= b.degree(); ++j)
                conv[i + j] = (conv[i + j] + a[i].value() * b[j].value()) % p;
        while (!conv.empty() && conv.back() == 0) conv.pop_back();
        REQUIRE(static_cast<size_t>(prod.degree() + 1) == conv.size());
        for (size_t i = 0; i < conv.size(); ++i) REQUIRE(prod[i].value() == conv[i]);

        // Evaluation is a ring homomorphism.
        Fp x(rng() % p, p);
        REQUIRE(prod.eval(x) == a.eval(x) * b.eval(x));
        REQUIRE((a + b).eval(x) == a.eval(x) + b.eval(x));
    }
}

TEST_CASE("dense polynomial composition and truncation") {
    const uint64_t p = 7;
    auto c = [&](std::initializer_list<uint64_t> v) {
        std::vector<Fp> coeffs;
        for (uint64_t x : v) coeffs.emplace_back(x, p);
        return DensePolynomial<Fp>(std::move(coeffs));
    };

    auto poly = c({1, 5});      // 1 + 5t
    auto inner = c({1, 6});     // 1 - t
    auto composed = poly.composed_with(inner);
    REQUIRE(composed == c({6, 2})); // 1 + 5(1 - t) = 6 - 5t

    auto spread = poly.with_argument_power(3);
    REQUIRE(spread == c({1, 0, 0, 5}));

    auto sq = poly * poly; // 1 + 10t + 25t^2 = 1 + 3t + 4t^2 mod 7
    REQUIRE(sq == c({1, 3, 4}));
    REQUIRE(sq.truncated(1) == c({1, 3}));
    REQUIRE(sq.truncated(5) == sq);

    REQUIRE(first_coefficient_mismatch(sq, sq) == std::nullopt);
    REQUIRE(first_coefficient_mismatch(sq, c({1, 3})) == size_t{2});
    REQUIRE(first_coefficient_mismatch(poly, inner) == size_t{1});

    // Trailing zeros trim to the zero polynomial.
    REQUIRE(c({0, 0}).is_zero());
    REQUIRE((poly - poly).is_zero());
}
