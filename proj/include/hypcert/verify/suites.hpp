#pragma once

// Named check suites, one per identity in the verification battery. A suite
// expands a parameter grid into independent instances, runs them through
// the worker pool, and returns one report per instance in grid order.
//
//   2.1      twist class controls isomorphism of reductions
//   2.2      equal j forces equal squared traces
//   3.2      squared-trace transfer to the layer curve
//   3.3      central factorial congruence
//   3.4      layer trace equals the truncated series value
//   4.vanish series coefficients vanish beyond the sixth-floor cut
//   4.3      truncated Clausen identity
//   5.1      Pochhammer block reduction
//   5.2      block factorization of the long truncation
//   5.3      reflection t -> 1 - t
//   5.4      inert evaluation squares the short truncation
//   final.4  theorem congruence, split branch
//   final.5  theorem congruence, inert branch

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hypcert/curves/checks.hpp"
#include "hypcert/hyperseries/checks.hpp"
#include "hypcert/verify/parallel.hpp"
#include "hypcert/verify/scan.hpp"
#include "hypcert/verify/theorem.hpp"

namespace hypcert::verify {

struct SuiteParams {
    uint64_t p_min = 5;
    uint64_t p_max = 37;
    uint32_t l_cap = 2;
    uint64_t m_max = 200; // block-reduction cap at l = 2
    std::vector<Rational> unit_params = {Rational(1, 6), Rational(5, 6), Rational(1, 2)};
    unsigned sample_count = 50; // random curve/twist/prime triples
    uint64_t seed = 1;
    bool deep_factorization = false; // run suite 5.2 at l = 2 (degree p^4 - 1)
    uint64_t bound = 1000000;
    unsigned workers = 1;
};

inline const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids = {"2.1", "2.2",      "3.2", "3.3",     "3.4",
                                                 "4.vanish", "4.3", "5.1", "5.2",     "5.3",
                                                 "5.4", "final.4",  "final.5"};
    return ids;
}

namespace detail {

using Instance = std::function<CongruenceReport()>;

inline std::vector<CongruenceReport> run_instances(const std::vector<Instance>& instances,
                                                   unsigned workers) {
    std::vector<CongruenceReport> reports(instances.size());
    parallel_for_index(instances.size(), workers, [&](size_t i) {
        auto t0 = std::chrono::steady_clock::now();
        reports[i] = instances[i]();
        reports[i].ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
    });
    return reports;
}

// Deterministic random (curve, twist, prime) triples for the 2.x suites.
struct TwistSample {
    curves::WeierstrassCurve<Rational> e1, e2;
    uint64_t p;
    int64_t gamma;
};

inline std::vector<TwistSample> twist_samples(const SuiteParams& prm) {
    std::mt19937_64 rng(prm.seed);
    auto primes = arith::primes_in_range(5, std::max<uint64_t>(prm.p_max, 97));
    std::vector<TwistSample> out;
    int attempts = 0;
    while (out.size() < prm.sample_count && attempts < 10000) {
        ++attempts;
        int64_t A = static_cast<int64_t>(rng() % 19) - 9;
        int64_t B = static_cast<int64_t>(rng() % 19) - 9;
        int64_t g = static_cast<int64_t>(rng() % 19) - 9;
        uint64_t p = primes[rng() % primes.size()];
        if (A == 0 || B == 0 || g == 0 || 4 * A * A * A + 27 * B * B == 0) continue;
        TwistSample s;
        s.e1 = curves::WeierstrassCurve<Rational>::short_form(Rational(A), Rational(B));
        s.e2 = curves::WeierstrassCurve<Rational>::short_form(Rational(A * g * g),
                                                              Rational(B * g * g * g));
        s.p = p;
        s.gamma = g;
        out.push_back(s);
    }
    return out;
}

template <class Check>
Instance guarded(std::string check_id, uint64_t p, uint32_t l, Check&& check) {
    return [check_id = std::move(check_id), p, l, check = std::forward<Check>(check)]() {
        try {
            return check();
        } catch (const precondition_error& e) {
            return skip_report(check_id, p, l, e.what());
        } catch (const singular_curve_error& e) {
            return skip_report(check_id, p, l, e.what());
        } catch (const resource_limit_error& e) {
            return skip_report(check_id, p, l, e.what());
        }
    };
}

} // namespace detail

inline std::vector<CongruenceReport> run_lemma_suite(const std::string& suite_id,
                                                     const SuiteParams& prm = {}) {
    if (prm.p_min < 5 || prm.p_min > prm.p_max) throw usage_error("invalid prime range");
    if (prm.l_cap < 1 || prm.l_cap > 2) throw usage_error("residue-degree cap must be 1 or 2");
    const auto primes = arith::primes_in_range(prm.p_min, prm.p_max);
    std::vector<detail::Instance> instances;

    auto for_levels = [&](auto&& fn) {
        for (uint64_t p : primes)
            for (uint32_t l = 1; l <= prm.l_cap; ++l) fn(p, l);
    };

    if (suite_id == "2.1" || suite_id == "2.2") {
        for (const auto& s : detail::twist_samples(prm)) {
            instances.push_back(detail::guarded(suite_id, s.p, 1, [s, suite_id, &prm]() {
                auto rep = suite_id == "2.1" ? curves::check_twist_class(s.e1, s.e2, s.p, prm.bound)
                                             : curves::check_squares_equal(s.e1, s.e2, s.p, prm.bound);
                return rep;
            }));
        }
    } else if (suite_id == "3.2") {
        for (uint64_t p : primes)
            for (uint64_t j = 1; j < p; ++j)
                instances.push_back(detail::guarded("3.2", p, 1, [p, j, &prm]() {
                    return curves::check_trace_square_transfer(Rational(static_cast<int64_t>(j)), p,
                                                               prm.bound);
                }));
    } else if (suite_id == "3.3") {
        for_levels([&](uint64_t p, uint32_t l) {
            instances.push_back(detail::guarded("3.3", p, l, [p, l]() {
                return hyperseries::check_central_factorial_congruence(p, l);
            }));
        });
    } else if (suite_id == "3.4") {
        for (uint64_t p : primes)
            for (uint64_t z = 2; z < p; ++z)
                instances.push_back(detail::guarded("3.4", p, 1, [p, z, &prm]() {
                    return curves::check_trace_series_value(Rational(static_cast<int64_t>(z)), p,
                                                            prm.bound);
                }));
    } else if (suite_id == "4.vanish") {
        for_levels([&](uint64_t p, uint32_t l) {
            instances.push_back(detail::guarded("4.vanish", p, l, [p, l]() {
                return hyperseries::check_term_vanishing(p, l);
            }));
        });
    } else if (suite_id == "4.3") {
        for_levels([&](uint64_t p, uint32_t l) {
            instances.push_back(detail::guarded("4.3", p, l, [p, l]() {
                return hyperseries::check_truncated_clausen(p, l);
            }));
        });
    } else if (suite_id == "5.1") {
        for (const Rational& a : prm.unit_params)
            for_levels([&](uint64_t p, uint32_t l) {
                std::string id = "5.1:a=" + encode(a);
                instances.push_back(detail::guarded(id, p, l, [a, p, l, &prm]() {
                    uint64_t cap = l == 1 ? UINT64_MAX : prm.m_max;
                    return hyperseries::check_block_reduction(a, p, l, cap);
                }));
            });
    } else if (suite_id == "5.2") {
        for (uint64_t p : primes) {
            instances.push_back(detail::guarded("5.2", p, 1, [p]() {
                return hyperseries::check_block_factorization(p, 1);
            }));
            if (prm.l_cap == 2) {
                // Degree p^4 - 1 comparisons stay opt-in and small.
                if (prm.deep_factorization && p <= 13) {
                    instances.push_back(detail::guarded("5.2", p, 2, [p]() {
                        return hyperseries::check_block_factorization(p, 2);
                    }));
                } else if (prm.deep_factorization) {
                    instances.push_back(detail::guarded("5.2", p, 2, [p]() {
                        return skip_report("5.2", p, 2, "degree p^4 - 1 comparison capped at p <= 13");
                    }));
                }
            }
        }
    } else if (suite_id == "5.3") {
        for_levels([&](uint64_t p, uint32_t l) {
            instances.push_back(
                detail::guarded("5.3", p, l, [p, l]() { return hyperseries::check_reflection(p, l); }));
        });
    } else if (suite_id == "5.4") {
        for (uint64_t p : primes)
            for (uint64_t z = 2; z < p; ++z) {
                if (arith::legendre_symbol(arith::Fp(z, p)) != -1) continue;
                instances.push_back(detail::guarded("5.4", p, 2, [p, z]() {
                    return hyperseries::check_inert_square_evaluation(
                        Rational(static_cast<int64_t>(z)), p);
                }));
            }
    } else if (suite_id == "final.4" || suite_id == "final.5") {
        const Branch branch = suite_id == "final.4" ? Branch::Split : Branch::Inert;
        for (uint64_t p : primes)
            for (uint64_t j = 1; j < p; ++j) {
                Rational j0(static_cast<int64_t>(j));
                std::string reason;
                auto inst = admissible_instance(j0, p, reason);
                if (!inst || inst->branch != branch) continue;
                instances.push_back(detail::guarded(suite_id, p, 1, [j0, p, branch, &prm]() {
                    return check_theorem_branch(j0, p, branch, prm.bound);
                }));
            }
    } else {
        throw usage_error("unknown suite id: " + suite_id);
    }

    return detail::run_instances(instances, prm.workers);
}

} // namespace hypcert::verify
