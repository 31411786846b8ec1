#include "tanhvol/implied_vol.hpp"

#include "tanhvol/cubic.hpp"
#include "tanhvol/errors.hpp"
#include "tanhvol/rng.hpp"
#include "tanhvol/standardized_call.hpp"

#include <doctest.h>

#include <cmath>

using namespace tanhvol;

TEST_CASE("lambda_of at the midpoint, near the bound and frozen") {
    const NormalizedTerms otm{100.0, 110.0, 0.25};
    CHECK(lambda_of({otm, 50.0}) == 0.0);  // C - payoff == S - C

    CHECK(lambda_of({otm, 100.0 * (1.0 - 1e-12)}) > 12.0);

    // (1/2)*log(3.9/96.1) = -1.6022063814203230
    CHECK(std::fabs(lambda_of({otm, 3.9}) - (-1.6022063814203230)) <= 1e-13);

    CHECK_THROWS_AS(lambda_of({otm, 0.0}), bound_violation);
    CHECK_THROWS_AS(lambda_of({otm, 100.0}), bound_violation);
    CHECK_THROWS_AS(lambda_of({otm, 150.0}), bound_violation);
    const NormalizedTerms itm{110.0, 100.0, 0.25};
    CHECK_THROWS_AS(lambda_of({itm, 10.0}), bound_violation);  // exactly the payoff
}

TEST_CASE("lambda_of is strictly increasing in the price") {
    const NormalizedTerms terms{100.0, 105.0, 0.5};
    double prev = lambda_of({terms, 0.5});
    for (int i = 1; i <= 100; ++i) {
        const double c = 0.5 + 99.0 * i / 100.0;
        const double cur = lambda_of({terms, c});
        REQUIRE(cur > prev);
        prev = cur;
    }
}

TEST_CASE("implied_vol_tanh inverts call_hat exactly") {
    const NormalizedTerms terms{100.0, 110.0, 0.25};
    const double c = call_hat(terms, 0.2);
    const auto est = implied_vol_tanh({terms, c});
    CHECK(est.method == Method::TanhGeneral);
    CHECK(std::fabs(est.sigma_hat - 0.2) <= 1e-9);
    CHECK(std::fabs(call_hat(terms, est.sigma_hat) - c) <= 1e-10 * terms.spot);
}

TEST_CASE("implied_vol_tanh vanishes at the payoff boundary") {
    const NormalizedTerms terms{110.0, 100.0, 0.5};
    const double payoff = intrinsic_value(terms);
    const auto est = implied_vol_tanh({terms, payoff + 1e-9 * terms.spot});
    CHECK(est.sigma_hat > 0.0);
    CHECK(est.sigma_hat < 0.05);
}

TEST_CASE("implied_vol_tanh frozen deviations on exact BS prices") {
    const NormalizedTerms a{100.0, 90.0, 0.5};
    const double dev_a = std::fabs(implied_vol_tanh({a, bs_call(a, 0.25)}).sigma_hat - 0.25);
    CHECK(std::fabs(dev_a - 0.0129877432461702) <= 0.1 * 0.0129877432461702);

    const NormalizedTerms b{100.0, 110.0, 0.25};
    const double dev_b = std::fabs(implied_vol_tanh({b, bs_call(b, 0.2)}).sigma_hat - 0.2);
    CHECK(std::fabs(dev_b - 0.027083474417193) <= 0.1 * 0.027083474417193);
}

TEST_CASE("implied_vol_tanh round trip on random admissible quotes") {
    const CounterRng rng(47);
    int tested = 0;
    for (int i = 0; tested < 2000 && i < 40000; ++i) {
        const auto u = static_cast<std::uint64_t>(i);
        const double sigma = rng.uniform(0, u, 0.01, 3.0);
        const double t = rng.uniform(1, u, 1.0 / 12.0, 2.0);
        double lm = rng.uniform(2, u, std::log(0.5), std::log(2.0));
        if (std::fabs(lm) < kAtmLogThreshold) lm = kAtmLogThreshold;
        const NormalizedTerms terms{100.0, 100.0 * std::exp(-lm), t};

        const double c = call_hat(terms, sigma);
        if (std::min(c - intrinsic_value(terms), terms.spot - c) < 1e-6 * terms.spot)
            continue;  // quote indistinguishable from the bound at double resolution
        ++tested;
        REQUIRE(std::fabs(implied_vol_tanh({terms, c}).sigma_hat - sigma) <= 1e-9);
    }
    CHECK(tested == 2000);
}

TEST_CASE("atm_implied_vol boundary, round trips and frozen deviation") {
    for (auto kind : {AtmKind::Theta0, AtmKind::Theta1, AtmKind::Theta2}) {
        CHECK(atm_implied_vol(kind, 100.0, 0.25, 0.0).sigma_hat == 0.0);

        const double c = atm_call_hat(kind, 100.0, 0.25, 0.47);
        const auto est = atm_implied_vol(kind, 100.0, 0.25, c);
        CHECK(std::fabs(est.sigma_hat - 0.47) <= 1e-9);
        CHECK(std::fabs(atm_call_hat(kind, 100.0, 0.25, est.sigma_hat) - c) <= 1e-10 * 100.0);
    }

    // sigma_hat_1 against the exact ATM price at sigma = 0.2
    const double c_exact = atm_call_exact(100.0, 0.25, 0.2);
    const double dev1 = std::fabs(atm_implied_vol(AtmKind::Theta1, 100.0, 0.25, c_exact).sigma_hat - 0.2);
    CHECK(std::fabs(dev1 - 5.81199255389464e-11) <= 0.1 * 5.81199255389464e-11);

    CHECK_THROWS_AS(atm_implied_vol(AtmKind::Theta2, 100.0, 0.25, -0.5), bound_violation);
    CHECK_THROWS_AS(atm_implied_vol(AtmKind::Theta2, 100.0, 0.25, 100.0), bound_violation);
    CHECK_THROWS_AS(atm_implied_vol(AtmKind::Theta2, 100.0, 0.25, 150.0), bound_violation);
}

TEST_CASE("atm_implied_vol round trip on random draws") {
    const CounterRng rng(53);
    for (int i = 0; i < 2000; ++i) {
        const auto u = static_cast<std::uint64_t>(i);
        const double sigma = rng.uniform(0, u, 0.01, 3.0);
        const double t = rng.uniform(1, u, 1.0 / 12.0, 2.0);
        for (auto kind : {AtmKind::Theta0, AtmKind::Theta1, AtmKind::Theta2}) {
            const double c = atm_call_hat(kind, 100.0, t, sigma);
            REQUIRE(std::fabs(atm_implied_vol(kind, 100.0, t, c).sigma_hat - sigma) <= 1e-9);
        }
    }
}

TEST_CASE("cardano residuals inside the ATM inverses") {
    const CounterRng rng(59);
    const double p1 = 4.0 / (4.0 - M_PI);
    const double p2 = kTheta2A / (3.0 * kTheta2B);
    for (int i = 0; i < 2000; ++i) {
        const double log_odds = rng.uniform(0, static_cast<std::uint64_t>(i), -10.0, 10.0);
        for (auto [p, q] : {std::pair{p1, 3.0 / (4.0 - M_PI) * log_odds},
                            std::pair{p2, log_odds / (4.0 * kTheta2B)}}) {
            const double x = cardano_unique_real_root({p, q});
            REQUIRE(std::fabs(x * x * x + 3.0 * p * x - 2.0 * q) <=
                    1e-12 * std::max(1.0, std::fabs(2.0 * q)));
        }
    }
}

TEST_CASE("dispatcher routes by the ATM threshold") {
    const NormalizedTerms atm{100.0, 100.0, 0.25};
    const double c_atm = atm_call_exact(100.0, 0.25, 0.2);
    CHECK(implied_vol({atm, c_atm}).method == Method::Atm2);
    CHECK(implied_vol({atm, c_atm}, AtmKind::Theta1).method == Method::Atm1);
    CHECK(implied_vol({atm, c_atm}, AtmKind::Theta0).method == Method::Atm0);

    const NormalizedTerms near_atm{100.0, 100.0 * (1.0 + 1e-9), 0.25};
    CHECK(implied_vol({near_atm, c_atm}).method == Method::Atm2);

    const NormalizedTerms general{100.0, 110.0, 0.25};
    CHECK(implied_vol({general, 3.9}).method == Method::TanhGeneral);
}

TEST_CASE("dispatcher estimate is strictly increasing in the price") {
    const NormalizedTerms terms{100.0, 110.0, 0.5};
    double prev = 0.0;
    for (int i = 1; i <= 100; ++i) {
        const double c = 95.0 * i / 101.0;
        const double cur = implied_vol({terms, c}).sigma_hat;
        REQUIRE(cur > prev);
        prev = cur;
    }
}
