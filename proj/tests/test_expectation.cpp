#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "lotto/expectation.hpp"
#include "lotto/montecarlo.hpp"
#include "test_util.hpp"

using namespace lotto;

namespace {

// Independent oracle: E[n/(n+X)] for X ~ Poisson(lam) by direct summation.
double poisson_share_oracle(int n, double lam, int kmax = 400) {
    double sum = 0, pmf = std::exp(-lam);
    for (int k = 0; k <= kmax; ++k) {
        sum += pmf * n / static_cast<double>(n + k);
        pmf *= lam / (k + 1);
    }
    return sum;
}

constexpr double kTickets649 = 13'983'816.0;

}  // namespace

TEST_CASE("ev_share basics") {
    CHECK(ev_share(1, 0.0) == 1.0);
    CHECK(ev_share(1, 1e-13) == 1.0);
    CHECK(ev_share(3, 0.0) == 1.0);
    CHECK_THROWS_AS(ev_share(0, 1.0), std::domain_error);
    CHECK_THROWS_AS(ev_share(-2, 1.0), std::domain_error);
    CHECK_THROWS_AS(ev_share(1, -0.5), std::domain_error);

    // (1 - e^-1)/1, cross-checked against the Poisson mass sum
    CHECK(ev_share(1, 1.0) == doctest::Approx(0.6321206).epsilon(1e-7));
    CHECK(ev_share(1, 1.0) == doctest::Approx(-std::expm1(-1.0)).epsilon(1e-12));
    CHECK(ev_share(1, 1.0) == doctest::Approx(poisson_share_oracle(1, 1.0, 200)).epsilon(1e-12));

    // the published 5/6+ factor at 3.3M crowd tickets
    CHECK(std::abs(ev_share(6, 6 * 3'300'000 / kTickets649) - 0.8271) < 0.005);
}

TEST_CASE("ev_share matches the Poisson oracle across the board") {
    for (int n = 1; n <= 10; ++n)
        for (double lam : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 14.0})
            CHECK(ev_share(n, lam) ==
                  doctest::Approx(poisson_share_oracle(n, lam)).epsilon(1e-11));
}

TEST_CASE("ev_share satisfies the defining recursion") {
    for (int n = 2; n <= 10; ++n) {
        for (double lam : {0.01, 0.1, 1.0, 5.0}) {
            double lhs = (n / lam) * (1.0 - ev_share(n - 1, lam));
            CHECK(std::abs(lhs - ev_share(n, lam)) < 1e-12);
        }
    }
}

TEST_CASE("ev_share bounds and monotonicity") {
    for (int n = 1; n <= 8; ++n) {
        double prev = 1.0;
        for (double lam = 0.125; lam <= 10.0; lam += 0.125) {
            double v = ev_share(n, lam);
            CHECK(v > 0.0);
            CHECK(v <= 1.0);
            CHECK(v < prev);  // strictly decreasing in lambda
            prev = v;
        }
    }
    for (double lam : {0.25, 1.0, 4.0, 9.5}) {
        for (int n = 2; n <= 10; ++n)
            CHECK(ev_share(n, lam) > ev_share(n - 1, lam));  // increasing in n
        // the better-than-fair-split inequality
        CHECK(ev_share(1, lam) > 1.0 / (1.0 + lam));
    }
}

TEST_CASE("ev_share_exact") {
    CHECK(ev_share_exact(1, 0, 0.37) == 1.0);
    CHECK(ev_share_exact(5, 100, 0.0) == 1.0);
    // hand enumeration of Bin(2, 1/2): 1*(1/4) + (1/2)*(1/2) + (1/3)*(1/4)
    CHECK(std::abs(ev_share_exact(1, 2, 0.5) - 7.0 / 12.0) < 1e-12);
    CHECK(std::abs(ev_share_exact(6, 1'000'000, 6.0 / kTickets649) -
                   ev_share(6, 6.0e6 / kTickets649)) < 1e-6);
    CHECK_THROWS_AS(ev_share_exact(0, 3, 0.5), std::domain_error);
    CHECK_THROWS_AS(ev_share_exact(1, 3, 1.5), std::domain_error);
}

TEST_CASE("recursion vs exact binomial across the acceptance grid") {
    const double t = kTickets649;
    for (int n = 1; n <= 10; ++n) {
        for (double lam : {0.01, 0.1, 1.0, 5.0}) {
            auto c = static_cast<std::int64_t>(std::llround(lam * t / n));
            double lam_c = n * static_cast<double>(c) / t;
            CHECK(std::abs(ev_share_exact(n, c, n / t) - ev_share(n, lam_c)) < 1e-6);
        }
    }
}

TEST_CASE("mu: expected pools fund") {
    auto schedule = lotto::test::rules_2013();
    // 0.4*3*t - t*H evaluated exactly: H*t is the $5,696,519.50 deduction
    const double mu0_oracle = 0.4 * 3.0 * kTickets649 - 5'696'519.50;
    CHECK(std::abs(mu(schedule, 0, 0) - mu0_oracle) < 1e-4);
    CHECK(std::abs(mu(schedule, 0, 0) - 11'084'059.0) <= 1.0);

    // published Table row at 10M crowd tickets
    CHECK(std::abs(mu(schedule, 10e6, 0.10) - 17.74e6) < 0.005 * 17.74e6);

    SUBCASE("no fixed tiers: (1-take)*price*t exactly") {
        PrizeSchedule pure;
        pure.game = {10, 3, false};
        pure.ticket_price = Money::from_cents(200);
        pure.take = 0.25;
        pure.tiers = {
            {"3/3", {{3, BonusCondition::any}}, Allocation::pool_share(1.0)},
            {"lose", {{0, BonusCondition::any}, {1, BonusCondition::any}, {2, BonusCondition::any}},
             Allocation::nothing()},
        };
        CHECK(mu(pure, 0, 0) == doctest::Approx(0.75 * 2.0 * 120.0).epsilon(1e-14));
    }
    SUBCASE("negative fund is an error") {
        auto greedy = schedule;
        for (auto& tier : greedy.tiers)
            if (tier.name == "3/6") tier.allocation.amount = Money::from_dollars(100.0);
        CHECK_THROWS_AS(mu(greedy, 0, 0), std::domain_error);
    }
    CHECK_THROWS_AS(mu(schedule, -1.0, 0), std::domain_error);
    CHECK_THROWS_AS(mu(schedule, 1.0, 1.0), std::domain_error);
}

TEST_CASE("nu: the 5/6+ share factor") {
    auto schedule = lotto::test::rules_2013();
    CHECK(nu(schedule, 0) == 1.0);
    CHECK(std::abs(nu(schedule, 10e6) - 0.6071) < 0.005);
    CHECK(std::abs(nu(schedule, 33'300'000.0) - 0.3064) < 0.005);
    // equals the recursion at the 5/6+ tier size
    CHECK(nu(schedule, 4.2e6) ==
          doctest::Approx(ev_share(6, 6 * 4.2e6 / kTickets649)).epsilon(1e-14));
}

TEST_CASE("fair_split_factor") {
    GameStructure game{49, 6, true};
    CHECK(fair_split_factor(game, 0) == 1.0);
    CHECK(fair_split_factor(game, kTickets649) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(fair_split_factor(game, 10e6) - 0.5830) < 1e-4);
}

TEST_CASE("expected_gain") {
    auto schedule = lotto::test::rules_2013();
    const double cost = 41'951'448.0;

    SUBCASE("breakeven point from the published table") {
        auto report = expected_gain(schedule, Money::from_dollars(36.92e6), 10e6, 0.10);
        CHECK(std::abs(report.expected_gain) < 0.005 * cost);
    }
    SUBCASE("no crowd, no carryover") {
        auto report = expected_gain(schedule, Money{}, 0, 0);
        // mu(0) + fixed receipts - 3t with every share factor at its limit 1
        const double oracle = (0.4 * 3.0 * kTickets649 - 5'696'519.50) + 3'329'200.0 - cost;
        CHECK(std::abs(report.expected_gain - oracle) < 1e-4);
        CHECK(std::abs(report.expected_gain - (-27'538'189.0)) <= 100.0);
        CHECK(report.nu == 1.0);
        CHECK(report.lambda == 0.0);
    }
    SUBCASE("+20% point from the published table") {
        auto report = expected_gain(schedule, Money::from_dollars(48.67e6), 10e6, 0.10);
        CHECK(std::abs(report.expected_gain - 0.20 * cost) < 0.005 * cost);
    }
    SUBCASE("breakdown sums to the reported gain") {
        for (double a : {0.0, 10e6, 55e6}) {
            for (double c : {0.0, 3.7e6, 21e6}) {
                auto report = expected_gain(schedule, Money::from_dollars(a), c, 0.10);
                double sum = report.jackpot_term + report.small_pool_term +
                             report.fair_split_term + report.fixed_term - report.cost;
                CHECK(std::abs(sum - report.expected_gain) <=
                      1e-9 * std::max(1.0, std::abs(report.expected_gain)));
            }
        }
    }
    SUBCASE("affine and strictly increasing in the carryover") {
        const double c = 8.4e6;
        double slope = ev_share(1, c / kTickets649);
        auto at = [&](double a) {
            return expected_gain(schedule, Money::from_dollars(a), c, 0.10).expected_gain;
        };
        double g0 = at(0), g1 = at(25e6), g2 = at(50e6);
        CHECK(g1 > g0);
        CHECK(g2 > g1);
        CHECK(std::abs((g1 - g0) - slope * 25e6) < 1e-9 * std::abs(g1));
        CHECK(std::abs((g2 - g1) - slope * 25e6) < 1e-9 * std::abs(g2));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(expected_gain(schedule, Money::from_cents(-1), 0, 0),
                        std::domain_error);
    }
}

TEST_CASE("expected_gain agrees with the simulation oracle") {
    auto schedule = lotto::test::rules_2013();
    Scenario scenario;
    scenario.carryover = Money::from_dollars(40e6);
    scenario.crowd_tickets = 10'000'000;
    scenario.free_fraction = 0.10;
    auto closed = expected_gain(schedule, scenario.carryover,
                                static_cast<double>(scenario.crowd_tickets), 0.10);
    auto sim = simulate_gain(schedule, scenario, {10'000, 20240815, 64, true});
    CHECK(std::abs(sim.mean_gain - closed.expected_gain) < 3.0 * sim.std_error);
}

TEST_CASE("pure jackpot model") {
    const auto t = static_cast<std::int64_t>(kTickets649);
    const Money price3 = Money::from_cents(300);

    // published pure-jackpot breakeven at 3,333,333 crowd tickets
    double g = pure_jackpot_expected_gain(t, Money::from_dollars(26.77e6), 3'333'333,
                                          0.10, 0.60, price3);
    CHECK(std::abs(g) < 0.005 * 41'951'448.0);

    // full refund when nothing is taken and nobody else bets
    CHECK(pure_jackpot_expected_gain(100, Money{}, 0, 0, 0.0, Money::from_cents(100)) ==
          doctest::Approx(0.0).epsilon(1e-12));

    SUBCASE("positive return whenever a/(t+c) covers the take (unit price)") {
        const Money price1 = Money::from_cents(100);
        for (std::int64_t tt : {1000LL, 250'000LL}) {
            for (double c : {0.0, 0.3 * tt, 2.0 * tt}) {
                for (double x : {0.1, 0.5, 0.9}) {
                    double a = x * (tt + c);  // boundary of the published condition
                    double gain = pure_jackpot_expected_gain(tt, Money::from_dollars(a),
                                                             c, 0.0, x, price1);
                    if (c == 0.0)
                        CHECK(std::abs(gain) < 1e-6);
                    else
                        CHECK(gain > 0.0);
                }
            }
        }
    }
    SUBCASE("model struct carries the jackpot identity") {
        PureJackpotModel model{t, Money::from_dollars(5e6), 1e6, 0.10, 0.60, price3};
        CHECK(model.jackpot() ==
              doctest::Approx(5e6 + 0.4 * 3.0 * (kTickets649 + 0.9e6)).epsilon(1e-12));
        CHECK(pure_jackpot_expected_gain(model) ==
              doctest::Approx(pure_jackpot_expected_gain(t, Money::from_dollars(5e6),
                                                         1e6, 0.10, 0.60, price3))
                  .epsilon(1e-14));
    }
}
