#pragma once

#include <cstdint>

#include "lotto/money.hpp"
#include "lotto/schedule.hpp"

namespace lotto {

// E[n / (n + X)] for X ~ Poisson(lam). Equals the share recursion
//   n = 1: (1 - e^-lam) / lam,   n > 1: (n/lam) * (1 - ev_share(n-1, lam)),
// but is evaluated from the defining Poisson series: the upward recursion
// amplifies roundoff by ~n!/lam^n and is useless for lam << n.
// lam below 1e-12 returns the limit 1. Throws std::domain_error for n < 1.
double ev_share(int n, double lam);

// Exact binomial counterpart: sum_j C(c,j) p^j (1-p)^(c-j) * n/(n+j),
// accumulated outward from the mode until at least 1 - 1e-15 of the mass is
// captured, then normalized by the captured mass.
double ev_share_exact(int n, std::int64_t c, double p);

// Pool-share tiers at least this large use the law-of-large-numbers fair
// split t/(t+c); smaller tiers use the exact share recursion.
struct SharePolicy {
    std::int64_t fair_split_min_size{100};
};

// Expected Pools Fund in dollars:
//   (1-take) * price * (t + c(1-f)) - (t+c) * H,
// H being the expected fixed/free-play charge per ticket.
// Throws std::domain_error when the result is negative.
double mu(const PrizeSchedule& schedule, double crowd_tickets, double free_fraction);

// Syndicate's expected share factor of the bonus-match pool: ev_share(s, s*c/t)
// for the smallest non-jackpot pool tier (size 6 in the 6/49).
double nu(const PrizeSchedule& schedule, double crowd_tickets);

// t / (t + c): the per-capita split a large tier converges to.
double fair_split_factor(const GameStructure& game, double crowd_tickets);

struct ExpectationReport {
    double lambda{0};           // c / t
    double mu{0};               // expected Pools Fund, dollars
    double nu{1};               // bonus-tier share factor
    double jackpot_term{0};     // (a + s1*mu) * ev_share(1, lambda)
    double small_pool_term{0};  // recursion-valued tiers other than the jackpot
    double fair_split_term{0};  // law-of-large-numbers tiers
    double fixed_term{0};       // syndicate's fixed cash receipts
    double cost{0};             // price * t
    double expected_gain{0};    // sum of the four terms minus cost
};

// Expected gain of a syndicate buying one of every ticket, crowd betting
// equiprobably. Generic over the schedule: shares, tier sizes and fixed
// receipts all come from the tiers.
ExpectationReport expected_gain(const PrizeSchedule& schedule, Money carryover,
                                double crowd_tickets, double free_fraction,
                                const SharePolicy& policy = {});

// Single-prize lottery: jackpot v = a + (1-take) * price * (t + c(1-f)).
struct PureJackpotModel {
    std::int64_t tickets{0};
    Money carryover;
    double crowd_tickets{0};
    double free_fraction{0};
    double take{0};
    Money ticket_price;

    double jackpot() const;
};

// (a + (1-take)*price*(t + c(1-f))) * ev_share(1, c/t) - price * t, dollars.
double pure_jackpot_expected_gain(std::int64_t tickets, Money carryover,
                                  double crowd_tickets, double free_fraction,
                                  double take, Money ticket_price);

double pure_jackpot_expected_gain(const PureJackpotModel& model);

}  // namespace lotto
