#include "lotto/expectation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lotto {

double ev_share(int n, double lam) {
    if (n < 1) throw std::domain_error("ev_share: n must be >= 1");
    if (!(lam >= 0)) throw std::domain_error("ev_share: lambda must be >= 0");
    if (lam < 1e-12) return 1.0;
    if (lam > 690.0) {
        // e^-lam underflows; the upward recursion is stable here (k/lam < 1).
        double g = -std::expm1(-lam) / lam;
        for (int k = 2; k <= n; ++k) g = (k / lam) * (1.0 - g);
        return g;
    }
    double pmf = std::exp(-lam);  // Poisson(lam) at k = 0
    double sum = pmf * (n / static_cast<double>(n));
    double mass = pmf;
    for (std::int64_t k = 1; mass < 1.0 - 1e-17; ++k) {
        pmf *= lam / static_cast<double>(k);
        sum += pmf * (n / static_cast<double>(n + k));
        mass += pmf;
        if (pmf < mass * 1e-18 && static_cast<double>(k) > lam) break;
    }
    return sum / mass;
}

double ev_share_exact(int n, std::int64_t c, double p) {
    if (n < 1) throw std::domain_error("ev_share_exact: n must be >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("ev_share_exact: p outside [0,1]");
    if (c < 0) throw std::domain_error("ev_share_exact: negative c");
    if (c == 0 || p == 0.0) return 1.0;
    if (p == 1.0) return n / static_cast<double>(n + c);

    const double cd = static_cast<double>(c);
    auto log_pmf = [&](std::int64_t k) {
        double kd = static_cast<double>(k);
        return std::lgamma(cd + 1) - std::lgamma(kd + 1) - std::lgamma(cd - kd + 1) +
               kd * std::log(p) + (cd - kd) * std::log1p(-p);
    };

    const std::int64_t mode =
        std::min<std::int64_t>(c, static_cast<std::int64_t>((cd + 1) * p));
    std::int64_t lo = mode, hi = mode;
    double pmf_lo = std::exp(log_pmf(mode));
    double pmf_hi = pmf_lo;
    double mass = pmf_lo;
    double sum = pmf_lo * (n / static_cast<double>(n + mode));
    const double up_ratio = p / (1.0 - p);

    while (mass < 1.0 - 1e-15 && (lo > 0 || hi < c)) {
        bool go_hi = hi < c && (lo == 0 || pmf_hi >= pmf_lo);
        if (go_hi) {
            pmf_hi *= static_cast<double>(c - hi) / static_cast<double>(hi + 1) * up_ratio;
            ++hi;
            sum += pmf_hi * (n / static_cast<double>(n + hi));
            mass += pmf_hi;
        } else {
            pmf_lo *= static_cast<double>(lo) / static_cast<double>(c - lo + 1) / up_ratio;
            --lo;
            sum += pmf_lo * (n / static_cast<double>(n + lo));
            mass += pmf_lo;
        }
        // lgamma carries ~1e-7 absolute log error at huge c, so the float mass
        // can stall just shy of the target; the ratio sum/mass is unaffected.
        if (pmf_lo < mass * 1e-18 && pmf_hi < mass * 1e-18) break;
    }
    return sum / mass;
}

double mu(const PrizeSchedule& schedule, double crowd_tickets, double free_fraction) {
    if (crowd_tickets < 0) throw std::domain_error("mu: negative crowd");
    if (!(free_fraction >= 0.0 && free_fraction < 1.0))
        throw std::domain_error("mu: free fraction outside [0, 1)");
    const double t = static_cast<double>(total_tickets(schedule.game));
    const double price = schedule.ticket_price.dollars();
    double fund = (1.0 - schedule.take) * price * (t + crowd_tickets * (1.0 - free_fraction)) -
                  (t + crowd_tickets) * schedule.fixed_charge_per_ticket();
    if (fund < 0)
        throw std::domain_error("mu: expected pools fund negative; schedule infeasible at this crowd size");
    return fund;
}

double nu(const PrizeSchedule& schedule, double crowd_tickets) {
    const double t = static_cast<double>(total_tickets(schedule.game));
    const int jackpot = schedule.jackpot_tier_index();
    std::int64_t best = 0;
    for (std::size_t i = 0; i < schedule.tiers.size(); ++i) {
        if (static_cast<int>(i) == jackpot) continue;
        if (schedule.tiers[i].allocation.kind != AllocationKind::pool_share) continue;
        std::int64_t size = schedule.tier_size(schedule.tiers[i]);
        if (size > 0 && (best == 0 || size < best)) best = size;
    }
    if (best == 0) return 1.0;
    return ev_share(static_cast<int>(best),
                    static_cast<double>(best) * crowd_tickets / t);
}

double fair_split_factor(const GameStructure& game, double crowd_tickets) {
    const double t = static_cast<double>(total_tickets(game));
    return t / (t + crowd_tickets);
}

ExpectationReport expected_gain(const PrizeSchedule& schedule, Money carryover,
                                double crowd_tickets, double free_fraction,
                                const SharePolicy& policy) {
    require_valid(schedule);
    if (carryover.cents < 0) throw std::domain_error("expected_gain: negative carryover");

    const double t = static_cast<double>(total_tickets(schedule.game));
    const int jackpot = schedule.jackpot_tier_index();
    if (jackpot < 0 && carryover.cents > 0)
        throw std::invalid_argument("expected_gain: carryover with no jackpot tier");

    ExpectationReport report;
    report.lambda = crowd_tickets / t;
    report.mu = mu(schedule, crowd_tickets, free_fraction);
    report.nu = nu(schedule, crowd_tickets);
    report.cost = schedule.ticket_price.dollars() * t;
    report.fixed_term = schedule.syndicate_fixed_receipts().dollars();

    const double fair = 1.0 / (1.0 + report.lambda);
    for (std::size_t i = 0; i < schedule.tiers.size(); ++i) {
        const auto& tier = schedule.tiers[i];
        if (tier.allocation.kind != AllocationKind::pool_share) continue;
        const double share = tier.allocation.fraction;
        const std::int64_t size = schedule.tier_size(tier);
        if (static_cast<int>(i) == jackpot) {
            report.jackpot_term = (carryover.dollars() + share * report.mu) *
                                  ev_share(1, report.lambda);
        } else if (size >= policy.fair_split_min_size) {
            report.fair_split_term += share * report.mu * fair;
        } else {
            report.small_pool_term +=
                share * report.mu *
                ev_share(static_cast<int>(size),
                         static_cast<double>(size) * report.lambda);
        }
    }
    report.expected_gain = report.jackpot_term + report.small_pool_term +
                           report.fair_split_term + report.fixed_term - report.cost;
    return report;
}

double PureJackpotModel::jackpot() const {
    return carryover.dollars() +
           (1.0 - take) * ticket_price.dollars() *
               (static_cast<double>(tickets) + crowd_tickets * (1.0 - free_fraction));
}

double pure_jackpot_expected_gain(std::int64_t tickets, Money carryover,
                                  double crowd_tickets, double free_fraction,
                                  double take, Money ticket_price) {
    PureJackpotModel model{tickets, carryover, crowd_tickets, free_fraction,
                           take, ticket_price};
    return pure_jackpot_expected_gain(model);
}

double pure_jackpot_expected_gain(const PureJackpotModel& model) {
    if (model.tickets <= 0) throw std::domain_error("pure jackpot: no tickets");
    const double t = static_cast<double>(model.tickets);
    return model.jackpot() * ev_share(1, model.crowd_tickets / t) -
           model.ticket_price.dollars() * t;
}

}  // namespace lotto
