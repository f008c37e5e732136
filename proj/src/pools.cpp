#include "lotto/pools.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace lotto {

std::int64_t CrowdOutcome::total() const {
    std::int64_t sum = 0;
    for (const auto& [_, n] : counts) sum += n;
    return sum;
}

std::int64_t CrowdOutcome::count(const std::string& tier) const {
    auto it = counts.find(tier);
    return it == counts.end() ? 0 : it->second;
}

Money betting_pool(const PrizeSchedule& schedule, std::int64_t crowd_tickets,
                   double free_fraction, bool syndicate_covers) {
    if (crowd_tickets < 0) throw std::domain_error("betting_pool: negative crowd");
    if (!(free_fraction >= 0.0 && free_fraction < 1.0))
        throw std::domain_error("betting_pool: free fraction outside [0, 1)");
    const double price = static_cast<double>(schedule.ticket_price.cents);
    std::int64_t cents = 0;
    if (syndicate_covers)
        cents += schedule.ticket_price.cents * total_tickets(schedule.game);
    cents += round_cents_half_even(price * static_cast<double>(crowd_tickets) *
                                   (1.0 - free_fraction));
    return Money::from_cents(cents);
}

Money fixed_deductions(const PrizeSchedule& schedule, const CrowdOutcome& outcome,
                       bool include_syndicate) {
    Money total{};
    for (const auto& tier : schedule.tiers) {
        const auto& alloc = tier.allocation;
        if (alloc.kind != AllocationKind::fixed_cash &&
            alloc.kind != AllocationKind::free_play)
            continue;
        std::int64_t n = outcome.count(tier.name);
        if (n < 0) throw std::domain_error("fixed_deductions: negative count");
        if (include_syndicate) n += schedule.tier_size(tier);
        total += alloc.amount * n;
    }
    return total;
}

Money pools_fund(Money prize_pool, Money fixed) {
    Money fund = prize_pool - fixed;
    if (fund.cents < 0)
        throw std::domain_error("fixed deductions exceed prize pool");
    return fund;
}

SettlementReport settle(const PrizeSchedule& schedule, Money carryover,
                        std::int64_t crowd_tickets, double free_fraction,
                        const CrowdOutcome& outcome) {
    require_valid(schedule);
    if (carryover.cents < 0) throw std::domain_error("settle: negative carryover");
    if (outcome.total() != crowd_tickets)
        throw std::invalid_argument("settle: outcome counts do not sum to the crowd size");

    SettlementReport report;
    report.carryover_in = carryover;
    report.breakdown.betting_pool =
        betting_pool(schedule, crowd_tickets, free_fraction, true);
    report.breakdown.prize_pool = Money::from_cents(round_cents_half_even(
        static_cast<double>(report.breakdown.betting_pool.cents) * (1.0 - schedule.take)));
    report.breakdown.fixed_deductions = fixed_deductions(schedule, outcome, true);
    report.breakdown.pools_fund =
        pools_fund(report.breakdown.prize_pool, report.breakdown.fixed_deductions);

    const std::int64_t fund = report.breakdown.pools_fund.cents;
    const int jackpot_index = schedule.jackpot_tier_index();

    report.unallocated = Money::from_cents(
        round_cents_half_even(schedule.unallocated_share * static_cast<double>(fund)));
    std::int64_t allocated = report.unallocated.cents;

    for (std::size_t i = 0; i < schedule.tiers.size(); ++i) {
        const auto& tier = schedule.tiers[i];
        TierSettlement ts;
        ts.tier = tier.name;
        ts.crowd_count = outcome.count(tier.name);
        ts.syndicate_count = schedule.tier_size(tier);

        switch (tier.allocation.kind) {
            case AllocationKind::pool_share: {
                std::int64_t pool = round_cents_half_even(
                    tier.allocation.fraction * static_cast<double>(fund));
                allocated += pool;
                if (static_cast<int>(i) == jackpot_index) {
                    pool += carryover.cents;
                    if (schedule.jackpot_guarantee &&
                        pool < schedule.jackpot_guarantee->cents) {
                        report.guarantee_topup =
                            Money::from_cents(schedule.jackpot_guarantee->cents - pool);
                        pool = schedule.jackpot_guarantee->cents;
                    }
                }
                ts.pool = Money::from_cents(pool);
                std::int64_t winners = ts.crowd_count + ts.syndicate_count;
                if (winners > 0) {
                    ts.per_ticket =
                        Money::from_cents(muldiv_round_half_even(1, pool, winners));
                    ts.crowd_payout = Money::from_cents(
                        muldiv_round_half_even(ts.crowd_count, pool, winners));
                    ts.syndicate_payout = Money::from_cents(
                        muldiv_round_half_even(ts.syndicate_count, pool, winners));
                }
                ts.residue = ts.pool - ts.crowd_payout - ts.syndicate_payout;
                break;
            }
            case AllocationKind::fixed_cash:
                ts.per_ticket = tier.allocation.amount;
                ts.crowd_payout = tier.allocation.amount * ts.crowd_count;
                ts.syndicate_payout = tier.allocation.amount * ts.syndicate_count;
                break;
            case AllocationKind::free_play:
                report.crowd_free_plays += ts.crowd_count;
                report.syndicate_free_plays += ts.syndicate_count;
                break;
            case AllocationKind::nothing:
                break;
        }
        report.syndicate_total += ts.syndicate_payout;
        report.tiers.push_back(std::move(ts));
    }

    report.allocation_residue = Money::from_cents(fund - allocated);
    report.cost = schedule.ticket_price * total_tickets(schedule.game);
    report.gain = report.syndicate_total - report.cost;
    return report;
}

CrowdOutcome expected_outcome(const PrizeSchedule& schedule, std::int64_t crowd_tickets) {
    // Largest-remainder rounding keeps the counts summing exactly to c.
    const double t = static_cast<double>(total_tickets(schedule.game));
    std::vector<std::pair<double, std::size_t>> remainders;
    std::vector<std::int64_t> counts(schedule.tiers.size());
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < schedule.tiers.size(); ++i) {
        double exact = static_cast<double>(crowd_tickets) *
                       static_cast<double>(schedule.tier_size(schedule.tiers[i])) / t;
        counts[i] = static_cast<std::int64_t>(std::floor(exact));
        assigned += counts[i];
        remainders.push_back({exact - std::floor(exact), i});
    }
    std::sort(remainders.begin(), remainders.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    for (std::int64_t left = crowd_tickets - assigned; left > 0; --left)
        ++counts[remainders[static_cast<std::size_t>(crowd_tickets - assigned - left)].second];

    CrowdOutcome outcome;
    for (std::size_t i = 0; i < schedule.tiers.size(); ++i)
        outcome.counts[schedule.tiers[i].name] = counts[i];
    return outcome;
}

}  // namespace lotto
