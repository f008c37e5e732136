#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lotto/money.hpp"
#include "lotto/schedule.hpp"

namespace lotto {

// Crowd ticket counts per tier name (N1..N8 for the 6/49).
struct CrowdOutcome {
    std::map<std::string, std::int64_t> counts;

    std::int64_t total() const;
    std::int64_t count(const std::string& tier) const;
};

struct PoolBreakdown {
    Money betting_pool;      // d_BP
    Money prize_pool;        // d_PP = (1 - take) * d_BP
    Money fixed_deductions;  // d_AB
    Money pools_fund;        // d_PF = d_PP - d_AB
};

struct TierSettlement {
    std::string tier;
    std::int64_t crowd_count{0};
    std::int64_t syndicate_count{0};
    Money pool;        // pool-share tiers: allocated pool incl. carryover/guarantee
    Money per_ticket;  // quoted per-winner prize, rounded half-even to the cent
    Money crowd_payout;
    Money syndicate_payout;
    Money residue;     // pool - crowd - syndicate (pool-share tiers only)
};

struct SettlementReport {
    PoolBreakdown breakdown;
    std::vector<TierSettlement> tiers;
    Money carryover_in;
    Money guarantee_topup;      // sponsor money added to reach the jackpot floor
    Money unallocated;          // lapsed pool share, rolls to the next draw
    Money allocation_residue;   // cents lost/gained rounding share * fund per tier
    std::int64_t syndicate_free_plays{0};
    std::int64_t crowd_free_plays{0};
    Money syndicate_total;      // all cash to the syndicate
    Money cost;                 // ticket_price * total_tickets
    Money gain;                 // syndicate_total - cost
};

// ticket_price * (t * [syndicate_covers] + c * (1 - f)), exact cents.
Money betting_pool(const PrizeSchedule& schedule, std::int64_t crowd_tickets,
                   double free_fraction, bool syndicate_covers);

// Sum over fixed-cash and free-play tiers of amount * (N + size * [include]).
Money fixed_deductions(const PrizeSchedule& schedule, const CrowdOutcome& outcome,
                       bool include_syndicate);

// prize_pool - fixed_deductions; throws std::domain_error when negative.
Money pools_fund(Money prize_pool, Money fixed_deductions);

// Deterministic settlement of one fully specified outcome, with the syndicate
// holding exactly one of every ticket.
SettlementReport settle(const PrizeSchedule& schedule, Money carryover,
                        std::int64_t crowd_tickets, double free_fraction,
                        const CrowdOutcome& outcome);

// Rounded expected counts c * p_i, adjusted to sum exactly to c.
CrowdOutcome expected_outcome(const PrizeSchedule& schedule, std::int64_t crowd_tickets);

}  // namespace lotto
