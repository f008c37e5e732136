#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lotto/game.hpp"
#include "lotto/money.hpp"

namespace lotto {

enum class AllocationKind { fixed_cash, pool_share, free_play, nothing };

struct Allocation {
    AllocationKind kind{AllocationKind::nothing};
    Money amount{};      // fixed_cash payout per ticket, or free_play pool charge
    double fraction{0};  // pool_share fraction of the Pools Fund

    static Allocation fixed_cash(Money per_ticket) {
        return {AllocationKind::fixed_cash, per_ticket, 0};
    }
    static Allocation pool_share(double f) {
        return {AllocationKind::pool_share, Money{}, f};
    }
    static Allocation free_play(Money deduction) {
        return {AllocationKind::free_play, deduction, 0};
    }
    static Allocation nothing() { return {}; }
};

// A prize tier covers one or more match classes. Tiers like "no-win" that
// lump several match counts together carry several specs so that a schedule's
// tiers always partition the outcome space.
struct PrizeTier {
    std::string name;
    std::vector<MatchSpec> matches;
    Allocation allocation;
};

struct PrizeSchedule {
    GameStructure game;
    std::vector<PrizeTier> tiers;
    Money ticket_price{Money::from_cents(300)};
    double take{0.60};
    std::optional<Money> jackpot_guarantee;
    // Pool fraction deliberately left unawarded (rolls over); nonzero only for
    // design variants that drop tiers without reassigning their share.
    double unallocated_share{0};

    std::int64_t tier_size(const PrizeTier& tier) const;
    double tier_probability(const PrizeTier& tier) const;
    // Index of the pool-share tier covering the full match, or -1.
    int jackpot_tier_index() const;
    // Expected fixed/free-play charge per crowd ticket, in dollars
    // (H = sum of amount * tier probability over fixed and free-play tiers).
    double fixed_charge_per_ticket() const;
    // Cash the covering syndicate always collects from fixed tiers.
    Money syndicate_fixed_receipts() const;
    // Pool charge for the syndicate's full coverage (fixed + free-play tiers).
    Money syndicate_fixed_deduction() const;
};

// Returns human-readable violations; empty means the schedule is valid.
std::vector<std::string> validate_schedule(const PrizeSchedule& schedule);

// Throws std::invalid_argument listing the violations.
void require_valid(const PrizeSchedule& schedule);

// The unique tier whose match spec the ticket satisfies under this draw.
const PrizeTier& classify(const Ticket& ticket, const Draw& draw,
                          const PrizeSchedule& schedule);

PrizeSchedule load_rules_file(const std::string& path);
PrizeSchedule parse_rules_json(const std::string& text);
std::string rules_to_json(const PrizeSchedule& schedule);

}  // namespace lotto
