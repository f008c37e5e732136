#pragma once

#include <string>
#include <vector>

#include "lotto/expectation.hpp"
#include "lotto/money.hpp"
#include "lotto/schedule.hpp"

namespace lotto {

struct ThresholdQuery {
    PrizeSchedule schedule;
    double crowd_tickets{0};
    double free_fraction{0};
    double target_return{0};  // fraction of the covering cost, e.g. 0.10
    SharePolicy policy{};
};

// Smallest carryover a* with expected_gain(a*) = target * price * t. Solved in
// closed form from affinity in a, then cross-checked by bisection on
// [0, 10^10] cents to one-cent width; the two must agree within $1.
Money solve_carryover(const ThresholdQuery& query);

// Same threshold for the pure jackpot model.
Money solve_carryover_pure(std::int64_t tickets, double crowd_tickets,
                           double free_fraction, double take, Money ticket_price,
                           double target_return);

struct DesignFactor {
    enum class Kind {
        identity,
        set_take,
        remove_fixed_tiers,     // fixed-cash tiers pay nothing
        remove_mid_pool_tiers,  // non-jackpot pool tiers dropped
        remove_free_play,       // free-play tiers pay nothing
    };
    Kind kind{Kind::identity};
    double take{0};
    // remove_mid_pool_tiers: reassign the freed share to the jackpot (default)
    // or let it lapse to the carryover.
    bool reassign_to_jackpot{true};

    static DesignFactor identity() { return {}; }
    static DesignFactor set_take(double x) { return {Kind::set_take, x, true}; }
    static DesignFactor remove_fixed_tiers() { return {Kind::remove_fixed_tiers, 0, true}; }
    static DesignFactor remove_mid_pool_tiers(bool reassign = true) {
        return {Kind::remove_mid_pool_tiers, 0, reassign};
    }
    static DesignFactor remove_free_play() { return {Kind::remove_free_play, 0, true}; }
};

PrizeSchedule apply_design_factor(const PrizeSchedule& schedule,
                                  const DesignFactor& factor);

struct ThresholdTableRow {  // one row of the carryover-threshold table
    double crowd_tickets_m;
    double crowd_bet_m;        // net cash, c * price * (1-f)
    double breakeven_m;
    double plus10_m;
    double plus20_m;
    double pools_fund_m;       // expected Pools Fund
    double breakeven_pct;      // breakeven as % of the gross bet price*(t+c)
    double ev56_pct;           // bonus-tier share factor, percent
};

struct PureVsLottoRow {  // pure jackpot vs. full schedule
    double crowd_tickets_m;
    double crowd_bet_m;
    double pure_breakeven_m, pure_plus10_m, pure_plus20_m;
    double lotto_breakeven_m, lotto_plus10_m, lotto_plus20_m;
};

struct DesignFactorRow {  // breakeven thresholds across gross crowd bets
    std::string design;
    std::vector<double> breakeven_m;  // one per gross-bet column
    double delta_first_m;             // variant minus baseline, first column
};

// Grid generators behind the `tables` command. Crowd sizes are in tickets;
// design-factor columns are gross crowd dollars (tickets = dollars / price).
std::vector<ThresholdTableRow> threshold_table(const PrizeSchedule& schedule,
                                               double free_fraction,
                                               const std::vector<double>& crowd_tickets);
std::vector<PureVsLottoRow> pure_vs_lotto_table(const PrizeSchedule& schedule,
                                                double free_fraction,
                                                const std::vector<double>& crowd_tickets);
std::vector<DesignFactorRow> design_factor_table(const PrizeSchedule& schedule,
                                                 double free_fraction,
                                                 const std::vector<double>& gross_bets);

}  // namespace lotto
