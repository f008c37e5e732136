#include "lotto/thresholds.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

namespace lotto {

namespace {

constexpr std::int64_t kBracketHighCents = 10'000'000'000;  // $100M

// Shared by both solvers: E[G] is affine in the carryover with slope
// ev_share(1, lambda), so a* is explicit; bisection then confirms it.
Money solve_affine(double gain_at_zero, double slope_per_dollar, double target_gain,
                   const std::function<double(double)>& gain_at) {
    if (slope_per_dollar <= 0)
        throw std::domain_error("solve_carryover: non-increasing in carryover");
    const double closed = (target_gain - gain_at_zero) / slope_per_dollar;
    const std::int64_t closed_cents = round_cents_half_even(closed * 100.0);
    if (closed_cents < 0 || closed_cents > kBracketHighCents)
        throw std::domain_error("solve_carryover: no solution in [0, $100M]");

    std::int64_t lo = 0, hi = kBracketHighCents;
    if (gain_at(static_cast<double>(lo) / 100.0) > target_gain ||
        gain_at(static_cast<double>(hi) / 100.0) < target_gain)
        throw std::domain_error("solve_carryover: no solution in [0, $100M]");
    while (hi - lo > 1) {
        std::int64_t mid = lo + (hi - lo) / 2;
        if (gain_at(static_cast<double>(mid) / 100.0) < target_gain)
            lo = mid;
        else
            hi = mid;
    }
    if (std::llabs(hi - closed_cents) > 100)
        throw std::runtime_error("solve_carryover: closed form and bisection disagree by over $1");
    return Money::from_cents(closed_cents);
}

}  // namespace

Money solve_carryover(const ThresholdQuery& query) {
    if (query.target_return < -1.0)
        throw std::domain_error("solve_carryover: target below -100%");
    const auto& s = query.schedule;
    const double t = static_cast<double>(total_tickets(s.game));
    const double target_gain = query.target_return * s.ticket_price.dollars() * t;

    auto gain_at = [&](double a_dollars) {
        return expected_gain(s, Money::from_dollars(a_dollars), query.crowd_tickets,
                             query.free_fraction, query.policy)
            .expected_gain;
    };
    const double at_zero = gain_at(0.0);
    const double slope = ev_share(1, query.crowd_tickets / t);
    return solve_affine(at_zero, slope, target_gain, gain_at);
}

Money solve_carryover_pure(std::int64_t tickets, double crowd_tickets,
                           double free_fraction, double take, Money ticket_price,
                           double target_return) {
    if (target_return < -1.0)
        throw std::domain_error("solve_carryover_pure: target below -100%");
    const double t = static_cast<double>(tickets);
    const double target_gain = target_return * ticket_price.dollars() * t;
    auto gain_at = [&](double a_dollars) {
        return pure_jackpot_expected_gain(tickets, Money::from_dollars(a_dollars),
                                          crowd_tickets, free_fraction, take,
                                          ticket_price);
    };
    const double slope = ev_share(1, crowd_tickets / t);
    return solve_affine(gain_at(0.0), slope, target_gain, gain_at);
}

PrizeSchedule apply_design_factor(const PrizeSchedule& schedule,
                                  const DesignFactor& factor) {
    PrizeSchedule out = schedule;
    switch (factor.kind) {
        case DesignFactor::Kind::identity:
            break;
        case DesignFactor::Kind::set_take:
            out.take = factor.take;
            break;
        case DesignFactor::Kind::remove_fixed_tiers:
            for (auto& tier : out.tiers)
                if (tier.allocation.kind == AllocationKind::fixed_cash)
                    tier.allocation = Allocation::nothing();
            break;
        case DesignFactor::Kind::remove_mid_pool_tiers: {
            int jackpot = out.jackpot_tier_index();
            if (jackpot < 0)
                throw std::invalid_argument("design factor: schedule has no jackpot tier");
            double freed = 0;
            for (std::size_t i = 0; i < out.tiers.size(); ++i) {
                if (static_cast<int>(i) == jackpot) continue;
                auto& alloc = out.tiers[i].allocation;
                if (alloc.kind != AllocationKind::pool_share) continue;
                freed += alloc.fraction;
                alloc = Allocation::nothing();
            }
            if (factor.reassign_to_jackpot)
                out.tiers[static_cast<std::size_t>(jackpot)].allocation.fraction += freed;
            else
                out.unallocated_share += freed;
            break;
        }
        case DesignFactor::Kind::remove_free_play:
            for (auto& tier : out.tiers)
                if (tier.allocation.kind == AllocationKind::free_play)
                    tier.allocation = Allocation::nothing();
            break;
    }
    return out;
}

std::vector<ThresholdTableRow> threshold_table(const PrizeSchedule& schedule,
                                               double free_fraction,
                                               const std::vector<double>& crowd_tickets) {
    const double t = static_cast<double>(total_tickets(schedule.game));
    const double price = schedule.ticket_price.dollars();
    std::vector<ThresholdTableRow> rows(crowd_tickets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(crowd_tickets.size()); ++i) {
        const double c = crowd_tickets[static_cast<std::size_t>(i)];
        ThresholdTableRow row;
        row.crowd_tickets_m = c / 1e6;
        row.crowd_bet_m = c * price * (1.0 - free_fraction) / 1e6;
        const double a0 =
            solve_carryover({schedule, c, free_fraction, 0.0}).dollars();
        row.breakeven_m = a0 / 1e6;
        row.plus10_m = solve_carryover({schedule, c, free_fraction, 0.10}).dollars() / 1e6;
        row.plus20_m = solve_carryover({schedule, c, free_fraction, 0.20}).dollars() / 1e6;
        row.pools_fund_m = mu(schedule, c, free_fraction) / 1e6;
        row.breakeven_pct = 100.0 * a0 / (price * (t + c));
        row.ev56_pct = 100.0 * nu(schedule, c);
        rows[static_cast<std::size_t>(i)] = row;
    }
    return rows;
}

std::vector<PureVsLottoRow> pure_vs_lotto_table(const PrizeSchedule& schedule,
                                                double free_fraction,
                                                const std::vector<double>& crowd_tickets) {
    const std::int64_t t = total_tickets(schedule.game);
    const double price = schedule.ticket_price.dollars();
    std::vector<PureVsLottoRow> rows(crowd_tickets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(crowd_tickets.size()); ++i) {
        const double c = crowd_tickets[static_cast<std::size_t>(i)];
        PureVsLottoRow row;
        row.crowd_tickets_m = c / 1e6;
        row.crowd_bet_m = c * price * (1.0 - free_fraction) / 1e6;
        auto pure = [&](double target) {
            return solve_carryover_pure(t, c, free_fraction, schedule.take,
                                        schedule.ticket_price, target)
                       .dollars() / 1e6;
        };
        auto lotto = [&](double target) {
            return solve_carryover({schedule, c, free_fraction, target}).dollars() / 1e6;
        };
        row.pure_breakeven_m = pure(0.0);
        row.pure_plus10_m = pure(0.10);
        row.pure_plus20_m = pure(0.20);
        row.lotto_breakeven_m = lotto(0.0);
        row.lotto_plus10_m = lotto(0.10);
        row.lotto_plus20_m = lotto(0.20);
        rows[static_cast<std::size_t>(i)] = row;
    }
    return rows;
}

std::vector<DesignFactorRow> design_factor_table(const PrizeSchedule& schedule,
                                                 double free_fraction,
                                                 const std::vector<double>& gross_bets) {
    struct Variant {
        std::string name;
        DesignFactor factor;
    };
    const std::vector<Variant> variants = {
        {"TAKE=0.55", DesignFactor::set_take(0.55)},
        {"CURRENT", DesignFactor::identity()},
        {"TAKE=0.65", DesignFactor::set_take(0.65)},
        {"NO 2/6+, 3/6", DesignFactor::remove_fixed_tiers()},
        {"NO 4/6, 5/6", DesignFactor::remove_mid_pool_tiers()},
        {"NO FREE PLAY", DesignFactor::remove_free_play()},
    };
    const double price = schedule.ticket_price.dollars();

    std::vector<DesignFactorRow> rows(variants.size());
    for (std::size_t v = 0; v < variants.size(); ++v) {
        rows[v].design = variants[v].name;
        rows[v].breakeven_m.resize(gross_bets.size());
    }
#pragma omp parallel for collapse(2) schedule(dynamic)
    for (std::ptrdiff_t v = 0; v < static_cast<std::ptrdiff_t>(variants.size()); ++v) {
        for (std::ptrdiff_t g = 0; g < static_cast<std::ptrdiff_t>(gross_bets.size()); ++g) {
            PrizeSchedule variant = apply_design_factor(
                schedule, variants[static_cast<std::size_t>(v)].factor);
            const double c = gross_bets[static_cast<std::size_t>(g)] / price;
            rows[static_cast<std::size_t>(v)].breakeven_m[static_cast<std::size_t>(g)] =
                solve_carryover({variant, c, free_fraction, 0.0}).dollars() / 1e6;
        }
    }
    for (auto& row : rows)
        row.delta_first_m = gross_bets.empty()
                                ? 0.0
                                : row.breakeven_m[0] - rows[1].breakeven_m[0];
    return rows;
}

}  // namespace lotto
