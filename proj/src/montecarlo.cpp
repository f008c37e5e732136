#include "lotto/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace lotto {

CrowdOutcome Scenario::resolve_outcome(const PrizeSchedule& schedule,
                                       SplitMix64& rng) const {
    switch (outcome_kind) {
        case OutcomeKind::explicit_counts: return counts;
        case OutcomeKind::expected: return expected_outcome(schedule, crowd_tickets);
        case OutcomeKind::sample: return sample_crowd_outcome(schedule, crowd_tickets, rng);
    }
    return counts;
}

Scenario parse_scenario_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Scenario s;
    s.carryover = Money::from_cents(j.at("carryover_cents").get<std::int64_t>());
    s.crowd_tickets = j.at("crowd_tickets").get<std::int64_t>();
    s.free_fraction = j.value("free_fraction", 0.0);
    const auto& outcome = j.at("outcome");
    if (outcome.is_string()) {
        const std::string kind = outcome.get<std::string>();
        if (kind == "expected")
            s.outcome_kind = Scenario::OutcomeKind::expected;
        else if (kind == "sample")
            s.outcome_kind = Scenario::OutcomeKind::sample;
        else
            throw std::invalid_argument("scenario: unknown outcome '" + kind + "'");
    } else {
        s.outcome_kind = Scenario::OutcomeKind::explicit_counts;
        for (const auto& [name, count] : outcome.items())
            s.counts.counts[name] = count.get<std::int64_t>();
    }
    return s;
}

Scenario load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_scenario_json(buf.str());
}

std::int64_t sample_binomial(SplitMix64& rng, std::int64_t n, double p) {
    if (n < 0) throw std::domain_error("sample_binomial: negative n");
    if (n == 0 || p <= 0.0) return 0;
    if (p >= 1.0) return n;

    // Inverse CDF walked outward from the mode, larger-pmf side first, until
    // the running mass passes the uniform draw. Expected O(sqrt(n p (1-p)))
    // pmf evaluations per deviate.
    const double nd = static_cast<double>(n);
    auto log_pmf = [&](std::int64_t k) {
        double kd = static_cast<double>(k);
        return std::lgamma(nd + 1) - std::lgamma(kd + 1) - std::lgamma(nd - kd + 1) +
               kd * std::log(p) + (nd - kd) * std::log1p(-p);
    };
    const std::int64_t mode = std::min<std::int64_t>(n, static_cast<std::int64_t>((nd + 1) * p));
    const double target = rng.next_double();
    std::int64_t lo = mode, hi = mode;
    double pmf_lo = std::exp(log_pmf(mode));
    double pmf_hi = pmf_lo;
    double mass = pmf_lo;
    if (target < mass) return mode;
    const double up_ratio = p / (1.0 - p);
    std::int64_t last = mode;
    while (lo > 0 || hi < n) {
        bool go_hi = hi < n && (lo == 0 || pmf_hi >= pmf_lo);
        if (go_hi) {
            pmf_hi *= static_cast<double>(n - hi) / static_cast<double>(hi + 1) * up_ratio;
            ++hi;
            mass += pmf_hi;
            last = hi;
        } else {
            pmf_lo *= static_cast<double>(lo) / static_cast<double>(n - lo + 1) / up_ratio;
            --lo;
            mass += pmf_lo;
            last = lo;
        }
        if (target < mass) return last;
        // The float mass can stall a hair below 1 (lgamma bias at huge n);
        // a draw in that sliver maps to the deepest tail value reached.
        if (pmf_lo < mass * 1e-18 && pmf_hi < mass * 1e-18) break;
    }
    return last;
}

CrowdOutcome sample_crowd_outcome(const PrizeSchedule& schedule, std::int64_t crowd_tickets,
                                  SplitMix64& rng) {
    if (crowd_tickets < 0) throw std::domain_error("sample_crowd_outcome: negative crowd");
    const double t = static_cast<double>(total_tickets(schedule.game));
    CrowdOutcome outcome;
    std::int64_t remaining = crowd_tickets;
    double remaining_p = 1.0;
    for (std::size_t i = 0; i < schedule.tiers.size(); ++i) {
        const auto& tier = schedule.tiers[i];
        std::int64_t count;
        if (i + 1 == schedule.tiers.size()) {
            count = remaining;  // the partition property pins the last tier
        } else {
            double p = static_cast<double>(schedule.tier_size(tier)) / t;
            double conditional = remaining_p > 0 ? std::min(1.0, p / remaining_p) : 0.0;
            count = sample_binomial(rng, remaining, conditional);
            remaining_p -= p;
        }
        outcome.counts[tier.name] = count;
        remaining -= count;
    }
    return outcome;
}

namespace {

// Kahan-compensated accumulator.
struct CompensatedSum {
    double sum{0}, c{0};
    void add(double v) {
        double y = v - c;
        double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

struct PartitionAccum {
    CompensatedSum gain, gain_sq;
    std::vector<CompensatedSum> tier_payouts;
    std::int64_t trials{0};
};

PartitionAccum run_partition(const PrizeSchedule& schedule, const Scenario& scenario,
                             std::int64_t trials, std::uint64_t stream_seed) {
    PartitionAccum acc;
    acc.tier_payouts.resize(schedule.tiers.size());
    acc.trials = trials;
    SplitMix64 rng(stream_seed);
    for (std::int64_t i = 0; i < trials; ++i) {
        CrowdOutcome outcome =
            sample_crowd_outcome(schedule, scenario.crowd_tickets, rng);
        SettlementReport report =
            settle(schedule, scenario.carryover, scenario.crowd_tickets,
                   scenario.free_fraction, outcome);
        double gain = report.gain.dollars();
        acc.gain.add(gain);
        acc.gain_sq.add(gain * gain);
        for (std::size_t t = 0; t < report.tiers.size(); ++t)
            acc.tier_payouts[t].add(report.tiers[t].syndicate_payout.dollars());
    }
    return acc;
}

SimulationResult run_simulation(const PrizeSchedule& schedule, const Scenario& scenario,
                                const SimulationConfig& config, bool parallel) {
    if (config.trials < 1) throw std::domain_error("simulate_gain: trials must be >= 1");
    if (config.partitions < 1) throw std::domain_error("simulate_gain: partitions must be >= 1");
    require_valid(schedule);

    const int parts = static_cast<int>(
        std::min<std::int64_t>(config.partitions, config.trials));
    std::vector<PartitionAccum> accs(static_cast<std::size_t>(parts));
    const std::int64_t base = config.trials / parts;
    const std::int64_t extra = config.trials % parts;

#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int p = 0; p < parts; ++p) {
        std::int64_t n = base + (p < extra ? 1 : 0);
        accs[static_cast<std::size_t>(p)] =
            run_partition(schedule, scenario, n, derive_stream(config.seed,
                                                               static_cast<std::uint64_t>(p)));
    }

    // Combine in fixed partition order so the result does not depend on the
    // thread schedule.
    CompensatedSum gain, gain_sq;
    std::vector<CompensatedSum> tiers(schedule.tiers.size());
    std::int64_t total_trials = 0;
    for (const auto& acc : accs) {
        gain.add(acc.gain.sum);
        gain_sq.add(acc.gain_sq.sum);
        for (std::size_t t = 0; t < tiers.size(); ++t)
            tiers[t].add(acc.tier_payouts[t].sum);
        total_trials += acc.trials;
    }

    SimulationResult result;
    result.trials = total_trials;
    const double n = static_cast<double>(total_trials);
    result.mean_gain = gain.sum / n;
    if (total_trials > 1) {
        double var = (gain_sq.sum - n * result.mean_gain * result.mean_gain) / (n - 1);
        result.std_error = std::sqrt(std::max(0.0, var) / n);
    }
    for (std::size_t t = 0; t < tiers.size(); ++t)
        result.tier_mean_payouts[schedule.tiers[t].name] = tiers[t].sum / n;
    return result;
}

}  // namespace

SimulationResult simulate_gain(const PrizeSchedule& schedule, const Scenario& scenario,
                               const SimulationConfig& config) {
    return run_simulation(schedule, scenario, config, config.parallel);
}

SimulationResult simulate_gain_serial(const PrizeSchedule& schedule,
                                      const Scenario& scenario,
                                      const SimulationConfig& config) {
    return run_simulation(schedule, scenario, config, false);
}

JackpotPayoutResult simulate_jackpot_payout_proportional(
    const PrizeSchedule& schedule, Money carryover, std::int64_t crowd_tickets,
    double free_fraction, const CrowdWeights& weights, const SimulationConfig& config) {
    require_valid(schedule);
    const int jackpot = schedule.jackpot_tier_index();
    if (jackpot < 0)
        throw std::invalid_argument("proportional model: no jackpot tier");
    const double t = static_cast<double>(total_tickets(schedule.game));
    const double s1 = schedule.tiers[static_cast<std::size_t>(jackpot)].allocation.fraction;
    const double prize_pool = (1.0 - schedule.take) * schedule.ticket_price.dollars() *
                              (t + static_cast<double>(crowd_tickets) * (1.0 - free_fraction));
    const double syndicate_fixed = schedule.syndicate_fixed_deduction().dollars();
    const double crowd_rate =
        static_cast<double>(crowd_tickets) * schedule.fixed_charge_per_ticket();

    CompensatedSum sum, sum_sq;
    SplitMix64 rng(derive_stream(config.seed, 0));
    for (std::int64_t i = 0; i < config.trials; ++i) {
        const double q = weights.sample_weight(rng.next());
        // crowd fixed payouts scale with t*q of the winning ticket
        const double fund =
            std::max(0.0, prize_pool - syndicate_fixed - crowd_rate * t * q);
        const double v = carryover.dollars() + s1 * fund;
        const std::int64_t n1 = sample_binomial(rng, crowd_tickets, q);
        const double payout = v / static_cast<double>(1 + n1);
        sum.add(payout);
        sum_sq.add(payout * payout);
    }
    JackpotPayoutResult result;
    result.trials = config.trials;
    const double n = static_cast<double>(config.trials);
    result.mean = sum.sum / n;
    if (config.trials > 1) {
        double var = (sum_sq.sum - n * result.mean * result.mean) / (n - 1);
        result.std_error = std::sqrt(std::max(0.0, var) / n);
    }
    return result;
}

namespace {

Rational rational_pow(const Rational& base, std::int64_t e) {
    Rational r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= base;
    return r;
}

Rational factorial_rational(std::int64_t n) {
    Rational r = 1;
    for (std::int64_t i = 2; i <= n; ++i) r *= i;
    return r;
}

struct ExactSettlement {
    Rational gain;
    Rational fixed_deductions;
    Rational pools_fund;
};

// Rational mirror of settle(): same pool logic, no rounding to cents.
ExactSettlement settle_exact(const PrizeSchedule& schedule, const Rational& carryover,
                             const std::vector<std::int64_t>& crowd_counts,
                             std::int64_t crowd_tickets, const Rational& free_fraction) {
    const std::int64_t t = total_tickets(schedule.game);
    const Rational price(schedule.ticket_price.cents, 100);
    const Rational take(schedule.take);

    Rational betting = price * (Rational(t) + Rational(crowd_tickets) * (1 - free_fraction));
    Rational prize = (1 - take) * betting;
    Rational dab = 0;
    for (std::size_t i = 0; i < schedule.tiers.size(); ++i) {
        const auto& alloc = schedule.tiers[i].allocation;
        if (alloc.kind == AllocationKind::fixed_cash ||
            alloc.kind == AllocationKind::free_play) {
            dab += Rational(alloc.amount.cents, 100) *
                   (crowd_counts[i] + schedule.tier_size(schedule.tiers[i]));
        }
    }
    Rational fund = prize - dab;
    if (fund < 0) throw std::domain_error("fixed deductions exceed prize pool");

    const int jackpot = schedule.jackpot_tier_index();
    Rational syndicate_total = 0;
    for (std::size_t i = 0; i < schedule.tiers.size(); ++i) {
        const auto& tier = schedule.tiers[i];
        const std::int64_t size = schedule.tier_size(tier);
        switch (tier.allocation.kind) {
            case AllocationKind::pool_share: {
                Rational pool = Rational(tier.allocation.fraction) * fund;
                if (static_cast<int>(i) == jackpot) {
                    pool += carryover;
                    if (schedule.jackpot_guarantee) {
                        Rational floor(schedule.jackpot_guarantee->cents, 100);
                        if (pool < floor) pool = floor;
                    }
                }
                std::int64_t winners = crowd_counts[i] + size;
                if (winners > 0) syndicate_total += pool * size / winners;
                break;
            }
            case AllocationKind::fixed_cash:
                syndicate_total += Rational(tier.allocation.amount.cents, 100) * size;
                break;
            default:
                break;
        }
    }
    ExactSettlement result;
    result.gain = syndicate_total - price * t;
    result.fixed_deductions = dab;
    result.pools_fund = fund;
    return result;
}

}  // namespace

SmallExactResult simulate_small_exact(const PrizeSchedule& schedule,
                                      const Scenario& scenario) {
    require_valid(schedule);
    const std::int64_t t = total_tickets(schedule.game);
    const std::int64_t c = scenario.crowd_tickets;
    if (t > 300 || c > 6)
        throw std::domain_error("simulate_small_exact: needs total_tickets <= 300 and crowd <= 6");

    const std::size_t m = schedule.tiers.size();
    std::vector<Rational> tier_p(m);
    for (std::size_t i = 0; i < m; ++i)
        tier_p[i] = Rational(schedule.tier_size(schedule.tiers[i]), t);
    const Rational carryover(scenario.carryover.cents, 100);
    const Rational free_fraction(scenario.free_fraction);
    const Rational c_factorial = factorial_rational(c);

    SmallExactResult result{0, 0, 0};
    Rational total_weight = 0;
    std::vector<std::int64_t> counts(m, 0);

    // Enumerate every tier-count vector with sum c; the crowd's independent
    // equiprobable picks give it multinomial weight.
    auto visit = [&](auto&& self, std::size_t idx, std::int64_t left) -> void {
        if (idx + 1 == m) {
            counts[idx] = left;
            Rational weight = c_factorial;
            for (std::size_t i = 0; i < m; ++i) {
                weight /= factorial_rational(counts[i]);
                weight *= rational_pow(tier_p[i], counts[i]);
            }
            ExactSettlement settled =
                settle_exact(schedule, carryover, counts, c, free_fraction);
            result.expected_gain += weight * settled.gain;
            result.expected_fixed_deductions += weight * settled.fixed_deductions;
            result.expected_pools_fund += weight * settled.pools_fund;
            total_weight += weight;
            return;
        }
        for (std::int64_t n = 0; n <= left; ++n) {
            counts[idx] = n;
            self(self, idx + 1, left - n);
        }
    };
    visit(visit, 0, c);
    if (total_weight != 1)
        throw std::logic_error("simulate_small_exact: weights did not sum to 1");
    return result;
}

}  // namespace lotto
