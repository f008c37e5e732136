#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "lotto/crowd.hpp"
#include "lotto/money.hpp"
#include "lotto/pools.hpp"
#include "lotto/rng.hpp"
#include "lotto/schedule.hpp"

namespace lotto {

// One fully specified betting situation, loadable from a scenario file.
struct Scenario {
    Money carryover;
    std::int64_t crowd_tickets{0};
    double free_fraction{0};
    enum class OutcomeKind { explicit_counts, expected, sample };
    OutcomeKind outcome_kind{OutcomeKind::expected};
    CrowdOutcome counts;  // for explicit_counts

    // Resolves the outcome for deterministic settlement; `sample` draws once
    // from the given stream.
    CrowdOutcome resolve_outcome(const PrizeSchedule& schedule, SplitMix64& rng) const;
};

Scenario load_scenario_file(const std::string& path);
Scenario parse_scenario_json(const std::string& text);

// Binomial(n, p) deviate by inverse CDF walked outward from the mode.
// Deterministic for a given stream state; expected O(sqrt(n p (1-p))) steps.
std::int64_t sample_binomial(SplitMix64& rng, std::int64_t n, double p);

// N ~ Multinomial(c, tier probabilities) via sequential conditional
// binomials in schedule tier order. Counts sum to c exactly.
CrowdOutcome sample_crowd_outcome(const PrizeSchedule& schedule, std::int64_t crowd_tickets,
                                  SplitMix64& rng);

struct SimulationConfig {
    std::int64_t trials{10'000};
    std::uint64_t seed{1};
    int partitions{64};   // trials are split across this many RNG streams
    bool parallel{true};  // OpenMP over partitions; results identical either way
};

struct SimulationResult {
    double mean_gain{0};   // dollars
    double std_error{0};   // sample stddev / sqrt(trials)
    std::int64_t trials{0};
    std::map<std::string, double> tier_mean_payouts;  // syndicate, dollars
};

// Stochastic oracle: sample crowd outcomes, settle each, aggregate the
// syndicate's gain. Bit-identical for fixed (seed, trials, partitions)
// regardless of thread count; the serial entry point reuses the same
// partition streams and must produce the same result.
SimulationResult simulate_gain(const PrizeSchedule& schedule, const Scenario& scenario,
                               const SimulationConfig& config);
SimulationResult simulate_gain_serial(const PrizeSchedule& schedule,
                                      const Scenario& scenario,
                                      const SimulationConfig& config);

struct JackpotPayoutResult {
    double mean{0};       // dollars
    double std_error{0};
    std::int64_t trials{0};
};

// Crude proportional-fixed-payouts crowd model: the crowd's fixed payouts
// scale with t * q_w of the winning ticket, and the crowd holds
// Bin(c, q_w) jackpot winners. Only used to cross-check the syndicate's
// jackpot lower bound against non-equiprobable betting.
JackpotPayoutResult simulate_jackpot_payout_proportional(
    const PrizeSchedule& schedule, Money carryover, std::int64_t crowd_tickets,
    double free_fraction, const CrowdWeights& weights, const SimulationConfig& config);

struct SmallExactResult {
    Rational expected_gain;              // dollars
    Rational expected_fixed_deductions;  // dollars, crowd and syndicate
    Rational expected_pools_fund;        // dollars
};

// Exact expectation by enumerating every crowd tier-count configuration with
// rational weights, settled without rounding. Requires total_tickets <= 300
// and crowd <= 6.
SmallExactResult simulate_small_exact(const PrizeSchedule& schedule,
                                      const Scenario& scenario);

}  // namespace lotto
