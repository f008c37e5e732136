#include "lotto/cli.hpp"

#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "lotto/crowd.hpp"
#include "lotto/expectation.hpp"
#include "lotto/montecarlo.hpp"
#include "lotto/pools.hpp"
#include "lotto/report.hpp"
#include "lotto/schedule.hpp"
#include "lotto/thresholds.hpp"

namespace lotto::cli {

namespace {

std::vector<double> default_table5_grid() {
    std::vector<double> grid;
    for (int k = 1; k <= 10; ++k) grid.push_back(k * 10e6 / 3.0);
    return grid;
}

std::vector<double> default_table7_grid() {
    return {20e6, 40e6, 60e6, 80e6, 100e6};
}

TableFormat parse_format(const std::string& name) {
    if (name == "csv") return TableFormat::csv;
    if (name == "text") return TableFormat::text;
    throw CLI::ValidationError("--format", "expected csv or text");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jackpot-sharing lottery analyzer: pot-buying expected values,"
                 " carryover thresholds, settlements, and Monte Carlo checks"};
    app.require_subcommand(1);
    // lets `--rules` appear after the subcommand name as well as before it
    app.fallthrough();

    std::string rules_path = "rules/649_2013.json";
    app.add_option("--rules", rules_path, "Rules file (JSON)")->capture_default_str();

    // validate
    auto* validate_cmd = app.add_subcommand("validate", "Check a rules file");
    std::string validate_path;
    validate_cmd->add_option("rules", validate_path, "Rules file to check")->required();

    // ev
    auto* ev_cmd = app.add_subcommand("ev", "Expected gain from buying the pot");
    double ev_carryover = 0, ev_crowd = 0, ev_free = 0;
    ev_cmd->add_option("--carryover", ev_carryover, "Carryover, dollars")->required();
    ev_cmd->add_option("--crowd-tickets", ev_crowd, "Crowd tickets")->required();
    ev_cmd->add_option("--free-frac", ev_free, "Fraction of crowd tickets that are free plays");

    // threshold
    auto* th_cmd = app.add_subcommand("threshold", "Carryover thresholds for target returns");
    double th_crowd = 0, th_free = 0;
    std::vector<double> th_targets = {0.0, 0.10, 0.20};
    bool th_pure = false;
    th_cmd->add_option("--crowd-tickets", th_crowd, "Crowd tickets")->required();
    th_cmd->add_option("--free-frac", th_free, "Free-play fraction");
    th_cmd->add_option("--targets", th_targets, "Target returns, e.g. 0,0.10,0.20")->delimiter(',');
    th_cmd->add_flag("--pure", th_pure, "Use the pure-jackpot model");

    // tables
    auto* tables_cmd = app.add_subcommand("tables", "Regenerate the threshold tables");
    int which_table = 5;
    std::string format_name = "text";
    tables_cmd->add_option("--which", which_table, "5 = thresholds, 6 = pure vs lotto, 7 = design factors")
        ->check(CLI::IsMember({5, 6, 7}))
        ->required();
    tables_cmd->add_option("--format", format_name, "csv or text")->capture_default_str();

    // settle
    auto* settle_cmd = app.add_subcommand("settle", "Settle a fully specified outcome");
    std::string settle_scenario;
    std::uint64_t settle_seed = 1;
    settle_cmd->add_option("--scenario", settle_scenario, "Scenario file (JSON)")->required();
    settle_cmd->add_option("--seed", settle_seed, "Seed when the scenario says \"sample\"");

    // simulate
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo estimate of the gain");
    std::string sim_scenario;
    std::int64_t sim_trials = 10'000;
    std::uint64_t sim_seed = 1;
    int sim_partitions = 64;
    bool sim_serial = false;
    sim_cmd->add_option("--scenario", sim_scenario, "Scenario file (JSON)")->required();
    sim_cmd->add_option("--trials", sim_trials, "Trials")->capture_default_str();
    sim_cmd->add_option("--seed", sim_seed, "RNG seed")->capture_default_str();
    sim_cmd->add_option("--partitions", sim_partitions, "RNG stream count")->capture_default_str();
    sim_cmd->add_flag("--serial", sim_serial, "Run the serial reference kernel");

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Non-equiprobable crowd bounds");
    double b_carryover = 0, b_crowd = 0, b_free = 0;
    bounds_cmd->add_option("--carryover", b_carryover, "Carryover, dollars")->required();
    bounds_cmd->add_option("--crowd-tickets", b_crowd, "Crowd tickets")->required();
    bounds_cmd->add_option("--free-frac", b_free, "Free-play fraction");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << '\n';
        return 2;
    }

    try {
        if (*validate_cmd) {
            PrizeSchedule schedule = load_rules_file(validate_path);
            auto violations = validate_schedule(schedule);
            if (violations.empty()) {
                out << "valid\n";
                return 0;
            }
            for (const auto& v : violations) out << v << '\n';
            return 1;
        }

        PrizeSchedule schedule = load_rules_file(rules_path);

        if (*ev_cmd) {
            auto report = expected_gain(schedule, Money::from_dollars(ev_carryover),
                                        ev_crowd, ev_free);
            out << render_expectation(report);
        } else if (*th_cmd) {
            for (double target : th_targets) {
                Money a = th_pure
                              ? solve_carryover_pure(total_tickets(schedule.game), th_crowd,
                                                     th_free, schedule.take,
                                                     schedule.ticket_price, target)
                              : solve_carryover({schedule, th_crowd, th_free, target});
                out << "target " << target << "  carryover " << format_dollars(a) << '\n';
            }
        } else if (*tables_cmd) {
            TableFormat format = parse_format(format_name);
            if (which_table == 5) {
                out << render_threshold_table(
                    threshold_table(schedule, 0.10, default_table5_grid()), format);
            } else if (which_table == 6) {
                out << render_pure_vs_lotto_table(
                    pure_vs_lotto_table(schedule, 0.10, default_table5_grid()), format);
            } else {
                auto grid = default_table7_grid();
                out << render_design_factor_table(
                    design_factor_table(schedule, 0.10, grid), grid, format);
            }
        } else if (*settle_cmd) {
            Scenario scenario = load_scenario_file(settle_scenario);
            SplitMix64 rng(derive_stream(settle_seed, 0));
            CrowdOutcome outcome = scenario.resolve_outcome(schedule, rng);
            out << render_settlement(settle(schedule, scenario.carryover,
                                            scenario.crowd_tickets,
                                            scenario.free_fraction, outcome));
        } else if (*sim_cmd) {
            Scenario scenario = load_scenario_file(sim_scenario);
            SimulationConfig config{sim_trials, sim_seed, sim_partitions, !sim_serial};
            out << render_simulation(simulate_gain(schedule, scenario, config));
        } else if (*bounds_cmd) {
            double bound = syndicate_jackpot_lower_bound(
                schedule, Money::from_dollars(b_carryover), b_crowd, b_free);
            out << "jackpot payout lower bound  "
                << format_dollars(Money::from_dollars(bound)) << '\n';
            const std::int64_t t = total_tickets(schedule.game);
            struct Named {
                const char* name;
                CrowdWeights weights;
            };
            const Named samples[] = {
                {"uniform", CrowdWeights::uniform(t)},
                {"single-hot 1%", CrowdWeights::single_hot(t, 0.01)},
                {"two-block 1000/50%", CrowdWeights::two_block(t, 1000, 0.50)},
            };
            out << "jensen check (crowd fixed-payout bound, lhs <= rhs)\n";
            for (const auto& s : samples) {
                auto check = jensen_check(schedule, s.weights, b_crowd);
                out << "  " << s.name << ": lhs "
                    << format_dollars(Money::from_dollars(check.lhs)) << "  rhs "
                    << format_dollars(Money::from_dollars(check.rhs)) << '\n';
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace lotto::cli
