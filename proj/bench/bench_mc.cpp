// Compares the serial reference kernel against the OpenMP one on the
// simulation workload and the threshold grid.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lotto/montecarlo.hpp"
#include "lotto/schedule.hpp"
#include "lotto/thresholds.hpp"

using namespace lotto;

namespace {

template <typename F>
double seconds(F&& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string rules = argc > 1 ? argv[1] : "rules/649_2013.json";
    auto schedule = load_rules_file(rules);

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both kernels run serially\n");
#endif

    Scenario scenario;
    scenario.carryover = Money::from_dollars(36.92e6);
    scenario.crowd_tickets = 10'000'000;
    scenario.free_fraction = 0.10;
    SimulationConfig config{20'000, 1, 64, true};

    SimulationResult parallel_result, serial_result;
    double warm = seconds([&] { parallel_result = simulate_gain(schedule, scenario, config); });
    double par = seconds([&] { parallel_result = simulate_gain(schedule, scenario, config); });
    double ser = seconds([&] { serial_result = simulate_gain_serial(schedule, scenario, config); });

    std::printf("simulate_gain, %lld trials, %d partitions\n",
                static_cast<long long>(config.trials), config.partitions);
    std::printf("  warmup    %.3fs\n", warm);
    std::printf("  parallel  %.3fs\n", par);
    std::printf("  serial    %.3fs\n", ser);
    std::printf("  speedup   %.2fx\n", ser / par);
    std::printf("  identical %s (mean %.6f, se %.6f)\n",
                parallel_result.mean_gain == serial_result.mean_gain &&
                        parallel_result.std_error == serial_result.std_error
                    ? "yes"
                    : "NO",
                parallel_result.mean_gain, parallel_result.std_error);

    std::vector<double> grid;
    for (int k = 1; k <= 10; ++k) grid.push_back(k * 10e6 / 3.0);
    std::vector<ThresholdTableRow> rows;
    double table = seconds([&] { rows = threshold_table(schedule, 0.10, grid); });
    std::printf("threshold_table, %zu rows: %.3fs\n", rows.size(), table);
    return 0;
}
