#pragma once

#include <string>
#include <vector>

#include "lotto/expectation.hpp"
#include "lotto/montecarlo.hpp"
#include "lotto/pools.hpp"
#include "lotto/thresholds.hpp"

namespace lotto {

enum class TableFormat { csv, text };

// Table emitters. CSV: fixed column order, 2 decimals for $M and % columns,
// LF line endings. Text: aligned columns for reading at the terminal.
std::string render_threshold_table(const std::vector<ThresholdTableRow>& rows,
                                   TableFormat format);
std::string render_pure_vs_lotto_table(const std::vector<PureVsLottoRow>& rows,
                                       TableFormat format);
std::string render_design_factor_table(const std::vector<DesignFactorRow>& rows,
                                       const std::vector<double>& gross_bets,
                                       TableFormat format);

std::string render_settlement(const SettlementReport& report);
std::string render_expectation(const ExpectationReport& report);
std::string render_simulation(const SimulationResult& result);

}  // namespace lotto
