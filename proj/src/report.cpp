#include "lotto/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

namespace lotto {

namespace {

std::string f2(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string join_csv(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line.push_back(',');
        line += cells[i];
    }
    line.push_back('\n');
    return line;
}

std::string render_grid(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows,
                        TableFormat format) {
    if (format == TableFormat::csv) {
        std::string out = join_csv(header);
        for (const auto& row : rows) out += join_csv(row);
        return out;
    }
    std::vector<std::size_t> widths(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) widths[i] = header[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) os << "  ";
            os << std::setw(static_cast<int>(widths[i])) << cells[i];
        }
        os << '\n';
    };
    emit(header);
    for (const auto& row : rows) emit(row);
    return os.str();
}

}  // namespace

std::string render_threshold_table(const std::vector<ThresholdTableRow>& rows,
                                   TableFormat format) {
    const std::vector<std::string> header = {
        "crowd_tickets_m", "crowd_bet_m",   "breakeven_m",
        "plus10_m",        "plus20_m",      "pools_fund_m",
        "breakeven_pct_gross_bet", "ev56_pct"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        cells.push_back({f2(r.crowd_tickets_m), f2(r.crowd_bet_m), f2(r.breakeven_m),
                         f2(r.plus10_m), f2(r.plus20_m), f2(r.pools_fund_m),
                         f2(r.breakeven_pct), f2(r.ev56_pct)});
    return render_grid(header, cells, format);
}

std::string render_pure_vs_lotto_table(const std::vector<PureVsLottoRow>& rows,
                                       TableFormat format) {
    const std::vector<std::string> header = {
        "crowd_tickets_m", "crowd_bet_m",
        "pure_breakeven_m", "pure_plus10_m", "pure_plus20_m",
        "lotto_breakeven_m", "lotto_plus10_m", "lotto_plus20_m"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows)
        cells.push_back({f2(r.crowd_tickets_m), f2(r.crowd_bet_m),
                         f2(r.pure_breakeven_m), f2(r.pure_plus10_m), f2(r.pure_plus20_m),
                         f2(r.lotto_breakeven_m), f2(r.lotto_plus10_m), f2(r.lotto_plus20_m)});
    return render_grid(header, cells, format);
}

std::string render_design_factor_table(const std::vector<DesignFactorRow>& rows,
                                       const std::vector<double>& gross_bets,
                                       TableFormat format) {
    std::vector<std::string> header = {"design_factor"};
    for (double g : gross_bets) header.push_back("bet_" + f2(g / 1e6) + "m");
    header.push_back("delta_first_m");
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
        std::vector<std::string> row = {r.design};
        for (double v : r.breakeven_m) row.push_back(f2(v));
        row.push_back(f2(r.delta_first_m));
        cells.push_back(std::move(row));
    }
    return render_grid(header, cells, format);
}

std::string render_settlement(const SettlementReport& report) {
    std::ostringstream os;
    os << "betting pool       " << format_dollars(report.breakdown.betting_pool) << '\n'
       << "prize pool         " << format_dollars(report.breakdown.prize_pool) << '\n'
       << "fixed deductions   " << format_dollars(report.breakdown.fixed_deductions) << '\n'
       << "pools fund         " << format_dollars(report.breakdown.pools_fund) << '\n'
       << "carryover in       " << format_dollars(report.carryover_in) << '\n';
    if (report.guarantee_topup.cents > 0)
        os << "guarantee top-up   " << format_dollars(report.guarantee_topup) << '\n';
    if (report.unallocated.cents != 0)
        os << "unallocated share  " << format_dollars(report.unallocated) << '\n';
    os << '\n'
       << std::left << std::setw(10) << "tier" << std::right << std::setw(12) << "crowd"
       << std::setw(16) << "crowd payout" << std::setw(12) << "syndicate"
       << std::setw(18) << "syndicate payout" << std::setw(18) << "per ticket" << '\n';
    for (const auto& t : report.tiers) {
        os << std::left << std::setw(10) << t.tier << std::right << std::setw(12)
           << t.crowd_count << std::setw(16) << format_dollars(t.crowd_payout)
           << std::setw(12) << t.syndicate_count << std::setw(18)
           << format_dollars(t.syndicate_payout) << std::setw(18)
           << format_dollars(t.per_ticket) << '\n';
    }
    os << '\n'
       << "syndicate free plays  " << report.syndicate_free_plays << '\n'
       << "crowd free plays      " << report.crowd_free_plays << '\n'
       << "syndicate total       " << format_dollars(report.syndicate_total) << '\n'
       << "cost of covering      " << format_dollars(report.cost) << '\n'
       << "syndicate gain        " << format_dollars(report.gain) << '\n';
    return os.str();
}

std::string render_expectation(const ExpectationReport& report) {
    std::ostringstream os;
    os << std::setprecision(10);
    os << "lambda (c/t)       " << report.lambda << '\n'
       << "mu (pools fund)    " << format_dollars(Money::from_dollars(report.mu)) << '\n'
       << "nu (bonus factor)  " << report.nu << '\n'
       << "jackpot term       " << format_dollars(Money::from_dollars(report.jackpot_term)) << '\n'
       << "small-pool term    " << format_dollars(Money::from_dollars(report.small_pool_term)) << '\n'
       << "fair-split term    " << format_dollars(Money::from_dollars(report.fair_split_term)) << '\n'
       << "fixed receipts     " << format_dollars(Money::from_dollars(report.fixed_term)) << '\n'
       << "cost of covering   " << format_dollars(Money::from_dollars(report.cost)) << '\n'
       << "expected gain      " << format_dollars(Money::from_dollars(report.expected_gain)) << '\n';
    return os.str();
}

std::string render_simulation(const SimulationResult& result) {
    std::ostringstream os;
    os << "trials          " << result.trials << '\n'
       << "mean gain       " << format_dollars(Money::from_dollars(result.mean_gain)) << '\n'
       << "standard error  " << format_dollars(Money::from_dollars(result.std_error)) << '\n';
    os << "tier mean syndicate payouts\n";
    for (const auto& [tier, payout] : result.tier_mean_payouts)
        os << "  " << std::left << std::setw(10) << tier << std::right
           << format_dollars(Money::from_dollars(payout)) << '\n';
    return os.str();
}

}  // namespace lotto
