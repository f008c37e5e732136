#include "lotto/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lotto {

std::int64_t PrizeSchedule::tier_size(const PrizeTier& tier) const {
    std::int64_t total = 0;
    for (const auto& spec : tier.matches) total += lotto::tier_size(game, spec);
    return total;
}

double PrizeSchedule::tier_probability(const PrizeTier& tier) const {
    return static_cast<double>(tier_size(tier)) /
           static_cast<double>(total_tickets(game));
}

int PrizeSchedule::jackpot_tier_index() const {
    for (std::size_t i = 0; i < tiers.size(); ++i) {
        if (tiers[i].allocation.kind != AllocationKind::pool_share) continue;
        for (const auto& spec : tiers[i].matches)
            if (spec.main_matches == game.picks) return static_cast<int>(i);
    }
    return -1;
}

double PrizeSchedule::fixed_charge_per_ticket() const {
    double h = 0;
    for (const auto& tier : tiers) {
        if (tier.allocation.kind == AllocationKind::fixed_cash ||
            tier.allocation.kind == AllocationKind::free_play) {
            h += tier.allocation.amount.dollars() * tier_probability(tier);
        }
    }
    return h;
}

Money PrizeSchedule::syndicate_fixed_receipts() const {
    Money total{};
    for (const auto& tier : tiers)
        if (tier.allocation.kind == AllocationKind::fixed_cash)
            total += tier.allocation.amount * tier_size(tier);
    return total;
}

Money PrizeSchedule::syndicate_fixed_deduction() const {
    Money total{};
    for (const auto& tier : tiers) {
        if (tier.allocation.kind == AllocationKind::fixed_cash ||
            tier.allocation.kind == AllocationKind::free_play)
            total += tier.allocation.amount * tier_size(tier);
    }
    return total;
}

namespace {

// Atoms of the outcome space: (main matches, bonus held?). Games without a
// bonus only use the bonus=false row.
int atom_index(int m, bool bonus_held) { return 2 * m + (bonus_held ? 1 : 0); }

std::vector<int> covered_atoms(const GameStructure& game, const MatchSpec& spec) {
    std::vector<int> atoms;
    if (!game.has_bonus) {
        if (spec.bonus != BonusCondition::required)
            atoms.push_back(atom_index(spec.main_matches, false));
        return atoms;
    }
    if (spec.bonus != BonusCondition::excluded)
        atoms.push_back(atom_index(spec.main_matches, true));
    if (spec.bonus != BonusCondition::required)
        atoms.push_back(atom_index(spec.main_matches, false));
    return atoms;
}

std::int64_t atom_size(const GameStructure& game, int atom) {
    int m = atom / 2;
    bool bonus_held = atom % 2 == 1;
    if (!game.has_bonus)
        return bonus_held ? 0 : tier_size(game, {m, BonusCondition::any});
    return tier_size(game, {m, bonus_held ? BonusCondition::required
                                          : BonusCondition::excluded});
}

}  // namespace

std::vector<std::string> validate_schedule(const PrizeSchedule& schedule) {
    std::vector<std::string> violations;
    try {
        validate_game(schedule.game);
    } catch (const std::exception& e) {
        violations.emplace_back(e.what());
        return violations;
    }
    const auto& game = schedule.game;

    if (schedule.ticket_price.cents <= 0)
        violations.push_back("ticket price must be positive");
    if (!(schedule.take >= 0.0 && schedule.take < 1.0))
        violations.push_back("take must lie in [0, 1)");
    if (schedule.jackpot_guarantee && schedule.jackpot_guarantee->cents < 0)
        violations.push_back("jackpot guarantee must be non-negative");

    double share_sum = schedule.unallocated_share;
    std::map<int, std::vector<std::string>> coverage;
    for (const auto& tier : schedule.tiers) {
        const auto& alloc = tier.allocation;
        switch (alloc.kind) {
            case AllocationKind::fixed_cash:
                if (alloc.amount.cents < 0)
                    violations.push_back("tier '" + tier.name + "': negative fixed amount");
                break;
            case AllocationKind::free_play:
                if (alloc.amount.cents < 0)
                    violations.push_back("tier '" + tier.name + "': negative free-play deduction");
                break;
            case AllocationKind::pool_share:
                if (!(alloc.fraction > 0.0 && alloc.fraction <= 1.0))
                    violations.push_back("tier '" + tier.name + "': pool share outside (0,1]");
                share_sum += alloc.fraction;
                break;
            case AllocationKind::nothing:
                break;
        }
        for (const auto& spec : tier.matches) {
            if (spec.main_matches < 0 || spec.main_matches > game.picks)
                violations.push_back("tier '" + tier.name + "': main_matches out of range");
            if (!game.has_bonus && spec.bonus != BonusCondition::any)
                violations.push_back("tier '" + tier.name +
                                     "': bonus condition in a game without a bonus");
            for (int atom : covered_atoms(game, spec))
                coverage[atom].push_back(tier.name);
        }
    }

    bool pool_tiers_exist = share_sum > 0.0;
    if (pool_tiers_exist && std::abs(share_sum - 1.0) > 1e-12) {
        std::ostringstream os;
        os << "pool shares sum != 1 (got " << share_sum << ")";
        violations.push_back(os.str());
    }

    // Partition: every non-empty atom covered exactly once, none twice.
    for (const auto& [atom, names] : coverage) {
        if (names.size() > 1)
            violations.push_back("outcome class covered by multiple tiers: " +
                                 names[0] + ", " + names[1]);
    }
    std::int64_t covered_size = 0;
    for (int m = 0; m <= game.picks; ++m) {
        for (int b = 0; b <= 1; ++b) {
            int atom = atom_index(m, b == 1);
            std::int64_t size = atom_size(game, atom);
            if (size == 0) continue;
            if (!coverage.contains(atom)) {
                std::ostringstream os;
                os << "uncovered outcome class: " << m << " matches, bonus "
                   << (b ? "held" : "not held");
                violations.push_back(os.str());
            } else {
                covered_size += size;
            }
        }
    }
    if (covered_size != total_tickets(game) && violations.empty())
        violations.push_back("tier sizes do not sum to the ticket count");

    return violations;
}

void require_valid(const PrizeSchedule& schedule) {
    auto violations = validate_schedule(schedule);
    if (violations.empty()) return;
    std::string msg = "invalid schedule:";
    for (const auto& v : violations) msg += "\n  - " + v;
    throw std::invalid_argument(msg);
}

const PrizeTier& classify(const Ticket& ticket, const Draw& draw,
                          const PrizeSchedule& schedule) {
    const auto& game = schedule.game;
    validate_ticket(game, ticket);
    validate_draw(game, draw);
    int m = 0;
    for (int v : ticket.numbers)
        if (std::find(draw.winning.begin(), draw.winning.end(), v) != draw.winning.end())
            ++m;
    bool bonus_held =
        game.has_bonus &&
        std::find(ticket.numbers.begin(), ticket.numbers.end(), draw.bonus) !=
            ticket.numbers.end();
    for (const auto& tier : schedule.tiers) {
        for (const auto& spec : tier.matches) {
            if (spec.main_matches != m) continue;
            if (spec.bonus == BonusCondition::required && !bonus_held) continue;
            if (spec.bonus == BonusCondition::excluded && bonus_held) continue;
            return tier;
        }
    }
    throw std::invalid_argument("schedule tiers do not cover this outcome");
}

namespace {

using nlohmann::json;

BonusCondition bonus_from_string(const std::string& s) {
    if (s == "required") return BonusCondition::required;
    if (s == "excluded") return BonusCondition::excluded;
    if (s == "any") return BonusCondition::any;
    throw std::invalid_argument("rules: unknown bonus condition '" + s + "'");
}

std::string bonus_to_string(BonusCondition b) {
    switch (b) {
        case BonusCondition::required: return "required";
        case BonusCondition::excluded: return "excluded";
        case BonusCondition::any: return "any";
    }
    return "any";
}

Allocation allocation_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "fixed_cash")
        return Allocation::fixed_cash(Money::from_cents(j.at("value_cents").get<std::int64_t>()));
    if (kind == "pool_share")
        return Allocation::pool_share(j.at("fraction").get<double>());
    if (kind == "free_play")
        return Allocation::free_play(Money::from_cents(j.at("value_cents").get<std::int64_t>()));
    if (kind == "nothing") return Allocation::nothing();
    throw std::invalid_argument("rules: unknown allocation kind '" + kind + "'");
}

json allocation_to_json(const Allocation& a) {
    switch (a.kind) {
        case AllocationKind::fixed_cash:
            return {{"kind", "fixed_cash"}, {"value_cents", a.amount.cents}};
        case AllocationKind::pool_share:
            return {{"kind", "pool_share"}, {"fraction", a.fraction}};
        case AllocationKind::free_play:
            return {{"kind", "free_play"}, {"value_cents", a.amount.cents}};
        case AllocationKind::nothing:
            return {{"kind", "nothing"}};
    }
    return {{"kind", "nothing"}};
}

}  // namespace

PrizeSchedule parse_rules_json(const std::string& text) {
    json j = json::parse(text);
    PrizeSchedule s;
    const auto& g = j.at("game");
    s.game.field_size = g.at("field_size").get<int>();
    s.game.picks = g.at("picks").get<int>();
    s.game.has_bonus = g.at("has_bonus").get<bool>();
    s.ticket_price = Money::from_cents(j.at("ticket_price_cents").get<std::int64_t>());
    s.take = j.at("take").get<double>();
    if (j.contains("jackpot_guarantee_cents"))
        s.jackpot_guarantee = Money::from_cents(j.at("jackpot_guarantee_cents").get<std::int64_t>());
    if (j.contains("unallocated_share"))
        s.unallocated_share = j.at("unallocated_share").get<double>();
    for (const auto& tj : j.at("tiers")) {
        PrizeTier tier;
        tier.name = tj.at("name").get<std::string>();
        BonusCondition bonus = bonus_from_string(tj.value("bonus", "any"));
        const auto& mm = tj.at("main_matches");
        if (mm.is_array()) {
            for (const auto& v : mm) tier.matches.push_back({v.get<int>(), bonus});
        } else {
            tier.matches.push_back({mm.get<int>(), bonus});
        }
        tier.allocation = allocation_from_json(tj.at("allocation"));
        s.tiers.push_back(std::move(tier));
    }
    return s;
}

PrizeSchedule load_rules_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open rules file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_rules_json(buf.str());
}

std::string rules_to_json(const PrizeSchedule& s) {
    json j;
    j["game"] = {{"field_size", s.game.field_size},
                 {"picks", s.game.picks},
                 {"has_bonus", s.game.has_bonus}};
    j["ticket_price_cents"] = s.ticket_price.cents;
    j["take"] = s.take;
    if (s.jackpot_guarantee) j["jackpot_guarantee_cents"] = s.jackpot_guarantee->cents;
    if (s.unallocated_share != 0) j["unallocated_share"] = s.unallocated_share;
    j["tiers"] = json::array();
    for (const auto& tier : s.tiers) {
        json tj;
        tj["name"] = tier.name;
        if (tier.matches.size() == 1) {
            tj["main_matches"] = tier.matches[0].main_matches;
        } else {
            auto arr = json::array();
            for (const auto& spec : tier.matches) arr.push_back(spec.main_matches);
            tj["main_matches"] = arr;
        }
        tj["bonus"] = bonus_to_string(tier.matches.empty() ? BonusCondition::any
                                                           : tier.matches[0].bonus);
        tj["allocation"] = allocation_to_json(tier.allocation);
        j["tiers"].push_back(tj);
    }
    return j.dump(2) + "\n";
}

}  // namespace lotto
