#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "lotto/game.hpp"
#include "lotto/rng.hpp"
#include "lotto/schedule.hpp"
#include "test_util.hpp"

using namespace lotto;
using lotto::test::all_subsets;

namespace {

// Small 3-of-8 game with a bonus ball, tiers mirroring the 6/49 shape.
PrizeSchedule mini_schedule() {
    PrizeSchedule s;
    s.game = {8, 3, true};
    s.ticket_price = Money::from_cents(100);
    s.take = 0.25;
    s.tiers = {
        {"3/3", {{3, BonusCondition::any}}, Allocation::pool_share(0.70)},
        {"2/3+", {{2, BonusCondition::required}}, Allocation::pool_share(0.30)},
        {"2/3-", {{2, BonusCondition::excluded}}, Allocation::fixed_cash(Money::from_cents(200))},
        {"lose", {{0, BonusCondition::any}, {1, BonusCondition::any}}, Allocation::nothing()},
    };
    return s;
}

int intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
    int n = 0;
    for (int v : a)
        if (std::find(b.begin(), b.end(), v) != b.end()) ++n;
    return n;
}

}  // namespace

TEST_CASE("total_tickets") {
    CHECK(total_tickets({49, 6, true}) == 13'983'816);
    CHECK(total_tickets({7, 7, false}) == 1);  // only one ticket exists
    // brute-force enumeration of all 3-subsets of 10
    CHECK(total_tickets({10, 3, false}) ==
          static_cast<std::int64_t>(all_subsets(10, 3).size()));
    CHECK(total_tickets({10, 3, false}) == 120);
    CHECK_THROWS_AS(total_tickets({5, 6, false}), std::invalid_argument);
    CHECK_THROWS_AS(total_tickets({5, 0, false}), std::invalid_argument);
    // a bonus ball needs a number left over
    CHECK_THROWS_AS(total_tickets({5, 5, true}), std::invalid_argument);
}

TEST_CASE("tier sizes match the published schedule") {
    GameStructure game{49, 6, true};
    CHECK(tier_size(game, {4, BonusCondition::any}) == 13'545);
    CHECK(tier_size(game, {2, BonusCondition::excluded}) == 1'678'950);
    CHECK(tier_size(game, {6, BonusCondition::any}) == 1);
    CHECK(tier_size(game, {5, BonusCondition::required}) == 6);
    CHECK(tier_size(game, {5, BonusCondition::excluded}) == 252);
    CHECK(tier_size(game, {3, BonusCondition::any}) == 246'820);
    CHECK(tier_size(game, {2, BonusCondition::required}) == 172'200);
    // infeasible: all picks match, no slot left for the bonus
    CHECK(tier_size(game, {6, BonusCondition::required}) == 0);
}

TEST_CASE("tier sizes sum to the ticket count") {
    auto schedule = lotto::test::rules_2013();
    std::int64_t sum = 0;
    for (const auto& tier : schedule.tiers) sum += schedule.tier_size(tier);
    CHECK(sum == 13'983'816);
    CHECK(schedule.tier_size(schedule.tiers.back()) == 11'872'042);  // no-win
}

TEST_CASE("tier probabilities") {
    auto schedule = lotto::test::rules_2013();
    std::map<std::string, double> p;
    double total = 0;
    for (const auto& tier : schedule.tiers) {
        p[tier.name] = schedule.tier_probability(tier);
        total += p[tier.name];
    }
    CHECK(std::abs(p["3/6"] - 0.017650) < 5e-7);
    CHECK(std::abs(p["2/6-"] - 0.120064) < 5e-7);
    CHECK(std::abs(p["no-win"] - 0.848984) < 5e-7);
    CHECK(std::abs(total - 1.0) < 1e-12);
}

TEST_CASE("classify: worked example draw") {
    auto schedule = lotto::test::rules_2013();
    Draw draw{{46, 13, 4, 21, 38, 25}, 43};
    CHECK(classify({{1, 4, 20, 21, 32, 43}}, draw, schedule).name == "2/6+");
    CHECK(classify({{4, 13, 21, 25, 43, 46}}, draw, schedule).name == "5/6+");
    CHECK(classify({{4, 13, 21, 25, 38, 46}}, draw, schedule).name == "6/6");
    CHECK(classify({{1, 2, 3, 5, 6, 7}}, draw, schedule).name == "no-win");
}

TEST_CASE("validate_schedule") {
    auto schedule = lotto::test::rules_2013();
    CHECK(validate_schedule(schedule).empty());

    auto schedule82 = lotto::test::rules_1982();
    CHECK(validate_schedule(schedule82).empty());
    CHECK(schedule82.take == doctest::Approx(0.55));
    CHECK(schedule82.ticket_price.cents == 100);
    CHECK(schedule82.tier_size(schedule82.tiers.back()) == 13'723'192);  // 1982 no-win

    SUBCASE("pool shares must sum to one") {
        auto broken = schedule;
        for (auto& tier : broken.tiers)
            if (tier.name == "4/6") tier.allocation.fraction = 0.10;  // 0.795+0.06+0.05+0.10
        auto violations = validate_schedule(broken);
        REQUIRE(!violations.empty());
        bool found = false;
        for (const auto& v : violations)
            if (v.find("pool shares sum != 1") != std::string::npos) found = true;
        CHECK(found);
    }
    SUBCASE("uncovered outcome") {
        auto broken = schedule;
        broken.tiers.pop_back();  // drop no-win
        CHECK(!validate_schedule(broken).empty());
    }
    SUBCASE("doubly covered outcome") {
        auto broken = schedule;
        broken.tiers.push_back({"extra", {{4, BonusCondition::any}}, Allocation::nothing()});
        auto violations = validate_schedule(broken);
        bool found = false;
        for (const auto& v : violations)
            if (v.find("multiple tiers") != std::string::npos) found = true;
        CHECK(found);
    }
    SUBCASE("negative fixed amount") {
        auto broken = schedule;
        for (auto& tier : broken.tiers)
            if (tier.name == "3/6") tier.allocation.amount = Money::from_cents(-1);
        CHECK(!validate_schedule(broken).empty());
    }
}

TEST_CASE("rules files round-trip through JSON") {
    auto schedule = lotto::test::rules_2013();
    auto reparsed = parse_rules_json(rules_to_json(schedule));
    CHECK(validate_schedule(reparsed).empty());
    CHECK(reparsed.tiers.size() == schedule.tiers.size());
    CHECK(reparsed.take == schedule.take);
    CHECK(reparsed.ticket_price == schedule.ticket_price);
    REQUIRE(reparsed.jackpot_guarantee.has_value());
    CHECK(reparsed.jackpot_guarantee->cents == 500'000'000);
    for (std::size_t i = 0; i < schedule.tiers.size(); ++i)
        CHECK(reparsed.tier_size(reparsed.tiers[i]) == schedule.tier_size(schedule.tiers[i]));
}

TEST_CASE("small game: classify agrees with set-intersection counting") {
    auto schedule = mini_schedule();
    REQUIRE(validate_schedule(schedule).empty());
    const auto tickets = all_subsets(8, 3);
    REQUIRE(static_cast<std::int64_t>(tickets.size()) == total_tickets(schedule.game));

    // Every ticket/draw pair: classify == brute-force intersection counting.
    // Also count tier frequencies over all draws for a fixed ticket; they
    // must equal tier_size/total exactly (integer cross-multiplication).
    const auto& ticket0 = tickets.front();
    std::map<std::string, std::int64_t> freq;
    std::int64_t draws = 0;
    for (const auto& winning : tickets) {
        for (int bonus = 1; bonus <= 8; ++bonus) {
            if (std::find(winning.begin(), winning.end(), bonus) != winning.end()) continue;
            Draw draw{winning, bonus};
            ++draws;
            for (const auto& ticket : {ticket0, tickets[17], tickets[42]}) {
                int m = intersection_size(ticket, winning);
                bool bonus_held = std::find(ticket.begin(), ticket.end(), bonus) != ticket.end();
                const auto& tier = classify({ticket}, draw, schedule);
                bool expect_23plus = m == 2 && bonus_held;
                bool expect_23minus = m == 2 && !bonus_held;
                if (m == 3) CHECK(tier.name == "3/3");
                if (expect_23plus) CHECK(tier.name == "2/3+");
                if (expect_23minus) CHECK(tier.name == "2/3-");
                if (m <= 1) CHECK(tier.name == "lose");
            }
            freq[classify({ticket0}, draw, schedule).name]++;
        }
    }
    const std::int64_t t = total_tickets(schedule.game);
    for (const auto& tier : schedule.tiers) {
        // freq/draws == size/t, cross-multiplied to stay exact
        CHECK(freq[tier.name] * t == schedule.tier_size(tier) * draws);
    }
}

TEST_CASE("tier_size does not depend on the draw") {
    auto schedule = mini_schedule();
    const auto tickets = all_subsets(8, 3);
    SplitMix64 rng(20240901);
    for (int trial = 0; trial < 100; ++trial) {
        // random draw: shuffle 1..8, first three winning, fourth the bonus
        std::vector<int> nums{1, 2, 3, 4, 5, 6, 7, 8};
        for (std::size_t i = nums.size(); i > 1; --i)
            std::swap(nums[i - 1], nums[rng.next() % i]);
        Draw draw{{nums[0], nums[1], nums[2]}, nums[3]};
        std::map<std::string, std::int64_t> counts;
        for (const auto& ticket : tickets)
            counts[classify({ticket}, draw, schedule).name]++;
        for (const auto& tier : schedule.tiers)
            CHECK(counts[tier.name] == schedule.tier_size(tier));
    }
}

TEST_CASE("ticket and draw validation") {
    GameStructure game{49, 6, true};
    CHECK_THROWS_AS(validate_ticket(game, {{1, 2, 3, 4, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_ticket(game, {{1, 2, 3, 4, 5, 5}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_ticket(game, {{0, 2, 3, 4, 5, 6}}), std::invalid_argument);
    CHECK_THROWS_AS(validate_draw(game, {{1, 2, 3, 4, 5, 6}, 6}), std::invalid_argument);
    CHECK_NOTHROW(validate_draw(game, {{1, 2, 3, 4, 5, 6}, 7}));
}
