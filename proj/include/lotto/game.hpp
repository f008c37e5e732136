#pragma once

#include <cstdint>
#include <vector>

namespace lotto {

// Pick-k-of-n game, optionally with a bonus ball drawn from the remaining
// numbers. The 6/49 is {49, 6, true}.
struct GameStructure {
    int field_size{49};
    int picks{6};
    bool has_bonus{true};
};

// Throws std::invalid_argument when 1 <= picks < field_size fails.
void validate_game(const GameStructure& game);

enum class BonusCondition { required, excluded, any };

// One outcome class: exactly `main_matches` of the drawn numbers plus the
// stated bonus condition. "4/6" is {4, any}; "2/6+" is {2, required}.
struct MatchSpec {
    int main_matches{0};
    BonusCondition bonus{BonusCondition::any};
    bool operator==(const MatchSpec&) const = default;
};

struct Ticket {
    std::vector<int> numbers;  // `picks` distinct values in [1, field_size]
};

struct Draw {
    std::vector<int> winning;  // `picks` distinct values
    int bonus{0};              // meaningful only when the game has a bonus
};

void validate_ticket(const GameStructure& game, const Ticket& t);
void validate_draw(const GameStructure& game, const Draw& d);

// Exact C(n, k); safe for the n <= 64 the library promises.
std::int64_t binomial(int n, int k);

std::int64_t total_tickets(const GameStructure& game);

// Number of tickets in the class, for any fixed draw. Infeasible specs
// (e.g. bonus required with no free slot) count zero rather than erroring.
std::int64_t tier_size(const GameStructure& game, const MatchSpec& spec);

double tier_probability(const GameStructure& game, const MatchSpec& spec);

}  // namespace lotto
