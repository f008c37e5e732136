#include "lotto/game.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace lotto {

void validate_game(const GameStructure& game) {
    if (game.picks < 1 || game.picks > game.field_size)
        throw std::invalid_argument("game: need 1 <= picks <= field_size");
    if (game.has_bonus && game.picks == game.field_size)
        throw std::invalid_argument("game: the bonus ball needs a number outside the picks");
    if (game.field_size > 64)
        throw std::invalid_argument("game: field_size > 64 not supported");
}

void validate_ticket(const GameStructure& game, const Ticket& t) {
    if (static_cast<int>(t.numbers.size()) != game.picks)
        throw std::invalid_argument("ticket: wrong number of picks");
    std::set<int> seen;
    for (int v : t.numbers) {
        if (v < 1 || v > game.field_size)
            throw std::invalid_argument("ticket: number out of range");
        if (!seen.insert(v).second)
            throw std::invalid_argument("ticket: duplicate number");
    }
}

void validate_draw(const GameStructure& game, const Draw& d) {
    Ticket as_ticket{d.winning};
    validate_ticket(game, as_ticket);
    if (game.has_bonus) {
        if (d.bonus < 1 || d.bonus > game.field_size)
            throw std::invalid_argument("draw: bonus out of range");
        if (std::find(d.winning.begin(), d.winning.end(), d.bonus) != d.winning.end())
            throw std::invalid_argument("draw: bonus among winning numbers");
    }
}

std::int64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact: product of i consecutive ints is divisible by i!
    }
    return static_cast<std::int64_t>(r);
}

std::int64_t total_tickets(const GameStructure& game) {
    validate_game(game);
    return binomial(game.field_size, game.picks);
}

std::int64_t tier_size(const GameStructure& game, const MatchSpec& spec) {
    const int n = game.field_size, k = game.picks, m = spec.main_matches;
    if (m < 0 || m > k) return 0;
    if (!game.has_bonus) {
        if (spec.bonus == BonusCondition::required) return 0;
        return binomial(k, m) * binomial(n - k, k - m);
    }
    switch (spec.bonus) {
        case BonusCondition::required:
            return binomial(k, m) * binomial(n - k - 1, k - m - 1);
        case BonusCondition::excluded:
            return binomial(k, m) * binomial(n - k - 1, k - m);
        case BonusCondition::any:
            return binomial(k, m) * binomial(n - k, k - m);
    }
    return 0;
}

double tier_probability(const GameStructure& game, const MatchSpec& spec) {
    return static_cast<double>(tier_size(game, spec)) /
           static_cast<double>(total_tickets(game));
}

}  // namespace lotto
