#include "lotto/money.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace lotto {

Money Money::from_dollars(double d) {
    return Money{round_cents_half_even(d * 100.0)};
}

std::int64_t round_cents_half_even(double value_cents) {
    // std::nearbyint honors the default FE_TONEAREST mode: ties to even.
    return static_cast<std::int64_t>(std::nearbyint(value_cents));
}

std::int64_t muldiv_round_half_even(std::int64_t count, std::int64_t pool,
                                    std::int64_t total) {
    if (total <= 0) throw std::domain_error("muldiv: non-positive divisor");
    if (count < 0) return -muldiv_round_half_even(-count, pool, total);
    __int128 num = static_cast<__int128>(count) * pool;
    __int128 q = num / total;
    __int128 r = num % total;
    __int128 twice = 2 * r;
    if (twice > total || (twice == total && (q & 1) != 0)) ++q;
    return static_cast<std::int64_t>(q);
}

namespace {

std::string group_thousands(std::int64_t v) {
    std::string digits = std::to_string(v);
    std::string out;
    int n = static_cast<int>(digits.size());
    for (int i = 0; i < n; ++i) {
        if (i > 0 && (n - i) % 3 == 0) out.push_back(',');
        out.push_back(digits[i]);
    }
    return out;
}

}  // namespace

std::string format_dollars(Money m) {
    std::int64_t c = m.cents;
    std::string sign = c < 0 ? "-" : "";
    if (c < 0) c = -c;
    char frac[8];
    std::snprintf(frac, sizeof frac, "%02lld", static_cast<long long>(c % 100));
    return sign + "$" + group_thousands(c / 100) + "." + frac;
}

std::string format_millions(Money m) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", m.millions());
    return buf;
}

}  // namespace lotto
