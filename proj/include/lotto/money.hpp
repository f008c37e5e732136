#pragma once

#include <cstdint>
#include <string>

namespace lotto {

// Exact money amount in integer cents. All settlement arithmetic stays in
// cents; statistical expectations are carried as double dollars instead.
struct Money {
    std::int64_t cents{0};

    static constexpr Money from_cents(std::int64_t c) { return Money{c}; }
    static Money from_dollars(double d);  // rounds half-even to the cent

    double dollars() const { return static_cast<double>(cents) / 100.0; }
    double millions() const { return static_cast<double>(cents) / 100.0e6; }

    constexpr Money operator+(Money o) const { return Money{cents + o.cents}; }
    constexpr Money operator-(Money o) const { return Money{cents - o.cents}; }
    constexpr Money operator-() const { return Money{-cents}; }
    constexpr Money operator*(std::int64_t k) const { return Money{cents * k}; }
    Money& operator+=(Money o) { cents += o.cents; return *this; }
    Money& operator-=(Money o) { cents -= o.cents; return *this; }
    auto operator<=>(const Money&) const = default;
};

// (count * pool) / total in exact integer arithmetic, rounded half-even.
// Used for per-capita splits; the intermediate product would overflow int64.
std::int64_t muldiv_round_half_even(std::int64_t count, std::int64_t pool,
                                    std::int64_t total);

// Nearest integer with ties to even; input is a value already in cents.
std::int64_t round_cents_half_even(double value_cents);

std::string format_dollars(Money m);   // "$1,234,567.89", "-$0.05"
std::string format_millions(Money m);  // "41.95"

}  // namespace lotto
