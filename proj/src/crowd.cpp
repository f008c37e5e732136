#include "lotto/crowd.hpp"

#include <cmath>
#include <stdexcept>

#include "lotto/expectation.hpp"

namespace lotto {

CrowdWeights CrowdWeights::uniform(std::int64_t tickets) {
    CrowdWeights w;
    w.kind_ = Kind::uniform;
    w.tickets_ = tickets;
    return w;
}

CrowdWeights CrowdWeights::single_hot(std::int64_t tickets, double hot_mass) {
    return two_block(tickets, 1, hot_mass);
}

CrowdWeights CrowdWeights::two_block(std::int64_t tickets, std::int64_t hot,
                                     double hot_mass) {
    if (hot < 0 || hot > tickets || !(hot_mass >= 0.0 && hot_mass <= 1.0))
        throw std::domain_error("crowd weights: bad two-block parameters");
    CrowdWeights w;
    w.kind_ = Kind::two_block;
    w.tickets_ = tickets;
    w.hot_ = hot;
    w.hot_mass_ = hot_mass;
    return w;
}

CrowdWeights CrowdWeights::explicit_weights(std::vector<double> weights) {
    double sum = 0;
    for (double v : weights) {
        if (v < 0) throw std::domain_error("crowd weights: negative entry");
        sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::domain_error("crowd weights: entries must sum to 1");
    CrowdWeights w;
    w.kind_ = Kind::explicit_vector;
    w.tickets_ = static_cast<std::int64_t>(weights.size());
    w.weights_ = std::move(weights);
    return w;
}

bool CrowdWeights::is_uniform() const {
    switch (kind_) {
        case Kind::uniform: return true;
        case Kind::two_block:
            return std::abs(hot_mass_ - static_cast<double>(hot_) /
                                            static_cast<double>(tickets_)) < 1e-15;
        case Kind::explicit_vector: {
            double u = 1.0 / static_cast<double>(tickets_);
            for (double v : weights_)
                if (std::abs(v - u) > 1e-15) return false;
            return true;
        }
    }
    return false;
}

double CrowdWeights::sum_one_minus_exp(double c) const {
    auto term = [c](double q) { return -std::expm1(-c * q); };
    switch (kind_) {
        case Kind::uniform:
            return static_cast<double>(tickets_) *
                   term(1.0 / static_cast<double>(tickets_));
        case Kind::two_block: {
            double cold_mass = 1.0 - hot_mass_;
            std::int64_t cold = tickets_ - hot_;
            double sum = 0;
            if (hot_ > 0) sum += static_cast<double>(hot_) *
                                 term(hot_mass_ / static_cast<double>(hot_));
            if (cold > 0) sum += static_cast<double>(cold) *
                                 term(cold_mass / static_cast<double>(cold));
            return sum;
        }
        case Kind::explicit_vector: {
            double sum = 0;
            for (double q : weights_) sum += term(q);
            return sum;
        }
    }
    return 0;
}

double CrowdWeights::sample_weight(std::uint64_t uniform_draw) const {
    const std::int64_t i =
        static_cast<std::int64_t>(uniform_draw % static_cast<std::uint64_t>(tickets_));
    switch (kind_) {
        case Kind::uniform:
            return 1.0 / static_cast<double>(tickets_);
        case Kind::two_block:
            if (i < hot_) return hot_mass_ / static_cast<double>(hot_);
            return (1.0 - hot_mass_) / static_cast<double>(tickets_ - hot_);
        case Kind::explicit_vector:
            return weights_[static_cast<std::size_t>(i)];
    }
    return 0;
}

JensenCheck jensen_check(const PrizeSchedule& schedule, const CrowdWeights& q,
                         double crowd_tickets) {
    const double h = schedule.fixed_charge_per_ticket();
    const double t = static_cast<double>(q.dimension());
    JensenCheck check;
    check.lhs = h * q.sum_one_minus_exp(crowd_tickets);
    check.rhs = h * t * -std::expm1(-crowd_tickets / t);
    return check;
}

double expected_fixed_deductions_uniform(const PrizeSchedule& schedule,
                                         double crowd_tickets) {
    if (crowd_tickets < 0)
        throw std::domain_error("expected_fixed_deductions: negative crowd");
    return schedule.fixed_charge_per_ticket() * crowd_tickets +
           schedule.syndicate_fixed_deduction().dollars();
}

double syndicate_jackpot_lower_bound(const PrizeSchedule& schedule, Money carryover,
                                     double crowd_tickets, double free_fraction) {
    const int jackpot = schedule.jackpot_tier_index();
    if (jackpot < 0)
        throw std::invalid_argument("jackpot lower bound: no jackpot tier");
    const double t = static_cast<double>(total_tickets(schedule.game));
    const double s1 = schedule.tiers[static_cast<std::size_t>(jackpot)].allocation.fraction;
    const double fixed_rate =
        s1 * (1.0 - schedule.take) * schedule.ticket_price.dollars();
    const double inner = carryover.dollars() +
                         fixed_rate * (t + crowd_tickets * (1.0 - free_fraction)) -
                         schedule.syndicate_fixed_deduction().dollars() -
                         crowd_tickets * schedule.fixed_charge_per_ticket();
    return inner * ev_share(1, crowd_tickets / t);
}

namespace {

Rational binomial_rational(std::int64_t n, std::int64_t k) {
    Rational r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r *= Rational(n - k + i, i);
    return r;
}

// E[X/(1+X)] for X ~ Bin(c, p), exact.
Rational share_of_crowd(std::int64_t c, const Rational& p) {
    Rational e = 0;
    const Rational pc = 1 - p;
    for (std::int64_t j = 1; j <= c; ++j) {
        Rational pmf = binomial_rational(c, j);
        for (std::int64_t i = 0; i < j; ++i) pmf *= p;
        for (std::int64_t i = 0; i < c - j; ++i) pmf *= pc;
        e += pmf * Rational(j, j + 1);
    }
    return e;
}

}  // namespace

CrowdOptimality crowd_optimality_bruteforce(std::int64_t t_small, std::int64_t c_small,
                                            std::span<const Rational> q) {
    if (t_small < 1 || t_small > 8 || c_small < 0 || c_small > 8)
        throw std::domain_error("crowd_optimality_bruteforce: enumeration bound is t,c <= 8");
    if (static_cast<std::int64_t>(q.size()) != t_small)
        throw std::domain_error("crowd_optimality_bruteforce: q dimension mismatch");
    Rational total = 0;
    for (const auto& qi : q) {
        if (qi < 0) throw std::domain_error("crowd_optimality_bruteforce: negative weight");
        total += qi;
    }
    if (total != 1)
        throw std::domain_error("crowd_optimality_bruteforce: weights must sum to 1");

    CrowdOptimality result;
    const Rational inv_t(1, t_small);
    Rational uniform_one = share_of_crowd(c_small, inv_t);
    result.e_uniform = uniform_one;  // identical for every draw
    result.e_q = 0;
    for (std::int64_t w = 0; w < t_small; ++w)
        result.e_q += inv_t * share_of_crowd(c_small, q[static_cast<std::size_t>(w)]);
    return result;
}

}  // namespace lotto
