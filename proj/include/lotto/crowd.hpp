#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lotto/money.hpp"
#include "lotto/schedule.hpp"

namespace lotto {

using Rational = boost::multiprecision::cpp_rational;

// Crowd selection probabilities q_1..q_t. Full-size games never materialize
// the vector; the bounds only need sum-functionals of q, so structured
// generators cover everything the analysis uses.
class CrowdWeights {
  public:
    static CrowdWeights uniform(std::int64_t tickets);
    // One ticket carries `hot_mass`, the rest split the remainder evenly.
    static CrowdWeights single_hot(std::int64_t tickets, double hot_mass);
    // `hot` tickets share `hot_mass` evenly, the rest share the remainder.
    static CrowdWeights two_block(std::int64_t tickets, std::int64_t hot,
                                  double hot_mass);
    static CrowdWeights explicit_weights(std::vector<double> weights);

    std::int64_t dimension() const { return tickets_; }
    bool is_uniform() const;
    // sum_i (1 - e^(-c * q_i)), the Jensen functional of the bound chain.
    double sum_one_minus_exp(double c) const;
    // Weight q_i of a ticket drawn equiprobably; rng advances one step.
    double sample_weight(std::uint64_t uniform_draw) const;

  private:
    enum class Kind { uniform, two_block, explicit_vector };
    Kind kind_{Kind::uniform};
    std::int64_t tickets_{0};
    std::int64_t hot_{0};
    double hot_mass_{0};
    std::vector<double> weights_;
};

struct JensenCheck {
    double lhs;  // H * sum_i (1 - e^(-c q_i))
    double rhs;  // H * t * (1 - e^(-c/t))
};

// Both sides of the crowd fixed-payout bound; lhs <= rhs always, with
// equality exactly for uniform q.
JensenCheck jensen_check(const PrizeSchedule& schedule, const CrowdWeights& q,
                         double crowd_tickets);

// H * c + syndicate fixed deduction, dollars.
double expected_fixed_deductions_uniform(const PrizeSchedule& schedule,
                                         double crowd_tickets);

// Lower bound on the syndicate's expected jackpot payout under any crowd q:
//   (a + s1*(1-take)*price*(t + c(1-f)) - syndicate_fixed - c*H) * ev_share(1, c/t)
double syndicate_jackpot_lower_bound(const PrizeSchedule& schedule, Money carryover,
                                     double crowd_tickets, double free_fraction);

struct CrowdOptimality {
    Rational e_q;        // E_q[X / (1 + X)]
    Rational e_uniform;  // same under q = 1/t
};

// Exact enumeration over equiprobable draws and independent single-ticket
// crowd picks; feasible only for tiny games. Throws std::domain_error when
// t > 8 or c > 8, or q is not a probability vector of length t.
CrowdOptimality crowd_optimality_bruteforce(std::int64_t t_small, std::int64_t c_small,
                                            std::span<const Rational> q);

}  // namespace lotto
