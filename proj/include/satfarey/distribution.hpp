#pragma once

#include <span>
#include <vector>

#include "satfarey/fraction.hpp"
#include "satfarey/saturated.hpp"

namespace satfarey {

// zeta(2) = pi^2/6, the density normalizer throughout.
double zeta2();

// A = log(4/3) / (2 zeta(2)): the limit of |saturated set of order Q| / Q^2,
// also the mean-gap normalizer of the gap statistics.
double count_density();

// One cell of a convergence report: empirical count of saturated fractions
// <= beta at order Q against the quadratic main term.
struct CountReport {
    int64_t Q = 0;
    Fraction beta;
    int64_t empirical = 0;
    double main_term = 0.0;
    // |empirical - main_term| / main_term, 0 by convention when main_term == 0.
    double rel_error = 0.0;
};

// #{f in saturated set of order Q : f <= beta}, beta compared exactly.
// 0/1 is not a member and is never counted.
int64_t count_saturated_below(int64_t Q, const Fraction& beta);
// Same count against an already generated sequence (elems sorted, 0/1 first).
int64_t count_saturated_below(const SaturatedSequence& seq, const Fraction& beta);

// Main term (Q^2 / (2 zeta(2))) * log(2(1+beta)/(2+beta)).
double main_term_count(int64_t Q, double beta);

// Limit CDF log(2(1+beta)/(2+beta)) / log(4/3) on [0, 1].
double limit_cdf(double beta);

// Cross product of Q values and beta thresholds, row-major by Q then beta.
// Each Q generates its sequence once. parallelism bounds the worker count.
std::vector<CountReport> convergence_report(std::span<const int64_t> Qs,
                                            std::span<const Fraction> betas,
                                            unsigned parallelism = 1);

} // namespace satfarey
