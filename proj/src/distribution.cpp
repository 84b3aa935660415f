#include "satfarey/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "satfarey/parallel.hpp"

namespace satfarey {

double zeta2() {
    constexpr double z = std::numbers::pi * std::numbers::pi / 6.0;
    return z;
}

double count_density() {
    static const double a = std::log(4.0 / 3.0) / (2.0 * zeta2());
    return a;
}

int64_t count_saturated_below(const SaturatedSequence& seq, const Fraction& beta) {
    require_reduced(beta);
    auto it = std::upper_bound(seq.elems.begin(), seq.elems.end(), beta);
    auto below = static_cast<int64_t>(it - seq.elems.begin());
    return below > 0 ? below - 1 : 0; // drop the leading 0/1
}

int64_t count_saturated_below(int64_t Q, const Fraction& beta) {
    return count_saturated_below(generate_by_filter(Q), beta);
}

double main_term_count(int64_t Q, double beta) {
    if (!(beta >= 0.0) || !(beta <= 1.0))
        throw std::invalid_argument("main_term_count: beta in [0, 1] required");
    double q = static_cast<double>(Q);
    return q * q / (2.0 * zeta2()) * std::log(2.0 * (1.0 + beta) / (2.0 + beta));
}

double limit_cdf(double beta) {
    if (!(beta >= 0.0) || !(beta <= 1.0))
        throw std::invalid_argument("limit_cdf: beta in [0, 1] required");
    return std::log(2.0 * (1.0 + beta) / (2.0 + beta)) / std::log(4.0 / 3.0);
}

std::vector<CountReport> convergence_report(std::span<const int64_t> Qs,
                                            std::span<const Fraction> betas,
                                            unsigned parallelism) {
    auto rows_for_q = [&](std::size_t qi) {
        int64_t Q = Qs[qi];
        SaturatedSequence seq = generate_by_filter(Q);
        std::vector<CountReport> rows;
        rows.reserve(betas.size());
        for (const Fraction& beta : betas) {
            CountReport r;
            r.Q = Q;
            r.beta = beta;
            r.empirical = count_saturated_below(seq, beta);
            r.main_term = main_term_count(Q, to_double(beta));
            r.rel_error = r.main_term == 0.0
                              ? 0.0
                              : std::fabs(static_cast<double>(r.empirical) - r.main_term) / r.main_term;
            rows.push_back(r);
        }
        return rows;
    };
    auto per_q = parallel_map_indexed<std::vector<CountReport>>(Qs.size(), rows_for_q, parallelism);
    std::vector<CountReport> flat;
    flat.reserve(Qs.size() * betas.size());
    for (const auto& rows : per_q) flat.insert(flat.end(), rows.begin(), rows.end());
    return flat;
}

} // namespace satfarey
