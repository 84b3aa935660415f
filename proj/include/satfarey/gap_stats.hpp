#pragma once

#include <cstdint>
#include <vector>

#include "satfarey/fraction.hpp"

namespace satfarey {

// Point of the triangle {0 < x, y <= 1, x + y > 1}. The self-map
// triangle_step shadows the Farey successor recurrence: starting from
// (q_prev/Q, q_cur/Q) its iterates reproduce the scaled denominator pairs.
struct TrianglePoint {
    double x = 1.0;
    double y = 1.0;
};

// floor((1 + x) / y), the multiplier of the successor recurrence. Throws
// std::domain_error if the point lies outside the (closed, up to a small
// tolerance) triangle.
int64_t next_multiplier(const TrianglePoint& p);

// (x, y) -> (y, k*y - x) with k = next_multiplier. Throws std::domain_error
// if the input is outside the triangle or the image degenerates numerically;
// the latter also increments the orbit violation counter.
TrianglePoint triangle_step(const TrianglePoint& p);

// [p, T p, ..., T^steps p]; size steps + 1.
std::vector<TrianglePoint> triangle_orbit(TrianglePoint p, int steps);

// Number of triangle_step images that fell outside the triangle beyond
// tolerance since the last reset. Process-wide, thread-safe.
int64_t orbit_domain_violations();
void reset_orbit_domain_violations();

// Margins that bound the admissible v-slice of the run regions.
// saturation_margin(x, y)  = (1 + y)/x - 2 - floor(y/x)
// successor_margin(x, y)   = (1 - x)/y - 1 + floor(x/y)
// gap_term(x, y)           = 1/(x*y)
double saturation_margin(double x, double y);
double successor_margin(double x, double y);
double gap_term(double x, double y);

// Gaps of the saturated partition of order Q, each scaled by the element
// count N(Q). `scaled` is sorted ascending; cdf(lambda) is the fraction of
// scaled gaps <= lambda.
struct GapTable {
    int64_t order = 0;
    int64_t count = 0;
    std::vector<double> scaled;
    double cdf(double lambda) const;
};

GapTable build_gap_table(int64_t Q);
double gap_cdf_empirical(const GapTable& table, double lambda);

// Number of consecutive pairs of saturated fractions that are exactly r
// Farey steps apart in the order-Q Farey sequence and whose gap g satisfies
// Q^2 * g <= eta. Runs bounded by the endpoints 0/1 and 1/1 are included.
int64_t count_runs(int64_t Q, int r, double eta);

// Checks that for every saturated-unsaturated-saturated consecutive triple in
// the order-Q Farey sequence the successor multiplier of the middle element
// equals 1 (equivalently, the outer denominators sum to the middle one).
bool verify_run2_multiplier(int64_t Q);

// Area of the length-1 run region at width w: u in [max(1-w, 1/(eta*w)), w],
// v in [max(3w-1-u, 0), w]. region_area_r1 uses closed forms on the eta
// ranges where they exist and falls back to the direct evaluation; the
// direct form integrates the piecewise-linear height exactly.
double region_area_r1(double w, double eta);
double region_area_r1_direct(double w, double eta);

// Area of a length-2 run region cylinder. branch 1, index k >= 3:
//   u in [max(1-w, w/k), w/(k-1)], u(w-u) >= 1/eta,
//   v in [0, min(w, w(1-w)/(w-u), w(1+w-(k+1)u)/u)].
// branch 2, index l >= 2:
//   u in [max(1-w, (l-1)w/l), l*w/(l+1)], u(w-u) >= 1/eta,
//   v in [0, min(w, w(1+w-3u)/u, w(1+(l-2)w-(l-1)u)/(w-u))].
double region_area_r2(int branch, int index, double w, double eta);

// Area of the general length-r run region at width w (r >= 2): u in
// [1-w, w], the first r orbit gap_terms sum to at most eta, and
//   max(0, max_{1<=i<=r-1} w*saturation_margin(T^i))
//     <= v <= min(w, w*saturation_margin(u, w),
//                 w*successor_margin(T^{r-1})).
// Integrated with signature-located breakpoints, so the integrand is smooth
// on every panel.
double region_area_r3(int r, double w, double eta);

// Selector for one run region. r == 1 ignores branch and index. For r >= 2,
// branch 1 or 2 picks a length-2 cylinder (r must be 2), branch 0 the
// general region.
struct RegionSpec {
    int r = 1;
    int branch = 0;
    int index = 0;
    double eta = 0.0;
};

double region_area(const RegionSpec& spec, double w);

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

// Monte Carlo estimate of the same area from the raw defining inequalities,
// sampling the box [1-w, w] x [0, w]. Deterministic for a fixed seed.
McEstimate region_area_mc(const RegionSpec& spec, double w, int64_t samples, uint64_t seed);

// Limit constant of length-r runs below eta:
//   c_r(eta) = (6/pi^2) * Integral over w in (1/2, 1] of area_r(w, eta)/w.
// run_constant uses closed forms where available; run_constant_quadrature
// always integrates (for r == 1 via region_area_r1_direct).
double run_constant(int r, double eta);
double run_constant_quadrature(int r, double eta);

// Limit gap distribution: (1/A) * sum over 1 <= r < lambda/A of
// c_r(lambda/A), where A is the count density. Returns NaN when lambda/A
// exceeds max_eta, the largest ratio the run-constant sum is evaluated for.
double gap_cdf_limit(double lambda, double max_eta = 6.0);

} // namespace satfarey
