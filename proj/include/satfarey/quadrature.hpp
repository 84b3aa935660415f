#pragma once

#include <functional>
#include <vector>

namespace satfarey {

struct QuadratureOptions {
    double abs_tol = 1e-8;
    int max_depth = 40;
};

// Adaptive composite Simpson on [a, b]. Integrand must be finite on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts = {});

// Splits [a, b] at the given interior seam points (unsorted, possibly outside
// the interval; both are handled) and integrates each panel adaptively with a
// width-proportional share of the tolerance.
double integrate_with_breakpoints(const std::function<double(double)>& f, double a, double b,
                                  std::vector<double> seams, const QuadratureOptions& opts = {});

// Locates the jump points of an integer-vector signature on [a, b] by scanning
// initial_samples + 1 equally spaced points and bisecting every change.
// Returns interior breakpoints in ascending order. Signatures that change more
// than once between adjacent samples are resolved down to sample spacing only,
// so initial_samples bounds the resolution.
std::vector<double> find_signature_breaks(const std::function<std::vector<int>(double)>& signature,
                                          double a, double b, int initial_samples,
                                          int bisection_steps = 60);

} // namespace satfarey
