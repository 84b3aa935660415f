#include "satfarey/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace satfarey {

namespace {

double simpson(double fa, double fm, double fb, double h) {
    return (fa + 4.0 * fm + fb) * h / 6.0;
}

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = simpson(fa, flm, fm, m - a);
    double right = simpson(fm, frm, fb, b - m);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureOptions& opts) {
    if (!(a <= b)) throw std::invalid_argument("integrate: a <= b required");
    if (a == b) return 0.0;
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    if (!std::isfinite(fa) || !std::isfinite(fb) || !std::isfinite(fm))
        throw std::invalid_argument("integrate: integrand not finite on [a, b]");
    double whole = simpson(fa, fm, fb, b - a);
    return adapt(f, a, b, fa, fm, fb, whole, opts.abs_tol, opts.max_depth);
}

double integrate_with_breakpoints(const std::function<double(double)>& f, double a, double b,
                                  std::vector<double> seams, const QuadratureOptions& opts) {
    if (!(a <= b)) throw std::invalid_argument("integrate: a <= b required");
    if (a == b) return 0.0;
    std::vector<double> cuts;
    cuts.push_back(a);
    std::sort(seams.begin(), seams.end());
    for (double s : seams) {
        if (s > cuts.back() && s < b) cuts.push_back(s);
    }
    cuts.push_back(b);
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        QuadratureOptions panel = opts;
        panel.abs_tol = opts.abs_tol * (cuts[i + 1] - cuts[i]) / (b - a);
        total += integrate(f, cuts[i], cuts[i + 1], panel);
    }
    return total;
}

std::vector<double> find_signature_breaks(const std::function<std::vector<int>(double)>& signature,
                                          double a, double b, int initial_samples,
                                          int bisection_steps) {
    if (initial_samples < 1) throw std::invalid_argument("find_signature_breaks: samples >= 1");
    std::vector<double> breaks;
    if (!(a < b)) return breaks;
    double step = (b - a) / initial_samples;
    std::vector<int> left_sig = signature(a);
    double left_x = a;
    for (int i = 1; i <= initial_samples; ++i) {
        double right_x = (i == initial_samples) ? b : a + i * step;
        std::vector<int> right_sig = signature(right_x);
        if (right_sig != left_sig) {
            // Bisect to the leftmost change in (left_x, right_x].
            double lo = left_x, hi = right_x;
            for (int it = 0; it < bisection_steps && hi - lo > 0.0; ++it) {
                double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                if (signature(mid) != left_sig)
                    hi = mid;
                else
                    lo = mid;
            }
            breaks.push_back(hi);
        }
        left_sig = std::move(right_sig);
        left_x = right_x;
    }
    return breaks;
}

} // namespace satfarey
