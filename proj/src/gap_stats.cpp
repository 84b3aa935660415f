#include "satfarey/gap_stats.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <stdexcept>

#include "satfarey/distribution.hpp"
#include "satfarey/farey_walk.hpp"
#include "satfarey/quadrature.hpp"

namespace satfarey {

namespace {

constexpr double kEdgeTol = 1e-12;
constexpr double kImageTol = 1e-9;

std::atomic<int64_t> g_orbit_violations{0};

// 53 uniform bits into [0, 1); identical across platforms for a fixed seed.
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

int clamped_floor(double v) {
    return static_cast<int>(std::clamp(std::floor(v), -1.0e9, 1.0e9));
}

void validate_region_spec(const RegionSpec& spec) {
    if (spec.r < 1) throw std::invalid_argument("region spec: r >= 1 required");
    if (!std::isfinite(spec.eta) || spec.eta < 0.0)
        throw std::invalid_argument("region spec: eta must be finite and nonnegative");
    if (spec.r == 1 || spec.branch == 0) return;
    if (spec.r != 2)
        throw std::invalid_argument("region spec: cylinder branches exist only for r == 2");
    if (spec.branch == 1) {
        if (spec.index < 3) throw std::invalid_argument("region spec: branch 1 needs index >= 3");
    } else if (spec.branch == 2) {
        if (spec.index < 2) throw std::invalid_argument("region spec: branch 2 needs index >= 2");
    } else {
        throw std::invalid_argument("region spec: branch must be 0, 1 or 2");
    }
}

double checked_width(double w, const char* where) {
    if (!(w > 0.0) || w > 1.0 + kEdgeTol)
        throw std::invalid_argument(std::string(where) + ": w in (0, 1] required");
    return std::min(w, 1.0);
}

// First r points of the orbit of (u, w), or nullopt once it degenerates.
std::optional<std::vector<TrianglePoint>> orbit_points(double u, double w, int r) {
    std::vector<TrianglePoint> pts;
    pts.reserve(static_cast<std::size_t>(r));
    try {
        TrianglePoint p{u, w};
        (void)next_multiplier(p);
        pts.push_back(p);
        for (int i = 1; i < r; ++i) {
            p = triangle_step(p);
            pts.push_back(p);
        }
    } catch (const std::domain_error&) {
        return std::nullopt;
    }
    return pts;
}

double rho_sum(const std::vector<TrianglePoint>& pts) {
    double s = 0.0;
    for (const TrianglePoint& p : pts) s += gap_term(p.x, p.y);
    return s;
}

// Admissible v-window [lo, hi] of the general run region for a given orbit.
std::pair<double, double> run_window(const std::vector<TrianglePoint>& pts, double w) {
    double lo = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        lo = std::max(lo, w * saturation_margin(pts[i].x, pts[i].y));
    double hi = std::min({w, w * saturation_margin(pts.front().x, pts.front().y),
                          w * successor_margin(pts.back().x, pts.back().y)});
    return {lo, hi};
}

bool region_contains(const RegionSpec& spec, double w, double u, double v) {
    double eta = spec.eta;
    if (spec.r == 1) return eta * u * w >= 1.0 && v >= 3.0 * w - 1.0 - u;
    if (spec.branch == 1) {
        double k = spec.index;
        return u >= w / k && u <= w / (k - 1.0) && eta * u * (w - u) >= 1.0 &&
               v <= w * (1.0 - w) / (w - u) && v <= w * (1.0 + w - (k + 1.0) * u) / u;
    }
    if (spec.branch == 2) {
        double l = spec.index;
        return u >= (l - 1.0) * w / l && u <= l * w / (l + 1.0) && eta * u * (w - u) >= 1.0 &&
               v <= w * (1.0 + w - 3.0 * u) / u &&
               v <= w * (1.0 + (l - 2.0) * w - (l - 1.0) * u) / (w - u);
    }
    auto pts = orbit_points(u, w, spec.r);
    if (!pts || rho_sum(*pts) > eta) return false;
    auto [lo, hi] = run_window(*pts, w);
    return v >= lo && v <= hi;
}

} // namespace

int64_t next_multiplier(const TrianglePoint& p) {
    if (!(p.x > 0.0) || !(p.y > 0.0) || p.x > 1.0 + kEdgeTol || p.y > 1.0 + kEdgeTol ||
        p.x + p.y < 1.0 - kEdgeTol)
        throw std::domain_error("next_multiplier: point outside the triangle");
    double q = std::floor((1.0 + p.x) / p.y);
    if (q > 4.0e18) throw std::domain_error("next_multiplier: degenerate point");
    return static_cast<int64_t>(q);
}

TrianglePoint triangle_step(const TrianglePoint& p) {
    int64_t k = next_multiplier(p);
    double x2 = std::min(p.y, 1.0);
    double y2 = static_cast<double>(k) * p.y - p.x;
    if (y2 > 1.0) {
        if (y2 > 1.0 + kImageTol) {
            ++g_orbit_violations;
            throw std::domain_error("triangle_step: image outside the triangle");
        }
        y2 = 1.0;
    }
    if (!(y2 > 0.0) || x2 + y2 < 1.0 - kImageTol) {
        ++g_orbit_violations;
        throw std::domain_error("triangle_step: image outside the triangle");
    }
    return {x2, y2};
}

std::vector<TrianglePoint> triangle_orbit(TrianglePoint p, int steps) {
    if (steps < 0) throw std::invalid_argument("triangle_orbit: steps >= 0 required");
    (void)next_multiplier(p);
    std::vector<TrianglePoint> orbit;
    orbit.reserve(static_cast<std::size_t>(steps) + 1);
    orbit.push_back(p);
    for (int i = 0; i < steps; ++i) {
        p = triangle_step(p);
        orbit.push_back(p);
    }
    return orbit;
}

int64_t orbit_domain_violations() { return g_orbit_violations.load(); }

void reset_orbit_domain_violations() { g_orbit_violations.store(0); }

double saturation_margin(double x, double y) {
    return (1.0 + y) / x - 2.0 - std::floor(y / x);
}

double successor_margin(double x, double y) {
    return (1.0 - x) / y - 1.0 + std::floor(x / y);
}

double gap_term(double x, double y) { return 1.0 / (x * y); }

double GapTable::cdf(double lambda) const {
    if (count <= 0) return 0.0;
    auto it = std::upper_bound(scaled.begin(), scaled.end(), lambda);
    return static_cast<double>(it - scaled.begin()) / static_cast<double>(count);
}

GapTable build_gap_table(int64_t Q) {
    if (Q < 3) throw std::invalid_argument("build_gap_table: Q >= 3 required");
    std::vector<Fraction> sat;
    walk_farey(Q, [&](const Fraction& f, int64_t h) {
        if (h <= Q) sat.push_back(f);
    });
    GapTable table;
    table.order = Q;
    table.count = static_cast<int64_t>(sat.size()) - 1;
    table.scaled.reserve(sat.size() - 1);
    double n = static_cast<double>(table.count);
    for (std::size_t i = 0; i + 1 < sat.size(); ++i) {
        const Fraction& a = sat[i];
        const Fraction& b = sat[i + 1];
        int128 cross = static_cast<int128>(b.num) * a.den - static_cast<int128>(a.num) * b.den;
        table.scaled.push_back(n * static_cast<double>(cross) /
                               (static_cast<double>(a.den) * static_cast<double>(b.den)));
    }
    std::sort(table.scaled.begin(), table.scaled.end());
    return table;
}

double gap_cdf_empirical(const GapTable& table, double lambda) { return table.cdf(lambda); }

int64_t count_runs(int64_t Q, int r, double eta) {
    if (Q < 3) throw std::invalid_argument("count_runs: Q >= 3 required");
    if (r < 1) throw std::invalid_argument("count_runs: r >= 1 required");
    if (!std::isfinite(eta)) throw std::invalid_argument("count_runs: eta must be finite");
    // Every Farey gap exceeds 1/Q^2 strictly, so a length-r run is wider
    // than r/Q^2 and cannot satisfy the threshold once eta <= r.
    if (eta <= static_cast<double>(r)) return 0;
    int64_t total = 0;
    Fraction last_sat;
    Fraction prev;
    int64_t steps = 0;
    bool first = true;
    walk_farey(Q, [&](const Fraction& f, int64_t h) {
        if (first) {
            first = false;
            last_sat = f;
            prev = f;
            return;
        }
        ++steps;
        if (h <= Q) {
            if (steps == 2 && prev.den != last_sat.den + f.den)
                throw std::logic_error("count_runs: length-2 run without unit multiplier");
            if (steps == r) {
                int128 cross = static_cast<int128>(f.num) * last_sat.den -
                               static_cast<int128>(last_sat.num) * f.den;
                long double lhs = static_cast<long double>(Q) * static_cast<long double>(Q) *
                                  static_cast<long double>(cross);
                long double rhs = static_cast<long double>(eta) *
                                  static_cast<long double>(last_sat.den) *
                                  static_cast<long double>(f.den);
                if (lhs <= rhs) ++total;
            }
            last_sat = f;
            steps = 0;
        }
        prev = f;
    });
    return total;
}

bool verify_run2_multiplier(int64_t Q) {
    if (Q < 3) throw std::invalid_argument("verify_run2_multiplier: Q >= 3 required");
    bool ok = true;
    Fraction a, b;
    bool sat_a = false, sat_b = false;
    int have = 0;
    walk_farey(Q, [&](const Fraction& f, int64_t h) {
        if (!ok) return;
        bool sat = h <= Q;
        if (have == 2 && sat_a && !sat_b && sat) {
            if ((Q + a.den) / b.den != 1) ok = false;
        }
        a = b;
        sat_a = sat_b;
        b = f;
        sat_b = sat;
        if (have < 2) ++have;
    });
    return ok;
}

double region_area_r1_direct(double w, double eta) {
    w = checked_width(w, "region_area_r1_direct");
    if (!std::isfinite(eta) || eta <= 1.0) return 0.0;
    double u_lo = std::max(1.0 - w, 1.0 / (eta * w));
    double u_hi = w;
    if (u_lo >= u_hi) return 0.0;
    // Height of the v-slice; piecewise linear in u, so trapezoids between the
    // slope breakpoints integrate it exactly.
    auto height = [w](double u) {
        return std::max(0.0, w - std::max(3.0 * w - 1.0 - u, 0.0));
    };
    std::vector<double> pts{u_lo, u_hi};
    for (double b : {2.0 * w - 1.0, 3.0 * w - 1.0})
        if (b > u_lo && b < u_hi) pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        area += (pts[i + 1] - pts[i]) * 0.5 * (height(pts[i]) + height(pts[i + 1]));
    return area;
}

double region_area_r1(double w, double eta) {
    w = checked_width(w, "region_area_r1");
    if (!std::isfinite(eta) || eta <= 1.0) return 0.0;
    if (eta <= 2.0) {
        if (w * w * eta < 1.0) return 0.0;
        double w0 = 0.25 * (1.0 + std::sqrt(1.0 + 8.0 / eta));
        if (w <= w0) {
            double t = 1.0 / (eta * w);
            return 0.5 * (w - t) * (2.0 - 3.0 * w + t);
        }
        return 0.5 * (1.0 - w) * (1.0 - w);
    }
    if (eta >= 4.5) {
        if (w <= 0.5) return 0.0;
        if (w <= 2.0 / 3.0) return 0.5 * (3.0 - 4.0 * w) * (2.0 * w - 1.0);
        return 0.5 * (1.0 - w) * (1.0 - w);
    }
    return region_area_r1_direct(w, eta);
}

double region_area_r2(int branch, int index, double w, double eta) {
    validate_region_spec({2, branch, index, std::isfinite(eta) && eta >= 0.0 ? eta : 0.0});
    if (branch == 0) throw std::invalid_argument("region_area_r2: branch must be 1 or 2");
    w = checked_width(w, "region_area_r2");
    if (!std::isfinite(eta) || eta <= 0.0 || w * w * eta < 4.0) return 0.0;
    double half_disc = 0.5 * std::sqrt(w * w - 4.0 / eta);
    double hyper_lo = 0.5 * w - half_disc;
    double hyper_hi = 0.5 * w + half_disc;
    double lo, hi;
    std::function<double(double)> height;
    std::vector<double> seams;
    if (branch == 1) {
        double k = index;
        lo = std::max({1.0 - w, w / k, hyper_lo});
        hi = std::min(w / (k - 1.0), hyper_hi);
        height = [w, k](double u) {
            double near_cap = w * (1.0 - w) / (w - u);
            double far_cap = w * (1.0 + w - (k + 1.0) * u) / u;
            return std::max(0.0, std::min({w, near_cap, far_cap}));
        };
        seams = {2.0 * w - 1.0, (1.0 + w) / (k + 2.0), (1.0 + w) / (k + 1.0)};
    } else {
        double l = index;
        lo = std::max({1.0 - w, (l - 1.0) * w / l, hyper_lo});
        hi = std::min(l * w / (l + 1.0), hyper_hi);
        height = [w, l](double u) {
            double near_cap = w * (1.0 + w - 3.0 * u) / u;
            double far_cap = w * (1.0 + (l - 2.0) * w - (l - 1.0) * u) / (w - u);
            return std::max(0.0, std::min({w, near_cap, far_cap}));
        };
        seams = {(1.0 + w) / 4.0, (1.0 + w) / 3.0, (1.0 + (l - 2.0) * w) / (l - 1.0)};
        if (index >= 3) seams.push_back((1.0 + (l - 3.0) * w) / (l - 2.0));
    }
    if (lo >= hi) return 0.0;
    // Crossing of the two rational caps.
    double c = branch == 1 ? index + 1.0 : index + 2.0;
    double b_coef = 2.0 + c * w;
    double disc = b_coef * b_coef - 4.0 * c * w * (1.0 + w);
    if (disc >= 0.0) {
        double s = std::sqrt(disc);
        seams.push_back((b_coef - s) / (2.0 * c));
        seams.push_back((b_coef + s) / (2.0 * c));
    }
    return integrate_with_breakpoints(height, lo, hi, std::move(seams), {1e-10, 44});
}

double region_area_r3(int r, double w, double eta) {
    if (r < 2) throw std::invalid_argument("region_area_r3: r >= 2 required");
    w = checked_width(w, "region_area_r3");
    if (!std::isfinite(eta) || eta <= static_cast<double>(r) || w <= 0.5) return 0.0;

    auto height = [r, w, eta](double u) -> double {
        auto pts = orbit_points(u, w, r);
        if (!pts || rho_sum(*pts) > eta) return 0.0;
        auto [lo, hi] = run_window(*pts, w);
        return std::max(0.0, hi - lo);
    };

    // The integrand is smooth wherever every floor in sight is constant and
    // no min/max switches its active term; jumps of this signature locate all
    // panel boundaries.
    auto signature = [r, w, eta](double u) -> std::vector<int> {
        std::vector<int> sig;
        auto pts = orbit_points(u, w, r);
        if (!pts) {
            sig.push_back(std::numeric_limits<int>::min());
            return sig;
        }
        sig.reserve(2 * static_cast<std::size_t>(r) + 5);
        for (int i = 0; i + 1 < r; ++i)
            sig.push_back(static_cast<int>(std::min<int64_t>(next_multiplier((*pts)[i]), 1000000000)));
        for (int i = 0; i < r; ++i)
            sig.push_back(clamped_floor((*pts)[i].y / (*pts)[i].x));
        sig.push_back(clamped_floor(pts->back().x / pts->back().y));
        sig.push_back(rho_sum(*pts) <= eta ? 1 : 0);
        auto [lo, hi] = run_window(*pts, w);
        sig.push_back(hi > lo ? 1 : 0);
        int arg_lo = 0;
        double best_lo = 0.0;
        for (int i = 1; i < r; ++i) {
            double m = w * saturation_margin((*pts)[i].x, (*pts)[i].y);
            if (m > best_lo) {
                best_lo = m;
                arg_lo = i;
            }
        }
        sig.push_back(arg_lo);
        int arg_hi = 0;
        double best_hi = w;
        double first_cap = w * saturation_margin(pts->front().x, pts->front().y);
        if (first_cap < best_hi) {
            best_hi = first_cap;
            arg_hi = 1;
        }
        if (w * successor_margin(pts->back().x, pts->back().y) < best_hi) arg_hi = 2;
        sig.push_back(arg_hi);
        return sig;
    };

    std::vector<double> breaks = find_signature_breaks(signature, 1.0 - w, w, 512);
    return integrate_with_breakpoints(height, 1.0 - w, w, std::move(breaks), {1e-9, 40});
}

double region_area(const RegionSpec& spec, double w) {
    validate_region_spec(spec);
    if (spec.r == 1) return region_area_r1(w, spec.eta);
    if (spec.branch != 0) return region_area_r2(spec.branch, spec.index, w, spec.eta);
    return region_area_r3(spec.r, w, spec.eta);
}

McEstimate region_area_mc(const RegionSpec& spec, double w, int64_t samples, uint64_t seed) {
    validate_region_spec(spec);
    if (samples <= 0) throw std::invalid_argument("region_area_mc: samples >= 1 required");
    w = checked_width(w, "region_area_mc");
    if (w <= 0.5) return {0.0, 0.0};
    double width = 2.0 * w - 1.0;
    double box = width * w;
    std::mt19937_64 rng(seed);
    int64_t hits = 0;
    for (int64_t i = 0; i < samples; ++i) {
        double u = (1.0 - w) + width * unit_double(rng);
        double v = w * unit_double(rng);
        if (region_contains(spec, w, u, v)) ++hits;
    }
    double p = static_cast<double>(hits) / static_cast<double>(samples);
    double se = box * std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(samples));
    return {box * p, se};
}

double run_constant(int r, double eta) {
    if (r < 1) throw std::invalid_argument("run_constant: r >= 1 required");
    if (!std::isfinite(eta)) throw std::invalid_argument("run_constant: eta must be finite");
    if (eta <= static_cast<double>(r)) return 0.0;
    if (r == 1 && eta >= 4.5)
        return (2.0 * std::log(3.0) - 3.5 * std::log(2.0) + 0.25) / zeta2();
    return run_constant_quadrature(r, eta);
}

double run_constant_quadrature(int r, double eta) {
    if (r < 1) throw std::invalid_argument("run_constant_quadrature: r >= 1 required");
    if (!std::isfinite(eta)) throw std::invalid_argument("run_constant_quadrature: eta must be finite");
    if (eta <= static_cast<double>(r)) return 0.0;
    double z = zeta2();
    if (r == 1) {
        std::vector<double> seams{1.0 / std::sqrt(eta), 0.25 * (1.0 + std::sqrt(1.0 + 8.0 / eta)),
                                  2.0 / 3.0};
        if (eta > 4.0) {
            double s = std::sqrt(1.0 - 4.0 / eta);
            seams.push_back(0.5 * (1.0 - s));
            seams.push_back(0.5 * (1.0 + s));
        }
        auto f = [eta](double w) { return region_area_r1_direct(w, eta) / w; };
        return integrate_with_breakpoints(f, 0.5, 1.0, std::move(seams), {1e-11, 48}) / z;
    }
    if (r == 2) {
        double total = 0.0;
        std::vector<double> wseams{2.0 / std::sqrt(eta)};
        for (int k = 3; static_cast<double>(k) < 1.0 + eta; ++k) {
            auto f = [k, eta](double w) { return region_area_r2(1, k, w, eta) / w; };
            total += integrate_with_breakpoints(f, 1.0 - 1.0 / k, 1.0, wseams, {1e-8, 36});
        }
        for (int l = 2; static_cast<double>(l) < eta; ++l) {
            auto f = [l, eta](double w) { return region_area_r2(2, l, w, eta) / w; };
            total += integrate_with_breakpoints(f, (l + 1.0) / (2.0 * l + 1.0), 1.0, wseams,
                                                {1e-8, 36});
        }
        return total / z;
    }
    auto f = [r, eta](double w) { return region_area_r3(r, w, eta) / w; };
    std::vector<double> wseams{0.55, 0.6, 2.0 / 3.0, 0.7, 0.75, 0.8, 0.85, 0.9, 0.95};
    return integrate_with_breakpoints(f, 0.5, 1.0, std::move(wseams), {2e-6, 22}) / z;
}

double gap_cdf_limit(double lambda, double max_eta) {
    if (!std::isfinite(lambda)) throw std::invalid_argument("gap_cdf_limit: lambda must be finite");
    if (lambda <= 0.0) return 0.0;
    double density = count_density();
    double eta = lambda / density;
    if (eta > max_eta) return std::numeric_limits<double>::quiet_NaN();
    double total = 0.0;
    for (int r = 1; static_cast<double>(r) < eta; ++r) total += run_constant(r, eta);
    return total / density;
}

} // namespace satfarey
