// Acceptance gate: thirteen numbered criteria, one PASS/FAIL line each.
// Exits 0 only when every criterion holds.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "satfarey/cli.hpp"
#include "satfarey/distribution.hpp"
#include "satfarey/fraction.hpp"
#include "satfarey/gap_stats.hpp"
#include "satfarey/monoid.hpp"
#include "satfarey/saturated.hpp"

using namespace satfarey;

namespace {

int g_failures = 0;

void report(int idx, const char* name, bool pass, const std::string& detail) {
    std::printf("%s %2d. %s: %s\n", pass ? "PASS" : "FAIL", idx, name, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// 1. The three constructions agree: Farey filter, mediant insertion, and the
// sorted deduplicated projections of the matrix enumeration.
void criterion_cross_method() {
    bool pass = true;
    std::string detail = "filter, insertion, and projection agree for orders 3..300";
    for (int64_t Q = 3; Q <= 300; ++Q) {
        SaturatedSequence filt = generate_by_filter(Q);
        SaturatedSequence ins = generate_by_insertion(Q);
        if (filt.elems != ins.elems) {
            pass = false;
            detail = fmt("filter and insertion disagree at order %lld", (long long)Q);
            break;
        }
        std::vector<Fraction> proj;
        for (const MonoidMatrix& m : enumerate_matrices(Q)) proj.push_back(fraction_of(m));
        std::sort(proj.begin(), proj.end());
        proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
        if (!std::equal(proj.begin(), proj.end(), filt.elems.begin() + 1, filt.elems.end())) {
            pass = false;
            detail = fmt("projection disagrees at order %lld", (long long)Q);
            break;
        }
    }
    report(1, "cross-method identity", pass, detail);
}

// 2 + 7 share one incremental sweep: insert each birth cohort, then check
// every adjacent pair for unimodularity (2) and the gap bound d1*d2 <= Q^2
// (7), with full filter regenerations at three spot orders.
struct SweepOutcome {
    bool unimodular_ok = true;
    bool bound_ok = true;
    std::string unimodular_detail;
    std::string bound_detail;
};

SweepOutcome criterion_sweep() {
    SweepOutcome out;
    std::vector<InsertionRecord> tree = insertion_tree(2000);
    std::vector<Fraction> cur = {Fraction{0, 1}, Fraction{1, 1}};
    cur.reserve(400000);
    std::size_t next = 0;
    double tightest = 0.0;
    for (int64_t Q = 3; Q <= 2000; ++Q) {
        std::size_t old_size = cur.size();
        while (next < tree.size() && tree[next].birth == Q) cur.push_back(tree[next++].fraction);
        std::inplace_merge(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(old_size),
                           cur.end());
        int64_t qq = Q * Q;
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            const Fraction& a = cur[i];
            const Fraction& b = cur[i + 1];
            if (out.unimodular_ok && b.num * a.den - a.num * b.den != 1) {
                out.unimodular_ok = false;
                out.unimodular_detail =
                    fmt("pair %lld fails at order %lld", (long long)i, (long long)Q);
            }
            int64_t dd = a.den * b.den;
            if (out.bound_ok && dd > qq) {
                out.bound_ok = false;
                out.bound_detail =
                    fmt("raw gap below 1/Q^2 at order %lld, pair %lld", (long long)Q, (long long)i);
            }
            if (Q == 2000) tightest = std::max(tightest, static_cast<double>(dd) / 4e6);
        }
        if (Q == 500 || Q == 1250 || Q == 2000) {
            if (generate_by_filter(Q).elems != cur) {
                out.unimodular_ok = false;
                out.unimodular_detail = fmt("filter spot-check fails at order %lld", (long long)Q);
            }
            if (!verify_unimodular(cur).ok) {
                out.unimodular_ok = false;
                out.unimodular_detail = fmt("verifier rejects order %lld", (long long)Q);
            }
        }
    }
    if (out.unimodular_ok)
        out.unimodular_detail =
            "every adjacent pair unimodular for orders 3..2000, filter spot-checks at 500/1250/2000";
    if (out.bound_ok)
        out.bound_detail = fmt(
            "d1*d2 <= Q^2 for every adjacent pair, orders 3..2000 (tightest ratio %.6f at 2000)",
            tightest);
    return out;
}

// 3. Minimal trace over all matrices projecting to a fraction equals its
// height, and the first lift attains it.
void criterion_trace_minimality() {
    std::map<std::pair<int64_t, int64_t>, int64_t> min_trace;
    for (const MonoidMatrix& m : enumerate_matrices(600)) {
        auto key = std::make_pair(m.d, m.b);
        auto it = min_trace.find(key);
        if (it == min_trace.end() || m.trace() < it->second) min_trace[key] = m.trace();
    }
    bool pass = true;
    std::string detail;
    int64_t checked = 0;
    for (int64_t den = 1; den <= 200 && pass; ++den) {
        for (int64_t num = 1; num <= den && pass; ++num) {
            if (std::gcd(num, den) != 1) continue;
            Fraction f{num, den};
            int64_t h = h_value(f);
            auto it = min_trace.find(std::make_pair(num, den));
            if (it == min_trace.end() || it->second != h) {
                pass = false;
                detail = fmt("enumeration minimum misses the height of %lld/%lld", (long long)num,
                             (long long)den);
            } else if (matrix_from_fraction(f, 1).trace() != h) {
                pass = false;
                detail = fmt("first lift of %lld/%lld misses the height", (long long)num,
                             (long long)den);
            }
            ++checked;
        }
    }
    if (pass)
        detail = fmt("minimal trace equals the height for all %lld fractions with denominator "
                     "<= 200, attained at the first lift",
                     (long long)checked);
    report(3, "trace minimality", pass, detail);
}

} // namespace

int main() {
    criterion_cross_method();

    SweepOutcome sweep = criterion_sweep();
    report(2, "unimodular partition", sweep.unimodular_ok, sweep.unimodular_detail);

    criterion_trace_minimality();

    // 4. Quadratic growth of the count, with the deviation shrinking from
    // order 1250 to order 5000.
    SaturatedSequence s5000 = generate_by_insertion(5000);
    int64_t n5000 = static_cast<int64_t>(s5000.elems.size()) - 1;
    int64_t n1250 = static_cast<int64_t>(generate_by_insertion(1250).elems.size()) - 1;
    double A = count_density();
    double dev5000 = std::abs(static_cast<double>(n5000) / (A * 25e6) - 1.0);
    double dev1250 = std::abs(static_cast<double>(n1250) / (A * 1250.0 * 1250.0) - 1.0);
    report(4, "quadratic growth", dev5000 <= 0.05 && dev5000 < dev1250,
           fmt("count %lld at order 5000, rel dev %.2e <= 0.05, improving on %.2e at 1250",
               (long long)n5000, dev5000, dev1250));

    // 5. Empirical threshold distribution against the limit CDF.
    double sup_err = 0.0;
    for (int k = 1; k <= 9; ++k) {
        int64_t g = std::gcd<int64_t>(k, 10);
        Fraction beta{k / g, 10 / g};
        double emp = static_cast<double>(count_saturated_below(s5000, beta)) /
                     static_cast<double>(n5000);
        sup_err = std::max(sup_err, std::abs(emp - limit_cdf(k / 10.0)));
    }
    report(5, "threshold distribution", sup_err <= 0.02,
           fmt("sup CDF error %.2e <= 0.02 over nine thresholds at order 5000", sup_err));

    // 6. Matrix count below one half against its quadratic density.
    int64_t half_count = count_matrices_below(2000, Fraction{1, 2});
    double half_theory = 4e6 * std::log(1.5) / (2.0 * zeta2());
    double half_rel = std::abs(static_cast<double>(half_count) / half_theory - 1.0);
    report(6, "matrix count below one half", half_rel <= 0.05,
           fmt("%lld matrices at order 2000, rel err %.2e <= 0.05", (long long)half_count,
               half_rel));

    report(7, "gap lower bound", sweep.bound_ok, sweep.bound_detail);

    // 8. Scaled gap distribution against the limit at four thresholds.
    {
        GapTable table = build_gap_table(3000);
        double worst = 0.0;
        for (double ratio : {1.25, 1.5, 1.75, 2.0}) {
            double emp = table.cdf(ratio * A);
            double theory = run_constant(1, ratio) / A;
            worst = std::max(worst, std::abs(emp - theory));
        }
        report(8, "gap distribution", worst <= 0.05,
               fmt("worst |empirical - limit| %.2e <= 0.05 over four thresholds at order 3000",
                   worst));
    }

    // 9. Closed form of the length-1 constant against quadrature.
    {
        double closed = (2.0 * std::log(3.0) - 3.5 * std::log(2.0) + 0.25) / zeta2();
        double worst = std::abs(run_constant_quadrature(1, 4.5) - closed);
        for (double eta : {4.5, 6.0, 10.0, 100.0})
            worst = std::max(worst, std::abs(run_constant(1, eta) - run_constant_quadrature(1, eta)));
        report(9, "length-1 constant closed form", worst <= 1e-6,
               fmt("max deviation %.2e <= 1e-06 (closed form at 4.5, quadrature at four "
                   "thresholds)",
                   worst));
    }

    // 10. Degenerate run counts: below the opening threshold both the count
    // and the constant vanish; otherwise the scaled count must track the
    // constant.
    {
        struct Case {
            int r;
            double eta;
            double tol;
        };
        const Case cases[] = {{2, 4.0, 0.10}, {3, 5.0, 0.15}, {2, 6.0, 0.10}};
        bool pass = true;
        std::string detail;
        for (const Case& cs : cases) {
            int64_t cnt = count_runs(4000, cs.r, cs.eta);
            double c = run_constant(cs.r, cs.eta);
            if (!detail.empty()) detail += "; ";
            if (c > 0.0) {
                double rel = std::abs(static_cast<double>(cnt) / 16e6 - c) / c;
                if (rel > cs.tol) pass = false;
                detail += fmt("length %d at %.0f: rel err %.2e vs tol %.2f", cs.r, cs.eta, rel,
                              cs.tol);
            } else {
                if (cnt != 0) pass = false;
                detail += fmt("length %d at %.0f: count %lld, constant 0 (both zero)", cs.r,
                              cs.eta, (long long)cnt);
            }
        }
        report(10, "degenerate run counts", pass, detail + " at order 4000");
    }

    // 11. Middle-multiplier dichotomy of length-2 runs.
    {
        bool pass = true;
        std::string detail = "middle multiplier is 1 in every length-2 run, orders 3..1000";
        for (int64_t Q = 3; Q <= 1000; ++Q) {
            if (!verify_run2_multiplier(Q)) {
                pass = false;
                detail = fmt("dichotomy fails at order %lld", (long long)Q);
                break;
            }
        }
        report(11, "middle-multiplier dichotomy", pass, detail);
    }

    // 12. Neighbor-identity suites to order 500 plus mediant height growth
    // over every unimodular pair with denominator sum <= 500.
    {
        RunConfig vcfg;
        vcfg.command = Command::verify;
        vcfg.qs = {500};
        std::ostringstream os;
        bool suites = run(vcfg, os) == 0;
        bool growth = true;
        int64_t bad_num = 0, bad_den = 0;
        for (int64_t den = 2; den <= 500 && growth; ++den) {
            for (int64_t num = 1; num < den && growth; ++num) {
                if (std::gcd(num, den) != 1) continue;
                Fraction f{num, den};
                auto [left, right] = parent_pair(f);
                if (h_value(f) <= std::max(h_value(left), h_value(right))) {
                    growth = false;
                    bad_num = num;
                    bad_den = den;
                }
            }
        }
        std::string detail;
        if (!suites)
            detail = "identity walk fails below order 500";
        else if (!growth)
            detail = fmt("mediant %lld/%lld does not exceed its parents' heights",
                         (long long)bad_num, (long long)bad_den);
        else
            detail = "identity walk clean to order 500; mediant height exceeds both parents "
                     "for denominator sums <= 500";
        report(12, "neighbor identities and mediant growth", suites && growth, detail);
    }

    // 13. Quadrature areas of twenty fixed region tuples, spanning all three
    // families, against deterministic Monte Carlo.
    {
        struct RegionTuple {
            int r, branch, index;
            double w, eta;
        };
        const RegionTuple tuples[20] = {
            {1, 0, 0, 0.90, 1.5}, {1, 0, 0, 0.84, 1.8}, {1, 0, 0, 0.75, 3.0},
            {1, 0, 0, 0.60, 4.5}, {1, 0, 0, 0.90, 4.5}, {1, 0, 0, 0.85, 2.5},
            {2, 1, 3, 0.85, 6.0}, {2, 1, 3, 0.95, 8.0}, {2, 1, 4, 0.90, 7.0},
            {2, 1, 5, 0.95, 9.0}, {2, 2, 2, 0.90, 5.0}, {2, 2, 2, 0.85, 6.0},
            {2, 2, 3, 0.90, 6.0}, {2, 2, 3, 0.95, 8.0}, {2, 2, 2, 0.95, 4.8},
            {3, 0, 0, 1.00, 10.0}, {3, 0, 0, 0.98, 9.0}, {3, 0, 0, 0.90, 12.0},
            {4, 0, 0, 0.97, 12.0}, {4, 0, 0, 1.00, 14.0},
        };
        bool pass = true;
        std::string detail;
        double worst_sig = 0.0;
        for (int i = 0; i < 20; ++i) {
            const RegionTuple& t = tuples[i];
            RegionSpec spec{t.r, t.branch, t.index, t.eta};
            double quad = region_area(spec, t.w);
            McEstimate mc = region_area_mc(spec, t.w, 400000, 777000 + static_cast<uint64_t>(i));
            double diff = std::abs(quad - mc.value);
            if (diff > std::max(4.0 * mc.std_error, 1e-9)) {
                pass = false;
                detail = fmt("tuple %d (r=%d branch=%d index=%d w=%.2f eta=%.1f): quad %.6f vs "
                             "mc %.6f +- %.6f",
                             i, t.r, t.branch, t.index, t.w, t.eta, quad, mc.value,
                             mc.std_error);
            }
            if (mc.std_error > 0.0) worst_sig = std::max(worst_sig, diff / mc.std_error);
        }
        if (pass)
            detail = fmt("all 20 tuples within 4 standard errors (worst %.2f)", worst_sig);
        report(13, "region areas against Monte Carlo", pass, detail);
    }

    if (g_failures == 0) {
        std::printf("all 13 criteria passed\n");
        return 0;
    }
    std::printf("%d criteria failed\n", g_failures);
    return 1;
}
