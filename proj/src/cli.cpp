#include "satfarey/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "satfarey/csv.hpp"
#include "satfarey/distribution.hpp"
#include "satfarey/gap_stats.hpp"
#include "satfarey/monoid.hpp"
#include "satfarey/parallel.hpp"
#include "satfarey/saturated.hpp"

namespace satfarey {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int64_t single_q(const RunConfig& cfg, int64_t min_q, const char* flag) {
    if (cfg.qs.size() != 1)
        throw UsageError(std::string("exactly one ") + flag + " is required");
    if (cfg.qs.front() < min_q)
        throw UsageError(std::string(flag) + " must be at least " + std::to_string(min_q));
    return cfg.qs.front();
}

std::vector<int64_t> sorted_qs(const RunConfig& cfg, int64_t min_q) {
    if (cfg.qs.empty()) throw UsageError("at least one Q is required");
    std::vector<int64_t> qs = cfg.qs;
    std::sort(qs.begin(), qs.end());
    qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
    if (qs.front() < min_q)
        throw UsageError("Q must be at least " + std::to_string(min_q));
    return qs;
}

void require_csv(const RunConfig& cfg, const char* command) {
    if (cfg.format != OutputFormat::csv)
        throw UsageError(std::string(command) + " emits CSV only");
}

struct CheckResult {
    bool ok = true;
    std::string detail;
};

struct VerifySummary {
    CheckResult unimodular;
    CheckResult cross_method;
    CheckResult lemma5;
    CheckResult corollary6;

    bool ok() const {
        return unimodular.ok && cross_method.ok && lemma5.ok && corollary6.ok;
    }
};

std::string pair_detail(int64_t Q, const Fraction& a, const Fraction& b) {
    return "Q=" + std::to_string(Q) + " pair " + to_string(a) + "," + to_string(b);
}

// Neighbor identities of an interior consecutive Farey pair, checked against
// fresh extended-Euclid inverses and h values. q2/q1 division is integer.
bool neighbor_identities_hold(int64_t Q, const Fraction& g1, const Fraction& g2,
                              int64_t h1, int64_t h2) {
    (void)Q;
    int64_t a1 = g1.num, q1 = g1.den, a2 = g2.num, q2 = g2.den;
    int64_t inv1 = mod_inverse(a1, q1);
    int64_t inv2 = mod_inverse(a2, q2);
    int64_t qbar2 = mod_inverse(q2 % q1, q1);
    int64_t qbb1 = mod_inverse(q1 % q2, q2);
    if (inv1 != (1 + q2 / q1) * q1 - q2) return false;
    if (inv2 != q1 % q2) return false;
    if (a1 != q1 - qbar2) return false;
    if (a2 != qbb1) return false;
    if ((q1 * a2 - 1) % q2 != 0 || a1 != (q1 * a2 - 1) / q2) return false;
    if ((q2 * qbar2 - 1) % q1 != 0 || a2 != q2 - (q2 * qbar2 - 1) / q1) return false;
    if (h1 != (2 + q2 / q1) * q1 - q2 + (q1 * qbb1 - 1) / q2) return false;
    if (h2 != q1 + (2 - q1 / q2) * q2 - (q2 * qbar2 - 1) / q1) return false;
    return true;
}

VerifySummary verify_suite(int64_t q_max) {
    VerifySummary s;
    std::vector<Fraction> elems;
    std::vector<int64_t> hs;
    for (int64_t Q = 3; Q <= q_max; ++Q) {
        SaturatedSequence fil = generate_by_filter(Q);
        if (s.cross_method.ok) {
            SaturatedSequence ins = generate_by_insertion(Q);
            if (fil.elems != ins.elems)
                s.cross_method = {false, "Q=" + std::to_string(Q)};
        }
        if (s.unimodular.ok) {
            UnimodularReport rep = verify_unimodular(fil);
            if (!rep.ok)
                s.unimodular = {false, pair_detail(Q, fil.elems[rep.first_violation],
                                                   fil.elems[rep.first_violation + 1])};
        }
        elems.clear();
        hs.clear();
        scan_farey_with_h(Q, [&](const Fraction& f, int64_t) {
            elems.push_back(f);
            hs.push_back(h_value(f));
        });
        for (std::size_t i = 0; i + 1 < elems.size(); ++i) {
            const Fraction& g1 = elems[i];
            const Fraction& g2 = elems[i + 1];
            if (s.corollary6.ok) {
                bool bad = (g1.den < g2.den && hs[i + 1] <= Q) ||
                           (g2.den < g1.den && hs[i] <= Q && hs[i + 1] > Q);
                if (bad) s.corollary6 = {false, pair_detail(Q, g1, g2)};
            }
            if (s.lemma5.ok && g1.num > 0 && g2.num < g2.den &&
                !neighbor_identities_hold(Q, g1, g2, hs[i], hs[i + 1]))
                s.lemma5 = {false, pair_detail(Q, g1, g2)};
        }
        if (!s.ok()) break;
    }
    return s;
}

std::string check_text(const CheckResult& c) {
    return c.ok ? "OK" : "FAIL (" + c.detail + ")";
}

int cmd_generate(const RunConfig& cfg, std::ostream& os) {
    int64_t Q = single_q(cfg, 3, "--Q");
    SaturatedSequence seq = generate_by_insertion(Q);
    if (cfg.format == OutputFormat::json) {
        ordered_json j;
        j["Q"] = Q;
        j["count"] = static_cast<int64_t>(seq.elems.size()) - 1;
        ordered_json arr = ordered_json::array();
        for (const Fraction& f : seq.elems)
            arr.push_back({f.num, f.den, h_value(f)});
        j["elems"] = std::move(arr);
        os << j.dump(2) << '\n';
    } else {
        for (const Fraction& f : seq.elems)
            os << f.num << ',' << f.den << ',' << h_value(f) << '\n';
    }
    return 0;
}

int cmd_tree(const RunConfig& cfg, std::ostream& os) {
    require_csv(cfg, "tree");
    int64_t q_max = single_q(cfg, 4, "--Q-max");
    for (const InsertionRecord& rec : insertion_tree(q_max)) {
        os << rec.fraction.num << ',' << rec.fraction.den << ',' << rec.birth << ','
           << rec.left_parent.num << ',' << rec.left_parent.den << ','
           << rec.right_parent.num << ',' << rec.right_parent.den << '\n';
    }
    return 0;
}

int cmd_verify(const RunConfig& cfg, std::ostream& os) {
    int64_t q_max = single_q(cfg, 3, "--Q-max");
    VerifySummary s = verify_suite(q_max);
    os << "unimodular: " << check_text(s.unimodular)
       << ", cross-method: " << check_text(s.cross_method)
       << ", lemma5: " << check_text(s.lemma5)
       << ", corollary6: " << check_text(s.corollary6) << '\n';
    return s.ok() ? 0 : 2;
}

int cmd_dist(const RunConfig& cfg, std::ostream& os) {
    std::vector<int64_t> qs = sorted_qs(cfg, 3);
    if (cfg.betas.empty()) throw UsageError("dist requires --betas");
    std::vector<CountReport> rows =
        convergence_report(qs, cfg.betas, cfg.parallelism);
    if (cfg.format == OutputFormat::csv) {
        for (const CountReport& row : rows)
            os << row.Q << ',' << to_string(row.beta) << ',' << row.empirical << ','
               << csv_double(row.main_term) << ',' << csv_double(row.rel_error) << '\n';
        return 0;
    }
    ordered_json j;
    j["Q_list"] = qs;
    ordered_json jr = ordered_json::array();
    for (const CountReport& row : rows) {
        jr.push_back({{"Q", row.Q},
                      {"beta", to_string(row.beta)},
                      {"empirical", row.empirical},
                      {"main_term", row.main_term},
                      {"rel_error", row.rel_error}});
    }
    j["rows"] = std::move(jr);
    ordered_json jv = ordered_json::array();
    std::size_t nb = cfg.betas.size();
    for (std::size_t b = 0; b < nb; ++b) {
        double first = rows[b].rel_error;
        double last = rows[(qs.size() - 1) * nb + b].rel_error;
        jv.push_back({{"beta", to_string(cfg.betas[b])},
                      {"first_rel_error", first},
                      {"last_rel_error", last},
                      {"improves", last < first}});
    }
    j["verdicts"] = std::move(jv);
    os << j.dump(2) << '\n';
    return 0;
}

int cmd_gaps(const RunConfig& cfg, std::ostream& os) {
    require_csv(cfg, "gaps");
    int64_t Q = single_q(cfg, 3, "--Q");
    if (!(cfg.density_step > 0.0)) throw UsageError("--density-step must be positive");
    LambdaGrid grid = cfg.lambdas;
    if (grid.empty()) grid = {0.0, 4.0, 0.05};
    GapTable table = build_gap_table(Q);
    for (double lambda : grid.values()) {
        double emp = table.cdf(lambda);
        double theory = gap_cdf_limit(lambda, cfg.theory_eta_cap);
        double density = (table.cdf(lambda + cfg.density_step) - emp) / cfg.density_step;
        os << csv_double(lambda) << ',' << csv_double(emp) << ',' << csv_double(theory)
           << ',' << csv_double(density) << '\n';
    }
    return 0;
}

int cmd_theory(const RunConfig& cfg, std::ostream& os) {
    if (cfg.format != OutputFormat::json) throw UsageError("theory emits JSON only");
    ordered_json j;
    j["zeta2"] = zeta2();
    j["count_density"] = count_density();
    if (cfg.r >= 1 || cfg.eta > 0.0) {
        if (cfg.r < 1 || !(cfg.eta > 0.0))
            throw UsageError("run constants need both --r and --eta");
        j["run_constant"] = {{"r", cfg.r},
                             {"eta", cfg.eta},
                             {"value", run_constant(cfg.r, cfg.eta)},
                             {"quadrature", run_constant_quadrature(cfg.r, cfg.eta)}};
    }
    if (!cfg.lambdas.empty()) {
        ordered_json arr = ordered_json::array();
        for (double lambda : cfg.lambdas.values())
            arr.push_back({{"lambda", lambda},
                           {"value", gap_cdf_limit(lambda, cfg.theory_eta_cap)}});
        j["limit_cdf"] = std::move(arr);
    }
    if (!cfg.qs.empty() && !cfg.betas.empty()) {
        ordered_json arr = ordered_json::array();
        for (int64_t Q : sorted_qs(cfg, 3)) {
            for (const Fraction& beta : cfg.betas) {
                arr.push_back({{"Q", Q},
                               {"beta", to_string(beta)},
                               {"main_term", main_term_count(Q, to_double(beta))},
                               {"limit_cdf", limit_cdf(to_double(beta))}});
            }
        }
        j["main_terms"] = std::move(arr);
    }
    os << j.dump(2) << '\n';
    return 0;
}

int cmd_hcount(const RunConfig& cfg, std::ostream& os) {
    require_csv(cfg, "hcount");
    std::vector<int64_t> qs = sorted_qs(cfg, 3);
    if (cfg.r < 1) throw UsageError("hcount requires --r >= 1");
    if (!(cfg.eta > 0.0) || !std::isfinite(cfg.eta))
        throw UsageError("hcount requires a positive finite --eta");
    double theory = run_constant(cfg.r, cfg.eta);
    std::vector<int64_t> counts = parallel_map_indexed<int64_t>(
        qs.size(), [&](std::size_t i) { return count_runs(qs[i], cfg.r, cfg.eta); },
        cfg.parallelism);
    for (std::size_t i = 0; i < qs.size(); ++i) {
        double scaled = static_cast<double>(counts[i]) /
                        (static_cast<double>(qs[i]) * static_cast<double>(qs[i]));
        double ratio;
        if (theory > 0.0)
            ratio = scaled / theory;
        else
            ratio = counts[i] == 0 ? 1.0 : std::numeric_limits<double>::quiet_NaN();
        os << qs[i] << ',' << cfg.r << ',' << csv_double(cfg.eta) << ',' << counts[i] << ','
           << csv_double(theory) << ',' << csv_double(ratio) << '\n';
    }
    return 0;
}

int cmd_monoid(const RunConfig& cfg, std::ostream& os) {
    int64_t Q = single_q(cfg, 3, "--Q");
    if (cfg.format == OutputFormat::json) {
        Fraction beta = cfg.betas.empty() ? Fraction{1, 1} : cfg.betas.front();
        ordered_json j;
        j["Q"] = Q;
        j["beta_num"] = beta.num;
        j["beta_den"] = beta.den;
        j["count"] = count_matrices_below(Q, beta);
        os << j.dump(2) << '\n';
        return 0;
    }
    for_each_matrix(Q, [&](const MonoidMatrix& m) {
        os << m.a << ',' << m.b << ',' << m.c << ',' << m.d << ',' << m.trace() << '\n';
    });
    return 0;
}

} // namespace

std::vector<double> LambdaGrid::values() const {
    std::vector<double> vs;
    if (empty()) return vs;
    if (stop < start) throw std::invalid_argument("lambda grid: stop must be >= start");
    for (int64_t i = 0; i < 10000000; ++i) {
        double v = start + static_cast<double>(i) * step;
        if (v > stop + step * 1e-9) break;
        vs.push_back(v);
    }
    return vs;
}

int run(const RunConfig& config, std::ostream& out) {
    try {
        switch (config.command) {
            case Command::generate: return cmd_generate(config, out);
            case Command::tree: return cmd_tree(config, out);
            case Command::verify: return cmd_verify(config, out);
            case Command::dist: return cmd_dist(config, out);
            case Command::gaps: return cmd_gaps(config, out);
            case Command::theory: return cmd_theory(config, out);
            case Command::hcount: return cmd_hcount(config, out);
            case Command::monoid: return cmd_monoid(config, out);
        }
        std::cerr << "error: unknown command\n";
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

int run(const RunConfig& config) {
    std::string path = config.out_path;
    if (!path.empty() && path.front() != '/') {
        const char* dir = std::getenv("SATFAREY_OUT_DIR");
        if (dir != nullptr && *dir != '\0') path = std::string(dir) + "/" + path;
    }
    if (path.empty()) return run(config, std::cout);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        std::cerr << "error: cannot open " << path << " for writing\n";
        return 1;
    }
    int code = run(config, file);
    file.flush();
    if (!file) {
        std::cerr << "error: write to " << path << " failed\n";
        return code == 0 ? 1 : code;
    }
    return code;
}

} // namespace satfarey
