#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "satfarey/cli.hpp"

namespace {

satfarey::LambdaGrid parse_grid(const std::string& text) {
    auto first = text.find(':');
    auto second = text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos)
        throw std::invalid_argument("--lambda expects start:stop:step");
    satfarey::LambdaGrid grid;
    grid.start = std::stod(text.substr(0, first));
    grid.stop = std::stod(text.substr(first + 1, second - first - 1));
    grid.step = std::stod(text.substr(second + 1));
    if (!(grid.step > 0.0)) throw std::invalid_argument("--lambda step must be positive");
    return grid;
}

std::vector<satfarey::Fraction> parse_beta_list(const std::string& text) {
    std::vector<satfarey::Fraction> betas;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string item =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        if (!item.empty()) betas.push_back(satfarey::parse_fraction(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (betas.empty()) throw std::invalid_argument("no thresholds in beta list");
    return betas;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Saturated Farey set toolkit: generation, structural verification, "
                 "counting and gap statistics."};
    app.require_subcommand(1);

    satfarey::RunConfig config;
    int64_t q_single = -1;
    std::vector<int64_t> q_list;
    std::string format = "csv";
    std::string betas_text;
    std::string lambda_text;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--out", config.out_path,
                        "Output file (default stdout; relative paths resolve against "
                        "$SATFAREY_OUT_DIR when set)");
        sub->add_option("--format", format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--parallelism", config.parallelism,
                        "Worker thread cap; changes runtime only, never output bytes");
    };

    CLI::App* generate = app.add_subcommand(
        "generate", "Saturated sequence of order Q: CSV rows num,den,h ascending, 0/1 first "
                    "(h(0/1)=1, h(1/1)=3), or the same data as JSON");
    generate->add_option("--Q", q_single, "Order Q (>= 3)")->required();
    add_common(generate);
    generate->callback([&] { config.command = satfarey::Command::generate; });

    CLI::App* tree = app.add_subcommand(
        "tree", "Mediant insertions with birth <= Q-max, ordered by (birth, value): CSV rows "
                "num,den,birth,lp_num,lp_den,rp_num,rp_den");
    tree->add_option("--Q-max", q_single, "Largest birth to include (>= 4)")->required();
    add_common(tree);
    tree->callback([&] { config.command = satfarey::Command::tree; });

    CLI::App* verify = app.add_subcommand(
        "verify", "Structural checks for all orders 3..Q-max (unimodularity, generator "
                  "agreement, neighbor identities, threshold propagation); one summary "
                  "line, exit 2 on failure");
    verify->add_option("--Q-max", q_single, "Largest order to check (>= 3)")->required();
    add_common(verify);
    verify->callback([&] { config.command = satfarey::Command::verify; });

    CLI::App* dist = app.add_subcommand(
        "dist", "Counts below each beta against the quadratic main term: CSV rows "
                "Q,beta,empirical,main_term,rel_error (Q-major), or JSON with per-beta "
                "decay verdicts");
    dist->add_option("--Q", q_single, "Single order Q (>= 3)");
    dist->add_option("--Q-list", q_list, "Comma-separated orders")->delimiter(',');
    dist->add_option("--betas", betas_text, "Comma-separated exact thresholds, e.g. 1/4,1/2,3/4")
        ->required();
    add_common(dist);
    dist->callback([&] { config.command = satfarey::Command::dist; });

    CLI::App* gaps = app.add_subcommand(
        "gaps", "Gap distribution at order Q: CSV rows lambda,G_empirical,G_theory,density. "
                "Gaps are scaled by the element count N(Q); G_theory is nan where "
                "lambda exceeds the eta cap times the count density A; density is the "
                "forward difference of G_empirical");
    gaps->add_option("--Q", q_single, "Order Q (>= 3)")->required();
    gaps->add_option("--lambda", lambda_text, "Grid start:stop:step (default 0:4:0.05)");
    gaps->add_option("--density-step", config.density_step,
                     "Step of the finite-difference density column (default 0.1)");
    gaps->add_option("--theory-eta-cap", config.theory_eta_cap,
                     "Largest lambda/A the theory column is evaluated for (default 4)");
    add_common(gaps);
    gaps->callback([&] { config.command = satfarey::Command::gaps; });

    CLI::App* theory = app.add_subcommand(
        "theory", "Predicted quantities as JSON: zeta2 and count density always; the run "
                  "constant c_r(eta) with --r/--eta; the limit gap CDF on --lambda; "
                  "main terms for --Q-list x --betas");
    theory->add_option("--r", config.r, "Run length r (>= 1)");
    theory->add_option("--eta", config.eta, "Scaled gap threshold eta");
    theory->add_option("--lambda", lambda_text, "Grid start:stop:step");
    theory->add_option("--theory-eta-cap", config.theory_eta_cap,
                       "Largest lambda/A the limit CDF is evaluated for (default 4)");
    theory->add_option("--Q", q_single, "Single order Q");
    theory->add_option("--Q-list", q_list, "Comma-separated orders")->delimiter(',');
    theory->add_option("--betas", betas_text, "Comma-separated exact thresholds");
    add_common(theory);
    theory->callback([&] { config.command = satfarey::Command::theory; });

    CLI::App* hcount = app.add_subcommand(
        "hcount", "Length-r runs with scaled gap <= eta: CSV rows "
                  "Q,r,eta,count,c_r_theory,ratio with ratio = (count/Q^2)/c_r, "
                  "1 when both sides vanish");
    hcount->add_option("--Q", q_single, "Single order Q");
    hcount->add_option("--Q-list", q_list, "Comma-separated orders")->delimiter(',');
    hcount->add_option("--r", config.r, "Run length r (>= 1)")->required();
    hcount->add_option("--eta", config.eta, "Scaled gap threshold eta")->required();
    add_common(hcount);
    hcount->callback([&] { config.command = satfarey::Command::hcount; });

    CLI::App* monoid = app.add_subcommand(
        "monoid", "Matrix monoid elements with trace <= Q: CSV rows a,b,c,d,trace in "
                  "(b, d, k) order, or JSON count {Q, beta_num, beta_den, count} of "
                  "elements whose fraction is <= --beta");
    monoid->add_option("--Q", q_single, "Trace bound Q (>= 3)")->required();
    monoid->add_option("--beta", betas_text, "Exact threshold for the JSON count (default 1/1)");
    add_common(monoid);
    monoid->callback([&] { config.command = satfarey::Command::monoid; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        config.qs = q_list;
        if (q_single >= 0) config.qs.push_back(q_single);
        config.format =
            format == "json" ? satfarey::OutputFormat::json : satfarey::OutputFormat::csv;
        if (!betas_text.empty()) config.betas = parse_beta_list(betas_text);
        if (!lambda_text.empty()) config.lambdas = parse_grid(lambda_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    return satfarey::run(config);
}
