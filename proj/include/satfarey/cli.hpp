#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "satfarey/fraction.hpp"

namespace satfarey {

enum class Command { generate, tree, verify, dist, gaps, theory, hcount, monoid };

enum class OutputFormat { csv, json };

// Inclusive lambda grid start, start+step, ..., up to stop.
struct LambdaGrid {
    double start = 0.0;
    double stop = 0.0;
    double step = 0.0;

    bool empty() const { return !(step > 0.0); }
    std::vector<double> values() const;
};

// One batch request. qs holds the single Q of generate/tree/gaps/monoid, the
// Q-max of verify, or the Q list of dist/hcount/theory.
struct RunConfig {
    Command command = Command::generate;
    std::vector<int64_t> qs;
    std::vector<Fraction> betas;
    LambdaGrid lambdas;
    double eta = 0.0;
    int r = 0;
    double density_step = 0.1;
    double theory_eta_cap = 4.0;
    std::string out_path;
    OutputFormat format = OutputFormat::csv;
    unsigned parallelism = 1;
};

// Executes the request, writing the report to `out`. Returns the process exit
// code: 0 success, 1 usage error, 2 verification failure.
int run(const RunConfig& config, std::ostream& out);

// Same, writing to config.out_path (stdout when empty). A relative path is
// resolved against $SATFAREY_OUT_DIR when that is set.
int run(const RunConfig& config);

} // namespace satfarey
