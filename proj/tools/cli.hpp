#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwalk/coins.hpp"
#include "qwalk/walk.hpp"

namespace qwalk::cli {

enum ExitCode { kOk = 0, kCheckFailed = 1, kConfigError = 2, kNoConvergence = 3 };

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command = "simulate";
    WalkKind kind = WalkKind::H1;
    std::string coin = "powerlaw:3";
    long n = 100;
    cplx alpha = 1.0;
    cplx beta = 0.0;
    std::string format = "csv";
    std::string output;             // empty: stdout
    double tol = 0.0;               // 0: per-check defaults
    int depth = 0;                  // 0: QWALK_DEPTH or adaptive
    int grid = 256;                 // spectrum
    std::vector<double> masses;     // spectrum candidate angles; empty: {0, pi}
    bool strict = false;            // spectrum: non-convergent rows fail the run
    long window = 40;               // compare: profile rows and partial sums
    std::vector<double> eps{0.2, 0.4, 0.6};
    std::vector<long> ns{400, 800, 1200, 1600};
    bool auto_ortho = false;
    int jobs = 1;
};

nlohmann::json to_json(const RunConfig& c);
RunConfig from_json(const nlohmann::json& j);

// Rejects invalid combinations before any computation.
void validate(const RunConfig& c);

// powerlaw:r | homogeneous:re,im | zero | file:path
CoinSequence parse_coin_spec(const std::string& spec);
// "x" or "x,y"
cplx parse_complex(const std::string& s);
std::string format_complex(cplx z);

// The initial coin state, rescaled to unit norm when it is within 1e-3 of it.
Amp initial_amp(const RunConfig& c);

// Continued-fraction depth: explicit override, then QWALK_DEPTH, then adaptive.
int resolve_depth(const RunConfig& c);

// Runs the configured command, writing the result to out. Returns an ExitCode.
int run(const RunConfig& c, std::ostream& out);

// run() with errors mapped to exit codes and reported on err. The result goes to c.output
// when set (written only after the command finishes), otherwise to out.
int execute(const RunConfig& c, std::ostream& out, std::ostream& err);

int cmd_simulate(const RunConfig& c, std::ostream& out);
int cmd_spectrum(const RunConfig& c, std::ostream& out);
int cmd_compare(const RunConfig& c, std::ostream& out);
int cmd_ldrate(const RunConfig& c, std::ostream& out);
int cmd_verify(const RunConfig& c, std::ostream& out);

}  // namespace qwalk::cli
