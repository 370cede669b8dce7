#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "cli.hpp"

using namespace qwalk;
using qwalk::cli::RunConfig;

namespace {

void add_common(CLI::App* sub, RunConfig& c, std::string& walk, std::string& alpha, std::string& beta) {
    sub->add_option("--walk", walk, "h1 | h2 | d");
    sub->add_option("--coin", c.coin, "powerlaw:r | homogeneous:re,im | zero | file:path");
    sub->add_option("--n", c.n, "number of steps");
    sub->add_option("--alpha", alpha, "initial L amplitude, 're' or 're,im'");
    sub->add_option("--beta", beta, "initial R amplitude, 're' or 're,im'");
    sub->add_option("--format", c.format, "csv | json");
    sub->add_option("-o,--output", c.output, "output path (default stdout)");
    sub->add_option("--tol", c.tol, "tolerance override");
    sub->add_option("--depth", c.depth, "continued-fraction depth override");
    sub->add_option("--jobs", c.jobs, "worker threads");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coined quantum walks: simulation, spectra and limit theorems"};
    app.require_subcommand(0, 1);
    app.fallthrough();
    RunConfig c;
    std::string walk = "h1", alpha = "1", beta = "0", config_path;
    bool dump = false;
    app.add_option("--config", config_path, "load a JSON run config instead of flags");
    app.add_flag("--dump-config", dump, "print the parsed config as JSON and exit");

    auto* sim = app.add_subcommand("simulate", "site distribution after n steps");
    auto* spec = app.add_subcommand("spectrum", "spectral measure of the walk at the origin");
    auto* cmp = app.add_subcommand("compare", "simulated profiles against the limit theorems");
    auto* ld = app.add_subcommand("ldrate", "large-deviation rate of the bottom front");
    auto* ver = app.add_subcommand("verify", "identity checks, JSON report");
    for (auto* s : {sim, spec, cmp, ld, ver}) add_common(s, c, walk, alpha, beta);
    spec->add_option("--grid", c.grid, "number of angles");
    spec->add_option("--masses", c.masses, "candidate mass angles")->delimiter(',');
    spec->add_flag("--strict", c.strict, "exit 3 if any radial limit fails");
    cmp->add_option("--window", c.window, "profile rows and partial-sum window J");
    ld->add_option("--eps", c.eps, "deviation levels")->delimiter(',');
    ld->add_option("--ns", c.ns, "times")->delimiter(',');
    ld->add_flag("--auto-ortho", c.auto_ortho, "use the unit state orthogonal to l");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : cli::kConfigError;
    }

    try {
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw cli::ConfigError("cannot read config '" + config_path + "'");
            nlohmann::json j;
            try {
                in >> j;
            } catch (const nlohmann::json::exception& e) {
                throw cli::ConfigError(e.what());
            }
            c = cli::from_json(j);
        } else {
            if (app.get_subcommands().empty()) throw cli::ConfigError("a subcommand or --config is required");
            c.command = app.get_subcommands().front()->get_name();
            c.kind = parse_walk_kind(walk);
            c.alpha = cli::parse_complex(alpha);
            c.beta = cli::parse_complex(beta);
        }
        if (dump) {
            cli::validate(c);
            std::cout << cli::to_json(c).dump(2) << "\n";
            return cli::kOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return cli::kConfigError;
    }
    return cli::execute(c, std::cout, std::cerr);
}
