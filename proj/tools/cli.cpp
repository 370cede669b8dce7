#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "qwalk/cmv.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/genfun.hpp"
#include "qwalk/homogeneous.hpp"
#include "qwalk/large_deviation.hpp"
#include "qwalk/power_law.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk::cli {

using nlohmann::json;

namespace {

std::string fmt(double x) {
    if (std::isnan(x)) return "nan";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

double parse_double(const std::string& s, const std::string& what) {
    size_t pos = 0;
    double v;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ConfigError("bad number for " + what + ": '" + s + "'");
    }
    if (pos != s.size() || !std::isfinite(v)) throw ConfigError("bad number for " + what + ": '" + s + "'");
    return v;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

json cjson(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

cplx cplx_from(const json& j) {
    if (j.is_number()) return j.get<double>();
    return {j.at("re").get<double>(), j.at("im").get<double>()};
}

GenfunOptions genfun_options(const RunConfig& c) {
    GenfunOptions o;
    o.depth = resolve_depth(c);
    return o;
}

json metadata(const RunConfig& c) {
    return {{"command", c.command}, {"walk", to_string(c.kind)}, {"coin", c.coin}, {"n", c.n},
            {"alpha", cjson(c.alpha)}, {"beta", cjson(c.beta)}};
}

void csv_metadata(const RunConfig& c, std::ostream& out) {
    out << "# command=" << c.command << "\n";
    out << "# walk=" << to_string(c.kind) << "\n";
    out << "# coin=" << c.coin << "\n";
    out << "# n=" << c.n << "\n";
    out << "# alpha=" << format_complex(c.alpha) << "\n";
    out << "# beta=" << format_complex(c.beta) << "\n";
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

}  // namespace

std::string format_complex(cplx z) { return fmt(z.real()) + "," + fmt(z.imag()); }

cplx parse_complex(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) return parse_double(trim(s), "complex value");
    return {parse_double(trim(s.substr(0, comma)), "real part"), parse_double(trim(s.substr(comma + 1)), "imaginary part")};
}

CoinSequence parse_coin_spec(const std::string& spec) {
    try {
        if (spec == "zero") return CoinSequence::zero();
        if (starts_with(spec, "powerlaw:")) {
            double r = parse_double(spec.substr(9), "power-law r");
            if (!(r > 1.0)) throw ConfigError("powerlaw: r must be > 1");
            return CoinSequence::power_law(r);
        }
        if (starts_with(spec, "homogeneous:")) {
            cplx g = parse_complex(spec.substr(12));
            if (!(std::abs(g) < 1.0)) throw ConfigError("homogeneous: |gamma| must be < 1");
            return CoinSequence::homogeneous(g);
        }
        if (starts_with(spec, "file:")) {
            std::string path = spec.substr(5);
            std::ifstream in(path);
            if (!in) throw ConfigError("cannot read coin file '" + path + "'");
            std::vector<cplx> vals;
            std::string line;
            long lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                line = trim(line);
                if (line.empty()) continue;
                std::istringstream ls(line);
                std::string re, im, extra;
                ls >> re >> im >> extra;
                if (!extra.empty()) throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 're im'");
                cplx g(parse_double(re, "coin re"), im.empty() ? 0.0 : parse_double(im, "coin im"));
                if (!(std::abs(g) < 1.0))
                    throw ConfigError(path + ":" + std::to_string(lineno) + ": |gamma| must be < 1");
                vals.push_back(g);
            }
            return CoinSequence::explicit_list(std::move(vals));
        }
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    throw ConfigError("unknown coin spec '" + spec + "' (powerlaw:r | homogeneous:re,im | zero | file:path)");
}

json to_json(const RunConfig& c) {
    return {{"command", c.command}, {"walk", to_string(c.kind)}, {"coin", c.coin},
            {"n", c.n},             {"alpha", cjson(c.alpha)},   {"beta", cjson(c.beta)},
            {"format", c.format},   {"output", c.output},        {"tol", c.tol},
            {"depth", c.depth},     {"grid", c.grid},            {"masses", c.masses},
            {"strict", c.strict},   {"window", c.window},        {"eps", c.eps},
            {"ns", c.ns},           {"auto_ortho", c.auto_ortho}, {"jobs", c.jobs}};
}

RunConfig from_json(const json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    RunConfig c;
    try {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string& k = it.key();
            const json& v = it.value();
            if (k == "command") c.command = v.get<std::string>();
            else if (k == "walk") c.kind = parse_walk_kind(v.get<std::string>());
            else if (k == "coin") c.coin = v.get<std::string>();
            else if (k == "n") c.n = v.get<long>();
            else if (k == "alpha") c.alpha = cplx_from(v);
            else if (k == "beta") c.beta = cplx_from(v);
            else if (k == "format") c.format = v.get<std::string>();
            else if (k == "output") c.output = v.get<std::string>();
            else if (k == "tol") c.tol = v.get<double>();
            else if (k == "depth") c.depth = v.get<int>();
            else if (k == "grid") c.grid = v.get<int>();
            else if (k == "masses") c.masses = v.get<std::vector<double>>();
            else if (k == "strict") c.strict = v.get<bool>();
            else if (k == "window") c.window = v.get<long>();
            else if (k == "eps") c.eps = v.get<std::vector<double>>();
            else if (k == "ns") c.ns = v.get<std::vector<long>>();
            else if (k == "auto_ortho") c.auto_ortho = v.get<bool>();
            else if (k == "jobs") c.jobs = v.get<int>();
            else throw ConfigError("unknown config key '" + k + "'");
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return c;
}

Amp initial_amp(const RunConfig& c) {
    double nrm = std::sqrt(std::norm(c.alpha) + std::norm(c.beta));
    if (std::abs(nrm - 1.0) > 1e-3) throw ConfigError("initial coin state must have unit norm");
    return {c.alpha / nrm, c.beta / nrm};
}

int resolve_depth(const RunConfig& c) {
    if (c.depth > 0) return c.depth;
    if (const char* env = std::getenv("QWALK_DEPTH")) {
        double d = parse_double(env, "QWALK_DEPTH");
        if (d < 1 || d != std::floor(d)) throw ConfigError("QWALK_DEPTH must be a positive integer");
        return static_cast<int>(d);
    }
    return 0;
}

void validate(const RunConfig& c) {
    static const std::vector<std::string> commands{"simulate", "spectrum", "compare", "ldrate", "verify"};
    if (std::find(commands.begin(), commands.end(), c.command) == commands.end())
        throw ConfigError("unknown command '" + c.command + "'");
    if (c.format != "csv" && c.format != "json") throw ConfigError("format must be csv or json");
    if (c.n < 0) throw ConfigError("n must be >= 0");
    if (c.tol < 0.0) throw ConfigError("tol must be >= 0");
    if (c.depth < 0) throw ConfigError("depth must be >= 0");
    if (c.grid < 1) throw ConfigError("grid must be >= 1");
    if (c.window < 1) throw ConfigError("window must be >= 1");
    if (c.jobs < 1) throw ConfigError("jobs must be >= 1");
    if (c.kind == WalkKind::H2 && c.beta != 0.0) throw ConfigError("H-QW(2) requires beta = 0");
    Amp phi = initial_amp(c);
    resolve_depth(c);
    auto coins = parse_coin_spec(c.coin);

    if (c.command == "compare") {
        if (coins.kind() == CoinSequence::Kind::PowerLaw) {
            if (c.kind == WalkKind::D) throw ConfigError("compare: power-law limits exist for h1 and h2 only");
        } else if (coins.kind() == CoinSequence::Kind::Homogeneous) {
            if (c.kind == WalkKind::H2 && coins.homogeneous_gamma().imag() != 0.0)
                throw ConfigError("compare: h2 localization profile needs a real gamma");
        } else {
            throw ConfigError("compare: coin must be powerlaw or homogeneous");
        }
    }
    if (c.command == "ldrate") {
        if (coins.kind() != CoinSequence::Kind::PowerLaw) throw ConfigError("ldrate: coin must be powerlaw");
        if (c.kind != WalkKind::H1) throw ConfigError("ldrate: walk must be h1");
        for (double e : c.eps)
            if (!(e >= 0.0 && e < 1.0)) throw ConfigError("ldrate: eps must lie in [0, 1)");
        if (c.eps.empty()) throw ConfigError("ldrate: need at least one eps");
        if (c.ns.size() < 2) throw ConfigError("ldrate: need at least two values of n");
        for (long n : c.ns)
            if (n < 1) throw ConfigError("ldrate: n values must be positive");
        if (!c.auto_ortho) {
            auto l = PowerLawModel(coins.r()).l();
            if (std::abs(phi[0] * l[0] + phi[1] * l[1]) > 1e-12)
                throw ConfigError("ldrate: initial state must be orthogonal to l (use --auto-ortho)");
        }
    }
}

int cmd_simulate(const RunConfig& c, std::ostream& out) {
    auto coins = parse_coin_spec(c.coin);
    auto st = evolve(initial_amp(c), c.n, c.kind, coins);
    auto d = distribution(st);
    auto du = dual_distribution(st);
    double total = d.total();
    // sites with exactly zero probability (parity, unreachable) are omitted
    if (c.format == "json") {
        json rows = json::array();
        for (long j = d.lo; j <= d.hi(); ++j)
            if (d.at(j) != 0.0)
                rows.push_back({{"j", j}, {"prob", d.at(j)}, {"dual_j", c.n - j}, {"dual_prob", du.at(c.n - j)}});
        json doc{{"metadata", metadata(c)}, {"rows", rows}, {"total", total}, {"total_error", std::abs(total - 1.0)}};
        out << doc.dump(2) << "\n";
        return kOk;
    }
    csv_metadata(c, out);
    out << "j,prob,dual_j,dual_prob\n";
    for (long j = d.lo; j <= d.hi(); ++j)
        if (d.at(j) != 0.0) out << j << "," << fmt(d.at(j)) << "," << (c.n - j) << "," << fmt(du.at(c.n - j)) << "\n";
    out << "# total=" << fmt(total) << "\n";
    out << "# total_error=" << fmt(std::abs(total - 1.0)) << "\n";
    return kOk;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out) {
    auto coins = parse_coin_spec(c.coin);
    auto params = walk_schur_parameters(coins);
    RadialOptions ro;
    ro.schur = genfun_options(c);
    if (c.tol > 0.0) ro.limit_tol = c.tol;
    std::vector<double> cand = c.masses;
    if (cand.empty()) cand = {0.0, M_PI};
    auto mu = recover_measure(params, c.grid, cand, ro, c.jobs);

    if (c.format == "json") {
        json w = json::array(), m = json::array();
        for (size_t i = 0; i < mu.theta.size(); ++i)
            w.push_back({{"theta", mu.theta[i]},
                         {"weight", std::isnan(mu.weight[i]) ? json(nullptr) : json(mu.weight[i])},
                         {"status", std::isnan(mu.weight[i]) ? "nonconvergent" : "ok"}});
        for (auto& pm : mu.masses) m.push_back({{"theta", pm.theta}, {"mass", pm.mass}});
        json doc{{"metadata", metadata(c)},
                 {"grid", c.grid},
                 {"weight", w},
                 {"masses", m},
                 {"ac_total", std::isnan(mu.ac_total) ? json(nullptr) : json(mu.ac_total)},
                 {"normalization_residual",
                  std::isnan(mu.normalization_residual) ? json(nullptr) : json(mu.normalization_residual)},
                 {"failed", mu.failed_angles.size()}};
        out << doc.dump(2) << "\n";
    } else {
        csv_metadata(c, out);
        out << "# grid=" << c.grid << "\n";
        out << "section,theta,value,status\n";
        for (size_t i = 0; i < mu.theta.size(); ++i)
            out << "weight," << fmt(mu.theta[i]) << "," << fmt(mu.weight[i]) << ","
                << (std::isnan(mu.weight[i]) ? "nonconvergent" : "ok") << "\n";
        for (auto& pm : mu.masses) out << "mass," << fmt(pm.theta) << "," << fmt(pm.mass) << ",ok\n";
        out << "# ac_total=" << fmt(mu.ac_total) << "\n";
        out << "# normalization_residual=" << fmt(mu.normalization_residual) << "\n";
        out << "# failed=" << mu.failed_angles.size() << "\n";
    }
    return c.strict && !mu.failed_angles.empty() ? kNoConvergence : kOk;
}

int cmd_compare(const RunConfig& c, std::ostream& out) {
    auto coins = parse_coin_spec(c.coin);
    Amp phi = initial_amp(c);
    auto st = evolve(phi, c.n, c.kind, coins);
    auto d = distribution(st);
    auto du = dual_distribution(st);

    std::function<double(long)> origin, bottom;
    double c0 = 0.0, c1 = 0.0;
    if (coins.kind() == CoinSequence::Kind::PowerLaw) {
        PowerLawModel m(coins.r());
        InitialCoinState s(phi[0], phi[1]);
        if (c.kind == WalkKind::H1) {
            origin = [m, s](long j) { return origin_profile(m, s, j); };
            bottom = [m, s](long j) { return bottom_profile(m, s, j); };
            auto lc = limit_constants(m, s);
            c0 = lc.c0;
            c1 = lc.c1;
        } else {
            const long n = c.n;
            origin = [m, n](long j) { return h2_origin_limit(m, n, j); };
            bottom = [m](long j) { return h2_profiles(m, j).bottom; };
            auto lc = h2_limit_constants(m);
            c0 = lc.c0;
            c1 = lc.c1;
        }
    } else {
        HomogeneousLimits h(coins.homogeneous_gamma(), phi, c.kind);
        const long n = c.n;
        origin = [h, n](long j) { return h.localization(j, n); };
        bottom = [](long) { return 0.0; };
        c0 = h.c();
    }

    struct Row {
        const char* profile;
        long j;
        double sim, pred;
    };
    std::vector<Row> rows;
    double c0p = 0.0, c1p = 0.0, maxres = 0.0;
    for (long j = 0; j < c.window; ++j) {
        rows.push_back({"origin", j, d.at(j), origin(j)});
        c0p += d.at(j);
    }
    for (long j = 0; j < c.window; ++j) {
        rows.push_back({"bottom", j, du.at(j), bottom(j)});
        c1p += du.at(j);
    }
    for (auto& r : rows) maxres = std::max(maxres, std::abs(r.sim - r.pred));

    if (c.format == "json") {
        json jr = json::array();
        for (auto& r : rows)
            jr.push_back({{"profile", r.profile}, {"j", r.j}, {"simulated", r.sim}, {"predicted", r.pred},
                          {"residual", std::abs(r.sim - r.pred)}});
        json doc{{"metadata", metadata(c)},
                 {"rows", jr},
                 {"summary",
                  {{"max_residual", maxres}, {"window", c.window}, {"c0_partial", c0p}, {"c1_partial", c1p},
                   {"c0", c0}, {"c1", c1}}}};
        out << doc.dump(2) << "\n";
        return kOk;
    }
    csv_metadata(c, out);
    out << "profile,j,simulated,predicted,residual\n";
    for (auto& r : rows)
        out << r.profile << "," << r.j << "," << fmt(r.sim) << "," << fmt(r.pred) << "," << fmt(std::abs(r.sim - r.pred))
            << "\n";
    out << "# summary max_residual=" << fmt(maxres) << " window=" << c.window << " c0_partial=" << fmt(c0p)
        << " c1_partial=" << fmt(c1p) << " c0=" << fmt(c0) << " c1=" << fmt(c1) << "\n";
    return kOk;
}

int cmd_ldrate(const RunConfig& c, std::ostream& out) {
    auto coins = parse_coin_spec(c.coin);
    PowerLawModel m(coins.r());
    Amp phi = initial_amp(c);
    InitialCoinState s = c.auto_ortho ? m.orthogonal_state() : InitialCoinState(phi[0], phi[1]);
    auto rep = ld_empirical(m, s, c.eps, c.ns, c.jobs);

    RunConfig echo = c;
    echo.alpha = s.alpha;
    echo.beta = s.beta;
    if (c.format == "json") {
        json rows = json::array();
        for (auto& r : rep.rows) {
            json samples = json::array();
            for (auto& x : r.samples)
                samples.push_back({{"n", x.n}, {"log_prob", x.log_p}, {"rate", x.log_p / static_cast<double>(x.n)}});
            rows.push_back({{"eps", r.eps}, {"samples", samples}, {"slope", r.slope}, {"theory", r.theory},
                            {"rel_error", r.rel_error}});
        }
        json doc{{"metadata", metadata(echo)}, {"digits10", rep.digits10}, {"note", rep.note}, {"rows", rows}};
        out << doc.dump(2) << "\n";
        return kOk;
    }
    csv_metadata(echo, out);
    out << "# digits10=" << rep.digits10 << "\n";
    out << "# note=" << rep.note << "\n";
    out << "section,eps,n,log_prob,rate,slope,theory,rel_error\n";
    for (auto& r : rep.rows) {
        for (auto& x : r.samples)
            out << "sample," << fmt(r.eps) << "," << x.n << "," << fmt(x.log_p) << ","
                << fmt(x.log_p / static_cast<double>(x.n)) << ",,,\n";
        out << "fit," << fmt(r.eps) << ",,,," << fmt(r.slope) << "," << fmt(r.theory) << "," << fmt(r.rel_error) << "\n";
    }
    return kOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
    auto coins = parse_coin_spec(c.coin);
    auto opts = genfun_options(c);
    Amp phi = initial_amp(c);
    json checks = json::array();
    bool all = true;
    auto add = [&](const std::string& name, double residual, double threshold) {
        if (c.tol > 0.0) threshold = c.tol;
        bool pass = std::isfinite(residual) && residual <= threshold;
        all = all && pass;
        checks.push_back({{"name", name}, {"residual", residual}, {"threshold", threshold}, {"pass", pass}});
    };
    const std::vector<cplx> zs{0.4, {0.3, 0.5}, {-0.6, 0.2}, {0.0, 0.85}, {-0.5, -0.5}};

    double br = 0.0, dbl = 0.0, sb = 0.0;
    for (cplx z : zs) {
        for (long j : {0L, 1L, 2L, 5L}) {
            br = std::max(br, bridge_check(coins, j, z, opts));
            dbl = std::max(dbl, doubling_check(coins, j, z, opts));
        }
        for (long j : {-1L, -3L}) br = std::max(br, bridge_check(coins, j, z, opts));
        sb = std::max(sb, std::abs(schur_eval(walk_schur_parameters(coins), 0, z, opts)) - 1.0);
    }
    add("bridge_identity", br, 1e-10);
    add("doubling_relation", dbl, 1e-10);
    add("schur_class_bound", std::max(sb, 0.0), 1e-14);
    add("cmv_correspondence", cmv_walk_correspondence(coins, 100, 50), 1e-12);

    const int N = 30;
    double ser = 0.0;
    std::vector<PassageWeights> pw;
    for (long n = 0; n <= N; ++n) pw.push_back(passage_weights(n, c.kind, coins));
    for (long j = c.kind == WalkKind::D ? -N : 0; j <= N; ++j) {
        auto ms = series_coefficients(coins, j, c.kind, N);
        for (long n = std::abs(j); n <= N; ++n) ser = std::max(ser, max_abs_diff(coefficient(ms, n), pw[n].at(j)));
    }
    add("series_vs_simulation", ser, 1e-10);

    auto st = evolve(phi, c.n, c.kind, coins);
    add("unitarity", std::abs(st.norm2() - 1.0), 1e-10);

    if (coins.kind() == CoinSequence::Kind::PowerLaw) {
        PowerLawModel m(coins.r());
        double dr = 0.0;
        for (long n = 1; n <= 100; ++n) {
            auto p = passage_weights(n, WalkKind::H1, coins);
            for (long j = 0; j <= n; ++j) {
                auto t = decomposition_terms(m, n, j);
                dr = std::max(dr, max_abs_diff(t.B + t.L + t.I, p.at(j)));
            }
        }
        add("power_law_decomposition", dr, 1e-10);
    }

    json doc{{"metadata", metadata(c)}, {"checks", checks}, {"pass", all}};
    out << doc.dump(2) << "\n";
    return all ? kOk : kCheckFailed;
}

int run(const RunConfig& c, std::ostream& out) {
    validate(c);
    if (c.command == "simulate") return cmd_simulate(c, out);
    if (c.command == "spectrum") return cmd_spectrum(c, out);
    if (c.command == "compare") return cmd_compare(c, out);
    if (c.command == "ldrate") return cmd_ldrate(c, out);
    return cmd_verify(c, out);
}

int execute(const RunConfig& c, std::ostream& out, std::ostream& err) {
    std::ostringstream buf;
    int code;
    try {
        code = run(c, buf);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const DomainError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const PreconditionError& e) {
        err << "config error: " << e.what() << "\n";
        return kConfigError;
    } catch (const NumericalLimitError& e) {
        err << "no convergence: " << e.what() << "\n";
        return kNoConvergence;
    } catch (const SingularEvaluation& e) {
        err << "no convergence: " << e.what() << "\n";
        return kNoConvergence;
    }
    if (c.output.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(c.output);
        if (!(f << buf.str()) || !f.flush()) {
            err << "cannot write '" << c.output << "'\n";
            return kConfigError;
        }
    }
    return code;
}

}  // namespace qwalk::cli
