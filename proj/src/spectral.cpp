#include "qwalk/spectral.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <future>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

cplx schur_pass(const CoinSequence& params, long j, cplx z, int J, TailSeed seed) {
    cplx f = seed == TailSeed::Model ? params.tail_forward(j + J, z) : cplx(0.0);
    for (long k = j + J - 1; k >= j; --k) {
        cplx g = params.gamma(k);
        f = (g + z * f) / (1.0 + std::conj(g) * z * f);
    }
    return f;
}

struct Ladder {
    std::vector<double> h;
    std::vector<cplx> v;
};

// Two rounds of Richardson extrapolation in h = 1 - s for a geometric ladder (ratio 1/2).
cplx richardson(const std::vector<cplx>& v, cplx* spread) {
    const size_t n = v.size();
    std::vector<cplx> r1(n - 1), r2(n - 2);
    for (size_t i = 0; i + 1 < n; ++i) r1[i] = 2.0 * v[i + 1] - v[i];
    for (size_t i = 0; i + 1 < r1.size(); ++i) r2[i] = (4.0 * r1[i + 1] - r1[i]) / 3.0;
    if (spread) *spread = r2.back() - r2[r2.size() - 2];
    return r2.back();
}

}  // namespace

cplx schur_eval(const CoinSequence& params, long j, cplx z, const GenfunOptions& opts) {
    if (std::abs(z) > 1.0 - 1e-12) throw PreconditionError("schur_eval: |z| must be < 1");
    if (j < 0) throw PreconditionError("schur_eval: index must be >= 0");
    const TailSeed seed = (opts.seed == TailSeed::Model && params.has_forward_tail()) ? TailSeed::Model : TailSeed::Zero;
    if (opts.depth > 0) return schur_pass(params, j, z, opts.depth, seed);
    if (seed == TailSeed::Model) return schur_pass(params, j, z, 1, seed);
    int J = 8;
    cplx prev = schur_pass(params, j, z, J, seed);
    while (J < opts.max_depth) {
        J *= 2;
        cplx cur = schur_pass(params, j, z, J, seed);
        if (std::abs(cur - prev) < opts.tol) return cur;
        prev = cur;
    }
    throw NumericalLimitError("schur_eval: adaptive depth reached the cap without converging");
}

cplx caratheodory(const CoinSequence& params, cplx z, const GenfunOptions& opts) {
    cplx zf = z * schur_eval(params, 0, z, opts);
    return (1.0 + zf) / (1.0 - zf);
}

CoinSequence walk_schur_parameters(const CoinSequence& coins) { return interlaced(coins); }

namespace {

double radial_weight(const CoinSequence& params, double theta, const std::vector<PointMass>& masses,
                     const RadialOptions& opts) {
    std::vector<double> v;
    for (int k = opts.k_min; k <= opts.k_max; ++k) {
        double s = 1.0 - std::ldexp(1.0, -k);
        cplx z = std::polar(s, theta);
        double x = caratheodory(params, z, opts.schur).real();
        for (auto& pm : masses) {
            cplx t = std::polar(1.0, pm.theta);
            x -= pm.mass * ((t + z) / (t - z)).real();
        }
        v.push_back(x);
    }
    // a point mass makes Re F grow like 1/(1 - s), doubling at each rung
    const size_t n = v.size();
    if (std::abs(v[n - 1]) > 1e3 && v[n - 1] > 1.8 * v[n - 2] && v[n - 2] > 1.8 * v[n - 3])
        throw SingularPoint("ac_weight: radial limit diverges (point mass)");
    return richardson(std::vector<cplx>(v.begin(), v.end()), nullptr).real();
}

}  // namespace

double ac_weight(const CoinSequence& params, double theta, const std::vector<PointMass>& masses,
                 const RadialOptions& opts) {
    bool on_mass = false;
    for (auto& pm : masses) on_mass = on_mass || std::abs(std::remainder(theta - pm.theta, 2.0 * M_PI)) < 1e-12;
    if (!on_mass) return radial_weight(params, theta, masses, opts);
    // at a mass angle the error of the subtracted mass is amplified by 2/(1 - s); use the
    // continuous extension instead: symmetric averages at delta = 2^-5 .. 2^-8, Richardson in delta^2
    std::vector<double> a;
    for (int k = 5; k <= 8; ++k) {
        double d = std::ldexp(1.0, -k);
        a.push_back(0.5 * (radial_weight(params, theta + d, masses, opts) + radial_weight(params, theta - d, masses, opts)));
    }
    for (double f = 4.0; a.size() > 1; f *= 4.0) {
        for (size_t i = 0; i + 1 < a.size(); ++i) a[i] = (f * a[i + 1] - a[i]) / (f - 1.0);
        a.pop_back();
    }
    return a[0];
}

double mass_at(const CoinSequence& params, double theta, const RadialOptions& opts) {
    std::vector<cplx> v;
    for (int k = opts.k_min; k <= opts.k_max; ++k) {
        double h = std::ldexp(1.0, -k);
        cplx z = std::polar(1.0 - h, theta);
        v.push_back(0.5 * h * caratheodory(params, z, opts.schur));
    }
    cplx spread;
    cplx m = richardson(v, &spread);
    if (std::abs(spread) > opts.limit_tol * std::max(1.0, std::abs(m)))
        throw NumericalLimitError("mass_at: radial limit did not settle");
    return std::abs(m) < 1e-10 ? 0.0 : m.real();
}

double integrate_weight(const CoinSequence& params, const std::vector<PointMass>& masses,
                        const RadialOptions& opts) {
    using boost::math::quadrature::gauss_kronrod;
    auto f = [&](double th) { return ac_weight(params, th, masses, opts); };
    double err = 0.0;
    double v = gauss_kronrod<double, 61>::integrate(f, 0.0, 2.0 * M_PI, 15, 1e-12, &err);
    return v / (2.0 * M_PI);
}

SpectralMeasure recover_measure(const CoinSequence& params, int grid, const std::vector<double>& candidates,
                                const RadialOptions& opts, int jobs) {
    if (grid < 1) throw PreconditionError("recover_measure: grid must be >= 1");
    SpectralMeasure mu;
    for (double th : candidates) {
        double m = mass_at(params, th, opts);
        if (m > 1e-10) mu.masses.push_back({th, m});
    }
    mu.theta.resize(grid);
    mu.weight.resize(grid);
    auto block = [&](int b, int e) {
        for (int i = b; i < e; ++i) {
            double th = 2.0 * M_PI * i / grid;
            mu.theta[i] = th;
            try {
                mu.weight[i] = ac_weight(params, th, mu.masses, opts);
            } catch (const NumericalLimitError&) {
                mu.weight[i] = std::nan("");
            }
        }
    };
    jobs = std::max(1, std::min(jobs, grid));
    std::vector<std::future<void>> fut;
    for (int k = 1; k < jobs; ++k)
        fut.push_back(std::async(std::launch::async, block, grid * k / jobs, grid * (k + 1) / jobs));
    block(0, grid / jobs);
    for (auto& f : fut) f.get();
    for (int i = 0; i < grid; ++i)
        if (std::isnan(mu.weight[i])) mu.failed_angles.push_back(mu.theta[i]);
    try {
        mu.ac_total = integrate_weight(params, mu.masses, opts);
    } catch (const NumericalLimitError&) {
        // an undetected mass makes the weight non-integrable; the residual is then undefined
        mu.ac_total = std::nan("");
    }
    double total = mu.ac_total;
    for (auto& pm : mu.masses) total += pm.mass;
    mu.normalization_residual = std::abs(total - 1.0);
    return mu;
}

double bridge_check(const CoinSequence& coins, long j, cplx z, const GenfunOptions& opts) {
    return bridge_check_side(coins, j, z, j >= 0 ? Side::Plus : Side::Minus, opts);
}

double bridge_check_side(const CoinSequence& coins, long j, cplx z, Side side, const GenfunOptions& opts) {
    if (std::abs(z) >= 1.0) throw PreconditionError("bridge_check: |z| must be < 1");
    if ((side == Side::Plus && j < 0) || (side == Side::Minus && j > 0))
        throw PreconditionError("bridge_check: site on the wrong side");
    const cplx w = z * z;
    if (side == Side::Plus) {
        cplx g = GFunctionEvaluator(coins, Side::Plus, opts)(j, z);
        TailFn tail;
        if (coins.has_forward_tail())
            tail = [coins, j](long k, cplx x) { return std::conj(coins.tail_forward(j + 1 + k, std::conj(x))); };
        auto seq = CoinSequence::custom(
            "bridge+", [coins, j](long k) { return std::conj(coins.gamma(j + 1 + k)); }, tail);
        return std::abs(g - w * schur_eval(seq, 0, w, opts));
    }
    cplx g = GFunctionEvaluator(coins, Side::Minus, opts)(j, z);
    TailFn tail;
    if (coins.has_backward_tail())
        tail = [coins, j](long k, cplx x) { return -coins.tail_backward(1 - j + k, x); };
    auto seq = CoinSequence::custom("bridge-", [coins, j](long k) { return -coins.gamma(j - 1 - k); }, tail);
    return std::abs(g - w * schur_eval(seq, 0, w, opts));
}

}  // namespace qwalk
