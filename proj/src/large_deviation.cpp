#include "qwalk/large_deviation.hpp"

#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <cmath>
#include <future>
#include <limits>

#include "qwalk/errors.hpp"
#include "qwalk/real_walk.hpp"

namespace qwalk {

namespace {

using mp = boost::multiprecision::mpfr_float;

struct PrecisionGuard {
    unsigned saved;
    explicit PrecisionGuard(unsigned d) : saved(mp::default_precision()) { mp::default_precision(d); }
    ~PrecisionGuard() { mp::default_precision(saved); }
};

std::vector<double> log_tails(double r, double a, double b, long n, const std::vector<double>& eps) {
    const mp rr(r);
    // re-project onto l-perp at working precision; a double-precision residue would seed the origin mode
    const mp l0 = sqrt(rr - 1), l1 = sqrt(rr + 1), ln = sqrt(l0 * l0 + l1 * l1);
    mp ma(a), mb(b);
    const mp d = (ma * l0 + mb * l1) / ln;
    ma -= d * l0 / ln;
    mb -= d * l1 / ln;
    const mp nn = sqrt(ma * ma + mb * mb);
    ma /= nn;
    mb /= nn;
    auto gamma = [&](long j) -> mp { return mp(1) / (rr + mp(j < 0 ? -j : j)); };
    auto dist = evolve_real<mp>(ma, mb, n, WalkKind::H1, gamma);
    std::vector<double> out;
    for (double e : eps) {
        mp s(0);
        for (size_t i = 0; i < dist.p.size(); ++i) {
            long x = dist.lo + static_cast<long>(i);
            if (static_cast<double>(n - x) > n * e + 1e-9) s += dist.p[i];
        }
        out.push_back(s > 0 ? static_cast<double>(log(s)) : -std::numeric_limits<double>::infinity());
    }
    return out;
}

}  // namespace

double ld_rate(const PowerLawModel& m, double eps) {
    if (eps < 0.0 || eps >= 1.0) throw PreconditionError("ld_rate: need 0 <= eps < 1");
    return eps == 0.0 ? 0.0 : eps * std::log(m.tau() * m.tau());
}

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

LdReport ld_empirical(const PowerLawModel& m, const InitialCoinState& phi, const std::vector<double>& eps,
                      const std::vector<long>& ns, int jobs) {
    if (ns.size() < 2) throw PreconditionError("ld_empirical: need at least two times");
    for (double e : eps)
        if (e < 0.0 || e >= 1.0) throw PreconditionError("ld_empirical: need 0 <= eps < 1");
    auto l = m.l();
    if (std::abs(phi.alpha * l[0] + phi.beta * l[1]) > 1e-12)
        throw PreconditionError("ld_empirical: initial state must be orthogonal to l");
    // strip a global phase; the propagation below is real
    cplx ph = std::abs(phi.alpha) > std::abs(phi.beta) ? phi.alpha : phi.beta;
    ph /= std::abs(ph);
    cplx a = phi.alpha / ph, b = phi.beta / ph;
    if (std::abs(a.imag()) > 1e-14 || std::abs(b.imag()) > 1e-14)
        throw PreconditionError("ld_empirical: initial state must be real up to a global phase");

    // roundoff feeds the origin mode at ~10^(-2*digits); the tail is ~|tau|^(2 n eps)
    const long nmax = *std::max_element(ns.begin(), ns.end());
    LdReport rep;
    rep.digits10 = static_cast<unsigned>(std::ceil(nmax * std::log10(1.0 / std::abs(m.tau())))) + 40;
    rep.note = "log-domain accumulation; multiprecision propagation at " + std::to_string(rep.digits10) + " digits";
    PrecisionGuard guard(rep.digits10);

    std::vector<std::vector<double>> logs(ns.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < ns.size(); ++i) logs[i] = log_tails(m.r(), a.real(), b.real(), ns[i], eps);
    } else {
        std::vector<std::future<std::vector<double>>> fut;
        for (size_t i = 0; i < ns.size(); ++i)
            fut.push_back(std::async(std::launch::async, log_tails, m.r(), a.real(), b.real(), ns[i], eps));
        for (size_t i = 0; i < ns.size(); ++i) logs[i] = fut[i].get();
    }

    for (size_t k = 0; k < eps.size(); ++k) {
        LdEstimate est;
        est.eps = eps[k];
        std::vector<double> x, y;
        for (size_t i = 0; i < ns.size(); ++i) {
            est.samples.push_back({ns[i], logs[i][k]});
            x.push_back(static_cast<double>(ns[i]));
            y.push_back(logs[i][k]);
        }
        est.slope = least_squares_slope(x, y);
        est.theory = ld_rate(m, eps[k]);
        est.rel_error = est.theory == 0.0 ? std::abs(est.slope) : std::abs(est.slope - est.theory) / std::abs(est.theory);
        rep.rows.push_back(est);
    }
    return rep;
}

}  // namespace qwalk
