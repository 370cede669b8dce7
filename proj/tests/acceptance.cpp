// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "limit_checks.hpp"
#include "oracles.hpp"
#include "qwalk/cmv.hpp"
#include "qwalk/genfun.hpp"
#include "qwalk/homogeneous.hpp"
#include "qwalk/large_deviation.hpp"
#include "qwalk/power_law.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

struct Outcome {
    bool ok;
    std::string detail;
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

bool run(int id, const char* title, double budget, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok && sec < budget;
    std::printf("%s criterion %d: %s [%s] (%.2f s, budget %.0f s)\n", ok ? "PASS" : "FAIL", id, title, o.detail.c_str(),
                sec, budget);
    std::fflush(stdout);
    return ok;
}

Outcome c1_oracle_equivalence() {
    std::mt19937_64 rng(101);
    const int N = 30;
    double worst = 0.0;
    std::vector<CoinSequence> seqs{CoinSequence::power_law(3.0), CoinSequence::homogeneous(cplx(0.4, 0.3)),
                                   oracle::random_coins(rng, 40), oracle::random_coins(rng, 40)};
    for (auto kind : {WalkKind::H1, WalkKind::H2, WalkKind::D}) {
        for (auto& coins : seqs) {
            std::vector<PassageWeights> pw;
            for (long n = 0; n <= N; ++n) pw.push_back(passage_weights(n, kind, coins));
            auto dw = oracle::dense_walk(kind, coins, N);
            Eigen::MatrixXcd cols = Eigen::MatrixXcd::Zero(dw.U.rows(), 2);
            cols(dw.idx(0, 0), 0) = 1.0;
            cols(dw.idx(0, 1), 1) = 1.0;
            std::vector<Eigen::MatrixXcd> powers{cols};
            for (long n = 1; n <= N; ++n) powers.push_back(dw.U * powers.back());
            for (long j = kind == WalkKind::D ? -N : 0; j <= N; ++j) {
                auto ms = series_coefficients(coins, j, kind, N);
                for (long n = 0; n <= N; ++n) {
                    Mat2 s = coefficient(ms, n);
                    worst = std::max(worst, max_abs_diff(s, pw[n].at(j)));
                    worst = std::max(worst, max_abs_diff(s, oracle::dense_xi(dw, powers[n], j)));
                }
            }
        }
    }
    return {worst < 1e-10, "max |series - simulation| = " + num(worst)};
}

Outcome c2_bridge() {
    std::mt19937_64 rng(202);
    auto pl = CoinSequence::power_law(3.0);
    std::vector<CoinSequence> seqs{pl};
    for (int t = 0; t < 10; ++t) seqs.push_back(oracle::random_coins(rng, 25));
    double worst = 0.0;
    for (auto& coins : seqs) {
        for (int t = 0; t < 20; ++t) {
            cplx z = oracle::random_gamma(rng, 0.9);
            for (long j : {0L, 1L, 4L}) {
                worst = std::max(worst, bridge_check_side(coins, j, z, Side::Plus));
                worst = std::max(worst, bridge_check_side(coins, -j, z, Side::Minus));
            }
        }
    }
    return {worst < 1e-10, "max residual = " + num(worst)};
}

Outcome c3_cmv() {
    std::mt19937_64 rng(303);
    double worst = cmv_walk_correspondence(CoinSequence::power_law(3.0), 100, 50);
    worst = std::max(worst, cmv_walk_correspondence(CoinSequence::homogeneous(cplx(0.3, -0.5)), 100, 50));
    for (int t = 0; t < 5; ++t) worst = std::max(worst, cmv_walk_correspondence(oracle::random_coins(rng, 210), 100, 50));
    return {worst < 1e-12, "max entrywise deviation = " + num(worst)};
}

Outcome c4_spectral() {
    double mass_err = 0.0, w_err = 0.0, norm_err = 0.0;
    for (double r : {1.5, 2.0, 3.0}) {
        auto params = walk_schur_parameters(CoinSequence::power_law(r));
        auto cf = closed_forms(PowerLawModel(r));
        mass_err = std::max(mass_err, std::abs(mass_at(params, 0.0) - cf.mass()));
        auto mu = recover_measure(params, 256, {0.0});
        if (mu.masses.size() != 1 || !mu.failed_angles.empty()) return {false, "mass not isolated"};
        for (size_t i = 0; i < mu.theta.size(); ++i)
            w_err = std::max(w_err, std::abs(mu.weight[i] - cf.weight(mu.theta[i])));
        norm_err = std::max(norm_err, mu.normalization_residual);
    }
    bool ok = mass_err < 1e-4 && w_err < 1e-5 && norm_err < 1e-6;
    return {ok, "mass err " + num(mass_err) + ", weight err " + num(w_err) + ", |total - 1| " + num(norm_err)};
}

Outcome c5_localization() {
    PowerLawModel m(3.0);
    InitialCoinState phi(1.0, 0.0);
    const double targets[3] = {1.0 / 12.0, 16.0 / 27.0, 0.12448};
    const double tols[3] = {1e-3, 1e-3, 2e-3};
    bool ok = true;
    std::string detail;
    auto du = dual_distribution(evolve(phi.amp(), 1000, WalkKind::H1, m.coins()));
    for (long j = 0; j < 3; ++j) {
        // the quoted value must agree with the closed form too
        ok = ok && std::abs(bottom_profile(m, phi, j) - targets[j]) < tols[j];
        ok = ok && std::abs(du.at(j) - targets[j]) < tols[j];
        detail += "mu~(" + std::to_string(j) + ") = " + num(du.at(j)) + ", ";
    }
    auto st = evolve(phi.amp(), 2000, WalkKind::H1, m.coins());
    auto d = distribution(st);
    auto d2 = dual_distribution(st);
    double c0 = 0.0, c1 = 0.0;
    for (long j = 0; j < 40; ++j) {
        c0 += d.at(j);
        c1 += d2.at(j);
    }
    ok = ok && std::abs(c0 - 0.1) < 0.01 && std::abs(c1 - 0.9) < 0.01 && std::abs(c0 + c1 - 1.0) < 0.02;
    detail += "c0 partial " + num(c0) + ", c1 partial " + num(c1);
    return {ok, detail};
}

Outcome c6_decomposition() {
    double worst = 0.0;
    for (double r : {1.5, 3.0}) {
        PowerLawModel m(r);
        for (long n = 1; n <= 200; ++n) {
            auto pw = passage_weights(n, WalkKind::H1, m.coins());
            for (long j = 0; j <= n; ++j) {
                auto t = decomposition_terms(m, n, j);
                worst = std::max(worst, max_abs_diff(t.B + t.L + t.I, pw.at(j)));
            }
        }
    }
    return {worst < 1e-10, "max |B + L + I - Xi| = " + num(worst)};
}

Outcome c7_large_deviation() {
    PowerLawModel m(3.0);
    auto rep = ld_empirical(m, m.orthogonal_state(), {0.2, 0.4, 0.6}, {400, 800, 1200, 1600});
    bool ok = true;
    std::string detail;
    for (auto& row : rep.rows) {
        ok = ok && row.rel_error < 0.05;
        detail += "eps " + num(row.eps) + ": slope " + num(row.slope) + " vs " + num(row.theory) + "; ";
    }
    return {ok, detail + std::to_string(rep.digits10) + " digits"};
}

Outcome c8_h2() {
    PowerLawModel m(3.0);
    auto st = evolve({1.0, 0.0}, 1000, WalkKind::H2, m.coins());
    double o = distribution(st).at(0), b = dual_distribution(st).at(0);
    bool ok = std::abs(o - 1.0 / 16.0) < 2e-3 && std::abs(b - 0.75) < 2e-3;
    return {ok, "mu(0) = " + num(o) + ", bottom = " + num(b)};
}

Outcome c9_homogeneous() {
    cplx g(0.5, 0.0);
    Amp phi{1.0 / std::sqrt(2.0), cplx(0.0, 1.0 / std::sqrt(2.0))};
    HomogeneousLimits hd(g, phi, WalkKind::D);
    double tv = checks::weak_limit_tv(distribution(evolve(phi, 2000, WalkKind::D, CoinSequence::homogeneous(g))), hd, 50);
    cplx g1(1.0 / 3.0, 0.0);
    HomogeneousLimits h1(g1, {1.0, 0.0}, WalkKind::H1);
    auto d1 = distribution(evolve({1.0, 0.0}, 2000, WalkKind::H1, CoinSequence::homogeneous(g1)));
    double base = checks::decay_base(d1, 2, 12);
    double rel = std::abs(base / (h1.nu_I() * h1.nu_I()) - 1.0);
    return {tv < 0.05 && rel < 0.02, "TV " + num(tv) + ", decay base " + num(base) + " (rel err " + num(rel) + ")"};
}

Outcome c10_properties() {
    std::mt19937_64 rng(1010);
    const int trials = 20;
    double unit = 0.0, doubling = 0.0, schur = 0.0, theta = 0.0, cmv_unit = 0.0;
    bool support = true, parity = true;
    for (int t = 0; t < trials; ++t) {
        auto coins = oracle::random_coins(rng, 120, 0.95);
        Amp phi = oracle::random_state(rng);
        const long n = 100;
        for (auto kind : {WalkKind::H1, WalkKind::H2, WalkKind::D}) {
            Amp p = kind == WalkKind::H2 ? Amp{1.0, 0.0} : phi;
            auto st = evolve(p, n, kind, coins);
            unit = std::max(unit, std::abs(st.norm2() - 1.0));
            auto d = distribution(st);
            long lo = kind == WalkKind::D ? -n : 0;
            for (long j = d.lo; j <= d.hi(); ++j) {
                if ((j < lo || j > n) && d.at(j) != 0.0) support = false;
                if (kind != WalkKind::H1 && (n + j) % 2 != 0 && d.at(j) != 0.0) parity = false;
            }
        }
        cplx z = oracle::random_gamma(rng, 0.9);
        doubling = std::max(doubling, doubling_check(coins, t % 6, z));
        auto params = walk_schur_parameters(coins);
        for (int k = 0; k < 5; ++k)
            schur = std::max(schur, std::abs(schur_eval(params, k, oracle::random_gamma(rng, 0.99))) - 1.0);
        auto f = cmv_factors(coins, 60);
        auto c = build_cmv(coins, 60);
        theta = std::max(theta, max_abs_diff(multiply(f.L, f.M), c));
        cmv_unit = std::max(cmv_unit, interior_unitarity_residual(c));
    }
    bool ok = unit < 1e-12 && support && parity && doubling < 1e-10 && schur <= 1e-14 && theta < 1e-14 &&
              cmv_unit < 1e-12;
    return {ok, std::to_string(trials) + " trials: unitarity " + num(unit) + ", support " + (support ? "ok" : "bad") +
                    ", parity " + (parity ? "ok" : "bad") + ", doubling " + num(doubling) + ", Schur bound " +
                    num(std::max(schur, 0.0)) + ", LM " + num(theta) + ", CMV unitarity " + num(cmv_unit)};
}

}  // namespace

int main() {
    int failed = 0;
    failed += !run(1, "series coefficients = simulated passage weights, all kinds, n <= 30", 10, c1_oracle_equivalence);
    failed += !run(2, "bridge identity at 20 random z, power-law and 10 random sequences", 5, c2_bridge);
    failed += !run(3, "CMV matrix = two-step walk on the even subspace, M = 100", 5, c3_cmv);
    failed += !run(4, "spectral measure of the power-law walk", 30, c4_spectral);
    failed += !run(5, "origin and bottom localization at r = 3", 60, c5_localization);
    failed += !run(6, "bottom/origin/intermediate decomposition, n <= 200", 30, c6_decomposition);
    failed += !run(7, "large-deviation rate, r = 3", 60, c7_large_deviation);
    failed += !run(8, "half-line walk with reflecting origin, r = 3, n = 1000", 30, c8_h2);
    failed += !run(9, "homogeneous weak limit and localization decay", 60, c9_homogeneous);
    failed += !run(10, "randomized property suites", 60, c10_properties);
    std::printf("%d of 10 criteria passed\n", 10 - failed);
    return failed == 0 ? 0 : 1;
}
