#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

double max_amp_diff(const WalkState& s, const oracle::DenseWalk& w, const Eigen::MatrixXcd& cols, Amp phi) {
    double m = 0.0;
    for (long j = w.lo; j <= w.hi; ++j) {
        Amp ref = act(oracle::dense_xi(w, cols, j), phi);
        Amp got = s.at(j);
        m = std::max({m, std::abs(ref[0] - got[0]), std::abs(ref[1] - got[1])});
    }
    return m;
}

}  // namespace

TEST_CASE("build_coin") {
    Mat2 id = build_coin(0.0);
    CHECK(max_abs_diff(id, identity2()) == 0.0);

    Mat2 c = build_coin(1.0 / 3.0);
    double p = std::sqrt(8.0) / 3.0;
    CHECK(max_abs_diff(c, Mat2{p, 1.0 / 3.0, -1.0 / 3.0, p}) < 1e-15);

    Mat2 b = build_coin(-1.0);
    CHECK(max_abs_diff(b, Mat2{0.0, -1.0, 1.0, 0.0}) == 0.0);

    CHECK_THROWS_AS(build_coin(cplx(0.8, 0.7)), DomainError);

    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        cplx g = oracle::random_gamma(rng, 0.999);
        Mat2 h = build_coin(g);
        CHECK(max_abs_diff(adjoint(h) * h, identity2()) < 1e-14);
        CHECK(std::abs(h.a * h.d - h.b * h.c - 1.0) < 1e-14);
        double r = rho_of(g);
        CHECK(std::abs(r * r + std::norm(g) - 1.0) < 1e-14);
    }
}

TEST_CASE("coin sequences") {
    auto pl = CoinSequence::power_law(3.0);
    CHECK(pl.gamma(0) == cplx(1.0 / 3.0));
    CHECK(pl.gamma(4) == cplx(1.0 / 7.0));
    CHECK(pl.gamma(-2) == cplx(1.0 / 5.0));
    CHECK_THROWS_AS(CoinSequence::power_law(1.0), DomainError);
    CHECK_THROWS_AS(CoinSequence::explicit_list({0.5, 1.0}), DomainError);
    CHECK_THROWS_AS(CoinSequence::homogeneous(cplx(0.0, 1.0)), DomainError);

    auto ex = CoinSequence::explicit_list({0.1, 0.2}, {0.3});
    CHECK(ex.gamma(1) == cplx(0.2));
    CHECK(ex.gamma(2) == cplx(0.0));
    CHECK(ex.gamma(-1) == cplx(0.3));
    CHECK(ex.gamma(-2) == cplx(0.0));

    auto d = doubled(pl);
    CHECK(d.gamma(-1) == cplx(-1.0));
    CHECK(d.gamma(-2) == cplx(0.0));
    CHECK(d.gamma(4) == pl.gamma(2));
    CHECK(d.gamma(3) == cplx(0.0));
}

TEST_CASE("step: transparent coin on the line") {
    auto s = step(initial_state({0.6, cplx(0.0, 0.8)}, WalkKind::D), CoinSequence::zero());
    CHECK(s.at(-1)[0] == cplx(0.6));
    CHECK(s.at(1)[1] == cplx(0.0, 0.8));
    CHECK(std::abs(s.norm2() - 1.0) < 1e-15);
}

TEST_CASE("step: H1 self-loop at the origin") {
    cplx g0(0.3, 0.4);
    double p0 = rho_of(g0);
    auto coins = CoinSequence::explicit_list({g0});
    // L output rho0*1 returns to (0,R); R output -g0 moves to (1,R)
    auto s = step(initial_state({1.0, 0.0}, WalkKind::H1), coins);
    CHECK(std::abs(s.at(0)[1] - p0) < 1e-15);
    CHECK(std::abs(s.at(1)[1] + g0) < 1e-15);
    CHECK(s.at(0)[0] == cplx(0.0));
    auto t = step(initial_state({0.0, 1.0}, WalkKind::H1), coins);
    CHECK(std::abs(t.at(0)[1] - std::conj(g0)) < 1e-15);
    CHECK(std::abs(t.at(1)[1] - p0) < 1e-15);
}

TEST_CASE("evolve: trivial and two-step path expansion") {
    auto coins = CoinSequence::homogeneous(0.5);
    Amp phi{0.6, cplx(0.0, 0.8)};
    auto s0 = evolve(phi, 0, WalkKind::D, coins);
    CHECK(s0.amp.size() == 1);
    CHECK(s0.at(0) == phi);

    // four two-step paths by hand: amplitudes of (SC)^2
    Mat2 h = build_coin(0.5);
    Amp c1 = act(h, phi);  // (left-mover, right-mover) at 0
    Amp at_m1{c1[0], 0.0}, at_p1{0.0, c1[1]};
    Amp lm = act(h, at_m1), rp = act(h, at_p1);
    auto s2 = evolve(phi, 2, WalkKind::D, coins);
    CHECK(std::abs(s2.at(-2)[0] - lm[0]) < 1e-15);
    CHECK(std::abs(s2.at(0)[1] - lm[1]) < 1e-15);
    CHECK(std::abs(s2.at(0)[0] - rp[0]) < 1e-15);
    CHECK(std::abs(s2.at(2)[1] - rp[1]) < 1e-15);
}

TEST_CASE("evolve: preconditions") {
    CHECK_THROWS_AS(evolve({1.0, 1.0}, 3, WalkKind::D, CoinSequence::zero()), PreconditionError);
    CHECK_THROWS_AS(evolve({0.6, 0.8}, 3, WalkKind::H2, CoinSequence::zero()), PreconditionError);
    CHECK_THROWS_AS(evolve({1.0, 0.0}, -1, WalkKind::D, CoinSequence::zero()), PreconditionError);
}

TEST_CASE("distribution and dual") {
    auto s = evolve({0.0, 1.0}, 5, WalkKind::D, CoinSequence::zero());
    auto d = distribution(s);
    CHECK(d.at(5) == doctest::Approx(1.0).epsilon(1e-15));
    for (long j = -5; j < 5; ++j) CHECK(d.at(j) == 0.0);
    auto du = dual_distribution(s);
    CHECK(du.at(0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(du.at(5) == 0.0);
}

TEST_CASE("power-law H1: bottom localization at n = 1000") {
    auto s = evolve({1.0, 0.0}, 1000, WalkKind::H1, CoinSequence::power_law(3.0));
    auto du = dual_distribution(s);
    CHECK(std::abs(du.at(0) - 1.0 / 12.0) < 1e-3);
    CHECK(std::abs(du.at(1) - 16.0 / 27.0) < 1e-3);
    CHECK(std::abs(distribution(s).total() - 1.0) < 1e-12);
}

TEST_CASE("power-law H1: two-peak profile at n = 200") {
    const double a = 1.0 / std::sqrt(2.0);
    auto d = distribution(evolve({a, a}, 200, WalkKind::H1, CoinSequence::power_law(3.0)));
    double mid = 0.0;
    for (long j = 60; j <= 140; ++j) mid = std::max(mid, d.at(j));
    double edge = 0.0;
    for (long j = 190; j <= 200; ++j) edge = std::max(edge, d.at(j));
    CHECK(d.at(0) > 10.0 * mid);
    CHECK(edge > 10.0 * mid);
}

TEST_CASE("passage weights: trivial and bottom-edge closed forms") {
    auto p0 = passage_weights(0, WalkKind::H1, CoinSequence::zero());
    CHECK(max_abs_diff(p0.at(0), identity2()) == 0.0);
    CHECK(max_abs(p0.at(1)) == 0.0);

    const double r = 3.0;
    auto coins = CoinSequence::power_law(r);
    LocalMatrices lm = local_matrices(coins.gamma(0));
    auto check_edges = [&](long n) {
        auto pw = passage_weights(n, WalkKind::H1, coins);
        double top = std::sqrt((r / (r + 1)) * (1.0 + 1.0 / (r + n - 1)));
        double sub = std::sqrt(((r - 1) / r) * (1.0 + 1.0 / (r + n - 2)));
        CHECK(max_abs_diff(pw.at(n), top * lm.Q) < 1e-13);
        if (n >= 2) CHECK(max_abs_diff(pw.at(n - 1), sub * lm.S) < 1e-13);
    };
    for (long n = 1; n <= 60; ++n) check_edges(n);
    check_edges(10000);
}

TEST_CASE("property: unitarity on random coins") {
    std::mt19937_64 rng(11);
    const WalkKind kinds[] = {WalkKind::H1, WalkKind::D};
    for (int t = 0; t < 20; ++t) {
        auto coins = oracle::random_coins(rng, 502);
        auto phi = oracle::random_state(rng);
        for (auto k : kinds) {
            auto s = evolve(phi, 500, k, coins);
            CHECK(std::abs(s.norm2() - 1.0) < 1e-12);
        }
        auto s2 = evolve({1.0, 0.0}, 500, WalkKind::H2, coins);
        CHECK(std::abs(s2.norm2() - 1.0) < 1e-12);
    }
}

TEST_CASE("property: recursion equals evolution equals dense unitary") {
    std::mt19937_64 rng(12);
    const WalkKind kinds[] = {WalkKind::H1, WalkKind::H2, WalkKind::D};
    for (int t = 0; t < 20; ++t) {
        auto coins = oracle::random_coins(rng, 60);
        for (auto k : kinds) {
            Amp phi = k == WalkKind::H2 ? Amp{1.0, 0.0} : oracle::random_state(rng);
            const long n = 50;
            auto w = oracle::dense_walk(k, coins, n);
            Eigen::MatrixXcd cols = Eigen::MatrixXcd::Zero(w.U.rows(), 2);
            cols(w.idx(0, 0), 0) = 1.0;
            cols(w.idx(0, 1), 1) = 1.0;
            for (long m = 0; m <= n; ++m) {
                if (m % 10 == 0 || m < 4) {
                    auto s = evolve(phi, m, k, coins);
                    CHECK(max_amp_diff(s, w, cols, phi) < 1e-12);
                    auto pw = passage_weights(m, k, coins);
                    double e = 0.0;
                    for (long j = w.lo; j <= w.hi; ++j) {
                        Amp a = act(pw.at(j), phi), b = s.at(j);
                        e = std::max({e, std::abs(a[0] - b[0]), std::abs(a[1] - b[1])});
                    }
                    CHECK(e < 1e-12);
                }
                cols = w.U * cols;
            }
        }
    }
}

TEST_CASE("property: support confinement and H2 parity") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 20; ++t) {
        auto coins = oracle::random_coins(rng, 80);
        const long n = 40 + t;
        auto d = distribution(evolve(oracle::random_state(rng), n, WalkKind::D, coins));
        CHECK(d.lo >= -n);
        CHECK(d.hi() <= n);
        auto h = distribution(evolve(oracle::random_state(rng), n, WalkKind::H1, coins));
        CHECK(h.lo >= 0);
        CHECK(h.hi() <= n);
        auto h2 = distribution(evolve({1.0, 0.0}, n, WalkKind::H2, coins));
        CHECK(h2.lo >= 0);
        for (long j = h2.lo; j <= h2.hi(); ++j)
            if ((n + j) % 2 != 0) CHECK(h2.at(j) == 0.0);
    }
}
