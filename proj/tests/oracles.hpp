#pragma once

// Independent reference implementations used only by tests.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/walk.hpp"

namespace oracle {

using qwalk::cplx;

// Explicit unitary on sites [lo, hi], basis index 2*(j - lo) + c, c = 0 (L) / 1 (R).
struct DenseWalk {
    long lo, hi;
    Eigen::MatrixXcd U;

    int idx(long j, int c) const { return static_cast<int>(2 * (j - lo) + c); }
};

inline DenseWalk dense_walk(qwalk::WalkKind kind, const qwalk::CoinSequence& coins, long n) {
    using qwalk::WalkKind;
    DenseWalk w;
    w.lo = kind == WalkKind::D ? -n - 1 : 0;
    w.hi = n + 1;
    const int dim = static_cast<int>(2 * (w.hi - w.lo + 1));
    w.U = Eigen::MatrixXcd::Zero(dim, dim);
    for (long j = w.lo; j <= w.hi; ++j) {
        cplx g = (kind == WalkKind::H2 && j == 0) ? cplx(-1.0) : coins.gamma(j);
        double p = std::sqrt(std::max(0.0, 1.0 - std::norm(g)));
        // coin columns: e_L -> (p, -g), e_R -> (conj g, p)
        cplx col[2][2] = {{p, -g}, {std::conj(g), p}};
        for (int in = 0; in < 2; ++in) {
            // L part of the coin output moves left, R part moves right
            cplx l = col[in][0], r = col[in][1];
            if (j + 1 <= w.hi) w.U(w.idx(j + 1, 1), w.idx(j, in)) += r;
            if (kind == WalkKind::H1 && j == 0) {
                w.U(w.idx(0, 1), w.idx(j, in)) += l;
            } else if (j - 1 >= w.lo) {
                w.U(w.idx(j - 1, 0), w.idx(j, in)) += l;
            }
        }
    }
    return w;
}

// Columns of U^n applied to e_{0,L}, e_{0,R}.
inline Eigen::MatrixXcd dense_power_columns(const DenseWalk& w, long n) {
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Zero(w.U.rows(), 2);
    v(w.idx(0, 0), 0) = 1.0;
    v(w.idx(0, 1), 1) = 1.0;
    for (long t = 0; t < n; ++t) v = w.U * v;
    return v;
}

inline qwalk::Mat2 dense_xi(const DenseWalk& w, const Eigen::MatrixXcd& cols, long j) {
    if (j < w.lo || j > w.hi) return {};
    return {cols(w.idx(j, 0), 0), cols(w.idx(j, 0), 1), cols(w.idx(j, 1), 0), cols(w.idx(j, 1), 1)};
}

inline cplx random_gamma(std::mt19937_64& rng, double rmax = 0.95) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double rad = rmax * std::sqrt(u(rng));
    double ph = 2.0 * M_PI * u(rng);
    return std::polar(rad, ph);
}

inline qwalk::CoinSequence random_coins(std::mt19937_64& rng, int len, double rmax = 0.95) {
    std::vector<cplx> pos(len), neg(len);
    for (auto& g : pos) g = random_gamma(rng, rmax);
    for (auto& g : neg) g = random_gamma(rng, rmax);
    return qwalk::CoinSequence::explicit_list(pos, neg);
}

inline qwalk::Amp random_state(std::mt19937_64& rng) {
    std::normal_distribution<double> nd;
    cplx a(nd(rng), nd(rng)), b(nd(rng), nd(rng));
    double s = std::sqrt(std::norm(a) + std::norm(b));
    return {a / s, b / s};
}

// Plain Schur recursion over an explicit finite list (zero tail), no shared code.
inline cplx schur_finite(const std::vector<cplx>& g, cplx z) {
    cplx f = 0.0;
    for (int k = static_cast<int>(g.size()) - 1; k >= 0; --k) f = (g[k] + z * f) / (1.0 + std::conj(g[k]) * z * f);
    return f;
}

}  // namespace oracle
