#include "qwalk/genfun.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

struct ScalarCtx {
    cplx z;
    cplx konst(cplx c) const { return c; }
    cplx var() const { return z; }
    cplx div(cplx a, cplx b) const {
        if (std::abs(b) < 1e-14) throw SingularEvaluation("vanishing denominator");
        return a / b;
    }
};

struct SeriesCtx {
    int N;
    PowerSeries konst(cplx c) const { return PowerSeries::constant(N, c); }
    PowerSeries var() const { return PowerSeries::variable(N); }
    PowerSeries div(const PowerSeries& a, const PowerSeries& b) const { return a / b; }
};

// g+_k for k = 0..kmax, seeded at kmax + J.
template <class Ctx, class S>
std::vector<S> g_plus_values(const Ctx& ctx, const CoinSequence& coins, long kmax, int J, const S& seed) {
    const S z2 = ctx.var() * ctx.var();
    std::vector<S> out(kmax + 1);
    S g = seed;
    for (long k = kmax + J - 1; k >= 0; --k) {
        cplx gm = coins.gamma(k + 1);
        g = ctx.div(z2 * (g + std::conj(gm)), ctx.konst(1.0) + gm * g);
        if (k <= kmax) out[k] = g;
    }
    return out;
}

// g-_k for k = kmin..0 (out[i] = g-_{kmin + i}), seeded at kmin - J.
template <class Ctx, class S>
std::vector<S> g_minus_values(const Ctx& ctx, const CoinSequence& coins, long kmin, int J, const S& seed) {
    const S z2 = ctx.var() * ctx.var();
    std::vector<S> out(-kmin + 1);
    S g = seed;
    for (long k = kmin - J + 1; k <= 0; ++k) {
        cplx gm = coins.gamma(k - 1);
        g = ctx.div(z2 * (g - gm), ctx.konst(1.0) - std::conj(gm) * g);
        if (k >= kmin) out[k - kmin] = g;
    }
    return out;
}

cplx model_seed_plus(const CoinSequence& c, long site, cplx z) {
    cplx w = z * z;
    return w * std::conj(c.tail_forward(site + 1, std::conj(w)));
}

cplx model_seed_minus(const CoinSequence& c, long site, cplx z) {
    cplx w = z * z;
    return -w * c.tail_backward(1 - site, w);
}

std::vector<cplx> scalar_range(const CoinSequence& coins, Side side, long extent, cplx z, int J, TailSeed seed) {
    ScalarCtx ctx{z};
    if (side == Side::Plus) {
        cplx s = seed == TailSeed::Model ? model_seed_plus(coins, extent + J, z) : cplx(0.0);
        return g_plus_values(ctx, coins, extent, J, s);
    }
    cplx s = seed == TailSeed::Model ? model_seed_minus(coins, -extent - J, z) : cplx(0.0);
    return g_minus_values(ctx, coins, -extent, J, s);
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(a[i])));
    return m;
}

}  // namespace

cplx g_plus(const CoinSequence& coins, long j, cplx z, int J, TailSeed seed) {
    if (J < 1) throw PreconditionError("g_plus: depth must be >= 1");
    if (std::abs(z) >= 1.0) throw PreconditionError("g_plus: |z| must be < 1");
    ScalarCtx ctx{z};
    // shift so that the requested site is index 0 of the pass
    CoinSequence shifted = CoinSequence::custom(
        "shift", [&coins, j](long k) { return coins.gamma(k + j); });
    cplx s = seed == TailSeed::Model ? model_seed_plus(coins, j + J, z) : cplx(0.0);
    return g_plus_values(ctx, shifted, 0, J, s)[0];
}

cplx g_minus(const CoinSequence& coins, long j, cplx z, int J, TailSeed seed) {
    if (J < 1) throw PreconditionError("g_minus: depth must be >= 1");
    if (std::abs(z) >= 1.0) throw PreconditionError("g_minus: |z| must be < 1");
    ScalarCtx ctx{z};
    CoinSequence shifted = CoinSequence::custom(
        "shift", [&coins, j](long k) { return coins.gamma(k + j); });
    cplx s = seed == TailSeed::Model ? model_seed_minus(coins, j - J, z) : cplx(0.0);
    return g_minus_values(ctx, shifted, 0, J, s)[0];
}

std::vector<cplx> GFunctionEvaluator::range(long extent, cplx z) const {
    if (std::abs(z) >= 1.0) throw PreconditionError("g-function: |z| must be < 1");
    const bool has_tail = side_ == Side::Plus ? coins_.has_forward_tail() : coins_.has_backward_tail();
    const TailSeed seed = (opts_.seed == TailSeed::Model && has_tail) ? TailSeed::Model : TailSeed::Zero;
    if (opts_.depth > 0) {
        last_depth_ = opts_.depth;
        return scalar_range(coins_, side_, extent, z, opts_.depth, seed);
    }
    if (seed == TailSeed::Model) {
        last_depth_ = 1;
        return scalar_range(coins_, side_, extent, z, 1, seed);
    }
    int J = 8;
    auto prev = scalar_range(coins_, side_, extent, z, J, seed);
    while (J < opts_.max_depth) {
        J *= 2;
        auto cur = scalar_range(coins_, side_, extent, z, J, seed);
        if (max_diff(prev, cur) < opts_.tol) {
            last_depth_ = J;
            return cur;
        }
        prev = std::move(cur);
    }
    throw NumericalLimitError("g-function: adaptive depth reached the cap without converging");
}

cplx GFunctionEvaluator::operator()(long j, cplx z) const {
    if (side_ == Side::Plus) {
        if (j < 0) throw PreconditionError("g+: site must be >= 0");
        return range(j, z)[j];
    }
    if (j > 0) throw PreconditionError("g-: site must be <= 0");
    return range(-j, z)[0];
}

Mat2 first_return_gf(const CoinSequence& coins, long j, cplx z, WalkKind kind, Side side,
                     const GenfunOptions& opts) {
    LocalMatrices lm = local_matrices(effective_gamma(kind, coins, j));
    if (side == Side::Plus) {
        cplx g = GFunctionEvaluator(coins, Side::Plus, opts)(j, z);
        Mat2 f = g * lm.R;
        if (kind == WalkKind::H1 && j == 0) f += z * lm.S;
        return f;
    }
    cplx g = GFunctionEvaluator(coins, Side::Minus, opts)(j, z);
    return g * lm.S;
}

namespace {

template <class Ctx, class S>
Mat2T<S> xi0_impl(const Ctx& ctx, const CoinSequence& coins, WalkKind kind, const S& gp, const S& gm) {
    const S one = ctx.konst(1.0);
    const S z = ctx.var();
    switch (kind) {
        case WalkKind::H2:
            return {ctx.div(one, one - gp), ctx.konst(0.0), ctx.konst(0.0), one};
        case WalkKind::H1: {
            cplx g0 = coins.gamma(0);
            double p0 = rho_of(g0);
            S lam = one - std::conj(g0) * z + (z * -1.0 + g0) * gp;
            Mat2T<S> m{one - std::conj(g0) * z, p0 * gp, p0 * z, one + g0 * gp};
            return {ctx.div(m.a, lam), ctx.div(m.b, lam), ctx.div(m.c, lam), ctx.div(m.d, lam)};
        }
        case WalkKind::D: {
            cplx g0 = coins.gamma(0);
            double p0 = rho_of(g0);
            S den = one + g0 * gp - std::conj(g0) * gm - gp * gm;
            Mat2T<S> m{one - std::conj(g0) * gm, p0 * gp, p0 * gm, one + g0 * gp};
            return {ctx.div(m.a, den), ctx.div(m.b, den), ctx.div(m.c, den), ctx.div(m.d, den)};
        }
    }
    return {};
}

// gp[k] = g+_k (k = 0..max(j,0)), gm[i] = g-_{min(j,0)+i}.
template <class Ctx, class S>
Mat2T<S> xij_impl(const Ctx& ctx, const CoinSequence& coins, WalkKind kind, long j,
                  const std::vector<S>& gp, const std::vector<S>& gm) {
    const S one = ctx.konst(1.0);
    const S zero = ctx.konst(0.0);
    const S z = ctx.var();
    const long kmin = std::min(j, 0L);
    const S& gm0 = gm[-kmin];
    Mat2T<S> x0 = xi0_impl(ctx, coins, kind, gp[0], kind == WalkKind::D ? gm0 : zero);
    if (j == 0) return x0;
    const cplx g0 = effective_gamma(kind, coins, 0);
    const double p0 = rho_of(g0);
    if (j > 0) {
        auto lam = [&](long k) {
            cplx g = coins.gamma(k);
            return ctx.div(rho_of(g) * z, one + g * gp[k]);
        };
        S prod = one;
        for (long k = 1; k < j; ++k) prod = prod * lam(k);
        S top = prod * (lam(j) * gp[j]);
        S bot = prod * z;
        // column (top, bot) times row (-g0, p0), then Xi~_0
        Mat2T<S> outer{top * (-g0), top * cplx(p0), bot * (-g0), bot * cplx(p0)};
        return outer * x0;
    }
    if (kind != WalkKind::D) return {zero, zero, zero, zero};
    auto lam = [&](long k) {
        cplx g = coins.gamma(k);
        return ctx.div(rho_of(g) * z, one - std::conj(g) * gm[k - kmin]);
    };
    S prod = one;
    for (long k = -1; k > j; --k) prod = prod * lam(k);
    S top = prod * z;
    S bot = prod * (lam(j) * gm[j - kmin]);
    Mat2T<S> outer{top * cplx(p0), top * std::conj(g0), bot * cplx(p0), bot * std::conj(g0)};
    return outer * x0;
}

}  // namespace

Mat2 xi_tilde_0(const CoinSequence& coins, cplx z, WalkKind kind, const GenfunOptions& opts) {
    return xi_tilde_j(coins, z, 0, kind, opts);
}

Mat2 xi_tilde_j(const CoinSequence& coins, cplx z, long j, WalkKind kind, const GenfunOptions& opts) {
    if (std::abs(z) >= 1.0) throw PreconditionError("xi_tilde: |z| must be < 1");
    ScalarCtx ctx{z};
    auto gp = GFunctionEvaluator(coins, Side::Plus, opts).range(std::max(j, 0L), z);
    std::vector<cplx> gm(-std::min(j, 0L) + 1, 0.0);
    if (kind == WalkKind::D) gm = GFunctionEvaluator(coins, Side::Minus, opts).range(-std::min(j, 0L), z);
    return xij_impl(ctx, coins, kind, j, gp, gm);
}

cplx lambda_plus(const CoinSequence& coins, long k, cplx z, const GenfunOptions& opts) {
    cplx g = coins.gamma(k);
    cplx gp = GFunctionEvaluator(coins, Side::Plus, opts)(k, z);
    return ScalarCtx{z}.div(rho_of(g) * z, 1.0 + g * gp);
}

MatrixSeries series_coefficients(const CoinSequence& coins, long j, WalkKind kind, int N) {
    if (N < 0) throw PreconditionError("series_coefficients: N must be >= 0");
    SeriesCtx ctx{N};
    // each continued-fraction level carries a factor z^2, so depth N/2 + 1 makes the zero seed exact
    const int J = N / 2 + 2;
    const PowerSeries zero = ctx.konst(0.0);
    auto gp = g_plus_values(ctx, coins, std::max(j, 0L), J, zero);
    std::vector<PowerSeries> gm(-std::min(j, 0L) + 1, zero);
    if (kind == WalkKind::D) gm = g_minus_values(ctx, coins, std::min(j, 0L), J, zero);
    return xij_impl(ctx, coins, kind, j, gp, gm);
}

double doubling_check(const CoinSequence& coins, long j, cplx z, const GenfunOptions& opts) {
    if (j < 0) throw PreconditionError("doubling_check: site must be >= 0");
    Mat2 h1 = xi_tilde_j(coins, z * z, j, WalkKind::H1, opts);
    Mat2 d = xi_tilde_j(doubled(coins), z, 2 * j, WalkKind::D, opts);
    return max_abs_diff(h1, d);
}

}  // namespace qwalk
