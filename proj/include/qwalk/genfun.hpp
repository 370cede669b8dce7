#pragma once

#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/series.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class Side { Plus, Minus };
enum class TailSeed { Zero, Model };

struct GenfunOptions {
    TailSeed seed = TailSeed::Model;  // falls back to Zero when the sequence has no closed-form tail
    int depth = 0;                    // 0: adaptive
    double tol = 1e-15;
    int max_depth = 1 << 16;
};

// Continued-fraction g-function at fixed depth J from the given tail seed.
cplx g_plus(const CoinSequence& coins, long j, cplx z, int J, TailSeed seed = TailSeed::Zero);
cplx g_minus(const CoinSequence& coins, long j, cplx z, int J, TailSeed seed = TailSeed::Zero);

class GFunctionEvaluator {
public:
    GFunctionEvaluator(CoinSequence coins, Side side, GenfunOptions opts = {})
        : coins_(std::move(coins)), side_(side), opts_(opts) {}

    cplx operator()(long j, cplx z) const;
    // Values at sites 0..kmax (plus) or kmin..0 (minus), one backward pass.
    std::vector<cplx> range(long extent, cplx z) const;
    int last_depth() const { return last_depth_; }

private:
    CoinSequence coins_;
    Side side_;
    GenfunOptions opts_;
    mutable int last_depth_ = 0;
};

Mat2 first_return_gf(const CoinSequence& coins, long j, cplx z, WalkKind kind, Side side,
                     const GenfunOptions& opts = {});

Mat2 xi_tilde_0(const CoinSequence& coins, cplx z, WalkKind kind, const GenfunOptions& opts = {});
Mat2 xi_tilde_j(const CoinSequence& coins, cplx z, long j, WalkKind kind, const GenfunOptions& opts = {});

// lambda~^(+)_k(z) = z rho_k / (1 + gamma_k g+_k(z)), k >= 1.
cplx lambda_plus(const CoinSequence& coins, long k, cplx z, const GenfunOptions& opts = {});

// Coefficients of Xi~_j(z) up to z^N from the generating-function formulas in series arithmetic.
MatrixSeries series_coefficients(const CoinSequence& coins, long j, WalkKind kind, int N);

// max |Xi~_{j,H1}(z^2) - Xi~_{2j,D}(z)| with the D walk on doubled(coins).
double doubling_check(const CoinSequence& coins, long j, cplx z, const GenfunOptions& opts = {});

}  // namespace qwalk
