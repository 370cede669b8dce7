#pragma once

#include <utility>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/genfun.hpp"

namespace qwalk {

// Schur function f_j of the parameter sequence, evaluated by running the inverse
// Schur step downward from a tail seed.
cplx schur_eval(const CoinSequence& params, long j, cplx z, const GenfunOptions& opts = {});

// F(z) = (1 + z f(z)) / (1 - z f(z)) with f = f_0.
cplx caratheodory(const CoinSequence& params, cplx z, const GenfunOptions& opts = {});

// Schur parameters whose measure is the H-QW(1) walk's spectral measure at the origin.
CoinSequence walk_schur_parameters(const CoinSequence& coins);

struct PointMass {
    double theta;
    double mass;
};

struct RadialOptions {
    int k_min = 10;
    int k_max = 20;
    double limit_tol = 1e-6;
    GenfunOptions schur{};
};

// Radial boundary value of Re F after removing the Poisson terms of known masses; at a known
// mass angle, the limit of the weight from both sides.
// Throws SingularPoint if the ladder grows like a pole.
double ac_weight(const CoinSequence& params, double theta, const std::vector<PointMass>& masses = {},
                 const RadialOptions& opts = {});

// lim_{s -> 1} (1 - s)/2 F(s e^{i theta}); 0 when the limit vanishes.
double mass_at(const CoinSequence& params, double theta, const RadialOptions& opts = {});

struct SpectralMeasure {
    std::vector<double> theta;
    std::vector<double> weight;
    std::vector<PointMass> masses;
    double ac_total = 0.0;  // (1/2pi) * integral of the weight; NaN if the integration failed
    double normalization_residual = 0.0;
    std::vector<double> failed_angles;  // grid points where the radial limit did not settle
};

// Samples the weight on a uniform grid and locates masses among the candidate angles.
// jobs > 1 splits the grid into contiguous blocks; results do not depend on jobs.
SpectralMeasure recover_measure(const CoinSequence& params, int grid, const std::vector<double>& candidates,
                                const RadialOptions& opts = {}, int jobs = 1);

// (1/2pi) * integral over [0, 2pi) of ac_weight, adaptive Gauss-Kronrod.
double integrate_weight(const CoinSequence& params, const std::vector<PointMass>& masses,
                        const RadialOptions& opts = {});

// |g+_j(z) - z^2 f^{(conj g_{j+1}, ...)}(z^2)| for j >= 0, the minus-side analogue for j < 0.
double bridge_check(const CoinSequence& coins, long j, cplx z, const GenfunOptions& opts = {});
double bridge_check_side(const CoinSequence& coins, long j, cplx z, Side side, const GenfunOptions& opts = {});

}  // namespace qwalk
