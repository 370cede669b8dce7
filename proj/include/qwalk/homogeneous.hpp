#pragma once

#include "qwalk/mat2.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Weak-limit and localization references for a constant coin parameter.
class HomogeneousLimits {
public:
    HomogeneousLimits(cplx gamma, Amp phi0, WalkKind kind);

    cplx gamma() const { return g_; }
    double rho() const { return rho_; }
    double nu_I() const { return nu1_; }
    double nu_II() const { return nu2_; }
    WalkKind kind() const { return kind_; }

    double c() const { return c_; }          // localized mass at x = 0
    double w(double x) const;                // density factor
    double f_K(double x) const;
    double density(double x) const { return w(x) * f_K(x); }
    double density_mass() const;             // integral of w f_K over (-rho, rho)

    // lim P(X_n = j); for H-QW(2) the limit along n with the given parity (real gamma only).
    double localization(long j, long n = 0) const;

private:
    cplx g_;
    Amp phi_;
    WalkKind kind_;
    double rho_, nu1_, nu2_, c_;
    double h1_norm_ = 0.0;
};

double f_K(double x, cplx gamma);

}  // namespace qwalk
