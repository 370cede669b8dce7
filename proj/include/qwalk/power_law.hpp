#pragma once

#include <array>
#include <utility>

#include "qwalk/coins.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

struct InitialCoinState {
    cplx alpha, beta;

    InitialCoinState(cplx a, cplx b);
    Amp amp() const { return {alpha, beta}; }
};

// Half-line walk with gamma_j = 1/(r + j).
class PowerLawModel {
public:
    explicit PowerLawModel(double r);

    double r() const { return r_; }
    double tau() const { return (1.0 - r_) / r_; }
    CoinSequence coins() const { return CoinSequence::power_law(r_); }

    std::array<double, 2> bE() const;
    std::array<double, 2> b0() const;
    std::array<double, 2> b1() const { return {1.0, 0.0}; }
    std::array<double, 2> l() const;

    // unit state with <phi, l> = 0
    InitialCoinState orthogonal_state() const;

private:
    double r_;
};

// H-QW(1) limits along the full sequence n -> infinity.
double origin_mass(const PowerLawModel& m, const InitialCoinState& phi);  // mu_inf^o
double origin_profile(const PowerLawModel& m, const InitialCoinState& phi, long j);
double bottom_profile(const PowerLawModel& m, const InitialCoinState& phi, long j);

struct LimitConstants {
    double c0, c1;
};

LimitConstants limit_constants(const PowerLawModel& m, const InitialCoinState& phi);

struct DecompositionTerms {
    Mat2 B, L, I;
};

// Exact split of Xi_n(j) (H-QW(1)) into bottom, origin and intermediate parts.
DecompositionTerms decomposition_terms(const PowerLawModel& m, long n, long j);

// lim_n L_j(n) and lim_n B_{n-k}(n) for k >= 2
Mat2 origin_term_limit(const PowerLawModel& m, long j);
Mat2 bottom_term_limit(const PowerLawModel& m, long k);

// H-QW(2) limits with the initial state (1, 0). The origin profile is the limit along
// the subsequence with n + j even; along n + j odd it is 0.
struct H2Profiles {
    double origin;
    double bottom;
};

H2Profiles h2_profiles(const PowerLawModel& m, long j);
double h2_origin_limit(const PowerLawModel& m, long n, long j);
LimitConstants h2_limit_constants(const PowerLawModel& m);

// Closed forms of the Schur, g- and Caratheodory functions and of the walk's spectral measure.
struct PowerLawClosedForms {
    double r;

    cplx schur(long j, cplx z) const;
    cplx g(long j, cplx z) const;
    cplx caratheodory(cplx z) const;
    double weight(double theta) const;
    double mass() const { return 1.0 / (2.0 * r - 1.0); }
    double mass_angle() const { return 0.0; }
};

PowerLawClosedForms closed_forms(const PowerLawModel& m);

}  // namespace qwalk
