#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qwalk/mat2.hpp"

namespace qwalk {

// Schur function of a parameter tail, f(k, z).
using TailFn = std::function<cplx(long, cplx)>;

class CoinSequence {
public:
    enum class Kind { PowerLaw, Homogeneous, Zero, Explicit, Custom };

    static CoinSequence power_law(double r);
    static CoinSequence homogeneous(cplx g);
    static CoinSequence zero();
    // nonneg[j] = gamma_j for j >= 0, neg[k-1] = gamma_{-k}; zero beyond the lists.
    static CoinSequence explicit_list(std::vector<cplx> nonneg, std::vector<cplx> neg = {});
    // Parameters with |gamma| = 1 are accepted here (boundary coins of derived sequences).
    static CoinSequence custom(std::string label, std::function<cplx(long)> gamma,
                               TailFn forward = {}, TailFn backward = {});

    cplx gamma(long j) const;
    double rho(long j) const;

    Kind kind() const { return kind_; }
    double r() const { return r_; }
    cplx homogeneous_gamma() const { return g_; }
    const std::vector<cplx>& nonneg_values() const { return pos_; }
    const std::vector<cplx>& neg_values() const { return neg_; }
    std::string describe() const;

    // Closed-form Schur functions of (gamma_k, gamma_{k+1}, ...) for k >= 0 and of
    // (gamma_{-k}, gamma_{-k-1}, ...) for k >= 1.
    bool has_forward_tail() const;
    bool has_backward_tail() const;
    cplx tail_forward(long k, cplx z) const;
    cplx tail_backward(long k, cplx z) const;

    // True when every gamma_j is real, so a real initial state stays real.
    bool is_real() const;

private:
    Kind kind_ = Kind::Zero;
    double r_ = 0.0;
    cplx g_{};
    std::vector<cplx> pos_, neg_;
    std::string label_;
    std::function<cplx(long)> fn_;
    TailFn fwd_, bwd_;
};

double rho_of(cplx g);

// H^(gamma) = [[rho, conj(gamma)], [-gamma, rho]] acting on (L, R).
Mat2 build_coin(cplx g);

// Fixed point of the Schur step for a constant parameter.
cplx homogeneous_schur(cplx g, cplx z);

// gamma'_{2k} = gamma_k, gamma'_{2k+1} = 0 (k >= 0), zero on negative sites.
CoinSequence interlaced(const CoinSequence& base);

// D-walk sequence for the doubling relation: interlaced on k >= 0, gamma_{-1} = -1.
CoinSequence doubled(const CoinSequence& base);

// Schur function of a finite parameter list starting at index k, zero tail.
cplx finite_schur(const std::vector<cplx>& g, long k, cplx z);

}  // namespace qwalk
