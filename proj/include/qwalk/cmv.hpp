#pragma once

#include <array>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

// Theta_j = [[conj(g), rho], [rho, -g]]
Mat2 theta_block(cplx g);

// Square matrix of size N with entries only on |i - j| <= 2.
class BandedMatrix {
public:
    BandedMatrix() = default;
    explicit BandedMatrix(int n) : n_(n), band_(n, std::array<cplx, 5>{}) {}

    int size() const { return n_; }
    cplx at(int i, int j) const;
    void set(int i, int j, cplx v);

private:
    int n_ = 0;
    std::vector<std::array<cplx, 5>> band_;
};

// Product of two banded matrices whose bandwidths add up to at most 2.
BandedMatrix multiply(const BandedMatrix& x, const BandedMatrix& y);
double max_abs_diff(const BandedMatrix& x, const BandedMatrix& y);

struct CMVFactors {
    BandedMatrix L, M;
};

// Truncated CMV matrix of size 2M+1 from the explicit five-diagonal pattern.
BandedMatrix build_cmv(const CoinSequence& coins, int M);
CMVFactors cmv_factors(const CoinSequence& coins, int M);

// max deviation from orthonormality over rows at least `margin` away from the truncation edge
double interior_unitarity_residual(const BandedMatrix& c, int margin = 2);

// U^2 of H-QW(2) (site k >= 1 carries gamma_{k-1}) restricted to the even and odd
// subspaces versus C and C^T on the leading `window` indices.
double cmv_walk_correspondence(const CoinSequence& coins, int M, int window);

}  // namespace qwalk
