#pragma once

#include <map>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/mat2.hpp"

namespace qwalk {

enum class WalkKind { H1, H2, D };

std::string to_string(WalkKind k);
WalkKind parse_walk_kind(const std::string& s);

// Parameter of the coin actually used at site j (H2 replaces site 0 by gamma = -1).
cplx effective_gamma(WalkKind kind, const CoinSequence& coins, long j);

struct WalkState {
    WalkKind kind = WalkKind::D;
    long n = 0;
    long lo = 0;
    std::vector<Amp> amp;

    long hi() const { return lo + static_cast<long>(amp.size()) - 1; }
    Amp at(long j) const;
    double norm2() const;
};

WalkState initial_state(Amp phi0, WalkKind kind);
WalkState step(const WalkState& state, const CoinSequence& coins);
WalkState evolve(Amp phi0, long n, WalkKind kind, const CoinSequence& coins);

struct Distribution {
    long n = 0;
    long lo = 0;
    std::vector<double> p;
    bool dual = false;

    long hi() const { return lo + static_cast<long>(p.size()) - 1; }
    double at(long j) const;
    double total() const;
};

Distribution distribution(const WalkState& state);
// mu~_n(j) = mu_n(n - j)
Distribution dual_distribution(const WalkState& state);

struct LocalMatrices {
    Mat2 P, Q, R, S;
};

LocalMatrices local_matrices(cplx g);

struct PassageWeights {
    long n = 0;
    long lo = 0;
    std::vector<Mat2> xi;

    long hi() const { return lo + static_cast<long>(xi.size()) - 1; }
    Mat2 at(long j) const;
};

PassageWeights passage_weights(long n, WalkKind kind, const CoinSequence& coins);

namespace detail {

template <class T>
T conj_if_complex(const T& x) {
    if constexpr (std::is_same_v<T, cplx>) return std::conj(x);
    else return x;
}

// Dense two-component lattice; L[i], R[i] live at site lo + i.
template <class T>
struct Lattice {
    long lo = 0;
    std::vector<T> L, R;
};

// One application of U = S C. coin(j) returns (gamma_j, rho_j) in the amplitude type.
// `scratch` is reused between calls to avoid reallocating the amplitude arrays.
template <class T, class CoinFn>
void lattice_step(Lattice<T>& st, Lattice<T>& scratch, WalkKind kind, CoinFn coin) {
    const long size = static_cast<long>(st.L.size());
    const long new_lo = (kind == WalkKind::D) ? st.lo - 1 : (st.lo > 0 ? st.lo - 1 : 0);
    const long new_size = st.lo + size + 1 - new_lo;
    auto& L = scratch.L;
    auto& R = scratch.R;
    L.resize(new_size);
    R.resize(new_size);
    for (auto& x : L) x = T(0);
    for (auto& x : R) x = T(0);
    for (long i = 0; i < size; ++i) {
        const long j = st.lo + i;
        const auto& gp = coin(j);
        const auto& g = gp.first;
        const auto& p = gp.second;
        T out_l = p * st.L[i] + conj_if_complex(g) * st.R[i];
        T out_r = p * st.R[i] - g * st.L[i];
        R[j + 1 - new_lo] += out_r;
        if (j == 0 && kind == WalkKind::H1) {
            R[0 - new_lo] += out_l;
        } else if (j - 1 >= new_lo) {
            L[j - 1 - new_lo] += out_l;
        }
        // H2: out_l at site 0 vanishes identically when the walk starts with beta = 0.
    }
    scratch.lo = new_lo;
    std::swap(st, scratch);
}

template <class T, class CoinFn>
void lattice_step(Lattice<T>& st, WalkKind kind, CoinFn coin) {
    Lattice<T> scratch;
    lattice_step(st, scratch, kind, coin);
}

}  // namespace detail

}  // namespace qwalk
