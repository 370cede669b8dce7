#include "qwalk/walk.hpp"

#include <algorithm>
#include <numeric>

#include "qwalk/errors.hpp"

namespace qwalk {

std::string to_string(WalkKind k) {
    switch (k) {
        case WalkKind::H1: return "h1";
        case WalkKind::H2: return "h2";
        case WalkKind::D: return "d";
    }
    return "?";
}

WalkKind parse_walk_kind(const std::string& s) {
    std::string t = s;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
    if (t == "h1" || t == "hqw1") return WalkKind::H1;
    if (t == "h2" || t == "hqw2") return WalkKind::H2;
    if (t == "d" || t == "dqw") return WalkKind::D;
    throw DomainError("unknown walk kind: " + s);
}

cplx effective_gamma(WalkKind kind, const CoinSequence& coins, long j) {
    if (kind == WalkKind::H2 && j == 0) return -1.0;
    return coins.gamma(j);
}

Amp WalkState::at(long j) const {
    if (j < lo || j > hi()) return {0.0, 0.0};
    return amp[j - lo];
}

double WalkState::norm2() const {
    double s = 0.0;
    for (auto& a : amp) s += std::norm(a[0]) + std::norm(a[1]);
    return s;
}

WalkState initial_state(Amp phi0, WalkKind kind) {
    double nrm = std::norm(phi0[0]) + std::norm(phi0[1]);
    if (std::abs(nrm - 1.0) > 1e-12) throw PreconditionError("initial coin state must be a unit vector");
    if (kind == WalkKind::H2 && phi0[1] != 0.0)
        throw PreconditionError("H-QW(2) requires the initial coin state (1, 0)");
    WalkState s;
    s.kind = kind;
    s.amp = {phi0};
    return s;
}

namespace {

detail::Lattice<cplx> to_lattice(const WalkState& s) {
    detail::Lattice<cplx> lat;
    lat.lo = s.lo;
    for (auto& a : s.amp) {
        lat.L.push_back(a[0]);
        lat.R.push_back(a[1]);
    }
    return lat;
}

}  // namespace

WalkState step(const WalkState& state, const CoinSequence& coins) {
    auto lat = to_lattice(state);
    std::pair<cplx, cplx> gp;
    detail::lattice_step(lat, state.kind, [&](long j) -> const std::pair<cplx, cplx>& {
        cplx g = effective_gamma(state.kind, coins, j);
        gp = {g, rho_of(g)};
        return gp;
    });
    WalkState out;
    out.kind = state.kind;
    out.n = state.n + 1;
    out.lo = lat.lo;
    out.amp.resize(lat.L.size());
    for (size_t i = 0; i < lat.L.size(); ++i) out.amp[i] = {lat.L[i], lat.R[i]};
    return out;
}

WalkState evolve(Amp phi0, long n, WalkKind kind, const CoinSequence& coins) {
    if (n < 0) throw PreconditionError("evolve: n must be >= 0");
    WalkState s = initial_state(phi0, kind);
    auto lat = to_lattice(s);
    std::vector<std::pair<cplx, cplx>> cache;
    const long base = -n - 1;
    for (long j = base; j <= n + 1; ++j) {
        cplx g = effective_gamma(kind, coins, j);
        cache.emplace_back(g, rho_of(g));
    }
    detail::Lattice<cplx> scratch;
    for (long t = 0; t < n; ++t)
        detail::lattice_step(lat, scratch, kind, [&](long j) -> const std::pair<cplx, cplx>& { return cache[j - base]; });
    s.n = n;
    s.lo = lat.lo;
    s.amp.resize(lat.L.size());
    for (size_t i = 0; i < lat.L.size(); ++i) s.amp[i] = {lat.L[i], lat.R[i]};
    return s;
}

double Distribution::at(long j) const {
    if (j < lo || j > hi()) return 0.0;
    return p[j - lo];
}

double Distribution::total() const {
    // pairwise summation keeps results order-stable
    std::vector<double> v = p;
    while (v.size() > 1) {
        std::vector<double> w((v.size() + 1) / 2);
        for (size_t i = 0; i < w.size(); ++i) w[i] = v[2 * i] + (2 * i + 1 < v.size() ? v[2 * i + 1] : 0.0);
        v.swap(w);
    }
    return v.empty() ? 0.0 : v[0];
}

Distribution distribution(const WalkState& state) {
    Distribution d;
    d.n = state.n;
    d.lo = state.lo;
    d.p.reserve(state.amp.size());
    for (auto& a : state.amp) d.p.push_back(std::norm(a[0]) + std::norm(a[1]));
    return d;
}

Distribution dual_distribution(const WalkState& state) {
    Distribution base = distribution(state);
    Distribution d;
    d.n = base.n;
    d.dual = true;
    d.lo = base.n - base.hi();
    d.p.assign(base.p.rbegin(), base.p.rend());
    return d;
}

LocalMatrices local_matrices(cplx g) {
    double p = rho_of(g);
    cplx cg = std::conj(g);
    return {
        Mat2{p, cg, 0.0, 0.0},
        Mat2{0.0, 0.0, -g, p},
        Mat2{-g, p, 0.0, 0.0},
        Mat2{0.0, 0.0, p, cg},
    };
}

Mat2 PassageWeights::at(long j) const {
    if (j < lo || j > hi()) return Mat2{};
    return xi[j - lo];
}

PassageWeights passage_weights(long n, WalkKind kind, const CoinSequence& coins) {
    if (n < 0) throw PreconditionError("passage_weights: n must be >= 0");
    const bool half = kind != WalkKind::D;
    const long lo_site = half ? 0 : -n;
    std::vector<LocalMatrices> loc;
    for (long j = lo_site - 1; j <= n + 1; ++j) loc.push_back(local_matrices(effective_gamma(kind, coins, j)));
    auto lm = [&](long j) -> const LocalMatrices& { return loc[j - (lo_site - 1)]; };

    PassageWeights cur;
    cur.lo = 0;
    cur.xi = {identity2()};
    for (long t = 1; t <= n; ++t) {
        PassageWeights nxt;
        nxt.n = t;
        nxt.lo = half ? 0 : -t;
        nxt.xi.assign(t - nxt.lo + 1, Mat2{});
        for (long j = nxt.lo; j <= t; ++j) {
            Mat2 m = lm(j + 1).P * cur.at(j + 1);
            if (half && j == 0) {
                if (kind == WalkKind::H1) m += lm(0).S * cur.at(0);
            } else {
                m += lm(j - 1).Q * cur.at(j - 1);
            }
            nxt.xi[j - nxt.lo] = m;
        }
        cur = std::move(nxt);
    }
    cur.n = n;
    return cur;
}

}  // namespace qwalk
