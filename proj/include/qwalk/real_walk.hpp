#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qwalk/errors.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

// Site probabilities of a walk whose coins and initial state are real, in an
// arbitrary real type (used with multiprecision floats for deep tails).
template <class Real>
struct RealDistribution {
    long n = 0;
    long lo = 0;
    std::vector<Real> p;
};

template <class Real>
RealDistribution<Real> evolve_real(Real alpha, Real beta, long n, WalkKind kind,
                                   const std::function<Real(long)>& gamma) {
    if (kind == WalkKind::H2 && beta != 0) throw PreconditionError("H-QW(2) requires beta = 0");
    detail::Lattice<Real> lat;
    lat.L = {alpha};
    lat.R = {beta};
    const long base = -n - 1;
    std::vector<std::pair<Real, Real>> cache;
    for (long j = base; j <= n + 1; ++j) {
        Real g = (kind == WalkKind::H2 && j == 0) ? Real(-1) : gamma(j);
        Real one_minus = Real(1) - g * g;
        Real p = one_minus > 0 ? Real(sqrt(one_minus)) : Real(0);
        cache.emplace_back(g, p);
    }
    detail::Lattice<Real> scratch;
    for (long t = 0; t < n; ++t)
        detail::lattice_step(lat, scratch, kind, [&](long j) -> const std::pair<Real, Real>& { return cache[j - base]; });
    RealDistribution<Real> d;
    d.n = n;
    d.lo = lat.lo;
    d.p.resize(lat.L.size());
    for (size_t i = 0; i < lat.L.size(); ++i) d.p[i] = lat.L[i] * lat.L[i] + lat.R[i] * lat.R[i];
    return d;
}

}  // namespace qwalk
