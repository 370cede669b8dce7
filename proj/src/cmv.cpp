#include "qwalk/cmv.hpp"

#include <algorithm>
#include <map>

#include "qwalk/errors.hpp"

namespace qwalk {

Mat2 theta_block(cplx g) {
    double p = rho_of(g);
    return {std::conj(g), p, p, -g};
}

cplx BandedMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || std::abs(i - j) > 2) return 0.0;
    return band_[i][j - i + 2];
}

void BandedMatrix::set(int i, int j, cplx v) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) return;
    if (std::abs(i - j) > 2) {
        if (v != 0.0) throw DomainError("banded matrix: entry outside the band");
        return;
    }
    band_[i][j - i + 2] = v;
}

BandedMatrix multiply(const BandedMatrix& x, const BandedMatrix& y) {
    const int n = x.size();
    BandedMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = std::max(0, i - 2); j <= std::min(n - 1, i + 2); ++j) {
            cplx s = 0.0;
            for (int k = std::max(0, i - 2); k <= std::min(n - 1, i + 2); ++k) s += x.at(i, k) * y.at(k, j);
            r.set(i, j, s);
        }
    return r;
}

double max_abs_diff(const BandedMatrix& x, const BandedMatrix& y) {
    double m = 0.0;
    for (int i = 0; i < x.size(); ++i)
        for (int j = std::max(0, i - 2); j <= std::min(x.size() - 1, i + 2); ++j)
            m = std::max(m, std::abs(x.at(i, j) - y.at(i, j)));
    return m;
}

namespace {

void check_params(const CoinSequence& coins, int M) {
    if (M < 1) throw PreconditionError("CMV: M must be >= 1");
    for (int j = 0; j <= 2 * M + 1; ++j)
        if (!(std::abs(coins.gamma(j)) < 1.0)) throw DomainError("CMV: interior parameter with |gamma| >= 1");
}

}  // namespace

BandedMatrix build_cmv(const CoinSequence& coins, int M) {
    check_params(coins, M);
    const int n = 2 * M + 1;
    auto g = [&](int j) -> cplx { return j < 0 ? cplx(-1.0) : coins.gamma(j); };
    auto p = [&](int j) -> double { return j < 0 ? 0.0 : coins.rho(j); };
    BandedMatrix c(n);
    for (int k = 0; 2 * k < n; ++k) {
        const int e = 2 * k, o = 2 * k + 1;
        c.set(e, e - 1, std::conj(g(e)) * p(e - 1));
        c.set(e, e, -std::conj(g(e)) * g(e - 1));
        c.set(e, e + 1, p(e) * std::conj(g(e + 1)));
        c.set(e, e + 2, p(e) * p(e + 1));
        c.set(o, e - 1, p(e) * p(e - 1));
        c.set(o, e, -p(e) * g(e - 1));
        c.set(o, e + 1, -g(e) * std::conj(g(e + 1)));
        c.set(o, e + 2, -g(e) * p(e + 1));
    }
    return c;
}

CMVFactors cmv_factors(const CoinSequence& coins, int M) {
    check_params(coins, M);
    const int n = 2 * M + 1;
    CMVFactors f{BandedMatrix(n), BandedMatrix(n)};
    auto put = [](BandedMatrix& b, int i, const Mat2& t) {
        b.set(i, i, t.a);
        b.set(i, i + 1, t.b);
        b.set(i + 1, i, t.c);
        b.set(i + 1, i + 1, t.d);
    };
    for (int k = 0; 2 * k < n; ++k) put(f.L, 2 * k, theta_block(coins.gamma(2 * k)));
    f.M.set(0, 0, 1.0);
    for (int k = 0; 2 * k + 1 < n; ++k) put(f.M, 2 * k + 1, theta_block(coins.gamma(2 * k + 1)));
    return f;
}

double interior_unitarity_residual(const BandedMatrix& c, int margin) {
    const int n = c.size();
    double m = 0.0;
    for (int i = 0; i + margin < n; ++i) {
        for (int i2 = i; i2 <= std::min(i + 4, n - 1 - margin); ++i2) {
            cplx s = 0.0;
            for (int j = std::max(0, i - 2); j <= std::min(n - 1, i + 2); ++j) s += c.at(i, j) * std::conj(c.at(i2, j));
            m = std::max(m, std::abs(s - (i == i2 ? 1.0 : 0.0)));
        }
    }
    return m;
}

namespace {

// sparse vector over (site, chirality) with chirality 0 = L, 1 = R
using SiteVec = std::map<std::pair<long, int>, cplx>;

SiteVec h2_step(const SiteVec& v, const CoinSequence& coins) {
    SiteVec out;
    for (auto& [key, amp] : v) {
        auto [j, c] = key;
        cplx g = j == 0 ? cplx(-1.0) : coins.gamma(j - 1);
        double p = rho_of(g);
        cplx l = c == 0 ? p * amp : std::conj(g) * amp;
        cplx r = c == 0 ? -g * amp : p * amp;
        if (j >= 1) out[{j - 1, 0}] += l;
        out[{j + 1, 1}] += r;
    }
    return out;
}

std::pair<long, int> even_basis(int i) {
    if (i == 0) return {0, 0};
    int m = (i + 1) / 2;
    return {2L * m, i % 2 == 1 ? 1 : 0};
}

std::pair<long, int> odd_basis(int i) { return {2L * (i / 2) + 1, i % 2 == 0 ? 1 : 0}; }

}  // namespace

double cmv_walk_correspondence(const CoinSequence& coins, int M, int window) {
    BandedMatrix c = build_cmv(coins, M);
    window = std::min(window, c.size() - 2);
    double m = 0.0;
    for (int b = 0; b < window; ++b) {
        SiteVec ve{{even_basis(b), 1.0}}, vo{{odd_basis(b), 1.0}};
        SiteVec ue = h2_step(h2_step(ve, coins), coins);
        SiteVec uo = h2_step(h2_step(vo, coins), coins);
        for (int a = 0; a < window; ++a) {
            auto fe = ue.find(even_basis(a));
            auto fo = uo.find(odd_basis(a));
            cplx xe = fe == ue.end() ? cplx(0.0) : fe->second;
            cplx xo = fo == uo.end() ? cplx(0.0) : fo->second;
            m = std::max(m, std::abs(xe - c.at(a, b)));
            m = std::max(m, std::abs(xo - c.at(b, a)));
        }
    }
    return m;
}

}  // namespace qwalk
