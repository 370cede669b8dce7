#include "qwalk/homogeneous.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

double sgn(double x) { return (x > 0.0) - (x < 0.0); }

// integral of h(x) f_K(x) over (0, rho) or (-rho, 0); x = rho sin t removes the edge singularity
template <class F>
double integrate_half(F h, cplx g, bool positive) {
    using boost::math::quadrature::gauss_kronrod;
    const double rho = std::sqrt(1.0 - std::norm(g)), a = std::abs(g);
    auto f = [&](double t) {
        double x = rho * std::sin(t);
        return h(x) * a / (M_PI * (1.0 - x * x));
    };
    return positive ? gauss_kronrod<double, 61>::integrate(f, 0.0, M_PI / 2, 15, 1e-14)
                    : gauss_kronrod<double, 61>::integrate(f, -M_PI / 2, 0.0, 15, 1e-14);
}

}  // namespace

double f_K(double x, cplx g) {
    double rho = std::sqrt(1.0 - std::norm(g));
    if (!(std::abs(x) < rho)) return 0.0;
    return std::abs(g) / (M_PI * (1.0 - x * x) * std::sqrt(rho * rho - x * x));
}

HomogeneousLimits::HomogeneousLimits(cplx gamma, Amp phi0, WalkKind kind) : g_(gamma), phi_(phi0), kind_(kind) {
    double a = std::abs(gamma);
    if (!(a > 0.0 && a < 1.0)) throw DomainError("homogeneous limits need 0 < |gamma| < 1");
    if (std::abs(std::norm(phi0[0]) + std::norm(phi0[1]) - 1.0) > 1e-12)
        throw PreconditionError("initial coin state must be a unit vector");
    if (kind == WalkKind::H2 && phi0[1] != 0.0) throw PreconditionError("H-QW(2) requires the initial coin state (1, 0)");
    const double re = gamma.real(), im = gamma.imag();
    rho_ = std::sqrt(1.0 - a * a);
    nu1_ = sgn(re) / rho_ * (std::sqrt(1.0 - im * im) - std::abs(re));
    nu2_ = rho_ / std::abs(1.0 + gamma);
    switch (kind) {
        case WalkKind::D: c_ = 0.0; break;
        case WalkKind::H2: {
            double s = a * a + re;
            c_ = s > 0.0 ? 2.0 * s / std::norm(1.0 + gamma) : 0.0;
            break;
        }
        case WalkKind::H1: {
            // the nu-weighted combination is nu*alpha + beta (checked against simulation)
            double v2 = nu1_ * nu1_;
            c_ = re * re / (1.0 - im * im) * std::norm(nu1_ * phi0[0] + phi0[1]) * (1.0 + v2) / (1.0 - v2);
            auto prof = [&](double x) { return x * x / (re * re + im * im * x * x); };
            h1_norm_ = integrate_half(prof, g_, true);
            break;
        }
    }
}

double HomogeneousLimits::f_K(double x) const { return qwalk::f_K(x, g_); }

double HomogeneousLimits::w(double x) const {
    const double re = g_.real(), im = g_.imag();
    const double a2 = std::norm(g_);
    switch (kind_) {
        case WalkKind::D: {
            const cplx al = phi_[0], be = phi_[1];
            return 1.0 - (std::norm(al) - std::norm(be) + 2.0 * (g_ * al * std::conj(be)).real() / rho_) * x;
        }
        case WalkKind::H2: {
            if (x < 0.0) return 0.0;
            double s = a2 + re;
            return 2.0 * a2 * (1.0 + re) * x * x / (s * s + im * im * x * x);
        }
        case WalkKind::H1: {
            if (x < 0.0) return 0.0;
            // profile x^2/(Re^2 + Im^2 x^2), mass fixed by c + int w f_K = 1
            return (1.0 - c_) * x * x / (re * re + im * im * x * x) / h1_norm_;
        }
    }
    return 0.0;
}

double HomogeneousLimits::density_mass() const {
    auto f = [&](double x) { return w(x); };
    return integrate_half(f, g_, false) + integrate_half(f, g_, true);
}

double HomogeneousLimits::localization(long j, long n) const {
    if (j < 0) return 0.0;
    const double re = g_.real(), im = g_.imag();
    switch (kind_) {
        case WalkKind::D: return 0.0;
        case WalkKind::H1: {
            double v2 = nu1_ * nu1_;
            return re * re / (1.0 - im * im) * std::norm(nu1_ * phi_[0] + phi_[1]) * (1.0 + v2) * std::pow(v2, j);
        }
        case WalkKind::H2: {
            if (im != 0.0) throw DomainError("H-QW(2) localization profile is only available for real gamma");
            double s = std::norm(g_) + re;
            if (s <= 0.0 || (n + j) % 2 != 0) return 0.0;
            double q = s / ((1.0 + re) * (1.0 + re));
            double v2 = nu2_ * nu2_;
            // four times the printed amplitude (matches simulation; even-site sum equals c)
            return 4.0 * q * q * (1.0 + (j >= 1 ? 1.0 / v2 : 0.0)) * std::pow(v2, j);
        }
    }
    return 0.0;
}

}  // namespace qwalk
