#include "qwalk/power_law.hpp"

#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

InitialCoinState::InitialCoinState(cplx a, cplx b) : alpha(a), beta(b) {
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-14)
        throw PreconditionError("initial coin state must satisfy |alpha|^2 + |beta|^2 = 1");
}

PowerLawModel::PowerLawModel(double r) : r_(r) {
    if (!(r > 1.0)) throw DomainError("power-law model: r must be > 1");
}

std::array<double, 2> PowerLawModel::bE() const {
    return {1.0 - r_ - r_ * r_, (r_ - 1.0) * std::sqrt(r_ * r_ - 1.0)};
}

std::array<double, 2> PowerLawModel::b0() const {
    return {2.0 * r_ - 1.0, -(r_ - 1.0) * std::sqrt(r_ * r_ - 1.0)};
}

std::array<double, 2> PowerLawModel::l() const { return {std::sqrt(r_ - 1.0), std::sqrt(r_ + 1.0)}; }

InitialCoinState PowerLawModel::orthogonal_state() const {
    double s = std::sqrt(2.0 * r_);
    return {std::sqrt(r_ + 1.0) / s, -std::sqrt(r_ - 1.0) / s};
}

double origin_mass(const PowerLawModel& m, const InitialCoinState& phi) {
    const double r = m.r();
    cplx u = phi.alpha * std::sqrt(1.0 - 1.0 / r) + phi.beta * std::sqrt(1.0 + 1.0 / r);
    return 2.0 * r * r / ((1.0 + r) * (1.0 + r) * (1.0 - 2.0 * r) * (1.0 - 2.0 * r)) * std::norm(u);
}

double origin_profile(const PowerLawModel& m, const InitialCoinState& phi, long j) {
    if (j < 0) throw PreconditionError("origin_profile: j must be >= 0");
    const double r = m.r();
    return (r * r - 1.0) / ((r - 1.0 + j) * (r + 1.0 + j)) * origin_mass(m, phi);
}

namespace {

double bottom_tail_coefficient(const PowerLawModel& m, const InitialCoinState& phi) {
    const double r = m.r();
    cplx u = phi.alpha * (r * r + r - 1.0) / (r - 1.0) - phi.beta * std::sqrt(r * r - 1.0);
    return std::norm(u) / (r * (r + 1.0) * (r - 1.0) * (r - 1.0));
}

}  // namespace

double bottom_profile(const PowerLawModel& m, const InitialCoinState& phi, long j) {
    if (j < 0) throw PreconditionError("bottom_profile: j must be >= 0");
    const double r = m.r();
    if (j == 0) return r / (r + 1.0) * std::norm(-phi.alpha / r + phi.beta * std::sqrt(1.0 - 1.0 / (r * r)));
    if (j == 1) return (r - 1.0) / r * std::norm(phi.alpha * std::sqrt(1.0 - 1.0 / (r * r)) + phi.beta / r);
    return bottom_tail_coefficient(m, phi) * std::pow(m.tau(), 2.0 * j);
}

LimitConstants limit_constants(const PowerLawModel& m, const InitialCoinState& phi) {
    const double r = m.r();
    double c0 = origin_mass(m, phi) * (r * r - 1.0) * 0.5 * (1.0 / (r - 1.0) + 1.0 / r);
    double t2 = m.tau() * m.tau();
    double c1 = bottom_profile(m, phi, 0) + bottom_profile(m, phi, 1) +
                bottom_tail_coefficient(m, phi) * t2 * t2 / (1.0 - t2);
    return {c0, c1};
}

DecompositionTerms decomposition_terms(const PowerLawModel& model, long n, long j) {
    if (j < 0 || j > n) throw PreconditionError("decomposition_terms: need 0 <= j <= n");
    const double r = model.r();
    const double tau = model.tau();
    const double rho0 = std::sqrt(1.0 - 1.0 / (r * r));
    const double s = 1.0 / (2.0 * r - 1.0);
    DecompositionTerms t{};

    // Xi_n(j) is a finite combination of c_m = (1 - tau^{m+1}) / (2r - 1) (c_m = 0 for m < 0).
    // Each weight*c_m splits into a constant part (L), a tau part (B or I) and, for m <= -2,
    // a correction restoring c_m = 0 (B).
    enum class Part { B, I };
    auto add = [&](int row, int col, double w, long mm, Part tau_part) {
        t.L(row, col) += w * s;
        double tp = -w * std::pow(tau, static_cast<double>(mm + 1)) * s;
        (tau_part == Part::B ? t.B : t.I)(row, col) += tp;
        if (mm <= -2) t.B(row, col) += -w * (1.0 - std::pow(tau, static_cast<double>(mm + 1))) * s;
    };

    if (j == 0) {
        const double k = r / (r + 1.0);
        struct Term {
            int row, col;
            long shift;
            double w;
        };
        const Term terms[] = {
            {0, 0, 0, r + 1.0},        {0, 0, 1, -(r + 1.0) / r}, {0, 0, 2, -r},
            {0, 0, 3, 1.0},            {0, 1, 2, rho0},           {1, 0, 1, rho0 * (r + 1.0)},
            {1, 0, 3, -rho0 * r},      {1, 1, 0, r + 1.0},        {1, 1, 2, -(r - 1.0 / r)},
        };
        for (auto& x : terms) add(x.row, x.col, k * x.w, n - x.shift, Part::I);
        return t;
    }

    const double pref = r * std::sqrt(r / (r + 1.0));
    const double kr = pref / std::sqrt((r + j - 1.0) * (r + j));
    const double kl = pref / std::sqrt((r + j) * (r + j + 1.0));
    // L row
    add(0, 0, kl, n - j - 3, Part::I);
    add(0, 0, -kl / r, n - j - 2, Part::I);
    add(0, 1, kl * rho0, n - j - 2, Part::I);
    // R row: e(m) = (r+j)(c_m - c_{m-2}) + c_{m-2}; the (r+j)-enhanced pieces carry the bottom mode
    auto add_e = [&](int col, double w, long mm) {
        add(1, col, (r + j) * w, mm, Part::B);
        add(1, col, -(r + j) * w, mm - 2, Part::B);
        add(1, col, w, mm - 2, Part::I);
    };
    add_e(0, kr, n - j - 1);
    add_e(0, -kr / r, n - j);
    add_e(1, kr * rho0, n - j);
    return t;
}

Mat2 origin_term_limit(const PowerLawModel& m, long j) {
    const double r = m.r();
    double pref = std::sqrt(r * (r - 1.0) / ((r + 1.0) * (2.0 * r - 1.0) * (2.0 * r - 1.0))) / std::sqrt(r + j);
    double u = 1.0 / std::sqrt(r + 1.0 + j), v = 1.0 / std::sqrt(r - 1.0 + j);
    auto l = m.l();
    return {pref * u * l[0], pref * u * l[1], pref * v * l[0], pref * v * l[1]};
}

Mat2 bottom_term_limit(const PowerLawModel& m, long k) {
    if (k < 2) throw PreconditionError("bottom_term_limit: k must be >= 2");
    const double r = m.r();
    double pref = -std::pow(m.tau(), static_cast<double>(k)) / std::sqrt(r * (r + 1.0) * std::pow(r - 1.0, 4));
    auto b = m.bE();
    return {0.0, 0.0, pref * b[0], pref * b[1]};
}

H2Profiles h2_profiles(const PowerLawModel& m, long j) {
    if (j < 0) throw PreconditionError("h2_profiles: j must be >= 0");
    const double r = m.r();
    double origin = j == 0 ? 1.0 / ((r + 1.0) * (r + 1.0)) : (2.0 * r / (r + 1.0)) / ((r - 1.0 + j) * (r + 1.0 + j));
    double bottom = j == 0 ? 1.0 - 1.0 / (1.0 + r) : 0.0;
    return {origin, bottom};
}

double h2_origin_limit(const PowerLawModel& m, long n, long j) {
    return ((n + j) % 2 == 0) ? h2_profiles(m, j).origin : 0.0;
}

LimitConstants h2_limit_constants(const PowerLawModel& m) {
    // sum over either parity class of the origin profile telescopes to 1/(r+1)
    const double r = m.r();
    return {1.0 / (r + 1.0), r / (r + 1.0)};
}

cplx PowerLawClosedForms::schur(long j, cplx z) const { return 1.0 / ((r + j) - (r - 1.0 + j) * z); }

cplx PowerLawClosedForms::g(long j, cplx z) const {
    cplx z2 = z * z;
    return z2 / ((r + 1.0 + j) - (r + j) * z2);
}

cplx PowerLawClosedForms::caratheodory(cplx z) const {
    const double q = r / (r - 1.0);
    if (std::abs(z - 1.0) < 1e-14) throw SingularEvaluation("Caratheodory function: pole at z = 1");
    return (z + 1.0) * (z - q) / ((z - 1.0) * (z + q));
}

double PowerLawClosedForms::weight(double theta) const {
    double c2 = std::cos(theta / 2.0);
    c2 *= c2;
    return c2 / (c2 + 1.0 / (4.0 * r * (r - 1.0)));
}

PowerLawClosedForms closed_forms(const PowerLawModel& m) { return {m.r()}; }

}  // namespace qwalk
