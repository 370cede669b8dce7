#include "qwalk/coins.hpp"

#include <cmath>
#include <sstream>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

void check_interior(cplx g, const char* what) {
    if (!(std::abs(g) < 1.0))
        throw DomainError(std::string(what) + ": |gamma| must be < 1");
}

}  // namespace

double rho_of(cplx g) {
    double s = 1.0 - std::norm(g);
    return s > 0.0 ? std::sqrt(s) : 0.0;
}

Mat2 build_coin(cplx g) {
    if (std::abs(g) > 1.0 + 1e-15) throw DomainError("build_coin: |gamma| > 1");
    double p = rho_of(g);
    return {p, std::conj(g), -g, p};
}

cplx homogeneous_schur(cplx g, cplx z) {
    if (g == 0.0) return 0.0;
    if (z == 0.0) return g;
    cplx q = 1.0 - z;
    cplx s = std::sqrt(q * q + 4.0 * std::norm(g) * z);
    cplx d1 = q + s, d2 = q - s;
    return std::abs(d1) >= std::abs(d2) ? 2.0 * g / d1 : 2.0 * g / d2;
}

cplx finite_schur(const std::vector<cplx>& g, long k, cplx z) {
    cplx f = 0.0;
    for (long i = static_cast<long>(g.size()) - 1; i >= k && i >= 0; --i)
        f = (g[i] + z * f) / (1.0 + std::conj(g[i]) * z * f);
    return f;
}

CoinSequence CoinSequence::power_law(double r) {
    if (!(r > 1.0)) throw DomainError("power-law: r must be > 1");
    CoinSequence c;
    c.kind_ = Kind::PowerLaw;
    c.r_ = r;
    return c;
}

CoinSequence CoinSequence::homogeneous(cplx g) {
    check_interior(g, "homogeneous");
    CoinSequence c;
    c.kind_ = Kind::Homogeneous;
    c.g_ = g;
    return c;
}

CoinSequence CoinSequence::zero() { return {}; }

CoinSequence CoinSequence::explicit_list(std::vector<cplx> nonneg, std::vector<cplx> neg) {
    for (auto g : nonneg) check_interior(g, "explicit");
    for (auto g : neg) check_interior(g, "explicit");
    CoinSequence c;
    c.kind_ = Kind::Explicit;
    c.pos_ = std::move(nonneg);
    c.neg_ = std::move(neg);
    return c;
}

CoinSequence CoinSequence::custom(std::string label, std::function<cplx(long)> gamma,
                                  TailFn forward, TailFn backward) {
    CoinSequence c;
    c.kind_ = Kind::Custom;
    c.label_ = std::move(label);
    c.fn_ = std::move(gamma);
    c.fwd_ = std::move(forward);
    c.bwd_ = std::move(backward);
    return c;
}

cplx CoinSequence::gamma(long j) const {
    switch (kind_) {
        case Kind::PowerLaw: return 1.0 / (r_ + static_cast<double>(j < 0 ? -j : j));
        case Kind::Homogeneous: return g_;
        case Kind::Zero: return 0.0;
        case Kind::Explicit:
            if (j >= 0) return j < static_cast<long>(pos_.size()) ? pos_[j] : 0.0;
            return -j - 1 < static_cast<long>(neg_.size()) ? neg_[-j - 1] : 0.0;
        case Kind::Custom: return fn_(j);
    }
    return 0.0;
}

double CoinSequence::rho(long j) const { return rho_of(gamma(j)); }

std::string CoinSequence::describe() const {
    std::ostringstream os;
    os.precision(17);
    switch (kind_) {
        case Kind::PowerLaw: os << "powerlaw:" << r_; break;
        case Kind::Homogeneous: os << "homogeneous:" << g_.real() << "," << g_.imag(); break;
        case Kind::Zero: os << "zero"; break;
        case Kind::Explicit: os << "explicit[" << pos_.size() << "," << neg_.size() << "]"; break;
        case Kind::Custom: os << label_; break;
    }
    return os.str();
}

bool CoinSequence::has_forward_tail() const {
    return kind_ != Kind::Custom || static_cast<bool>(fwd_);
}

bool CoinSequence::has_backward_tail() const {
    return kind_ != Kind::Custom || static_cast<bool>(bwd_);
}

cplx CoinSequence::tail_forward(long k, cplx z) const {
    switch (kind_) {
        case Kind::PowerLaw: {
            double a = r_ + static_cast<double>(k);
            return 1.0 / (a - (a - 1.0) * z);
        }
        case Kind::Homogeneous: return homogeneous_schur(g_, z);
        case Kind::Zero: return 0.0;
        case Kind::Explicit: return finite_schur(pos_, k, z);
        case Kind::Custom:
            if (!fwd_) throw PreconditionError("custom sequence has no forward tail");
            return fwd_(k, z);
    }
    return 0.0;
}

cplx CoinSequence::tail_backward(long k, cplx z) const {
    switch (kind_) {
        case Kind::PowerLaw: return tail_forward(k, z);
        case Kind::Homogeneous: return homogeneous_schur(g_, z);
        case Kind::Zero: return 0.0;
        case Kind::Explicit: return finite_schur(neg_, k - 1, z);
        case Kind::Custom:
            if (!bwd_) throw PreconditionError("custom sequence has no backward tail");
            return bwd_(k, z);
    }
    return 0.0;
}

bool CoinSequence::is_real() const {
    switch (kind_) {
        case Kind::PowerLaw:
        case Kind::Zero: return true;
        case Kind::Homogeneous: return g_.imag() == 0.0;
        case Kind::Explicit:
            for (auto g : pos_) if (g.imag() != 0.0) return false;
            for (auto g : neg_) if (g.imag() != 0.0) return false;
            return true;
        case Kind::Custom: return false;
    }
    return false;
}

namespace {

TailFn interlaced_tail(const CoinSequence& base) {
    if (!base.has_forward_tail()) return {};
    return [base](long k, cplx z) -> cplx {
        if (k % 2 == 0) return base.tail_forward(k / 2, z * z);
        return z * base.tail_forward((k + 1) / 2, z * z);
    };
}

}  // namespace

CoinSequence interlaced(const CoinSequence& base) {
    auto g = [base](long j) -> cplx {
        if (j < 0 || j % 2 != 0) return 0.0;
        return base.gamma(j / 2);
    };
    return CoinSequence::custom("interlaced(" + base.describe() + ")", g, interlaced_tail(base),
                                [](long, cplx) { return cplx(0.0); });
}

CoinSequence doubled(const CoinSequence& base) {
    auto g = [base](long j) -> cplx {
        if (j == -1) return -1.0;
        if (j < 0 || j % 2 != 0) return 0.0;
        return base.gamma(j / 2);
    };
    auto back = [](long k, cplx) -> cplx { return k == 1 ? cplx(-1.0) : cplx(0.0); };
    return CoinSequence::custom("doubled(" + base.describe() + ")", g, interlaced_tail(base), back);
}

}  // namespace qwalk
