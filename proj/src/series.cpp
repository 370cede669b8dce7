#include "qwalk/series.hpp"

#include <algorithm>

#include "qwalk/errors.hpp"

namespace qwalk {

PowerSeries PowerSeries::constant(int degree, cplx v) {
    PowerSeries s(degree);
    s.c_[0] = v;
    return s;
}

PowerSeries PowerSeries::variable(int degree) {
    PowerSeries s(degree);
    if (degree >= 1) s.c_[1] = 1.0;
    return s;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0.0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), 0.0);
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& o) {
    const int n = std::max(degree(), o.degree());
    std::vector<cplx> r(n + 1, 0.0);
    for (int i = 0; i <= degree(); ++i) {
        if (c_[i] == 0.0) continue;
        for (int j = 0; j <= o.degree() && i + j <= n; ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_.swap(r);
    return *this;
}

PowerSeries& PowerSeries::operator/=(const PowerSeries& o) {
    if (o.c_.empty() || std::abs(o.c_[0]) < 1e-14)
        throw SingularEvaluation("power series division by a non-invertible series");
    const int n = std::max(degree(), o.degree());
    std::vector<cplx> q(n + 1, 0.0);
    for (int k = 0; k <= n; ++k) {
        cplx s = (*this)[k];
        for (int j = 1; j <= k && j <= o.degree(); ++j) s -= o.c_[j] * q[k - j];
        q[k] = s / o.c_[0];
    }
    c_.swap(q);
    return *this;
}

PowerSeries& PowerSeries::operator*=(cplx s) {
    for (auto& v : c_) v *= s;
    return *this;
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

PowerSeries PowerSeries::compose_z2() const {
    PowerSeries r(degree());
    for (int i = 0; 2 * i <= degree(); ++i) r.c_[2 * i] = c_[i];
    return r;
}

cplx PowerSeries::eval(cplx z) const {
    cplx s = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * z + *it;
    return s;
}

PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
PowerSeries operator/(PowerSeries a, const PowerSeries& b) { return a /= b; }
PowerSeries operator*(cplx s, PowerSeries a) { return a *= s; }
PowerSeries operator*(PowerSeries a, cplx s) { return a *= s; }
PowerSeries operator+(PowerSeries a, cplx s) {
    a[0] += s;
    return a;
}
PowerSeries operator+(cplx s, PowerSeries a) { return std::move(a) + s; }
PowerSeries operator-(PowerSeries a, cplx s) {
    a[0] -= s;
    return a;
}
PowerSeries operator-(cplx s, const PowerSeries& a) { return -a + s; }

Mat2 coefficient(const MatrixSeries& m, int n) { return {m.a[n], m.b[n], m.c[n], m.d[n]}; }

}  // namespace qwalk
