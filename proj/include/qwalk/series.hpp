#pragma once

#include <vector>

#include "qwalk/mat2.hpp"

namespace qwalk {

// Truncated power series c_0 + c_1 z + ... + c_N z^N.
class PowerSeries {
public:
    PowerSeries() = default;
    explicit PowerSeries(int degree) : c_(degree + 1, cplx(0.0)) {}

    static PowerSeries constant(int degree, cplx v);
    static PowerSeries variable(int degree);  // z

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    cplx operator[](int n) const { return n >= 0 && n < static_cast<int>(c_.size()) ? c_[n] : cplx(0.0); }
    cplx& operator[](int n) { return c_.at(n); }
    const std::vector<cplx>& coefficients() const { return c_; }

    PowerSeries& operator+=(const PowerSeries& o);
    PowerSeries& operator-=(const PowerSeries& o);
    PowerSeries& operator*=(const PowerSeries& o);
    PowerSeries& operator/=(const PowerSeries& o);
    PowerSeries& operator*=(cplx s);
    PowerSeries operator-() const;

    // f(z) -> f(z^2), truncated at the same degree.
    PowerSeries compose_z2() const;
    cplx eval(cplx z) const;

private:
    std::vector<cplx> c_;
};

PowerSeries operator+(PowerSeries a, const PowerSeries& b);
PowerSeries operator-(PowerSeries a, const PowerSeries& b);
PowerSeries operator*(PowerSeries a, const PowerSeries& b);
PowerSeries operator/(PowerSeries a, const PowerSeries& b);
PowerSeries operator*(cplx s, PowerSeries a);
PowerSeries operator*(PowerSeries a, cplx s);
PowerSeries operator+(PowerSeries a, cplx s);
PowerSeries operator+(cplx s, PowerSeries a);
PowerSeries operator-(PowerSeries a, cplx s);
PowerSeries operator-(cplx s, const PowerSeries& a);

using MatrixSeries = Mat2T<PowerSeries>;

// Coefficient of z^n as a 2x2 matrix.
Mat2 coefficient(const MatrixSeries& m, int n);

}  // namespace qwalk
