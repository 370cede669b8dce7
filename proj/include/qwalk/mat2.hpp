#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace qwalk {

using cplx = std::complex<double>;

// 2x2 matrix over an arbitrary ring-like scalar (complex or power series).
template <class S>
struct Mat2T {
    S a{}, b{}, c{}, d{};

    const S& operator()(int i, int j) const { return i == 0 ? (j == 0 ? a : b) : (j == 0 ? c : d); }
    S& operator()(int i, int j) { return i == 0 ? (j == 0 ? a : b) : (j == 0 ? c : d); }

    Mat2T& operator+=(const Mat2T& o) {
        a += o.a; b += o.b; c += o.c; d += o.d;
        return *this;
    }
    Mat2T& operator-=(const Mat2T& o) {
        a -= o.a; b -= o.b; c -= o.c; d -= o.d;
        return *this;
    }
    friend Mat2T operator+(Mat2T x, const Mat2T& y) { return x += y; }
    friend Mat2T operator-(Mat2T x, const Mat2T& y) { return x -= y; }
    friend Mat2T operator*(const Mat2T& x, const Mat2T& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend Mat2T operator*(const S& s, const Mat2T& x) { return {s * x.a, s * x.b, s * x.c, s * x.d}; }
};

using Mat2 = Mat2T<cplx>;

inline Mat2 identity2() { return {1.0, 0.0, 0.0, 1.0}; }

inline Mat2 adjoint(const Mat2& m) {
    return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

inline double max_abs(const Mat2& m) {
    return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

inline double max_abs_diff(const Mat2& x, const Mat2& y) { return max_abs(x - y); }

using Amp = std::array<cplx, 2>;  // (left, right)

inline Amp act(const Mat2& m, const Amp& v) {
    return {m.a * v[0] + m.b * v[1], m.c * v[0] + m.d * v[1]};
}

}  // namespace qwalk
