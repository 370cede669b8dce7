#pragma once

#include <string>
#include <vector>

#include "qwalk/power_law.hpp"

namespace qwalk {

// eps * log(tau^2)
double ld_rate(const PowerLawModel& m, double eps);

struct LdSample {
    long n;
    double log_p;  // log P(1 - X_n/n > eps)
};

struct LdEstimate {
    double eps;
    std::vector<LdSample> samples;
    double slope;  // least-squares slope of log_p against n
    double theory;
    double rel_error;
};

struct LdReport {
    std::vector<LdEstimate> rows;
    unsigned digits10 = 0;
    std::string note;
};

// Simulates the H-QW(1) walk in multiprecision (the tail sits hundreds of decades below 1)
// and fits the decay of P(1 - X_n/n > eps) along the given times. The state must satisfy
// <phi, l> = 0 and be real up to a global phase. Temporarily changes the global MPFR
// default precision, so concurrent callers must not overlap.
LdReport ld_empirical(const PowerLawModel& m, const InitialCoinState& phi, const std::vector<double>& eps,
                      const std::vector<long>& ns, int jobs = 1);

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace qwalk
