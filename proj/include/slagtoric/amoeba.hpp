#pragma once

#include <complex>

#include "slagtoric/tropical.hpp"

namespace slag {

// Laurent polynomial in two variables with complex double coefficients.
struct LaurentPolynomial2 {
    struct Term {
        std::array<long, 2> exponent;
        std::complex<double> coeff;
    };
    std::vector<Term> terms;
};

// h_t = sum t^{phi(a,b)} m_{a,b} z1^a z2^b.
LaurentPolynomial2 curve_family(const std::vector<std::array<long, 2>>& support,
                                const std::vector<double>& phi,
                                const std::vector<std::complex<double>>& coeffs, double t);

std::complex<double> evaluate(const LaurentPolynomial2& h, std::complex<double> z1,
                              std::complex<double> z2);

struct AmoebaCloud {
    std::vector<std::array<double, 2>> points;  // (log|z1|, log|z2|)
    double t = 0.0;
    size_t grid_size = 0;
    size_t angle_samples = 0;
    size_t degenerate_specializations = 0;  // z2-polynomial vanished identically
    size_t discarded_roots = 0;             // failed the residual certificate
};

struct AmoebaParams {
    double x1_min = -1.0;
    double x1_max = 1.0;
    size_t x1_steps = 100;
    size_t angle_samples = 16;
    double residual_tol = 1e-9;
    int threads = 0;  // 0: SLAG_TORIC_THREADS or hardware concurrency
};

// Samples the amoeba by specializing z1 on a log-radial grid and solving
// for z2 via companion-matrix eigenvalues with Newton polishing. Every
// recorded point passes the relative residual certificate.
AmoebaCloud amoeba_sample(const LaurentPolynomial2& h, const AmoebaParams& params);

// Roots of a dense complex polynomial (ascending coefficients), companion
// matrix eigenvalues plus Newton polishing.
std::vector<std::complex<double>> poly_roots(const std::vector<std::complex<double>>& coeffs);

}  // namespace slag
