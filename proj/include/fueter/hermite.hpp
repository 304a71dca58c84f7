// Physicists' Hermite polynomials H_n (H_{n+1} = 2x H_n - 2n H_{n-1}),
// Hermite functions h_n = H_n e^{-x^2/2} with ||h_n||^2 = 2^n n! sqrt(pi),
// and the orthonormal pair
//   xi_n = h_n / ||h_n||,   phi_n = H_n / ||h_n||  (so xi_n = phi_n e^{-x^2/2}).
// phi_n are the orthonormal polynomials of the weight e^{-x^2}; their stable
// recurrence phi_{n+1} = x sqrt(2/(n+1)) phi_n - sqrt(n/(n+1)) phi_{n-1}
// avoids the overflow of raw H_n at quadrature-scale arguments.
#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace fueter {

inline double hermite_H(int n, double x) {
    if (n < 0) throw std::invalid_argument("hermite_H: n must be >= 0");
    double hm = 1.0;
    if (n == 0) return hm;
    double h = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        double next = 2.0 * x * h - 2.0 * k * hm;
        hm = h;
        h = next;
    }
    return h;
}

inline double hermite_norm_sq(int n) {
    return std::exp(n * std::log(2.0) + std::lgamma(double(n + 1))) * std::sqrt(M_PI);
}

inline double hermite_h(int n, double x) {
    return hermite_H(n, x) * std::exp(-0.5 * x * x);
}

// phi_0, ..., phi_N at x.
inline std::vector<double> hermite_ortho_poly_all(int N, double x) {
    std::vector<double> phi(N + 1);
    phi[0] = std::pow(M_PI, -0.25);
    if (N >= 1) phi[1] = x * std::sqrt(2.0) * phi[0];
    for (int n = 1; n < N; ++n)
        phi[n + 1] = x * std::sqrt(2.0 / (n + 1)) * phi[n] - std::sqrt(double(n) / (n + 1)) * phi[n - 1];
    return phi;
}

inline double hermite_ortho_poly(int n, double x) { return hermite_ortho_poly_all(n, x)[n]; }

inline double hermite_xi(int n, double x) {
    return hermite_ortho_poly(n, x) * std::exp(-0.5 * x * x);
}

}  // namespace fueter
