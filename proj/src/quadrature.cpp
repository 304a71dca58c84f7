#include "fueter/quadrature.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fueter {

namespace {

constexpr double kEps = 1e-14;
constexpr int kMaxNewton = 64;

// Orthonormal Hermite recurrence; weights sum to sqrt(pi).
void gauher(std::vector<double>& x, std::vector<double>& w, int n) {
    const double pim4 = 0.7511255444649425;  // pi^{-1/4}
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    int m = (n + 1) / 2;
    double z = 0.0, pp = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0)
            z = std::sqrt(double(2 * n + 1)) - 1.85575 * std::pow(double(2 * n + 1), -0.16667);
        else if (i == 1)
            z -= 1.14 * std::pow(double(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * x[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * x[1];
        else
            z = 2.0 * z - x[i - 2];
        for (int it = 0; it < kMaxNewton; ++it) {
            double p1 = pim4, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(double(j) / (j + 1)) * p3;
            }
            pp = std::sqrt(double(2 * n)) * p2;
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= kEps) break;
        }
        x[i] = z;
        x[n - 1 - i] = -z;
        w[i] = 2.0 / (pp * pp);
        w[n - 1 - i] = w[i];
    }
}

void gauleg(std::vector<double>& x, std::vector<double>& w, int n) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < kMaxNewton; ++it) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p1 / pp;
            if (std::fabs(z - z1) <= kEps) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
}

}  // namespace

QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw std::invalid_argument("gauss_hermite: order must be >= 1");
    std::vector<double> x, w;
    gauher(x, w, n);
    QuadratureRule rule{QuadDomain::real_line_gauss, n, {}, {}};
    rule.nodes.reserve(n);
    rule.weights = std::move(w);
    for (int i = 0; i < n; ++i) rule.nodes.push_back(Quatd{x[i]});
    return rule;
}

QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    std::vector<double> x, w;
    gauleg(x, w, n);
    QuadratureRule rule{QuadDomain::real_line_gauss, n, {}, {}};
    rule.nodes.reserve(n);
    rule.weights = std::move(w);
    for (int i = 0; i < n; ++i) rule.nodes.push_back(Quatd{x[i]});
    return rule;
}

QuadratureRule slice_gauss(const ImaginaryUnit& I, int n) {
    std::vector<double> x, w;
    gauher(x, w, n);
    QuadratureRule rule{QuadDomain::slice_gauss, n, {}, {}};
    rule.nodes.reserve(size_t(n) * n);
    rule.weights.reserve(size_t(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            rule.nodes.push_back(Quatd{x[a]} + I.q() * x[b]);
            rule.weights.push_back(w[a] * w[b] / M_PI);
        }
    return rule;
}

namespace {

QuadratureRule disk_like_rule(QuadDomain dom, const ImaginaryUnit& I, int radial_n, int angular_n) {
    if (radial_n < 1 || angular_n < 1)
        throw std::invalid_argument("disk rule: orders must be >= 1");
    std::vector<double> t, w;
    gauleg(t, w, radial_n);
    bool half = dom == QuadDomain::half_disk;
    double arc = half ? M_PI : 2.0 * M_PI;
    double theta0 = half ? -M_PI / 2.0 : 0.0;
    QuadratureRule rule{dom, radial_n, {}, {}};
    rule.nodes.reserve(size_t(radial_n) * angular_n);
    rule.weights.reserve(size_t(radial_n) * angular_n);
    for (int i = 0; i < radial_n; ++i) {
        double r = 0.5 * (t[i] + 1.0);
        double wr = 0.5 * w[i] * r;  // radial measure r dr on [0,1]
        for (int m = 0; m < angular_n; ++m) {
            double theta = theta0 + arc * (m + 0.5) / angular_n;
            rule.nodes.push_back(Quatd{r * std::cos(theta)} + I.q() * (r * std::sin(theta)));
            rule.weights.push_back(wr * arc / angular_n / M_PI);
        }
    }
    return rule;
}

}  // namespace

QuadratureRule disk_rule(const ImaginaryUnit& I, int radial_n, int angular_n) {
    return disk_like_rule(QuadDomain::unit_disk, I, radial_n, angular_n);
}

QuadratureRule half_disk_rule(const ImaginaryUnit& I, int radial_n, int angular_n) {
    return disk_like_rule(QuadDomain::half_disk, I, radial_n, angular_n);
}

QuadratureRule r4_gauss(int n, size_t node_cap) {
    if (n < 1) throw std::invalid_argument("r4_gauss: order must be >= 1");
    size_t count = size_t(n) * n * n * n;
    if (count > node_cap) throw std::length_error("r4_gauss: node count above cap");
    std::vector<double> x, w;
    gauher(x, w, n);
    QuadratureRule rule{QuadDomain::r4_gauss, n, {}, {}};
    rule.nodes.reserve(count);
    rule.weights.reserve(count);
    double pi2 = M_PI * M_PI;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    rule.nodes.push_back(Quatd{x[a], x[b], x[c], x[d]});
                    rule.weights.push_back(w[a] * w[b] * w[c] * w[d] / pi2);
                }
    return rule;
}

namespace {

Quatd pairwise_range(const std::vector<Quatd>& v, size_t lo, size_t hi) {
    if (hi - lo <= 32) {
        Quatd acc{};
        for (size_t i = lo; i < hi; ++i) acc += v[i];
        return acc;
    }
    size_t mid = lo + (hi - lo) / 2;
    return pairwise_range(v, lo, mid) + pairwise_range(v, mid, hi);
}

}  // namespace

Quatd pairwise_sum(const std::vector<Quatd>& v) {
    if (v.empty()) return Quatd{};
    return pairwise_range(v, 0, v.size());
}

Quatd integrate(const QuadratureRule& rule, const Integrand& f) {
    std::vector<Quatd> terms(rule.size());
    const long long n = static_cast<long long>(rule.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long i = 0; i < n; ++i) terms[i] = f(rule.nodes[i]) * rule.weights[i];
    return pairwise_sum(terms);
}

Quatd integrate_serial(const QuadratureRule& rule, const Integrand& f) {
    std::vector<Quatd> terms(rule.size());
    for (size_t i = 0; i < rule.size(); ++i) terms[i] = f(rule.nodes[i]) * rule.weights[i];
    return pairwise_sum(terms);
}

}  // namespace fueter
