#include "fueter/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fueter/kernels.hpp"

namespace fueter {
namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
const double kPiQuarterInv = std::pow(M_PI, -0.25);

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

// K_F(q,p) = -2 sum_k Q_k(q) pbar^{k+2} / k! from precomputed Q_k(q).
// The factorial is folded into the running power: the bare pbar^{k+2}
// overflows double at far-out slice-Gauss nodes.
Quatd fock_fueter_from_Q(const std::vector<Quatd>& Q, const Quatd& pbar) {
    Quatd pk = pbar * pbar;
    Quatd acc{};
    for (std::size_t k = 0; k < Q.size(); ++k) {
        if (k > 0) pk *= pbar * (1.0 / double(k));
        acc += Q[k] * pk;
    }
    return acc * -2.0;
}

// phi(x) e^{x^2/2} for phi = sum xi_n alpha_n: the Gaussian of xi_n cancels
// and only the orthonormal polynomials remain.
Quatd xi_series_times_gauss_inv(const std::vector<Quatd>& xi_coeffs, double x) {
    Quatd acc{};
    if (xi_coeffs.empty()) return acc;
    std::vector<double> ortho = hermite_ortho_poly_all(int(xi_coeffs.size()) - 1, x);
    for (std::size_t n = 0; n < xi_coeffs.size(); ++n) acc += xi_coeffs[n] * ortho[n];
    return acc;
}

Quatd sb_apply(const std::vector<Quatd>& xi_coeffs, const Quatd& q, const QuadratureRule& gh) {
    std::vector<Quatd> vals(gh.size());
    for (std::size_t i = 0; i < gh.size(); ++i) {
        const double x = gh.nodes[i].w;
        Quatd a = slice_exp(q, -0.5, kSqrt2 * x, 0.0) * kPiQuarterInv;
        vals[i] = a * xi_series_times_gauss_inv(xi_coeffs, x) * gh.weights[i];
    }
    return pairwise_sum(vals);
}

Quatd sb_apply_fn(const std::function<double(double)>& phi, const Quatd& q,
                  const QuadratureRule& gh) {
    std::vector<Quatd> vals(gh.size());
    for (std::size_t i = 0; i < gh.size(); ++i) {
        const double x = gh.nodes[i].w;
        Quatd a = slice_exp(q, -0.5, kSqrt2 * x, 0.0) * kPiQuarterInv;
        vals[i] = a * (phi(x) * std::exp(0.5 * x * x) * gh.weights[i]);
    }
    return pairwise_sum(vals);
}

QuadratureRule lower_order_gh(const QuadratureRule& gh) {
    int n = int(gh.size());
    int m = std::max(4, (3 * n) / 4);
    if (m >= n) m = n > 1 ? n - 1 : 1;
    return gauss_hermite(m);
}

}  // namespace

double space_weight(SpaceTag tag, int k) {
    if (k < 0) throw std::invalid_argument("space_weight: k must be >= 0");
    switch (tag) {
        case SpaceTag::fock_slice:
            return std::exp(std::lgamma(double(k + 1)));
        case SpaceTag::A_H:
            return std::exp(std::lgamma(double(k + 1))) / (double(k + 1) * double(k + 2));
        case SpaceTag::B_B: {
            double a = double(k + 1) * double(k + 2);
            return 1.0 / (a * a * double(k + 3));
        }
        case SpaceTag::L2_R:
        case SpaceTag::H_sub:
            return 1.0;
        case SpaceTag::bergman_slice_ball:
            return 1.0 / double(k + 1);
        case SpaceTag::RB_H:
            throw std::invalid_argument("space_weight: RB_H is quadrature-only");
    }
    throw std::logic_error("space_weight: unknown tag");
}

TailedValue segal_bargmann(const std::vector<Quatd>& xi_coeffs, const Quatd& q,
                           const QuadratureRule& gh) {
    require(gh.domain == QuadDomain::real_line_gauss,
            "segal_bargmann: Gauss-Hermite rule required");
    Quatd hi = sb_apply(xi_coeffs, q, gh);
    Quatd lo = sb_apply(xi_coeffs, q, lower_order_gh(gh));
    return {hi, abs(hi - lo)};
}

TailedValue segal_bargmann_fn(const std::function<double(double)>& phi, const Quatd& q,
                              const QuadratureRule& gh) {
    require(gh.domain == QuadDomain::real_line_gauss,
            "segal_bargmann_fn: Gauss-Hermite rule required");
    Quatd hi = sb_apply_fn(phi, q, gh);
    Quatd lo = sb_apply_fn(phi, q, lower_order_gh(gh));
    return {hi, abs(hi - lo)};
}

Quatd fock_fueter_transform(const SliceSeries& f, const Quatd& q, const QuadratureRule& slice,
                            int N) {
    require(slice.domain == QuadDomain::slice_gauss,
            "fock_fueter_transform: slice_gauss rule required");
    std::vector<Quatd> Q = appell_eval_all(q, N);
    return integrate(slice, [&](const Quatd& p) {
        return fock_fueter_from_Q(Q, conj(p)) * slice_eval(f, p);
    });
}

TailedValue phi_kernel(const Quatd& q, double x, int N) {
    std::vector<Quatd> Q = appell_eval_all(q, N);
    std::vector<double> ortho = hermite_ortho_poly_all(N + 2, x);
    const double gauss = std::exp(-0.5 * x * x);
    Quatd acc{};
    for (int k = 0; k <= N; ++k) acc += Q[k] * (appell_T_normalizer(k) * ortho[k + 2] * gauss);
    acc *= Quatd{-2.0};
    // Cramer: |xi_n| <= 1.086435 pi^{-1/4} < 0.8161, so the dropped part is
    // bounded by 2 * 0.8161 * sum_{k>N} t_k |q|^k with t_k = sqrt((k+1)(k+2)/k!).
    double tail = 0.0;
    const double r = abs(q);
    if (r > 0.0) {
        double term = std::exp(0.5 * (std::log(double(N + 2)) + std::log(double(N + 3)) -
                                      std::lgamma(double(N + 2))) +
                               double(N + 1) * std::log(r));
        for (int k = N + 1; k <= N + 600; ++k) {
            tail += term;
            term *= r * std::sqrt(double(k + 3)) / double(k + 1);
            if (term < 1e-300) break;
        }
        tail *= 2.0 * 0.8161;
    }
    return {acc, tail};
}

Quatd phi_kernel_quad(const Quatd& q, double x, const QuadratureRule& slice, int N) {
    require(slice.domain == QuadDomain::slice_gauss, "phi_kernel_quad: slice_gauss rule required");
    std::vector<Quatd> Q = appell_eval_all(q, N);
    const double c = -0.5 * x * x;
    return integrate(slice, [&](const Quatd& p) {
        return fock_fueter_from_Q(Q, conj(p)) * (slice_exp(p, -0.5, kSqrt2 * x, c) * kPiQuarterInv);
    });
}

RegularSeries bargmann_fock_fueter_coeffs(const std::vector<Quatd>& xi_coeffs) {
    RegularSeries out;
    if (xi_coeffs.size() < 3) return out;
    out.coeffs.resize(xi_coeffs.size() - 2);
    for (std::size_t k = 0; k + 2 < xi_coeffs.size(); ++k)
        out.coeffs[k] = xi_coeffs[k + 2] * (-2.0 * appell_T_normalizer(int(k)));
    return out;
}

Quatd bargmann_fock_fueter(const std::vector<Quatd>& xi_coeffs, const Quatd& q) {
    return regular_eval(bargmann_fock_fueter_coeffs(xi_coeffs), q);
}

Quatd bargmann_fock_fueter_quad(const std::vector<Quatd>& xi_coeffs, const Quatd& q,
                                const QuadratureRule& slice, const QuadratureRule& gh, int N) {
    require(slice.domain == QuadDomain::slice_gauss,
            "bargmann_fock_fueter_quad: slice_gauss rule required");
    require(gh.domain == QuadDomain::real_line_gauss,
            "bargmann_fock_fueter_quad: Gauss-Hermite rule required");
    std::vector<Quatd> Q = appell_eval_all(q, N);
    std::vector<Quatd> khat(slice.size());
    for (std::size_t j = 0; j < slice.size(); ++j)
        khat[j] = fock_fueter_from_Q(Q, conj(slice.nodes[j])) * slice.weights[j];
    std::vector<Quatd> vals(gh.size());
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < gh.size(); ++i) {
        const double x = gh.nodes[i].w;
        std::vector<Quatd> terms(slice.size());
        for (std::size_t j = 0; j < slice.size(); ++j)
            terms[j] = khat[j] * (slice_exp(slice.nodes[j], -0.5, kSqrt2 * x, 0.0) * kPiQuarterInv);
        vals[i] = pairwise_sum(terms) * xi_series_times_gauss_inv(xi_coeffs, x) * gh.weights[i];
    }
    return pairwise_sum(vals);
}

Quatd coefficient_inner_product(const std::vector<Quatd>& f, const std::vector<Quatd>& g,
                                SpaceTag space) {
    std::size_t n = std::min(f.size(), g.size());
    std::size_t k0 = (space == SpaceTag::H_sub) ? 2 : 0;
    Quatd acc{};
    for (std::size_t k = k0; k < n; ++k) acc += conj(g[k]) * f[k] * space_weight(space, int(k));
    return acc;
}

double coefficient_norm(const std::vector<Quatd>& f, SpaceTag space) {
    return std::sqrt(re(coefficient_inner_product(f, f, space)));
}

Quatd quadrature_inner_product(const SliceFn& f, const SliceFn& g, SpaceTag space,
                               const QuadratureRule& rule) {
    switch (space) {
        case SpaceTag::fock_slice:
            require(rule.domain == QuadDomain::slice_gauss,
                    "quadrature_inner_product: fock_slice needs a slice_gauss rule");
            return integrate(rule, [&](const Quatd& p) { return conj(g(p)) * f(p); });
        case SpaceTag::bergman_slice_ball:
            require(rule.domain == QuadDomain::unit_disk || rule.domain == QuadDomain::half_disk,
                    "quadrature_inner_product: bergman_slice_ball needs a disk rule");
            return integrate(rule, [&](const Quatd& p) { return conj(f(p)) * g(p); });
        case SpaceTag::RB_H:
            require(rule.domain == QuadDomain::r4_gauss,
                    "quadrature_inner_product: RB_H needs an r4_gauss rule");
            return integrate(rule, [&](const Quatd& p) { return conj(g(p)) * f(p); });
        case SpaceTag::L2_R:
        case SpaceTag::H_sub: {
            require(rule.domain == QuadDomain::real_line_gauss,
                    "quadrature_inner_product: L2(R) needs a Gauss-Hermite rule");
            std::vector<Quatd> vals(rule.size());
            for (std::size_t i = 0; i < rule.size(); ++i) {
                const Quatd& p = rule.nodes[i];
                vals[i] = conj(g(p)) * f(p) * (rule.weights[i] * std::exp(p.w * p.w));
            }
            return pairwise_sum(vals);
        }
        case SpaceTag::A_H:
        case SpaceTag::B_B:
            throw std::invalid_argument(
                "quadrature_inner_product: coefficient-only space, use coefficient_inner_product");
    }
    throw std::logic_error("quadrature_inner_product: unknown tag");
}

Membership membership_check(const std::vector<Quatd>& coeffs, SpaceTag space) {
    if (space == SpaceTag::RB_H)
        throw std::invalid_argument("membership_check: RB_H is quadrature-only");
    Membership m;
    if (space == SpaceTag::H_sub)
        for (std::size_t k = 0; k < std::min<std::size_t>(2, coeffs.size()); ++k)
            if (abs(coeffs[k]) > 1e-12) m.in_space = false;
    std::size_t k0 = (space == SpaceTag::H_sub) ? 2 : 0;
    double acc = 0.0;
    for (std::size_t k = k0; k < coeffs.size(); ++k)
        acc += space_weight(space, int(k)) * norm_sq(coeffs[k]);
    m.norm_sq = acc;
    if (!std::isfinite(acc)) m.in_space = false;
    return m;
}

std::vector<Quatd> fueter_coeffs_from_slice(const std::vector<Quatd>& c) {
    if (c.size() < 3) return {};
    std::vector<Quatd> alpha(c.size() - 2);
    for (std::size_t k = 0; k + 2 < c.size(); ++k)
        alpha[k] = c[k + 2] * (-2.0 * double(k + 1) * double(k + 2));
    return alpha;
}

std::vector<Quatd> slice_coeffs_from_fueter(const std::vector<Quatd>& alpha) {
    std::vector<Quatd> c(alpha.size() + 2);
    for (std::size_t k = 0; k < alpha.size(); ++k)
        c[k + 2] = alpha[k] * (-0.5 / (double(k + 1) * double(k + 2)));
    return c;
}

Quatd integral_representation_Q(int k, const Quatd& q, QSource source,
                                const QuadratureRule& rule, int N) {
    if (k < 0) throw std::invalid_argument("integral_representation_Q: k must be >= 0");
    const double pref = -0.5 / (double(k + 1) * double(k + 2));
    switch (source) {
        case QSource::fock: {
            require(rule.domain == QuadDomain::slice_gauss,
                    "integral_representation_Q: fock source needs a slice_gauss rule");
            std::vector<Quatd> Q = appell_eval_all(q, N);
            Quatd val = integrate(rule, [&](const Quatd& p) {
                return fock_fueter_from_Q(Q, conj(p)) * qpow(p, k + 2);
            });
            return val * pref;
        }
        case QSource::hermite: {
            require(rule.domain == QuadDomain::real_line_gauss,
                    "integral_representation_Q: hermite source needs a Gauss-Hermite rule");
            std::vector<Quatd> Q = appell_eval_all(q, N);
            std::vector<double> tnorm(N + 1);
            for (int j = 0; j <= N; ++j) tnorm[j] = appell_T_normalizer(j);
            std::vector<Quatd> vals(rule.size());
            for (std::size_t i = 0; i < rule.size(); ++i) {
                const double x = rule.nodes[i].w;
                std::vector<double> ortho = hermite_ortho_poly_all(N + 2, x);
                Quatd phi{};
                for (int j = 0; j <= N; ++j) phi += Q[j] * (tnorm[j] * ortho[j + 2]);
                vals[i] = phi * (-2.0 * hermite_H(k + 2, x) * rule.weights[i]);
            }
            double hpref = -1.0 / (4.0 * std::pow(M_PI, 0.25) * std::pow(2.0, 0.5 * k) *
                                   double(k + 1) * double(k + 2));
            return pairwise_sum(vals) * hpref;
        }
        case QSource::bergman: {
            require(rule.domain == QuadDomain::unit_disk,
                    "integral_representation_Q: bergman source needs a unit_disk rule");
            Quatd val = integrate(rule, [&](const Quatd& r) {
                return bergman_fueter_ball(q, r, N, KernelForm::closed).value * qpow(r, k + 2);
            });
            return val * pref;
        }
    }
    throw std::logic_error("integral_representation_Q: unknown source");
}

}  // namespace fueter
