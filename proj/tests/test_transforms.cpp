#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "fueter/appell.hpp"
#include "fueter/hermite.hpp"
#include "fueter/quadrature.hpp"
#include "fueter/transforms.hpp"

using namespace fueter;

namespace {

std::mt19937_64 rng(57);

Quatd random_quat(double s) {
    std::uniform_real_distribution<double> u(-s, s);
    return Quatd{u(rng), u(rng), u(rng), u(rng)};
}

std::vector<Quatd> basis_vec(int n) {
    std::vector<Quatd> e(n + 1);
    e[n] = Quatd{1.0};
    return e;
}

}  // namespace

TEST_CASE("hermite helpers") {
    CHECK(hermite_H(0, 0.3) == 1.0);
    CHECK(hermite_H(1, 0.3) == doctest::Approx(0.6));
    CHECK(hermite_H(2, 0.3) == doctest::Approx(4.0 * 0.09 - 2.0));
    CHECK(hermite_norm_sq(3) == doctest::Approx(8.0 * 6.0 * std::sqrt(M_PI)));

    QuadratureRule gh = gauss_hermite(40);
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            double acc = 0.0;
            for (size_t i = 0; i < gh.size(); ++i) {
                double x = gh.nodes[i].w;
                acc += gh.weights[i] * hermite_ortho_poly(m, x) * hermite_ortho_poly(n, x);
            }
            CHECK(std::abs(acc - (m == n ? 1.0 : 0.0)) < 1e-13);
        }

    std::vector<double> all = hermite_ortho_poly_all(12, 0.8);
    for (int n = 0; n <= 12; ++n) CHECK(all[n] == doctest::Approx(hermite_ortho_poly(n, 0.8)));
}

TEST_CASE("segal bargmann sends hermite functions to monomials") {
    QuadratureRule gh = gauss_hermite(80);
    for (int n = 0; n <= 8; ++n) {
        double inv_root = std::exp(-0.5 * std::lgamma(double(n + 1)));
        for (int t = 0; t < 3; ++t) {
            Quatd q = random_quat(0.8);
            Quatd want = qpow(q, n) * inv_root;
            TailedValue got = segal_bargmann(basis_vec(n), q, gh);
            CHECK(abs(got.value - want) < 1e-10);
            CHECK(got.tail < 1e-8);
        }
    }

    Quatd q = random_quat(0.8);
    Quatd a = segal_bargmann(basis_vec(4), q, gh).value;
    Quatd b = segal_bargmann_fn([](double x) { return hermite_xi(4, x); }, q, gh).value;
    CHECK(abs(a - b) < 1e-10);
}

TEST_CASE("quadrature inner products in the weighted spaces") {
    QuadratureRule line = gauss_hermite(60);
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            Quatd ip = quadrature_inner_product(
                [m](const Quatd& p) { return Quatd{hermite_xi(m, p.w)}; },
                [n](const Quatd& p) { return Quatd{hermite_xi(n, p.w)}; }, SpaceTag::L2_R, line);
            CHECK(abs(ip - (m == n ? Quatd{1.0} : Quatd{})) < 1e-12);
        }

    QuadratureRule r4 = r4_gauss(12);
    auto mono_ip = [&](int m, int n) {
        return quadrature_inner_product([m](const Quatd& p) { return qpow(p, m); },
                                        [n](const Quatd& p) { return qpow(p, n); },
                                        SpaceTag::RB_H, r4);
    };
    double fact = 1.0;
    for (int m = 0; m <= 4; ++m) {
        fact *= m + 1;
        CHECK(abs(mono_ip(m, m) - Quatd{fact}) < 1e-9 * (1.0 + fact));
    }
    // Monomials of different degree are not orthogonal in this space: the
    // mixed Gaussian moments survive.  With E[w^2] = 1/2 per coordinate,
    // E[q^2] = -1, E[|q|^2 q^2] = -3, E[|q|^4 q^2] = -12, while pairs of odd
    // total degree and E[q^4] vanish.
    CHECK(abs(mono_ip(2, 0) - Quatd{-1.0}) < 1e-10);
    CHECK(abs(mono_ip(0, 2) - Quatd{-1.0}) < 1e-10);
    CHECK(abs(mono_ip(3, 1) - Quatd{-3.0}) < 1e-10);
    CHECK(abs(mono_ip(4, 2) - Quatd{-12.0}) < 1e-10);
    CHECK(abs(mono_ip(4, 0)) < 1e-10);
    CHECK(abs(mono_ip(1, 0)) < 1e-12);
    CHECK(abs(mono_ip(2, 1)) < 1e-12);

    CHECK_THROWS_AS(coefficient_inner_product({Quatd{1.0}}, {Quatd{1.0}}, SpaceTag::RB_H),
                    std::invalid_argument);
}

TEST_CASE("phi kernel by series and by quadrature") {
    const int N = 300;
    QuadratureRule slice = slice_gauss(unit_i(), 80);
    for (int t = 0; t < 4; ++t) {
        Quatd q = random_quat(0.45);
        double x = -1.5 + t;
        TailedValue series = phi_kernel(q, x, N);
        Quatd quad = phi_kernel_quad(q, x, slice, N);
        CHECK(abs(series.value - quad) < 1e-7);
    }
    for (int t = 0; t < 4; ++t) {
        Quatd q = random_quat(0.45);
        double x = 0.6 * t - 1.0;
        TailedValue lo = phi_kernel(q, x, 20);
        TailedValue hi = phi_kernel(q, x, 200);
        CHECK(abs(lo.value - hi.value) <= lo.tail + 1e-13);
    }
}

TEST_CASE("bargmann fock fueter transform on the hermite basis") {
    const int N = 300;
    QuadratureRule slice = slice_gauss(unit_i(), 80);
    QuadratureRule gh = gauss_hermite(80);
    for (int n = 0; n <= 8; ++n) {
        Quatd q = random_quat(0.45);
        Quatd got = bargmann_fock_fueter_quad(basis_vec(n), q, slice, gh, N);
        Quatd want = n >= 2 ? appell_T_eval(n - 2, q) * -2.0 : Quatd{};
        CHECK(abs(got - want) < 1e-6);

        Quatd coeff_route = bargmann_fock_fueter(basis_vec(n), q);
        CHECK(abs(coeff_route - want) < 1e-12);
    }
}

TEST_CASE("transform coefficient maps") {
    std::vector<Quatd> phi(12), psi(12);
    for (auto& c : phi) c = random_quat(1.0);
    for (auto& c : psi) c = random_quat(1.0);

    RegularSeries sphi = bargmann_fock_fueter_coeffs(phi);
    RegularSeries spsi = bargmann_fock_fueter_coeffs(psi);
    REQUIRE(sphi.coeffs.size() == 10);
    for (int k = 0; k < 10; ++k) {
        double tk = appell_T_normalizer(k);
        CHECK(abs(sphi.coeffs[k] - phi[k + 2] * (-2.0 * tk)) == 0.0);
    }

    Quatd lhs = coefficient_inner_product(sphi.coeffs, spsi.coeffs, SpaceTag::A_H);
    Quatd rhs = coefficient_inner_product(phi, psi, SpaceTag::H_sub) * 4.0;
    CHECK(abs(lhs - rhs) < 1e-12);

    double n_lhs = coefficient_norm(sphi.coeffs, SpaceTag::A_H);
    double n_rhs = 2.0 * coefficient_norm(phi, SpaceTag::L2_R);
    CHECK(n_lhs <= n_rhs + 1e-13);

    std::vector<Quatd> c(12);
    std::copy(phi.begin() + 2, phi.end(), c.begin() + 2);
    std::vector<Quatd> alpha = fueter_coeffs_from_slice(c);
    std::vector<Quatd> back = slice_coeffs_from_fueter(alpha);
    REQUIRE(back.size() == c.size());
    for (size_t k = 0; k < c.size(); ++k) CHECK(abs(back[k] - c[k]) < 1e-15);

    double aa = membership_check(alpha, SpaceTag::A_H).norm_sq;
    double ff = membership_check(c, SpaceTag::fock_slice).norm_sq;
    CHECK(aa == doctest::Approx(4.0 * ff).epsilon(1e-12));
    double bb = membership_check(alpha, SpaceTag::B_B).norm_sq;
    double gg = membership_check(c, SpaceTag::bergman_slice_ball).norm_sq;
    CHECK(bb == doctest::Approx(4.0 * gg).epsilon(1e-12));

    Membership m = membership_check(std::vector<Quatd>{Quatd{0.5}, Quatd{}, Quatd{1.0}},
                                    SpaceTag::H_sub);
    CHECK(!m.in_space);
    Membership ok = membership_check(std::vector<Quatd>{Quatd{}, Quatd{}, Quatd{1.0}},
                                     SpaceTag::H_sub);
    CHECK(ok.in_space);
    CHECK(ok.norm_sq == doctest::Approx(1.0));
}

TEST_CASE("fock fueter transform maps monomials through the fueter map") {
    const int N = 300;
    QuadratureRule slice = slice_gauss(unit_i(), 80);
    for (int m = 0; m <= 6; ++m) {
        SliceSeries f;
        f.coeffs.resize(m + 1);
        f.coeffs[m] = Quatd{1.0};
        for (int t = 0; t < 2; ++t) {
            Quatd q = random_quat(0.6);
            Quatd got = fock_fueter_transform(f, q, slice, N);
            Quatd want = m >= 2 ? appell_Q_eval(m - 2, q) * (-2.0 * m * (m - 1)) : Quatd{};
            CHECK(abs(got - want) < 1e-8);
        }
    }
}

TEST_CASE("integral representations recover the basis") {
    const int N = 300;
    QuadratureRule slice = slice_gauss(unit_i(), 80);
    QuadratureRule gh = gauss_hermite(80);
    QuadratureRule disk = disk_rule(unit_i(), 80, 80);
    for (int k = 0; k <= 4; ++k) {
        for (int t = 0; t < 2; ++t) {
            Quatd q = random_quat(0.6);
            Quatd qb = random_quat(0.25);
            Quatd want = appell_Q_eval(k, q);
            Quatd want_b = appell_Q_eval(k, qb);
            CHECK(abs(integral_representation_Q(k, q, QSource::fock, slice, N) - want) < 1e-6);
            CHECK(abs(integral_representation_Q(k, q, QSource::hermite, gh, N) - want) < 1e-6);
            CHECK(abs(integral_representation_Q(k, qb, QSource::bergman, disk, N) - want_b) <
                  1e-6);
        }
    }
}

TEST_CASE("gaussian moment identity") {
    QuadratureRule slice = slice_gauss(unit_i(), 80);
    for (int k = 0; k <= 6; ++k) {
        for (double x : {0.0, 0.7, -0.7}) {
            Quatd lhs = integrate(slice, [&](const Quatd& p) {
                return qpow(p, k) * norm_sq(p) * norm_sq(p) * slice_exp(conj(p), 0.0, x, 0.0);
            });
            Quatd rhs{double(k + 1) * double(k + 2) * std::pow(x, k)};
            CHECK(abs(lhs - rhs) / std::max(1.0, abs(rhs)) < 1e-6);
        }
    }
}
